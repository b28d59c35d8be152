mod common;

use common::{cubic, interval, unit};
use proptest::prelude::*;
use rough_cpfs::cpfs::{CubicValue, Lattice, RawGrade, UnitInterval, UnitScalar};

macro_rules! lattice_laws {
    ($name:ident, $strategy:expr) => {
        mod $name {
            use super::*;

            proptest! {
                #[test]
                fn commutative(a in $strategy, b in $strategy) {
                    prop_assert_eq!(a.meet(b), b.meet(a));
                    prop_assert_eq!(a.join(b), b.join(a));
                }

                #[test]
                fn associative(a in $strategy, b in $strategy, c in $strategy) {
                    prop_assert_eq!(a.meet(b).meet(c), a.meet(b.meet(c)));
                    prop_assert_eq!(a.join(b).join(c), a.join(b.join(c)));
                }

                #[test]
                fn idempotent_and_absorptive(a in $strategy, b in $strategy) {
                    prop_assert_eq!(a.meet(a), a);
                    prop_assert_eq!(a.join(a), a);
                    prop_assert_eq!(a.meet(a.join(b)), a);
                    prop_assert_eq!(a.join(a.meet(b)), a);
                }

                #[test]
                fn order_matches_meet(a in $strategy, b in $strategy, c in $strategy) {
                    prop_assert!(a.leq(a));
                    prop_assert!(a.meet(b).leq(a) && a.meet(b).leq(b));
                    prop_assert!(a.leq(a.join(b)) && b.leq(a.join(b)));
                    prop_assert!(a.meet(b).meet(c).leq(a.join(c)));
                    if a.meet(b) == a {
                        prop_assert!(a.leq(b));
                    }
                }
            }
        }
    };
}

lattice_laws!(scalar, unit());
lattice_laws!(intervals, interval());

proptest! {
    #[test]
    fn transitive_without_tolerance(a in unit(), b in unit(), c in unit()) {
        if a.get() <= b.get() && b.get() <= c.get() {
            prop_assert!(a.leq(c));
        }
    }

    #[test]
    fn bounds(a in unit(), i in interval()) {
        prop_assert_eq!(a.meet(UnitScalar::ONE), a);
        prop_assert_eq!(a.join(UnitScalar::ZERO), a);
        prop_assert_eq!(i.meet(UnitInterval::ONE), i);
        prop_assert_eq!(i.join(UnitInterval::ZERO), i);
    }

    #[test]
    fn raw_round_trip(v in cubic()) {
        prop_assert_eq!(CubicValue::from_raw(&v.to_raw()).unwrap(), v);
    }

    #[test]
    fn pessimistic_and_optimistic_combinations_stay_valid(a in cubic(), b in cubic()) {
        // meet of membership with join of non-membership, and the dual: the
        // larger Pythagorean sum is always bounded by one of the inputs
        prop_assert!(CubicValue::new(
            a.im().meet(b.im()), a.inm().join(b.inm()), a.m().meet(b.m()), a.nm().join(b.nm()),
        ).is_ok());
        prop_assert!(CubicValue::new(
            a.im().join(b.im()), a.inm().meet(b.inm()), a.m().join(b.m()), a.nm().meet(b.nm()),
        ).is_ok());
    }
}

#[test]
fn scalar_grade_examples() {
    let raw = |m, nm| RawGrade {
        im: [0.0, 0.0],
        inm: [0.0, 0.0],
        m,
        nm,
    };
    assert!(CubicValue::from_raw(&raw(0.8, 0.6)).is_ok());
    assert!(CubicValue::from_raw(&raw(0.9, 0.6)).is_err());
    assert!(CubicValue::from_raw(&raw(-0.1, 0.0)).is_err());
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ElementSet, FiniteSemigroup};

use super::{Component, CpfsError, CubicFuzzySet, CubicValue, Lattice, UnitInterval, UnitScalar};

fn unit(v: f64) -> UnitScalar {
    UnitScalar::new(v.clamp(0.0, 1.0)).expect("clamped into [0, 1]")
}

/// Draws one valid grade: `m ~ U[0,1]`, `nm ~ U[0, sqrt(1 - m²)]`, and the
/// same scheme on the interval upper endpoints, with each lower endpoint
/// uniform below its upper endpoint.
pub fn random_cubic_value<R: Rng + ?Sized>(rng: &mut R) -> CubicValue {
    let m = rng.gen::<f64>();
    let nm = rng.gen::<f64>() * (1.0 - m * m).max(0.0).sqrt();
    let im_hi = rng.gen::<f64>();
    let im_lo = rng.gen::<f64>() * im_hi;
    let inm_hi = rng.gen::<f64>() * (1.0 - im_hi * im_hi).max(0.0).sqrt();
    let inm_lo = rng.gen::<f64>() * inm_hi;
    CubicValue::new(
        UnitInterval::new(unit(im_lo), unit(im_hi)).expect("lo drawn below hi"),
        UnitInterval::new(unit(inm_lo), unit(inm_hi)).expect("lo drawn below hi"),
        unit(m),
        unit(nm),
    )
    .expect("draw respects both Pythagorean bounds")
}

pub fn random_cpfs_of_order<R: Rng + ?Sized>(order: usize, rng: &mut R) -> CubicFuzzySet {
    CubicFuzzySet::from_values((0..order).map(|_| random_cubic_value(rng)).collect())
}

/// A random valid set on `s`, determined by `(s.order(), seed)`.
pub fn random_cpfs(s: &FiniteSemigroup, seed: u64) -> CubicFuzzySet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cpfs_of_order(s.order(), &mut rng)
}

/// Checks that `hi` may grade the members of a crisp structure and `lo` the
/// rest: `im` and `inm` of `hi` at least those of `lo`, `m` and `nm` of `hi`
/// at most those of `lo`.
pub fn check_dominance(hi: &CubicValue, lo: &CubicValue) -> Result<(), CpfsError> {
    let violated = if !lo.im().leq(hi.im()) {
        Some(Component::Im)
    } else if !lo.inm().leq(hi.inm()) {
        Some(Component::Inm)
    } else if !hi.m().leq(lo.m()) {
        Some(Component::M)
    } else if !hi.nm().leq(lo.nm()) {
        Some(Component::Nm)
    } else {
        None
    };
    match violated {
        Some(component) => Err(CpfsError::DominanceViolation { component }),
        None => Ok(()),
    }
}

/// `hi` on the members of `set`, `lo` elsewhere.
///
/// When `set` is a crisp structure of some kind and the pair passes
/// [`check_dominance`], the result satisfies the fuzzy predicate of that kind.
pub fn characteristic_cpfs(
    s: &FiniteSemigroup,
    set: &ElementSet,
    hi: CubicValue,
    lo: CubicValue,
) -> Result<CubicFuzzySet, CpfsError> {
    if set.order() != s.order() {
        return Err(CpfsError::OrderMismatch {
            expected: s.order(),
            found: set.order(),
        });
    }
    check_dominance(&hi, &lo)?;
    Ok(CubicFuzzySet::from_values(
        s.elements()
            .map(|e| if set.contains(e) { hi } else { lo })
            .collect(),
    ))
}

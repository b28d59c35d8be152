#![allow(dead_code)]

use proptest::prelude::*;
use rough_cpfs::algebra::{
    enumerate_congruences, random_semigroup, CongruencePartition, FiniteSemigroup,
};
use rough_cpfs::cpfs::{random_cpfs, CubicFuzzySet, CubicValue, Lattice, UnitInterval, UnitScalar};

/// A seeded random semigroup of order 1..=max together with one of its congruences.
pub fn instance(max: usize) -> impl Strategy<Value = (FiniteSemigroup, CongruencePartition)> {
    (1..=max, any::<u64>(), any::<prop::sample::Index>()).prop_map(|(n, seed, pick)| {
        let s = random_semigroup(n, seed);
        let ws = enumerate_congruences(&s).unwrap();
        let w = pick.get(&ws).clone();
        (s, w)
    })
}

pub fn with_sets(
    max: usize,
) -> impl Strategy<
    Value = (
        FiniteSemigroup,
        CongruencePartition,
        CubicFuzzySet,
        CubicFuzzySet,
    ),
> {
    (instance(max), any::<u64>(), any::<u64>()).prop_map(|((s, w), a, b)| {
        let p = random_cpfs(&s, a);
        let q = random_cpfs(&s, b);
        (s, w, p, q)
    })
}

pub fn unit() -> impl Strategy<Value = UnitScalar> {
    prop_oneof![Just(0.0), Just(1.0), Just(0.5), 0.0..=1.0f64,]
        .prop_map(|v| UnitScalar::new(v).unwrap())
}

pub fn interval() -> impl Strategy<Value = UnitInterval> {
    (unit(), unit()).prop_map(|(a, b)| UnitInterval::new(a.meet(b), a.join(b)).unwrap())
}

pub fn cubic() -> impl Strategy<Value = CubicValue> {
    any::<u64>().prop_map(|seed| *random_cpfs(&FiniteSemigroup::null(1), seed).grade(0))
}

/// Elementwise grade comparison without tolerance.
pub fn exactly_contained(p: &CubicFuzzySet, q: &CubicFuzzySet) -> bool {
    p.grades().iter().zip(q.grades()).all(|(a, b)| {
        let iv = |x: UnitInterval, y: UnitInterval| x.lo() <= y.lo() && x.hi() <= y.hi();
        iv(a.im(), b.im()) && iv(b.inm(), a.inm()) && a.m() <= b.m() && b.nm() <= a.nm()
    })
}

//! Lower and upper approximations of cubic fuzzy sets by a congruence.
//!
//! The lower approximation takes, over each congruence class, the meet of the
//! membership grades (`im`, `m`) and the join of the non-membership grades
//! (`inm`, `nm`). The upper approximation is the dual.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{CongruencePartition, FiniteSemigroup, StructureKind};
use crate::cpfs::{
    check_cpfs_property_with, cpfs_contains, CpfsError, CubicFuzzySet, CubicValue, Lattice,
    PropertyOptions, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Approximation {
    Lower,
    Upper,
}

impl fmt::Display for Approximation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Approximation::Lower => "lower",
            Approximation::Upper => "upper",
        })
    }
}

/// Which approximations a rough predicate is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoughSide {
    Lower,
    Upper,
    Both,
}

impl std::str::FromStr for RoughSide {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lower" => Ok(RoughSide::Lower),
            "upper" => Ok(RoughSide::Upper),
            "both" => Ok(RoughSide::Both),
            other => Err(format!(
                "unknown side `{other}` (expected lower, upper or both)"
            )),
        }
    }
}

fn check_inputs(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
) -> Result<(), CpfsError> {
    if w.semigroup_order() != s.order() {
        return Err(CpfsError::OrderMismatch {
            expected: s.order(),
            found: w.semigroup_order(),
        });
    }
    if p.order() != s.order() {
        return Err(CpfsError::OrderMismatch {
            expected: s.order(),
            found: p.order(),
        });
    }
    Ok(())
}

fn class_fold(
    w: &CongruencePartition,
    p: &CubicFuzzySet,
    which: Approximation,
) -> Result<Vec<CubicValue>, CpfsError> {
    w.classes()
        .iter()
        .enumerate()
        .map(|(ci, class)| {
            let first = p.grade(class[0]);
            let (mut im, mut inm, mut m, mut nm) = (first.im(), first.inm(), first.m(), first.nm());
            for &e in &class[1..] {
                let g = p.grade(e);
                match which {
                    Approximation::Lower => {
                        im = im.meet(g.im());
                        m = m.meet(g.m());
                        inm = inm.join(g.inm());
                        nm = nm.join(g.nm());
                    }
                    Approximation::Upper => {
                        im = im.join(g.im());
                        m = m.join(g.m());
                        inm = inm.meet(g.inm());
                        nm = nm.meet(g.nm());
                    }
                }
            }
            CubicValue::new(im, inm, m, nm).map_err(|f| f.at(w.classes()[ci][0]))
        })
        .collect()
}

/// One approximated grade per congruence class, indexed by class.
///
/// This is the induced cubic fuzzy set on the quotient `S / w`.
pub fn approx_on_quotient(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
    which: Approximation,
) -> Result<CubicFuzzySet, CpfsError> {
    check_inputs(s, w, p)?;
    Ok(CubicFuzzySet::from_values(class_fold(w, p, which)?))
}

pub fn approximate(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
    which: Approximation,
) -> Result<CubicFuzzySet, CpfsError> {
    check_inputs(s, w, p)?;
    let per_class = class_fold(w, p, which)?;
    Ok(CubicFuzzySet::from_values(
        s.elements().map(|e| per_class[w.class_index(e)]).collect(),
    ))
}

pub fn lower_approx(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
) -> Result<CubicFuzzySet, CpfsError> {
    approximate(s, w, p, Approximation::Lower)
}

pub fn upper_approx(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
) -> Result<CubicFuzzySet, CpfsError> {
    approximate(s, w, p, Approximation::Upper)
}

/// Lower and upper approximation computed together.
#[derive(Debug, Clone, PartialEq)]
pub struct RoughPair {
    pub lower: CubicFuzzySet,
    pub upper: CubicFuzzySet,
    pub congruence: CongruencePartition,
}

pub fn rough_pair(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
) -> Result<RoughPair, CpfsError> {
    let pair = RoughPair {
        lower: lower_approx(s, w, p)?,
        upper: upper_approx(s, w, p)?,
        congruence: w.clone(),
    };
    debug_assert!(cpfs_contains(&pair.lower, &pair.upper)
        .map(|v| v.holds())
        .unwrap_or(false));
    Ok(pair)
}

/// Applies a structure predicate to the requested approximation(s). With
/// [`RoughSide::Both`] the lower approximation is checked first.
pub fn check_rough_property(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
    kind: StructureKind,
    side: RoughSide,
    options: PropertyOptions,
) -> Result<(Option<Approximation>, Verdict), CpfsError> {
    let sides: &[Approximation] = match side {
        RoughSide::Lower => &[Approximation::Lower],
        RoughSide::Upper => &[Approximation::Upper],
        RoughSide::Both => &[Approximation::Lower, Approximation::Upper],
    };
    for &which in sides {
        let approx = approximate(s, w, p, which)?;
        let verdict = check_cpfs_property_with(s, &approx, kind, options)?;
        if !verdict.holds() {
            return Ok((Some(which), verdict));
        }
    }
    Ok((None, Verdict::Holds))
}

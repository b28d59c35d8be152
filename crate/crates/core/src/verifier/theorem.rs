use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{CongruencePartition, FiniteSemigroup, StructureKind};
use crate::cpfs::{
    check_cpfs_property_with, compose, cpfs_contains, Component, CpfsError, CubicFuzzySet,
    GradeValue, PropertyOptions, Verdict, Witness,
};
use crate::rough::{approx_on_quotient, approximate, Approximation};

use super::VerifyError;

/// The checked results: the quotient proposition, the two composition
/// theorems and the approximation-preserves-structure theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    P3_1,
    T3_1,
    T3_2,
    T4_1,
    T4_2L,
    T4_2R,
    T4_3,
    T4_4L,
    T4_4R,
    T4_5,
    T4_6,
    T4_7,
    T4_8,
}

/// What a theorem has to establish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// Both approximations are valid, class-constant, and induce valid sets on the quotient.
    Quotient,
    /// `approx(P) ∘ approx(Q) ⊆ approx(P ∘ Q)`.
    Composition(Approximation),
    /// If `P` has the structure then so does its approximation.
    Preserves(Approximation, StructureKind),
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::P3_1,
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::T4_1,
        TheoremId::T4_2L,
        TheoremId::T4_2R,
        TheoremId::T4_3,
        TheoremId::T4_4L,
        TheoremId::T4_4R,
        TheoremId::T4_5,
        TheoremId::T4_6,
        TheoremId::T4_7,
        TheoremId::T4_8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::P3_1 => "P3_1",
            TheoremId::T3_1 => "T3_1",
            TheoremId::T3_2 => "T3_2",
            TheoremId::T4_1 => "T4_1",
            TheoremId::T4_2L => "T4_2L",
            TheoremId::T4_2R => "T4_2R",
            TheoremId::T4_3 => "T4_3",
            TheoremId::T4_4L => "T4_4L",
            TheoremId::T4_4R => "T4_4R",
            TheoremId::T4_5 => "T4_5",
            TheoremId::T4_6 => "T4_6",
            TheoremId::T4_7 => "T4_7",
            TheoremId::T4_8 => "T4_8",
        }
    }

    pub fn claim(self) -> Claim {
        use Approximation::{Lower, Upper};
        use StructureKind::*;
        match self {
            TheoremId::P3_1 => Claim::Quotient,
            TheoremId::T3_1 => Claim::Composition(Lower),
            TheoremId::T3_2 => Claim::Composition(Upper),
            TheoremId::T4_1 => Claim::Preserves(Upper, Subsemigroup),
            TheoremId::T4_2L => Claim::Preserves(Upper, LeftIdeal),
            TheoremId::T4_2R => Claim::Preserves(Upper, RightIdeal),
            TheoremId::T4_3 => Claim::Preserves(Lower, Subsemigroup),
            TheoremId::T4_4L => Claim::Preserves(Lower, LeftIdeal),
            TheoremId::T4_4R => Claim::Preserves(Lower, RightIdeal),
            TheoremId::T4_5 => Claim::Preserves(Upper, BiIdeal),
            TheoremId::T4_6 => Claim::Preserves(Lower, BiIdeal),
            TheoremId::T4_7 => Claim::Preserves(Upper, InteriorIdeal),
            TheoremId::T4_8 => Claim::Preserves(Lower, InteriorIdeal),
        }
    }

    /// Whether the stated hypothesis includes completeness of the congruence.
    pub fn claims_complete_congruence(self) -> bool {
        matches!(
            self,
            TheoremId::T3_1
                | TheoremId::T3_2
                | TheoremId::T4_3
                | TheoremId::T4_4L
                | TheoremId::T4_4R
                | TheoremId::T4_6
                | TheoremId::T4_8
        )
    }

    pub fn takes_two_sets(self) -> bool {
        matches!(self.claim(), Claim::Composition(_))
    }

    /// The structure `P` must have for the hypothesis to hold.
    pub fn hypothesis_kind(self) -> Option<StructureKind> {
        match self.claim() {
            Claim::Preserves(_, kind) => Some(kind),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

/// Claim mode checks each theorem under its stated hypotheses; explore mode
/// drops the completeness requirement everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Claim,
    Explore,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Claim => "claim",
            Mode::Explore => "explore",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "claim" => Ok(Mode::Claim),
            "explore" => Ok(Mode::Explore),
            other => Err(format!(
                "unknown mode `{other}` (expected claim or explore)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub mode: Mode,
    pub strict_bi_ideal: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            mode: Mode::Claim,
            strict_bi_ideal: false,
        }
    }
}

impl CheckOptions {
    pub fn requires_complete(&self, id: TheoremId) -> bool {
        self.mode == Mode::Claim && id.claims_complete_congruence()
    }

    fn property(&self) -> PropertyOptions {
        PropertyOptions {
            strict_bi_ideal: self.strict_bi_ideal,
        }
    }
}

/// A failed conclusion: which approximation it concerns and the first
/// violated inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub approximation: Approximation,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TheoremOutcome {
    /// `strict` is set for the composition theorems: whether the containment
    /// is proper rather than an equality.
    Pass {
        strict: Option<bool>,
    },
    Fail(Failure),
}

impl TheoremOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, TheoremOutcome::Pass { .. })
    }
}

/// Checks one theorem on one instance.
///
/// Instances that do not satisfy the hypothesis are rejected with
/// [`VerifyError::HypothesisNotMet`] rather than counted as passes.
pub fn check_theorem(
    id: TheoremId,
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
    q: Option<&CubicFuzzySet>,
    options: &CheckOptions,
) -> Result<TheoremOutcome, VerifyError> {
    if options.requires_complete(id) && !w.is_complete() {
        return Err(VerifyError::HypothesisNotMet {
            theorem: id,
            reason: "congruence is not complete".into(),
        });
    }
    match id.claim() {
        Claim::Quotient => check_quotient(s, w, p),
        Claim::Composition(which) => {
            let q = q.ok_or(VerifyError::MissingOperand { theorem: id })?;
            check_composition(s, w, p, q, which)
        }
        Claim::Preserves(which, kind) => {
            let hypothesis = check_cpfs_property_with(s, p, kind, options.property())?;
            if let Some(w) = hypothesis.witness() {
                return Err(VerifyError::HypothesisNotMet {
                    theorem: id,
                    reason: format!("P is not a {kind}: {w}"),
                });
            }
            let approx = approximate(s, w, p, which)?;
            Ok(
                match check_cpfs_property_with(s, &approx, kind, options.property())? {
                    Verdict::Holds => TheoremOutcome::Pass { strict: None },
                    Verdict::Fails(witness) => TheoremOutcome::Fail(Failure {
                        approximation: which,
                        witness,
                    }),
                },
            )
        }
    }
}

fn label(which: Approximation) -> &'static str {
    match which {
        Approximation::Lower => "lower",
        Approximation::Upper => "upper",
    }
}

fn check_composition(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
    q: &CubicFuzzySet,
    which: Approximation,
) -> Result<TheoremOutcome, VerifyError> {
    let lhs = compose(
        s,
        &approximate(s, w, p, which)?,
        &approximate(s, w, q, which)?,
    )?;
    let rhs = approximate(s, w, &compose(s, p, q)?, which)?;
    Ok(match cpfs_contains(&lhs, &rhs)? {
        Verdict::Holds => TheoremOutcome::Pass {
            strict: Some(lhs != rhs),
        },
        Verdict::Fails(mut witness) => {
            let side = label(which);
            witness.condition = witness
                .condition
                .replace("P.", &format!("({side}(P) o {side}(Q))."))
                .replace("Q.", &format!("{side}(P o Q)."));
            TheoremOutcome::Fail(Failure {
                approximation: which,
                witness,
            })
        }
    })
}

fn pythagorean_witness(which: Approximation, err: &CpfsError) -> Option<Witness> {
    let side = label(which);
    let (element, component, condition, value) = match *err {
        CpfsError::PythagoreanViolation { element, value } => (
            element,
            Component::M,
            format!("{side}.m(z)^2 + {side}.nm(z)^2 <= 1"),
            value,
        ),
        CpfsError::IntervalPythagoreanViolation { element, value } => (
            element,
            Component::Im,
            format!("{side}.im(z).hi^2 + {side}.inm(z).hi^2 <= 1"),
            value,
        ),
        _ => return None,
    };
    Some(Witness {
        tuple: vec![("z".into(), element)],
        component,
        condition,
        lhs: GradeValue::Scalar(value),
        rhs: GradeValue::Scalar(1.0),
    })
}

fn check_quotient(
    s: &FiniteSemigroup,
    w: &CongruencePartition,
    p: &CubicFuzzySet,
) -> Result<TheoremOutcome, VerifyError> {
    let quotient = w.quotient(s);
    FiniteSemigroup::from_rows(&quotient.rows())?;
    for which in [Approximation::Lower, Approximation::Upper] {
        let fail = |witness| {
            Ok(TheoremOutcome::Fail(Failure {
                approximation: which,
                witness,
            }))
        };
        let approx = match approximate(s, w, p, which) {
            Ok(a) => a,
            Err(err) => match pythagorean_witness(which, &err) {
                Some(witness) => return fail(witness),
                None => return Err(err.into()),
            },
        };
        if let Err(err) = CubicFuzzySet::validate(s.order(), &approx.to_raw()) {
            if let Some(witness) = pythagorean_witness(which, &err) {
                return fail(witness);
            }
            return Err(err.into());
        }
        for class in w.classes() {
            let first = approx.grade(class[0]);
            for &e in &class[1..] {
                let other = approx.grade(e);
                if let Some(c) = Component::ALL
                    .into_iter()
                    .find(|&c| GradeValue::of(first, c) != GradeValue::of(other, c))
                {
                    return fail(Witness {
                        tuple: vec![("z1".into(), class[0]), ("z2".into(), e)],
                        component: c,
                        condition: format!("{}.{c}(z1) == {}.{c}(z2)", label(which), label(which)),
                        lhs: GradeValue::of(first, c),
                        rhs: GradeValue::of(other, c),
                    });
                }
            }
        }
        let induced = approx_on_quotient(s, w, p, which)?;
        if let Err(err) = CubicFuzzySet::validate(quotient.order(), &induced.to_raw()) {
            if let Some(mut witness) = pythagorean_witness(which, &err) {
                witness.tuple = vec![("class".into(), witness.tuple[0].1)];
                return fail(witness);
            }
            return Err(err.into());
        }
    }
    Ok(TheoremOutcome::Pass { strict: None })
}

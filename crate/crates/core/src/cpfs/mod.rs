//! Cubic Pythagorean fuzzy values and sets over a finite semigroup.
//!
//! Every lattice operation here is a componentwise `min`/`max`, so results are
//! exact; only the squared Pythagorean checks and the order comparisons use
//! the tolerance [`EPSILON`].

mod generate;
mod grade;
mod property;
mod set;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Element;

pub use generate::{
    characteristic_cpfs, check_dominance, random_cpfs, random_cpfs_of_order, random_cubic_value,
};
pub use grade::{CubicValue, GradeFault, Lattice, RawGrade, UnitInterval, UnitScalar};
pub use property::{check_cpfs_property, check_cpfs_property_with, PropertyOptions};
pub use set::{compose, cpfs_contains, CubicFuzzySet};

/// Tolerance on Pythagorean checks and grade comparisons.
pub const EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CpfsError {
    #[error("element {element}: {component} value {value} is outside [0, 1]")]
    OutOfUnitRange {
        element: Element,
        component: Component,
        value: f64,
    },
    #[error("BadInterval at element {element}: {component} = [{lo}, {hi}] has lo > hi")]
    BadInterval {
        element: Element,
        component: Component,
        lo: f64,
        hi: f64,
    },
    #[error("PythagoreanViolation at element {element}: m^2 + nm^2 = {value} > 1")]
    PythagoreanViolation { element: Element, value: f64 },
    #[error("IntervalPythagoreanViolation at element {element}: im.hi^2 + inm.hi^2 = {value} > 1")]
    IntervalPythagoreanViolation { element: Element, value: f64 },
    #[error("MissingElement: no grade for element {element}")]
    MissingElement { element: Element },
    #[error("ExtraElement: grade given for element {element} beyond the semigroup order")]
    ExtraElement { element: Element },
    #[error("OrderMismatch: expected order {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("DominanceViolation: high grade does not dominate low grade in {component}")]
    DominanceViolation { component: Component },
}

impl GradeFault {
    pub fn at(self, element: Element) -> CpfsError {
        match self {
            GradeFault::OutOfUnitRange { component, value } => CpfsError::OutOfUnitRange {
                element,
                component,
                value,
            },
            GradeFault::BadInterval { component, lo, hi } => CpfsError::BadInterval {
                element,
                component,
                lo,
                hi,
            },
            GradeFault::Pythagorean { value } => CpfsError::PythagoreanViolation { element, value },
            GradeFault::IntervalPythagorean { value } => {
                CpfsError::IntervalPythagoreanViolation { element, value }
            }
        }
    }
}

/// The four channels of a cubic grade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Im,
    Inm,
    M,
    Nm,
}

impl Component {
    pub const ALL: [Component; 4] = [Component::Im, Component::Inm, Component::M, Component::Nm];

    pub fn name(self) -> &'static str {
        match self {
            Component::Im => "im",
            Component::Inm => "inm",
            Component::M => "m",
            Component::Nm => "nm",
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A grade component value, scalar or interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GradeValue {
    Scalar(f64),
    Interval([f64; 2]),
}

impl GradeValue {
    pub fn of(value: &CubicValue, component: Component) -> GradeValue {
        match component {
            Component::Im => GradeValue::Interval(value.im().to_array()),
            Component::Inm => GradeValue::Interval(value.inm().to_array()),
            Component::M => GradeValue::Scalar(value.m().get()),
            Component::Nm => GradeValue::Scalar(value.nm().get()),
        }
    }
}

impl fmt::Display for GradeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradeValue::Scalar(v) => write!(f, "{v:.9}"),
            GradeValue::Interval([lo, hi]) => write!(f, "[{lo:.9}, {hi:.9}]"),
        }
    }
}

/// The first violated inequality found by a check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Variable bindings of the failing tuple, e.g. `[("x", 0), ("y", 1)]`.
    pub tuple: Vec<(String, Element)>,
    pub component: Component,
    /// The violated condition, e.g. `im(xy) >= min{im(x), im(y)}`.
    pub condition: String,
    pub lhs: GradeValue,
    pub rhs: GradeValue,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bindings: Vec<String> = self
            .tuple
            .iter()
            .map(|(name, e)| format!("{name}={e}"))
            .collect();
        write!(
            f,
            "({}) violates {}: lhs {} rhs {}",
            bindings.join(", "),
            self.condition,
            self.lhs,
            self.rhs
        )
    }
}

/// Outcome of a predicate that reports its first counterexample.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

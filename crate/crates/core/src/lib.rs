//! Rough cubic Pythagorean fuzzy sets over finite semigroups.
//!
//! [`algebra`] holds semigroups, congruences and crisp ideals; [`cpfs`] the
//! graded sets and their structure predicates; [`rough`] the approximations
//! by a congruence; [`verifier`] the exhaustive and sampled theorem checks.

pub mod algebra;
pub mod cpfs;
pub mod rough;
pub mod verifier;

pub use algebra::{AlgebraError, CongruencePartition, ElementSet, FiniteSemigroup, StructureKind};
pub use cpfs::{CpfsError, CubicFuzzySet, CubicValue, RawGrade};
pub use rough::{lower_approx, upper_approx, Approximation, RoughSide};
pub use verifier::{SweepConfig, TheoremId, VerifyError};

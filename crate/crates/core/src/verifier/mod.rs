//! Brute-force checking of the approximation theorems over enumerated and
//! sampled instances.

mod hypothesis;
mod sweep;
mod theorem;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cpfs::CpfsError;

pub use hypothesis::{hypothesis_generator, ladder, HypothesisBudget};
pub use sweep::{
    sweep, sweep_semigroups, sweep_with_workers, ApproximationAudit, Counterexample, NamedGrades,
    SweepConfig, SweepOutcome, TheoremReport,
};
pub use theorem::{check_theorem, CheckOptions, Claim, Failure, Mode, TheoremId, TheoremOutcome};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("HypothesisNotMet for {theorem}: {reason}")]
    HypothesisNotMet { theorem: TheoremId, reason: String },
    #[error("{theorem} needs a second set Q")]
    MissingOperand { theorem: TheoremId },
    #[error("ConfigInvalid: {0}")]
    ConfigInvalid(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cpfs(#[from] CpfsError),
}

//! Command-line front end for `rough-cpfs`: instance files, operations on
//! them, and the theorem sweep.

mod app;
pub mod instance;
pub mod report;

pub use app::run;

//! Sweeps, verification suites and the `spechtkit` command line front end.

pub mod enumerate;
pub mod report;
pub mod spotcheck;
pub mod suites;

pub use enumerate::{enumerate, Filter, SweepSpec};
pub use report::{Failure, Log, Report, Tally};
pub use suites::{run_suite, suite_names, VerifyError};

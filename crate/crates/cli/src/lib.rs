//! Library side of the gapkit command line: instance generation helpers,
//! measure dispatch, and the verification suites. The binary in main.rs
//! is a thin argument layer over these.

pub mod config;
pub mod gen;
pub mod measures;
pub mod suites;

pub use config::SuiteConfig;
pub use measures::{solve_text, Measure};
pub use suites::{run_suite, SuiteReport, TrialFailure, SUITES};

use gapkit_core::CoreError;
use gapkit_solvers::SolverError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LcsError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error(transparent)]
    Solver(#[from] SolverError),

    #[error("invalid weight schedule: {reason}")]
    InvalidSchedule { reason: String },

    #[error("invalid vector lists: {reason}")]
    BadLists { reason: String },

    #[error("unary expansion of a sequence would produce {length} symbols, above the cap of {cap}")]
    ExpansionTooLong { length: u64, cap: u64 },

    #[error("instance JSON is malformed: {reason}")]
    BadInstance { reason: String },
}

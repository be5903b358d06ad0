use gapkit_core::CoreError;
use gapkit_solvers::SolverError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SatError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error(transparent)]
    Solver(#[from] SolverError),

    #[error("DIMACS parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("split needs k >= 2 blocks, got {k}")]
    BadBlockCount { k: usize },

    #[error("block {block} has {size} variables, above the enumeration guard of {max}")]
    BlockTooLarge { block: usize, size: usize, max: usize },

    #[error("brute-force MAX-SAT guard: {vars} variables exceed {max}")]
    TooManyVars { vars: usize, max: usize },

    #[error("oracle does not support this query: {reason}")]
    OracleUnsupported { reason: String },
}

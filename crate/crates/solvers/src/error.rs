use gapkit_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("k = {k} is outside the supported range {min}..={max}")]
    UnsupportedK { k: usize, min: usize, max: usize },

    #[error("DP table of {cells} cells exceeds the cap of {max}")]
    TableTooLarge { cells: u128, max: usize },

    #[error("brute-force guard: shortest input of length {len} exceeds {max}")]
    BruteForceGuard { len: usize, max: usize },

    #[error("window length {window} exceeds a sequence of length {len}")]
    WindowTooLong { window: usize, len: usize },

    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("distance table does not cover the sequences' alphabets")]
    TableMismatch,
}

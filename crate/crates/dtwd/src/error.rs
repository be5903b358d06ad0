use gapkit_core::CoreError;
use gapkit_solvers::SolverError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DtwdError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error(transparent)]
    Solver(#[from] SolverError),

    #[error("padding symbol {glyph:?} already occurs in the sequence's alphabet")]
    PaddingSymbolInUse { glyph: String },

    #[error("padding vector has {got} entries, need {need} (sequence length + 1)")]
    PaddingLengthMismatch { got: usize, need: usize },

    #[error("padding entries must be positive")]
    NonPositivePadding,

    #[error("triangle inequality violated at ({a}, {b}, {c})")]
    TriangleViolation { a: String, b: String, c: String },

    #[error("instance JSON is malformed: {reason}")]
    BadInstance { reason: String },

    #[error("gadget parameters invalid: {reason}")]
    BadGadgetParams { reason: String },
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("sequences use different alphabets")]
    AlphabetMismatch,

    #[error("symbol id {id} is not part of the alphabet (size {size})")]
    UnknownSymbol { id: u32, size: usize },

    #[error("glyph {glyph:?} is not part of the alphabet")]
    UnknownGlyph { glyph: String },

    #[error("invalid alphabet: {reason}")]
    InvalidAlphabet { reason: String },

    #[error("weight for symbol {glyph:?} must be >= 1, got {weight}")]
    InvalidWeight { glyph: String, weight: i64 },

    #[error("64-bit signed arithmetic overflow in {context}")]
    Overflow { context: &'static str },

    #[error("invalid vector family: {reason}")]
    InvalidFamily { reason: String },

    #[error("negative distance entry at ({row}, {col})")]
    NegativeDistance { row: String, col: String },

    #[error("distance table has no entry for ({row}, {col})")]
    MissingDistance { row: String, col: String },

    #[error("invalid matching: {reason}")]
    InvalidMatching { reason: String },

    #[error("invalid CNF formula: {reason}")]
    InvalidCnf { reason: String },
}

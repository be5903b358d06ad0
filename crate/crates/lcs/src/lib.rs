//! The two-sequence reduction: vector lists to a weighted-LCS instance
//! over a seven-symbol alphabet whose score crosses a precomputed
//! threshold exactly when an r-far pair exists, plus the unary expansion
//! down to plain LCS.

pub mod error;
pub mod expand;
pub mod gadgets;
pub mod instance;
pub mod oracle;
pub mod schedule;

pub use error::LcsError;
pub use expand::{unary_expand, DEFAULT_EXPANSION_CAP};
pub use gadgets::{
    coord_gadget_1, coord_gadget_2, lcs_alphabet, schedule_weights, vector_gadget_1,
    vector_gadget_2,
};
pub use instance::{build_instance, LcsInstance, LcsInstanceJson};
pub use oracle::LcsMovOracle;
pub use schedule::WeightSchedule;

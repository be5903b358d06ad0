//! DTWD and Frechet constructions: the run-padding transform with its
//! edit-distance lower bound, and the constant point-set gadgets whose
//! Frechet/DTWD costs decide orthogonality with a 0-vs-1 gap (1/2 vs 3/2
//! under the metric table).

pub mod error;
pub mod instance;
pub mod pad;
pub mod pointsets;

#[cfg(feature = "experimental")]
pub mod edit_gadgets;

pub use error::DtwdError;
pub use instance::{build_frechet_instance, dtwd_gap_check, GadgetInstance, GadgetInstanceJson};
pub use pad::{pad_transform, padded_alphabet, verify_edit_dtwd_inequality, PaddingVector};
pub use pointsets::{build_frechet_pointsets, metricize, point_alphabet, GadgetPointSets};

//! The k-sequence reduction: k vector lists to a k-WLCS instance with
//! binary-expansion coordinate gadgets and per-sequence selection padding,
//! plus the windowed (local) construction over a constant-size alphabet.

pub mod error;
pub mod expand;
pub mod gadgets;
pub mod instance;
pub mod local;
pub mod schedule;

pub use error::KlcsError;
pub use expand::{k_unary_expand, unary_expand_one, DEFAULT_EXPANSION_CAP};
pub use gadgets::{
    gadget_weights, k_coord_gadget, k_vector_gadget, klcs_alphabet, local_alphabet,
    schedule_weights,
};
pub use instance::{build_klcs_instance, build_klcs_instance_with, KLcsInstance, KLcsInstanceJson};
pub use local::{build_local_klcs_instance, runs_use_fresh_symbols, LocalKlcsInstance};
pub use schedule::{KGadgetWeights, KWeightSchedule, MAX_BUILDER_K};

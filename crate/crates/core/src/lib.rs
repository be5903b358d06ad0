//! Shared domain types for the gap-reduction toolkit: alphabets and
//! sequences, symbol weights, bit vectors and vector families, exact
//! half-unit distance tables, alignment witnesses, and CNF formulas.
//!
//! Everything here is immutable after construction and safe to share
//! across threads; all operations are pure.

pub mod alphabet;
pub mod arith;
pub mod bitvec;
pub mod cnf;
pub mod distance;
pub mod error;
pub mod family;
pub mod matching;
pub mod sequence;
pub mod weights;

pub use alphabet::{same_alphabet, Alphabet, Symbol, SymbolId};
pub use bitvec::{inner_product, is_far, k_inner_product, BitVector};
pub use cnf::CnfFormula;
pub use distance::{DistanceTable, HalfUnits};
pub use error::CoreError;
pub use family::VectorFamily;
pub use matching::Matching;
pub use sequence::{concat, Sequence};
pub use weights::WeightedAlphabet;

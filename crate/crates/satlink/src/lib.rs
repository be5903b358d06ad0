//! CNF ingestion and the split-and-list bridge from MAX-CNF-SAT to the
//! (k-)Most-Orthogonal-Vectors problems.

pub mod dimacs;
pub mod error;
pub mod maxsat;
pub mod split;

pub use dimacs::parse_dimacs;
pub use error::SatError;
pub use maxsat::{
    max_oracle_calls, max_sat_bruteforce, max_sat_via_mov, BruteForceMovOracle, MaxSatOutcome,
    MovOracle,
};
pub use split::{vectorize, SplitAssignmentTable, MAX_BLOCK_VARS};

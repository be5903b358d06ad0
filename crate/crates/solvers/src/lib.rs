//! Reference solvers for every similarity measure the toolkit constructs
//! instances of, plus exponential brute-force oracles to check them
//! against. Correctness over speed: plain quadratic (or k-dimensional)
//! tables, no pruning heuristics in any reference path.

pub mod brute;
pub mod edit;
pub mod error;
pub mod klcs;
pub mod lcs;
pub mod local;
pub mod orthogonal;
pub mod result;
pub mod warp;

pub use brute::{
    dtwd_bruteforce, edit_bruteforce, frechet_bruteforce, k_lcs_bruteforce, k_wlcs_bruteforce,
    lcs_bruteforce, local_k_lcs_bruteforce, wlcs_bruteforce,
};
pub use edit::edit;
pub use error::SolverError;
pub use klcs::{k_lcs, k_lcs_with_cap, k_wlcs, k_wlcs_with_cap, k_wlcs_with_witness};
pub use lcs::{indel_distance, lcs, lcs_with_witness, wlcs, wlcs_with_witness};
pub use local::local_k_lcs;
pub use orthogonal::{kmov_bruteforce, min_inner, min_k_inner, mov_bruteforce};
pub use result::{SolveResult, Witness};
pub use warp::{dtwd, dtwd_with_traversal, frechet, traversal_cost};

#[cfg(feature = "banded")]
pub use lcs::lcs_banded;

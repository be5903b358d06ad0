//! MAX-CNF-SAT drivers: an exhaustive assignment sweep, and the
//! binary-search reduction to a far-tuple oracle over the split-and-list
//! vectors.

use gapkit_core::{CnfFormula, VectorFamily};
use gapkit_solvers::kmov_bruteforce;

use crate::error::SatError;
use crate::split::vectorize;

/// Guard for the 2^n assignment sweep.
pub const MAX_BRUTE_VARS: usize = 22;

/// Maximum number of simultaneously satisfiable clauses, by trying all
/// assignments.
pub fn max_sat_bruteforce(cnf: &CnfFormula) -> Result<u32, SatError> {
    let n = cnf.num_vars();
    if n > MAX_BRUTE_VARS {
        return Err(SatError::TooManyVars { vars: n, max: MAX_BRUTE_VARS });
    }
    let mut best = 0u32;
    let mut assignment = vec![false; n];
    for counter in 0u64..(1u64 << n) {
        for (b, slot) in assignment.iter_mut().enumerate() {
            *slot = counter >> b & 1 == 1;
        }
        best = best.max(cnf.count_satisfied(&assignment) as u32);
        if best as usize == cnf.num_clauses() {
            break;
        }
    }
    Ok(best)
}

/// A decision oracle for k-Most-Orthogonal-Vectors: does the family contain
/// a tuple with k-inner product at most `r`? Injectable so the whole
/// pipeline can be driven through constructed string instances.
pub trait MovOracle {
    fn exists_far(&mut self, family: &VectorFamily, r: u64) -> Result<bool, SatError>;
}

/// Reference oracle: direct tuple enumeration.
pub struct BruteForceMovOracle;

impl MovOracle for BruteForceMovOracle {
    fn exists_far(&mut self, family: &VectorFamily, r: u64) -> Result<bool, SatError> {
        Ok(kmov_bruteforce(family, r)?.is_some())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxSatOutcome {
    pub best: u32,
    pub oracle_calls: u32,
}

/// Binary-search bound on oracle calls for M clauses.
pub fn max_oracle_calls(m: usize) -> u32 {
    (usize::BITS - m.leading_zeros()) + 1
}

/// MAX-SAT through the vector pipeline: split into k blocks, then binary
/// search for the smallest r with a far k-tuple; the answer is M - r.
pub fn max_sat_via_mov(
    cnf: &CnfFormula,
    k: usize,
    oracle: &mut dyn MovOracle,
) -> Result<MaxSatOutcome, SatError> {
    let m = cnf.num_clauses();
    if m == 0 {
        return Ok(MaxSatOutcome { best: 0, oracle_calls: 0 });
    }
    let table = vectorize(cnf, k)?;
    let family = table.to_family()?;

    let mut calls = 0u32;
    let mut lo = 0u64;
    let mut hi = m as u64;
    // Smallest r such that a far tuple exists; r = M always qualifies.
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        calls += 1;
        if oracle.exists_far(&family, mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    debug_assert!(
        calls <= max_oracle_calls(m),
        "binary search used {calls} oracle calls for M = {m}"
    );
    Ok(MaxSatOutcome { best: m as u32 - lo as u32, oracle_calls: calls })
}

//! Brute-force search for far pairs and far k-tuples of vectors.

use gapkit_core::{inner_product, BitVector, CoreError, VectorFamily};

use crate::error::SolverError;

fn check_lists(a: &[BitVector], b: &[BitVector]) -> Result<(), SolverError> {
    if a.is_empty() || b.is_empty() {
        return Err(CoreError::InvalidFamily { reason: "lists must be nonempty".into() }.into());
    }
    let d = a[0].dim();
    for v in a.iter().chain(b) {
        if v.dim() != d {
            return Err(CoreError::DimensionMismatch { left: d, right: v.dim() }.into());
        }
    }
    Ok(())
}

/// First pair `(i, j)` in lexicographic order with inner product at most
/// `r`, if any.
pub fn mov_bruteforce(
    a: &[BitVector],
    b: &[BitVector],
    r: u64,
) -> Result<Option<(usize, usize)>, SolverError> {
    check_lists(a, b)?;
    for (i, va) in a.iter().enumerate() {
        for (j, vb) in b.iter().enumerate() {
            if inner_product(va, vb)? <= r {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// First k-tuple of list indices in lexicographic order whose k-inner
/// product is at most `r`, if any.
pub fn kmov_bruteforce(family: &VectorFamily, r: u64) -> Result<Option<Vec<usize>>, SolverError> {
    let k = family.k();
    let n = family.n();
    let mut idx = vec![0usize; k];
    loop {
        let tuple: Vec<&BitVector> = (0..k).map(|t| &family.list(t)[idx[t]]).collect();
        if gapkit_core::k_inner_product(&tuple)? <= r {
            return Ok(Some(idx));
        }
        let mut t = k;
        loop {
            if t == 0 {
                return Ok(None);
            }
            t -= 1;
            if idx[t] + 1 < n {
                idx[t] += 1;
                for u in t + 1..k {
                    idx[u] = 0;
                }
                break;
            }
        }
    }
}

/// Minimum pairwise inner product over the two lists.
pub fn min_inner(a: &[BitVector], b: &[BitVector]) -> Result<u64, SolverError> {
    check_lists(a, b)?;
    let mut best = u64::MAX;
    for va in a {
        for vb in b {
            best = best.min(inner_product(va, vb)?);
        }
    }
    Ok(best)
}

/// Minimum k-inner product over all k-tuples of the family.
pub fn min_k_inner(family: &VectorFamily) -> Result<u64, SolverError> {
    let k = family.k();
    let n = family.n();
    let mut best = u64::MAX;
    let mut idx = vec![0usize; k];
    loop {
        let tuple: Vec<&BitVector> = (0..k).map(|t| &family.list(t)[idx[t]]).collect();
        best = best.min(gapkit_core::k_inner_product(&tuple)?);
        let mut t = k;
        loop {
            if t == 0 {
                return Ok(best);
            }
            t -= 1;
            if idx[t] + 1 < n {
                idx[t] += 1;
                for u in t + 1..k {
                    idx[u] = 0;
                }
                break;
            }
        }
    }
}

//! k-sequence weighted LCS by k-dimensional dynamic programming, for
//! 2 <= k <= 4. The table is rolled along the longest sequence so memory
//! stays proportional to the product of the remaining lengths.

use gapkit_core::{same_alphabet, Matching, Sequence, SymbolId, WeightedAlphabet};

use crate::error::SolverError;
use crate::lcs::wlcs;
use crate::result::{SolveResult, Witness};

pub const MIN_K: usize = 2;
pub const MAX_K: usize = 4;

/// Default cap on the DP table size; deliberate large runs can opt into a
/// higher cap via [`k_wlcs_with_cap`].
pub const DEFAULT_MAX_CELLS: usize = 100_000_000;

fn check_seqs(seqs: &[&Sequence], w: &WeightedAlphabet) -> Result<(), SolverError> {
    let k = seqs.len();
    if !(MIN_K..=MAX_K).contains(&k) {
        return Err(SolverError::UnsupportedK { k, min: MIN_K, max: MAX_K });
    }
    for s in seqs {
        if !same_alphabet(s.alphabet(), seqs[0].alphabet()) {
            return Err(gapkit_core::CoreError::AlphabetMismatch.into());
        }
    }
    if !w.covers(seqs[0].alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    Ok(())
}

fn table_cells(seqs: &[&Sequence]) -> u128 {
    seqs.iter().map(|s| (s.len() + 1) as u128).product()
}

pub fn k_wlcs(seqs: &[&Sequence], w: &WeightedAlphabet) -> Result<i64, SolverError> {
    k_wlcs_with_cap(seqs, w, DEFAULT_MAX_CELLS)
}

pub fn k_wlcs_with_cap(
    seqs: &[&Sequence],
    w: &WeightedAlphabet,
    max_cells: usize,
) -> Result<i64, SolverError> {
    check_seqs(seqs, w)?;
    let cells = table_cells(seqs);
    if cells > max_cells as u128 {
        return Err(SolverError::TableTooLarge { cells, max: max_cells });
    }
    // Roll along the longest sequence.
    let mut order: Vec<usize> = (0..seqs.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(seqs[i].len()));
    let sorted: Vec<&Sequence> = order.iter().map(|&i| seqs[i]).collect();
    match sorted.len() {
        2 => wlcs(sorted[0], sorted[1], w),
        3 => Ok(wlcs3(sorted[0], sorted[1], sorted[2], w)),
        4 => Ok(wlcs4(sorted[0], sorted[1], sorted[2], sorted[3], w)),
        _ => unreachable!(),
    }
}

/// Unweighted k-LCS: k-WLCS under unit weights.
pub fn k_lcs(seqs: &[&Sequence]) -> Result<i64, SolverError> {
    let unit = WeightedAlphabet::unit(std::sync::Arc::clone(seqs[0].alphabet()));
    k_wlcs(seqs, &unit)
}

pub fn k_lcs_with_cap(seqs: &[&Sequence], max_cells: usize) -> Result<i64, SolverError> {
    let unit = WeightedAlphabet::unit(std::sync::Arc::clone(seqs[0].alphabet()));
    k_wlcs_with_cap(seqs, &unit, max_cells)
}

fn wlcs3(s1: &Sequence, s2: &Sequence, s3: &Sequence, w: &WeightedAlphabet) -> i64 {
    let a = s1.symbols();
    let b = s2.symbols();
    let c = s3.symbols();
    let (nb, nc) = (b.len(), c.len());
    let stride = nc + 1;
    let plane = (nb + 1) * stride;
    let mut prev = vec![0i64; plane];
    let mut cur = vec![0i64; plane];
    for &sa in a {
        let wa = w.weight(sa);
        for (j, &sb) in b.iter().enumerate() {
            let row = (j + 1) * stride;
            let row_up = j * stride;
            let matches_ab = sa == sb;
            for (l, &sc) in c.iter().enumerate() {
                let v = if matches_ab && sb == sc {
                    prev[row_up + l] + wa
                } else {
                    let drop1 = prev[row + l + 1];
                    let drop2 = cur[row_up + l + 1];
                    let drop3 = cur[row + l];
                    drop1.max(drop2).max(drop3)
                };
                cur[row + l + 1] = v;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[plane - 1]
}

fn wlcs4(s1: &Sequence, s2: &Sequence, s3: &Sequence, s4: &Sequence, w: &WeightedAlphabet) -> i64 {
    let a = s1.symbols();
    let b = s2.symbols();
    let c = s3.symbols();
    let d = s4.symbols();
    let (nb, nc, nd) = (b.len(), c.len(), d.len());
    let stride_c = nd + 1;
    let stride_b = (nc + 1) * stride_c;
    let plane = (nb + 1) * stride_b;
    let mut prev = vec![0i64; plane];
    let mut cur = vec![0i64; plane];
    for &sa in a {
        let wa = w.weight(sa);
        for (j, &sb) in b.iter().enumerate() {
            for (l, &sc) in c.iter().enumerate() {
                let base = (j + 1) * stride_b + (l + 1) * stride_c;
                let diag = j * stride_b + l * stride_c;
                let matches_abc = sa == sb && sb == sc;
                for (m, &sd) in d.iter().enumerate() {
                    let v = if matches_abc && sc == sd {
                        prev[diag + m] + wa
                    } else {
                        let drop1 = prev[base + m + 1];
                        let drop2 = cur[base - stride_b + m + 1];
                        let drop3 = cur[base - stride_c + m + 1];
                        let drop4 = cur[base + m];
                        drop1.max(drop2).max(drop3).max(drop4)
                    };
                    cur[base + m + 1] = v;
                }
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[plane - 1]
}

/// Cap for the witness variant, which keeps the full table in memory.
pub const WITNESS_MAX_CELLS: usize = 10_000_000;

/// k-WLCS with a matching witness; limited to small tables. Tie-break:
/// prefer the all-diagonal step, then dropping the earliest sequence.
pub fn k_wlcs_with_witness(
    seqs: &[&Sequence],
    w: &WeightedAlphabet,
) -> Result<SolveResult, SolverError> {
    check_seqs(seqs, w)?;
    let cells = table_cells(seqs);
    if cells > WITNESS_MAX_CELLS as u128 {
        return Err(SolverError::TableTooLarge { cells, max: WITNESS_MAX_CELLS });
    }
    let k = seqs.len();
    let lens: Vec<usize> = seqs.iter().map(|s| s.len()).collect();
    if lens.iter().any(|&l| l == 0) {
        return Ok(SolveResult {
            score: 0,
            witness: Some(Witness::Matching(Matching::new(Vec::new()))),
        });
    }
    let mut strides = vec![1usize; k];
    for t in (0..k - 1).rev() {
        strides[t] = strides[t + 1] * (lens[t + 1] + 1);
    }
    let total = strides[0] * (lens[0] + 1);
    let mut dp = vec![0i64; total];

    let syms: Vec<&[SymbolId]> = seqs.iter().map(|s| s.symbols()).collect();
    let mut idx = vec![1usize; k];
    'fill: loop {
        let flat: usize = idx.iter().zip(&strides).map(|(&i, &st)| i * st).sum();
        let sym = syms[0][idx[0] - 1];
        let all_match = (1..k).all(|t| syms[t][idx[t] - 1] == sym);
        let mut best = 0i64;
        if all_match {
            let diag: usize = idx.iter().zip(&strides).map(|(&i, &st)| (i - 1) * st).sum();
            best = dp[diag] + w.weight(sym);
        } else {
            for t in 0..k {
                best = best.max(dp[flat - strides[t]]);
            }
        }
        dp[flat] = best;

        // Odometer over 1..=lens[t].
        let mut t = k;
        loop {
            if t == 0 {
                break 'fill;
            }
            t -= 1;
            if idx[t] < lens[t] {
                idx[t] += 1;
                for u in t + 1..k {
                    idx[u] = 1;
                }
                break;
            }
        }
    }

    let mut pairs = Vec::new();
    let mut pos: Vec<usize> = lens.clone();
    while pos.iter().all(|&p| p > 0) {
        let flat: usize = pos.iter().zip(&strides).map(|(&i, &st)| i * st).sum();
        let sym = syms[0][pos[0] - 1];
        let all_match = (1..k).all(|t| syms[t][pos[t] - 1] == sym);
        let diag: usize = pos.iter().zip(&strides).map(|(&i, &st)| (i - 1) * st).sum();
        if all_match && dp[flat] == dp[diag] + w.weight(sym) {
            pairs.push(pos.iter().map(|&p| p - 1).collect::<Vec<_>>());
            for p in pos.iter_mut() {
                *p -= 1;
            }
        } else {
            let t = (0..k)
                .find(|&t| dp[flat] == dp[flat - strides[t]])
                .expect("some predecessor must reproduce the DP value");
            pos[t] -= 1;
        }
    }
    pairs.reverse();
    Ok(SolveResult {
        score: dp[total - 1],
        witness: Some(Witness::Matching(Matching::new(pairs))),
    })
}

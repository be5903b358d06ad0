//! Two-sequence (weighted) longest common subsequence, plus the
//! insert/delete-only edit distance it is equivalent to.

use gapkit_core::{same_alphabet, Matching, Sequence, SymbolId, WeightedAlphabet};

use crate::error::SolverError;
use crate::result::{SolveResult, Witness};

fn check_pair(s: &Sequence, t: &Sequence) -> Result<(), SolverError> {
    if !same_alphabet(s.alphabet(), t.alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    Ok(())
}

/// Length of the longest common subsequence, by the standard quadratic
/// table.
pub fn lcs(s: &Sequence, t: &Sequence) -> Result<i64, SolverError> {
    check_pair(s, t)?;
    Ok(lcs_ids(s.symbols(), t.symbols()))
}

/// LCS length over raw id slices; shared with the windowed solver.
pub(crate) fn lcs_ids(a: &[SymbolId], b: &[SymbolId]) -> i64 {
    let n = b.len();
    let mut prev = vec![0u32; n + 1];
    let mut cur = vec![0u32; n + 1];
    for &sa in a {
        for (j, &sb) in b.iter().enumerate() {
            cur[j + 1] = if sa == sb {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[n] as i64
}

/// Maximum total weight of a common subsequence.
pub fn wlcs(s: &Sequence, t: &Sequence, w: &WeightedAlphabet) -> Result<i64, SolverError> {
    check_pair(s, t)?;
    if !w.covers(s.alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    let (a, b) = (s.symbols(), t.symbols());
    let n = b.len();
    let mut prev = vec![0i64; n + 1];
    let mut cur = vec![0i64; n + 1];
    for &sa in a {
        let wa = w.weight(sa);
        for (j, &sb) in b.iter().enumerate() {
            cur[j + 1] = if sa == sb {
                prev[j] + wa
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[n])
}

/// WLCS with a matching witness. Backtracking tie-break is deterministic:
/// prefer diagonal, then left, then up.
pub fn wlcs_with_witness(
    s: &Sequence,
    t: &Sequence,
    w: &WeightedAlphabet,
) -> Result<SolveResult, SolverError> {
    check_pair(s, t)?;
    if !w.covers(s.alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    let (a, b) = (s.symbols(), t.symbols());
    let (m, n) = (a.len(), b.len());
    let mut dp = vec![0i64; (m + 1) * (n + 1)];
    let idx = |i: usize, j: usize| i * (n + 1) + j;
    for i in 1..=m {
        for j in 1..=n {
            dp[idx(i, j)] = if a[i - 1] == b[j - 1] {
                dp[idx(i - 1, j - 1)] + w.weight(a[i - 1])
            } else {
                dp[idx(i - 1, j)].max(dp[idx(i, j - 1)])
            };
        }
    }
    let mut pairs = Vec::new();
    let (mut i, mut j) = (m, n);
    while i > 0 && j > 0 {
        let here = dp[idx(i, j)];
        if a[i - 1] == b[j - 1] && here == dp[idx(i - 1, j - 1)] + w.weight(a[i - 1]) {
            pairs.push(vec![i - 1, j - 1]);
            i -= 1;
            j -= 1;
        } else if here == dp[idx(i, j - 1)] {
            j -= 1;
        } else {
            i -= 1;
        }
    }
    pairs.reverse();
    Ok(SolveResult {
        score: dp[idx(m, n)],
        witness: Some(Witness::Matching(Matching::new(pairs))),
    })
}

pub fn lcs_with_witness(s: &Sequence, t: &Sequence) -> Result<SolveResult, SolverError> {
    let unit = WeightedAlphabet::unit(std::sync::Arc::clone(s.alphabet()));
    wlcs_with_witness(s, t, &unit)
}

/// Edit distance when only insertions and deletions are allowed. Satisfies
/// `indel(s, t) = |s| + |t| - 2 * lcs(s, t)`; kept as its own DP so the
/// identity is a two-route check.
pub fn indel_distance(s: &Sequence, t: &Sequence) -> Result<i64, SolverError> {
    check_pair(s, t)?;
    let (a, b) = (s.symbols(), t.symbols());
    let n = b.len();
    let mut prev: Vec<i64> = (0..=n as i64).collect();
    let mut cur = vec![0i64; n + 1];
    for (i, &sa) in a.iter().enumerate() {
        cur[0] = i as i64 + 1;
        for (j, &sb) in b.iter().enumerate() {
            cur[j + 1] = if sa == sb {
                prev[j]
            } else {
                (prev[j + 1] + 1).min(cur[j] + 1)
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[n])
}

/// Banded LCS: only cells with `|i - j| <= band` are filled, giving a lower
/// bound on the true LCS (exact when the band covers an optimal path).
/// Excluded from all verification suites.
#[cfg(feature = "banded")]
pub fn lcs_banded(s: &Sequence, t: &Sequence, band: usize) -> Result<i64, SolverError> {
    check_pair(s, t)?;
    let (a, b) = (s.symbols(), t.symbols());
    let (m, n) = (a.len(), b.len());
    let mut prev = vec![0i64; n + 1];
    let mut cur = vec![0i64; n + 1];
    for i in 1..=m {
        let lo = i.saturating_sub(band).max(1);
        let hi = (i + band).min(n);
        if lo > hi {
            // The band misses this row; older row values remain valid
            // lower bounds.
            std::mem::swap(&mut prev, &mut cur);
            continue;
        }
        if lo > 1 {
            cur[lo - 1] = 0;
        }
        for j in lo..=hi {
            cur[j] = if a[i - 1] == b[j - 1] {
                prev[j - 1] + 1
            } else {
                prev[j].max(cur[j - 1])
            };
        }
        for j in hi + 1..=n {
            cur[j] = cur[hi];
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[n])
}

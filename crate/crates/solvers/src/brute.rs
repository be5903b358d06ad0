//! Exponential oracles. Each one evaluates its measure straight from the
//! definition (subsequence enumeration, alignment enumeration, traversal
//! enumeration) with no dynamic programming, so the DPs can be checked
//! against an independent route.

use gapkit_core::{same_alphabet, DistanceTable, HalfUnits, Sequence, SymbolId, WeightedAlphabet};

use crate::error::SolverError;

/// Length guard for subsequence enumeration (2^len candidates).
pub const SUBSEQ_GUARD: usize = 14;
/// Length guard for alignment and traversal enumeration.
pub const PATH_GUARD: usize = 8;

fn is_subsequence(x: &[SymbolId], s: &[SymbolId]) -> bool {
    let mut it = s.iter();
    x.iter().all(|sym| it.any(|t| t == sym))
}

fn subseq_scores(
    seqs: &[&Sequence],
    w: &WeightedAlphabet,
) -> Result<i64, SolverError> {
    for s in seqs {
        if !same_alphabet(s.alphabet(), seqs[0].alphabet()) {
            return Err(gapkit_core::CoreError::AlphabetMismatch.into());
        }
    }
    if !w.covers(seqs[0].alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    let shortest = seqs
        .iter()
        .enumerate()
        .min_by_key(|(_, s)| s.len())
        .map(|(i, _)| i)
        .unwrap();
    let base = seqs[shortest].symbols();
    if base.len() > SUBSEQ_GUARD {
        return Err(SolverError::BruteForceGuard { len: base.len(), max: SUBSEQ_GUARD });
    }
    let others: Vec<&[SymbolId]> = seqs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != shortest)
        .map(|(_, s)| s.symbols())
        .collect();

    let mut best = 0i64;
    for mask in 0u32..(1u32 << base.len()) {
        let candidate: Vec<SymbolId> = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &sym)| sym)
            .collect();
        if others.iter().all(|s| is_subsequence(&candidate, s)) {
            let score: i64 = candidate.iter().map(|&sym| w.weight(sym)).sum();
            best = best.max(score);
        }
    }
    Ok(best)
}

/// LCS by enumerating every subsequence of the shortest input.
pub fn lcs_bruteforce(s: &Sequence, t: &Sequence) -> Result<i64, SolverError> {
    let unit = WeightedAlphabet::unit(std::sync::Arc::clone(s.alphabet()));
    subseq_scores(&[s, t], &unit)
}

pub fn wlcs_bruteforce(
    s: &Sequence,
    t: &Sequence,
    w: &WeightedAlphabet,
) -> Result<i64, SolverError> {
    subseq_scores(&[s, t], w)
}

pub fn k_wlcs_bruteforce(seqs: &[&Sequence], w: &WeightedAlphabet) -> Result<i64, SolverError> {
    subseq_scores(seqs, w)
}

pub fn k_lcs_bruteforce(seqs: &[&Sequence]) -> Result<i64, SolverError> {
    let unit = WeightedAlphabet::unit(std::sync::Arc::clone(seqs[0].alphabet()));
    subseq_scores(seqs, &unit)
}

/// Edit distance from its alignment characterization: minimize, over all
/// monotone index matchings, the substitution mismatches plus the unmatched
/// symbols on both sides.
pub fn edit_bruteforce(s: &Sequence, t: &Sequence) -> Result<i64, SolverError> {
    if !same_alphabet(s.alphabet(), t.alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    let longest = s.len().max(t.len());
    if longest > PATH_GUARD {
        return Err(SolverError::BruteForceGuard { len: longest, max: PATH_GUARD });
    }
    fn go(a: &[SymbolId], b: &[SymbolId], i: usize, j: usize) -> i64 {
        // No further pairs: everything left is deleted/inserted.
        let mut best = (a.len() - i) as i64 + (b.len() - j) as i64;
        for p in i..a.len() {
            for q in j..b.len() {
                let skipped = (p - i) as i64 + (q - j) as i64;
                let here = skipped + i64::from(a[p] != b[q]) + go(a, b, p + 1, q + 1);
                best = best.min(here);
            }
        }
        best
    }
    Ok(go(s.symbols(), t.symbols(), 0, 0))
}

/// All monotone traversals, accumulated by `merge`; the start configuration
/// counts once.
fn traversal_best(
    x: &Sequence,
    y: &Sequence,
    dist: &DistanceTable,
    merge: &impl Fn(i64, i64) -> i64,
) -> Result<i64, SolverError> {
    if x.is_empty() || y.is_empty() {
        return Err(SolverError::EmptySequence);
    }
    if !same_alphabet(x.alphabet(), dist.rows()) || !same_alphabet(y.alphabet(), dist.cols()) {
        return Err(SolverError::TableMismatch);
    }
    let longest = x.len().max(y.len());
    if longest > PATH_GUARD {
        return Err(SolverError::BruteForceGuard { len: longest, max: PATH_GUARD });
    }
    fn go(
        x: &Sequence,
        y: &Sequence,
        dist: &DistanceTable,
        merge: &impl Fn(i64, i64) -> i64,
        i: usize,
        j: usize,
        acc: i64,
        best: &mut i64,
    ) {
        let acc = merge(acc, dist.get(x.get(i), y.get(j)).0);
        if i + 1 == x.len() && j + 1 == y.len() {
            *best = (*best).min(acc);
            return;
        }
        if i + 1 < x.len() {
            go(x, y, dist, merge, i + 1, j, acc, best);
        }
        if j + 1 < y.len() {
            go(x, y, dist, merge, i, j + 1, acc, best);
        }
        if i + 1 < x.len() && j + 1 < y.len() {
            go(x, y, dist, merge, i + 1, j + 1, acc, best);
        }
    }
    let mut best = i64::MAX;
    go(x, y, dist, merge, 0, 0, 0, &mut best);
    Ok(best)
}

pub fn dtwd_bruteforce(
    x: &Sequence,
    y: &Sequence,
    dist: &DistanceTable,
) -> Result<HalfUnits, SolverError> {
    Ok(HalfUnits(traversal_best(x, y, dist, &|a, b| a + b)?))
}

pub fn frechet_bruteforce(
    x: &Sequence,
    y: &Sequence,
    dist: &DistanceTable,
) -> Result<HalfUnits, SolverError> {
    Ok(HalfUnits(traversal_best(x, y, dist, &|a, b| a.max(b))?))
}

/// Fully naive windowed LCS sweep (no pruning), for cross-checking the
/// pruned local solver.
pub fn local_k_lcs_bruteforce(seqs: &[&Sequence], window: usize) -> Result<i64, SolverError> {
    for s in seqs {
        if window > s.len() {
            return Err(SolverError::WindowTooLong { window, len: s.len() });
        }
    }
    let k = seqs.len();
    let starts: Vec<usize> = seqs.iter().map(|s| s.len() - window + 1).collect();
    let mut pos = vec![0usize; k];
    let mut best = 0i64;
    loop {
        let windows: Vec<Sequence> =
            seqs.iter().zip(&pos).map(|(s, &p)| s.window(p, window)).collect();
        let refs: Vec<&Sequence> = windows.iter().collect();
        best = best.max(if k == 2 {
            crate::lcs::lcs(refs[0], refs[1])?
        } else {
            crate::klcs::k_lcs(&refs)?
        });
        let mut t = k;
        loop {
            if t == 0 {
                return Ok(best);
            }
            t -= 1;
            if pos[t] + 1 < starts[t] {
                pos[t] += 1;
                for u in t + 1..k {
                    pos[u] = 0;
                }
                break;
            }
        }
    }
}

//! Local k-LCS: the best k-LCS over all choices of one fixed-length window
//! per sequence, by direct window enumeration. Desk scale only.

use gapkit_core::{same_alphabet, Sequence, SymbolId};

use crate::error::SolverError;
use crate::klcs;
use crate::lcs::lcs_ids;

/// Maximum over all choices of one length-`window` substring per sequence
/// of their k-LCS. Window tuples whose symbol-count bound cannot beat the
/// running best are skipped; the result is still the exact maximum.
pub fn local_k_lcs(seqs: &[&Sequence], window: usize) -> Result<i64, SolverError> {
    if seqs.len() < 2 {
        return Err(SolverError::UnsupportedK {
            k: seqs.len(),
            min: klcs::MIN_K,
            max: klcs::MAX_K,
        });
    }
    for s in seqs {
        if !same_alphabet(s.alphabet(), seqs[0].alphabet()) {
            return Err(gapkit_core::CoreError::AlphabetMismatch.into());
        }
        if window > s.len() {
            return Err(SolverError::WindowTooLong { window, len: s.len() });
        }
    }
    if window == 0 {
        return Ok(0);
    }

    let counts: Vec<SymbolCounts> = seqs.iter().map(|s| SymbolCounts::new(s, window)).collect();
    let k = seqs.len();
    let sigma = seqs[0].alphabet().len();
    let starts: Vec<usize> = seqs.iter().map(|s| s.len() - window + 1).collect();

    let mut best = 0i64;
    let mut pos = vec![0usize; k];
    loop {
        let mut matchable = 0i64;
        for sym in 0..sigma {
            let mut m = i64::MAX;
            for t in 0..k {
                m = m.min(counts[t].in_window(sym, pos[t]));
            }
            matchable += m;
        }
        let bound = matchable.min(window as i64);

        if bound > best {
            let score = window_score(seqs, window, &pos)?;
            best = best.max(score);
        }

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

fn window_score(seqs: &[&Sequence], window: usize, pos: &[usize]) -> Result<i64, SolverError> {
    if seqs.len() == 2 {
        let a = &seqs[0].symbols()[pos[0]..pos[0] + window];
        let b = &seqs[1].symbols()[pos[1]..pos[1] + window];
        Ok(lcs_ids(a, b))
    } else {
        let windows: Vec<Sequence> =
            seqs.iter().zip(pos).map(|(s, &p)| s.window(p, window)).collect();
        let refs: Vec<&Sequence> = windows.iter().collect();
        klcs::k_lcs(&refs)
    }
}

/// Per-symbol prefix counts, for the window matchability bound.
struct SymbolCounts {
    window: usize,
    sigma: usize,
    prefix: Vec<i64>,
}

impl SymbolCounts {
    fn new(seq: &Sequence, window: usize) -> SymbolCounts {
        let sigma = seq.alphabet().len();
        let n = seq.len();
        let mut prefix = vec![0i64; (n + 1) * sigma];
        for (i, &id) in seq.symbols().iter().enumerate() {
            let (lo, hi) = prefix.split_at_mut((i + 1) * sigma);
            hi[..sigma].copy_from_slice(&lo[i * sigma..]);
            hi[id.index()] += 1;
        }
        SymbolCounts { window, sigma, prefix }
    }

    fn in_window(&self, sym: usize, start: usize) -> i64 {
        let end = start + self.window;
        self.prefix[end * self.sigma + sym] - self.prefix[start * self.sigma + sym]
    }
}

/// Windowed LCS of two raw windows; exposed for tests that cross-check the
/// pruned enumeration against a fully naive sweep.
pub fn window_pair_lcs(s: &Sequence, t: &Sequence, window: usize, i: usize, j: usize) -> i64 {
    let a: &[SymbolId] = &s.symbols()[i..i + window];
    let b: &[SymbolId] = &t.symbols()[j..j + window];
    lcs_ids(a, b)
}

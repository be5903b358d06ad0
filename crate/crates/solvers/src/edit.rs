//! Unit-cost edit distance (insertions, deletions, substitutions) by the
//! Wagner-Fischer table.

use gapkit_core::{same_alphabet, Sequence};

use crate::error::SolverError;

pub fn edit(s: &Sequence, t: &Sequence) -> Result<i64, SolverError> {
    if !same_alphabet(s.alphabet(), t.alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    let (a, b) = (s.symbols(), t.symbols());
    let n = b.len();
    let mut prev: Vec<i64> = (0..=n as i64).collect();
    let mut cur = vec![0i64; n + 1];
    for (i, &sa) in a.iter().enumerate() {
        cur[0] = i as i64 + 1;
        for (j, &sb) in b.iter().enumerate() {
            let sub = prev[j] + i64::from(sa != sb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[n])
}

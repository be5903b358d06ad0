//! Per-sequence unary expansion for k-sequence instances: each symbol
//! becomes an interval of w(symbol) copies, turning k-WLCS into k-LCS.

use gapkit_core::{Sequence, WeightedAlphabet};

use crate::error::KlcsError;

pub const DEFAULT_EXPANSION_CAP: u64 = 10_000_000;

pub fn unary_expand_one(
    s: &Sequence,
    w: &WeightedAlphabet,
    cap: u64,
) -> Result<Sequence, KlcsError> {
    if !w.covers(s.alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    let total = w.sequence_weight(s)? as u64;
    if total > cap {
        return Err(KlcsError::ExpansionTooLong { length: total, cap });
    }
    let mut ids = Vec::with_capacity(total as usize);
    for &sym in s.symbols() {
        for _ in 0..w.weight(sym) {
            ids.push(sym);
        }
    }
    Ok(Sequence::new(std::sync::Arc::clone(s.alphabet()), ids)?)
}

pub fn k_unary_expand(
    seqs: &[&Sequence],
    w: &WeightedAlphabet,
    cap: u64,
) -> Result<Vec<Sequence>, KlcsError> {
    seqs.iter().map(|s| unary_expand_one(s, w, cap)).collect()
}

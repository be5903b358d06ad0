//! The weighted-to-unweighted reduction: copy each symbol as many times as
//! its weight. The weighted LCS of the originals equals the plain LCS of
//! the expansions.

use gapkit_core::{Sequence, WeightedAlphabet};

use crate::error::LcsError;

pub const DEFAULT_EXPANSION_CAP: u64 = 10_000_000;

pub fn unary_expand(
    s: &Sequence,
    w: &WeightedAlphabet,
    cap: u64,
) -> Result<Sequence, LcsError> {
    if !w.covers(s.alphabet()) {
        return Err(gapkit_core::CoreError::AlphabetMismatch.into());
    }
    let total = w.sequence_weight(s)? as u64;
    if total > cap {
        return Err(LcsError::ExpansionTooLong { length: total, cap });
    }
    let mut ids = Vec::with_capacity(total as usize);
    for &sym in s.symbols() {
        for _ in 0..w.weight(sym) {
            ids.push(sym);
        }
    }
    Ok(Sequence::new(std::sync::Arc::clone(s.alphabet()), ids)?)
}

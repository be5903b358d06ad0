//! The run-padding transform: interleave runs of a fresh symbol around a
//! sequence. The edit distance of two sequences never exceeds the DTWD of
//! their padded forms under the 0/1 symbol distance, whatever positive
//! run lengths are chosen.

use std::sync::Arc;

use gapkit_core::{Alphabet, DistanceTable, Sequence, SymbolId};
use gapkit_solvers::{dtwd, edit};

use crate::error::DtwdError;

/// Run lengths for a padded sequence: one positive entry per gap, so
/// `|r| = |Q| + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddingVector(pub Vec<usize>);

impl PaddingVector {
    pub fn uniform(len: usize, run: usize) -> PaddingVector {
        PaddingVector(vec![run; len + 1])
    }
}

/// Extends the alphabet with the fresh padding symbol; the returned
/// alphabet is shared by both padded sequences and the symbol distance.
pub fn padded_alphabet(
    base: &Arc<Alphabet>,
    pad_glyph: &str,
) -> Result<(Arc<Alphabet>, SymbolId), DtwdError> {
    if base.id(pad_glyph).is_ok() {
        return Err(DtwdError::PaddingSymbolInUse { glyph: pad_glyph.to_string() });
    }
    let mut glyphs: Vec<String> = base.glyphs().to_vec();
    glyphs.push(pad_glyph.to_string());
    let alphabet = Alphabet::new(glyphs)?;
    let pad = alphabet.id(pad_glyph)?;
    Ok((alphabet, pad))
}

/// a^{r_1} q_1 a^{r_2} q_2 ... a^{r_p} q_p a^{r_{p+1}}, over the padded
/// alphabet.
pub fn pad_transform(
    q: &Sequence,
    padded: &Arc<Alphabet>,
    pad: SymbolId,
    runs: &PaddingVector,
) -> Result<Sequence, DtwdError> {
    if runs.0.len() != q.len() + 1 {
        return Err(DtwdError::PaddingLengthMismatch { got: runs.0.len(), need: q.len() + 1 });
    }
    if runs.0.iter().any(|&r| r == 0) {
        return Err(DtwdError::NonPositivePadding);
    }
    let mut ids = Vec::with_capacity(q.len() + runs.0.iter().sum::<usize>());
    for (i, &run) in runs.0.iter().enumerate() {
        ids.extend(std::iter::repeat(pad).take(run));
        if i < q.len() {
            // Symbol ids carry over: the padded alphabet extends the base.
            ids.push(q.get(i));
        }
    }
    Ok(Sequence::new(Arc::clone(padded), ids)?)
}

/// Checks EDIT(Q1, Q2) <= DTWD(pad(Q1), pad(Q2)) for one input; the
/// verification suites assert this over randomized sweeps.
pub fn verify_edit_dtwd_inequality(
    q1: &Sequence,
    q2: &Sequence,
    r1: &PaddingVector,
    r2: &PaddingVector,
    pad_glyph: &str,
) -> Result<bool, DtwdError> {
    let (alphabet, pad) = padded_alphabet(q1.alphabet(), pad_glyph)?;
    let p1 = pad_transform(q1, &alphabet, pad, r1)?;
    let p2 = pad_transform(q2, &alphabet, pad, r2)?;
    let dist = DistanceTable::symbol_distance(&alphabet);
    let warp = dtwd(&p1, &p2, &dist)?;
    let edit_cost = edit(q1, q2)?;
    Ok(gapkit_core::HalfUnits::from_whole(edit_cost) <= warp)
}

//! Experimental: run-length coordinate gadgets and the separator block for
//! the edit-distance route. Only the local builders live here; the
//! surrounding construction depends on externally defined sequence parts
//! and parameters, so nothing downstream consumes these yet.

use std::sync::{Arc, OnceLock};

use gapkit_core::{Alphabet, Sequence, SymbolId};

use crate::error::DtwdError;

pub fn binary_alphabet() -> Arc<Alphabet> {
    static ALPHABET: OnceLock<Arc<Alphabet>> = OnceLock::new();
    Arc::clone(ALPHABET.get_or_init(|| Alphabet::of_chars("01").expect("static alphabet")))
}

#[derive(Debug, Clone, Copy)]
pub struct RunParams {
    pub l0: usize,
    pub l1: usize,
}

impl RunParams {
    pub fn new(l0: usize, l1: usize) -> Result<RunParams, DtwdError> {
        if l0 == 0 || l1 == 0 {
            return Err(DtwdError::BadGadgetParams { reason: "l0 and l1 must be positive".into() });
        }
        if l1 % 2 != 0 {
            return Err(DtwdError::BadGadgetParams { reason: "l1 must be even".into() });
        }
        Ok(RunParams { l0, l1 })
    }
}

fn runs(parts: &[(u8, usize)]) -> Sequence {
    let alphabet = binary_alphabet();
    let zero = alphabet.id("0").expect("glyph 0");
    let one = alphabet.id("1").expect("glyph 1");
    let mut ids: Vec<SymbolId> = Vec::new();
    for &(bit, len) in parts {
        let sym = if bit == 0 { zero } else { one };
        ids.extend(std::iter::repeat(sym).take(len));
    }
    Sequence::new(alphabet, ids).expect("runs over the binary alphabet")
}

/// First-list coordinate gadget: 0^l1 0^l0 1^l0 1^l0 1^l0 0^l1 encodes a
/// 0 bit; 0^l1 0^l0 0^l0 0^l0 1^l0 0^l1 encodes a 1.
pub fn edit_coord_gadget_1(bit: u8, p: RunParams) -> Sequence {
    let mids: [u8; 4] = if bit == 0 { [0, 1, 1, 1] } else { [0, 0, 0, 1] };
    runs(&[
        (0, p.l1),
        (mids[0], p.l0),
        (mids[1], p.l0),
        (mids[2], p.l0),
        (mids[3], p.l0),
        (0, p.l1),
    ])
}

/// Second-list coordinate gadget: 0 0 1 1 for a 0 bit, 1 1 1 1 for a 1.
pub fn edit_coord_gadget_2(bit: u8, p: RunParams) -> Sequence {
    let mids: [u8; 4] = if bit == 0 { [0, 0, 1, 1] } else { [1, 1, 1, 1] };
    runs(&[
        (0, p.l1),
        (mids[0], p.l0),
        (mids[1], p.l0),
        (mids[2], p.l0),
        (mids[3], p.l0),
        (0, p.l1),
    ])
}

/// The threshold-shifted separator: a 1-run of length 1 + (r/d) 2 l0 is
/// carved out of the leading 0^l1 half.
pub fn separator_g(p: RunParams, r: u64, d: usize) -> Result<Sequence, DtwdError> {
    if d == 0 {
        return Err(DtwdError::BadGadgetParams { reason: "d must be positive".into() });
    }
    if p.l0 % d != 0 {
        return Err(DtwdError::BadGadgetParams {
            reason: format!("l0 = {} must be a multiple of d = {d}", p.l0),
        });
    }
    let shift = 1 + (r as usize) * 2 * p.l0 / d;
    if shift > p.l1 / 2 {
        return Err(DtwdError::BadGadgetParams {
            reason: format!("1 + (r/d) 2 l0 = {shift} exceeds l1/2 = {}", p.l1 / 2),
        });
    }
    Ok(runs(&[
        (0, p.l1 / 2 - shift),
        (1, shift),
        (0, p.l1 / 2),
        (0, p.l0),
        (1, p.l0),
        (1, p.l0),
        (1, p.l0),
        (0, p.l1),
    ]))
}

//! Coordinate and vector gadgets over the digit alphabet {0,...,6}.
//!
//! A coordinate-gadget pair scores 2X+1 when the two bits have product 0
//! and 2X otherwise; a vector-gadget pair therefore scores A+1 or more
//! exactly when the vectors are r-far, and exactly A otherwise (the two
//! `1` symbols alone are worth A).

use std::sync::{Arc, OnceLock};

use gapkit_core::{Alphabet, BitVector, Sequence, SymbolId, WeightedAlphabet};

use crate::error::LcsError;
use crate::schedule::WeightSchedule;

/// The seven-symbol instance alphabet, glyphs "0" through "6".
pub fn lcs_alphabet() -> Arc<Alphabet> {
    static ALPHABET: OnceLock<Arc<Alphabet>> = OnceLock::new();
    Arc::clone(ALPHABET.get_or_init(|| Alphabet::of_chars("0123456").expect("static alphabet")))
}

/// w(4) = w(6) = 1, w(5) = X, w(1) = A, w(3) = B, w(0) = w(2) = C.
pub fn schedule_weights(schedule: &WeightSchedule) -> Result<WeightedAlphabet, LcsError> {
    let alphabet = lcs_alphabet();
    Ok(WeightedAlphabet::from_glyphs(
        alphabet,
        &[
            ("0", schedule.c),
            ("1", schedule.a),
            ("2", schedule.c),
            ("3", schedule.b),
            ("4", 1),
            ("5", schedule.x),
            ("6", 1),
        ],
    )?)
}

fn seq(text: &str) -> Sequence {
    Sequence::parse(&lcs_alphabet(), text).expect("gadget text over the instance alphabet")
}

pub fn coord_gadget_1(bit: u8) -> Sequence {
    if bit == 0 {
        seq("5465")
    } else {
        seq("545")
    }
}

pub fn coord_gadget_2(bit: u8) -> Sequence {
    if bit == 0 {
        seq("5645")
    } else {
        seq("565")
    }
}

fn vector_gadget(v: &BitVector, coord: impl Fn(u8) -> Sequence, one_first: bool) -> Sequence {
    let alphabet = lcs_alphabet();
    let one = alphabet.id("1").expect("glyph 1");
    let mut ids: Vec<SymbolId> = Vec::new();
    if one_first {
        ids.push(one);
    }
    for h in 0..v.dim() {
        ids.extend_from_slice(coord(v.bit(h)).symbols());
    }
    if !one_first {
        ids.push(one);
    }
    Sequence::new(alphabet, ids).expect("gadget symbols are in the alphabet")
}

/// `1` then the coordinate gadgets of the first-list vector.
pub fn vector_gadget_1(v: &BitVector) -> Sequence {
    vector_gadget(v, coord_gadget_1, true)
}

/// The coordinate gadgets of the second-list vector, then `1`.
pub fn vector_gadget_2(v: &BitVector) -> Sequence {
    vector_gadget(v, coord_gadget_2, false)
}

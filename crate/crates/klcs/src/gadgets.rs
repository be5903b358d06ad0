//! Binary-expansion coordinate gadgets and e-separated vector gadgets for
//! k sequences.
//!
//! The slot trick: writing out bit t of every integer p in 0..2^k-1
//! (flipped when the encoded coordinate is 1) leaves exactly one slot
//! agreeing across all k sequences when every coordinate bit is 1, and two
//! otherwise (the all-zeros case regains its second match through the
//! leading c).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use gapkit_core::{Alphabet, BitVector, Sequence, SymbolId, WeightedAlphabet};

use crate::error::KlcsError;
use crate::schedule::{KGadgetWeights, KWeightSchedule};

/// Gadget symbols shared by every k: a, b, c, d, e, f.
pub const GADGET_GLYPHS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// The instance alphabet for a given k: gadget symbols, interval
/// delimiters 0/2, and the selection symbols 3_2..3_k.
pub fn klcs_alphabet(k: usize) -> Arc<Alphabet> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Alphabet>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().expect("alphabet cache");
    Arc::clone(cache.entry(k).or_insert_with(|| {
        let mut glyphs: Vec<String> = GADGET_GLYPHS.iter().map(|s| s.to_string()).collect();
        glyphs.push("0".to_string());
        glyphs.push("2".to_string());
        for i in 2..=k {
            glyphs.push(format!("3_{i}"));
        }
        Alphabet::new(glyphs).expect("static k-alphabet")
    }))
}

/// Gadget alphabet for the windowed construction: gadget symbols plus the
/// run fillers x and y. Constant size, independent of k.
pub fn local_alphabet() -> Arc<Alphabet> {
    static ALPHABET: OnceLock<Arc<Alphabet>> = OnceLock::new();
    Arc::clone(ALPHABET.get_or_init(|| {
        let mut glyphs: Vec<String> = GADGET_GLYPHS.iter().map(|s| s.to_string()).collect();
        glyphs.push("x".to_string());
        glyphs.push("y".to_string());
        Alphabet::new(glyphs).expect("static local alphabet")
    }))
}

/// Weights over `alphabet` with the gadget weights applied and every other
/// symbol at weight 1 (padding weights are layered on by the instance
/// builder).
pub fn gadget_weights(
    alphabet: &Arc<Alphabet>,
    w: &KGadgetWeights,
) -> Result<WeightedAlphabet, KlcsError> {
    let mut weights = vec![1i64; alphabet.len()];
    weights[alphabet.id("d")?.index()] = w.w_d;
    weights[alphabet.id("e")?.index()] = w.w_e;
    weights[alphabet.id("f")?.index()] = w.e_n()?;
    Ok(WeightedAlphabet::new(Arc::clone(alphabet), weights)?)
}

/// Full instance weights: gadget weights plus C on 0/2 and B_i on 3_i.
pub fn schedule_weights(schedule: &KWeightSchedule) -> Result<WeightedAlphabet, KlcsError> {
    let alphabet = klcs_alphabet(schedule.k());
    let mut weights = gadget_weights(&alphabet, &schedule.gadget)?.weights().to_vec();
    weights[alphabet.id("0")?.index()] = schedule.c;
    weights[alphabet.id("2")?.index()] = schedule.c;
    for i in 2..=schedule.k() {
        weights[alphabet.id(&format!("3_{i}"))?.index()] = schedule.b_i(i);
    }
    Ok(WeightedAlphabet::new(alphabet, weights)?)
}

/// Coordinate gadget for sequence t (1-based) encoding one bit: d c d or
/// d d, then one slot symbol and a d per integer p in 0..2^k-1. Bit t of
/// p's binary expansion picks a or b, flipped when the encoded bit is 1.
pub fn k_coord_gadget(
    alphabet: &Arc<Alphabet>,
    k: usize,
    t: usize,
    bit: u8,
) -> Result<Sequence, KlcsError> {
    assert!((1..=k).contains(&t), "sequence index t must be in 1..=k");
    let a = alphabet.id("a")?;
    let b = alphabet.id("b")?;
    let c = alphabet.id("c")?;
    let d = alphabet.id("d")?;
    let mut ids = vec![d];
    if bit == 0 {
        ids.push(c);
    }
    ids.push(d);
    for p in 0u64..(1u64 << k) - 1 {
        let slot_bit = (p >> (t - 1) & 1) as u8 ^ bit;
        ids.push(if slot_bit == 0 { a } else { b });
        ids.push(d);
    }
    Ok(Sequence::new(Arc::clone(alphabet), ids)?)
}

/// Vector gadget for sequence t: e-separated coordinate gadgets, with the
/// f symbol prepended for t = 1 and appended otherwise.
pub fn k_vector_gadget(
    alphabet: &Arc<Alphabet>,
    k: usize,
    t: usize,
    v: &BitVector,
) -> Result<Sequence, KlcsError> {
    let e = alphabet.id("e")?;
    let f = alphabet.id("f")?;
    let mut ids = Vec::new();
    if t == 1 {
        ids.push(f);
    }
    ids.push(e);
    for h in 0..v.dim() {
        ids.extend_from_slice(k_coord_gadget(alphabet, k, t, v.bit(h))?.symbols());
        ids.push(e);
    }
    if t != 1 {
        ids.push(f);
    }
    Ok(Sequence::new(Arc::clone(alphabet), ids)?)
}

/// The vector gadget without its f symbol, as used inside intervals where
/// the bare body is wanted.
pub fn k_vector_gadget_core(
    alphabet: &Arc<Alphabet>,
    k: usize,
    t: usize,
    v: &BitVector,
) -> Result<Vec<SymbolId>, KlcsError> {
    let e = alphabet.id("e")?;
    let mut ids = vec![e];
    for h in 0..v.dim() {
        ids.extend_from_slice(k_coord_gadget(alphabet, k, t, v.bit(h))?.symbols());
        ids.push(e);
    }
    Ok(ids)
}

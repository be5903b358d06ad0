//! Deterministic random inputs for generation and verification.

use gapkit_core::{Alphabet, BitVector, CnfFormula, Sequence, SymbolId, VectorFamily};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(rng: &mut ChaCha8Rng, d: usize) -> BitVector {
    BitVector::new((0..d).map(|_| rng.gen_range(0..=1)).collect()).expect("d >= 1")
}

pub fn random_list(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<BitVector> {
    (0..n).map(|_| random_vector(rng, d)).collect()
}

pub fn random_family(rng: &mut ChaCha8Rng, k: usize, n: usize, d: usize) -> VectorFamily {
    VectorFamily::new((0..k).map(|_| random_list(rng, n, d)).collect()).expect("valid shape")
}

pub fn random_sequence(
    rng: &mut ChaCha8Rng,
    alphabet: &std::sync::Arc<Alphabet>,
    max_len: usize,
) -> Sequence {
    let len = rng.gen_range(0..=max_len);
    Sequence::new(
        std::sync::Arc::clone(alphabet),
        (0..len).map(|_| SymbolId(rng.gen_range(0..alphabet.len() as u32))).collect(),
    )
    .expect("ids in range")
}

pub fn random_cnf(rng: &mut ChaCha8Rng, max_vars: usize, max_clauses: usize) -> CnfFormula {
    let n = rng.gen_range(2..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            let width = rng.gen_range(1..=3.min(n));
            (0..width)
                .map(|_| {
                    let var = rng.gen_range(1..=n) as i32;
                    if rng.gen_bool(0.5) {
                        var
                    } else {
                        -var
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).expect("literals in range")
}

/// Vector list files: one 0/1 vector per line, lists separated by blank
/// lines.
pub fn parse_vector_lists(text: &str) -> Result<Vec<Vec<BitVector>>, gapkit_core::CoreError> {
    let mut lists: Vec<Vec<BitVector>> = Vec::new();
    let mut current: Vec<BitVector> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            if !current.is_empty() {
                lists.push(std::mem::take(&mut current));
            }
            continue;
        }
        current.push(BitVector::parse(line)?);
    }
    if !current.is_empty() {
        lists.push(current);
    }
    Ok(lists)
}

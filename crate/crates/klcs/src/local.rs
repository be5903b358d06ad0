//! The windowed construction over a constant-size alphabet: expanded
//! vector gadgets interleaved with runs of fresh symbols (x in the first
//! sequence, y in the rest) exactly as long as the window, so no window
//! can touch two gadgets and no run symbol ever matches across all k
//! sequences.

use std::collections::BTreeMap;
use std::sync::Arc;

use gapkit_core::{Sequence, SymbolId, VectorFamily};
use serde::{Deserialize, Serialize};

use crate::error::KlcsError;
use crate::expand::unary_expand_one;
use crate::gadgets::{gadget_weights, k_vector_gadget, local_alphabet};
use crate::schedule::KGadgetWeights;

#[derive(Debug, Clone)]
pub struct LocalKlcsInstance {
    pub sequences: Vec<Sequence>,
    /// The window length L: the longest expanded gadget.
    pub window: usize,
    pub weights: KGadgetWeights,
    /// Window score reached iff a far tuple exists.
    pub e_o: i64,
    /// Window score of every all-close instance.
    pub e_n: i64,
}

pub fn build_local_klcs_instance(
    family: &VectorFamily,
    r: u64,
    cap: u64,
) -> Result<LocalKlcsInstance, KlcsError> {
    let k = family.k();
    let weights = KGadgetWeights::compact(k, family.dim(), r)?;
    let alphabet = local_alphabet();
    let w = gadget_weights(&alphabet, &weights)?;

    // Expand every gadget first; the window is the longest expansion.
    let mut expanded: Vec<Vec<Sequence>> = Vec::with_capacity(k);
    let mut window = 0usize;
    for t in 1..=k {
        let mut list = Vec::with_capacity(family.n());
        for v in family.list(t - 1) {
            let gadget = k_vector_gadget(&alphabet, k, t, v)?;
            let uvg = unary_expand_one(&gadget, &w, cap)?;
            window = window.max(uvg.len());
            list.push(uvg);
        }
        expanded.push(list);
    }

    let x = alphabet.id("x")?;
    let y = alphabet.id("y")?;
    let mut sequences = Vec::with_capacity(k);
    for (t, list) in expanded.iter().enumerate() {
        let filler = if t == 0 { x } else { y };
        let mut ids: Vec<SymbolId> = Vec::new();
        for uvg in list {
            ids.extend_from_slice(uvg.symbols());
            ids.extend(std::iter::repeat(filler).take(window));
        }
        sequences.push(Sequence::new(Arc::clone(&alphabet), ids)?);
    }

    Ok(LocalKlcsInstance {
        sequences,
        window,
        e_o: weights.e_o()?,
        e_n: weights.e_n()?,
        weights,
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LocalKlcsInstanceJson {
    pub kind: String,
    pub k: usize,
    pub n: usize,
    pub d: usize,
    pub r: u64,
    pub alphabet: Vec<String>,
    pub sequences: Vec<String>,
    pub window: usize,
    pub e_o: i64,
    pub e_n: i64,
    pub gadget_weights: BTreeMap<String, i64>,
}

impl LocalKlcsInstance {
    pub fn to_json(&self, family_shape: (usize, usize)) -> String {
        let alphabet = local_alphabet();
        let w = gadget_weights(&alphabet, &self.weights).expect("weights validated at build");
        let gadget_weights: BTreeMap<String, i64> = alphabet
            .glyphs()
            .iter()
            .map(|g| (g.clone(), w.weight(alphabet.id(g).unwrap())))
            .collect();
        let dto = LocalKlcsInstanceJson {
            kind: "local_klcs".to_string(),
            k: self.sequences.len(),
            n: family_shape.0,
            d: family_shape.1,
            r: self.weights.r,
            alphabet: alphabet.glyphs().to_vec(),
            sequences: self.sequences.iter().map(|s| s.render()).collect(),
            window: self.window,
            e_o: self.e_o,
            e_n: self.e_n,
            gadget_weights,
        };
        serde_json::to_string_pretty(&dto).expect("instance serializes")
    }

    pub fn from_json(text: &str) -> Result<LocalKlcsInstance, KlcsError> {
        let dto: LocalKlcsInstanceJson = serde_json::from_str(text)
            .map_err(|e| KlcsError::BadInstance { reason: e.to_string() })?;
        if dto.kind != "local_klcs" {
            return Err(KlcsError::BadInstance {
                reason: format!("kind {:?} is not a local_klcs instance", dto.kind),
            });
        }
        let alphabet = local_alphabet();
        if dto.alphabet != alphabet.glyphs() {
            return Err(KlcsError::BadInstance { reason: "unexpected alphabet".into() });
        }
        let weights = KGadgetWeights::compact(dto.k, dto.d, dto.r)?;
        let sequences = dto
            .sequences
            .iter()
            .map(|s| Sequence::parse(&alphabet, s).map_err(KlcsError::from))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LocalKlcsInstance {
            sequences,
            window: dto.window,
            weights,
            e_o: dto.e_o,
            e_n: dto.e_n,
        })
    }
}

/// Structural invariant: run symbols never appear inside gadgets.
pub fn runs_use_fresh_symbols(instance: &LocalKlcsInstance) -> bool {
    let alphabet = local_alphabet();
    let x = alphabet.id("x").expect("glyph x");
    let y = alphabet.id("y").expect("glyph y");
    let first_has_y = instance.sequences[0].symbols().contains(&y);
    let rest_have_x = instance.sequences[1..]
        .iter()
        .any(|s| s.symbols().contains(&x));
    !first_has_y && !rest_have_x
}

/// Weighted check helper used by verification: the expected window score
/// of a far/close instance.
pub fn expected_window_score(instance: &LocalKlcsInstance, far: bool) -> i64 {
    if far {
        instance.e_o
    } else {
        instance.e_n
    }
}

//! Assembly of the padded k-sequence instance.
//!
//! Sequence i wraps its intervals in Q-fold repetitions of the chain
//! 3_{i+1}..3_k and carries (i-1)n all-ones dummy intervals on each side
//! of its n real ones; the k-th sequence has an empty outer chain, which
//! is what lets Q = |P_k| be computed first.

use std::collections::BTreeMap;
use std::sync::Arc;

use gapkit_core::{BitVector, Sequence, SymbolId, VectorFamily, WeightedAlphabet};
use serde::{Deserialize, Serialize};

use crate::error::KlcsError;
use crate::gadgets::{k_vector_gadget, klcs_alphabet, schedule_weights};
use crate::schedule::{KGadgetWeights, KWeightSchedule};

#[derive(Debug, Clone)]
pub struct KLcsInstance {
    pub sequences: Vec<Sequence>,
    pub weights: WeightedAlphabet,
    pub schedule: KWeightSchedule,
    /// Padding repeat count, the length of the k-th sequence.
    pub q: usize,
    pub r: u64,
    pub e_u: i64,
    pub e_g: i64,
}

/// 0 ∘ VG_i(x) ∘ 2, followed by 3_2..3_i for i >= 2.
fn interval(
    alphabet: &Arc<Alphabet>,
    k: usize,
    i: usize,
    v: &BitVector,
) -> Result<Vec<SymbolId>, KlcsError> {
    let mut ids = vec![alphabet.id("0")?];
    ids.extend_from_slice(k_vector_gadget(alphabet, k, i, v)?.symbols());
    ids.push(alphabet.id("2")?);
    for j in 2..=i {
        ids.push(alphabet.id(&format!("3_{j}"))?);
    }
    Ok(ids)
}

use gapkit_core::Alphabet;

fn chain_ids(alphabet: &Arc<Alphabet>, from: usize, to: usize) -> Result<Vec<SymbolId>, KlcsError> {
    let mut ids = Vec::new();
    for j in from..=to {
        ids.push(alphabet.id(&format!("3_{j}"))?);
    }
    Ok(ids)
}

fn build_sequence(
    alphabet: &Arc<Alphabet>,
    family: &VectorFamily,
    i: usize,
    q: usize,
) -> Result<Sequence, KlcsError> {
    let k = family.k();
    let n = family.n();
    let dummy = BitVector::all_ones(family.dim())?;
    let outer = chain_ids(alphabet, i + 1, k)?;

    let mut ids = Vec::new();
    for _ in 0..q {
        ids.extend_from_slice(&outer);
    }
    ids.extend(chain_ids(alphabet, 2, i)?);
    let dummies = (i - 1) * n;
    for _ in 0..dummies {
        ids.extend(interval(alphabet, k, i, &dummy)?);
    }
    for v in family.list(i - 1) {
        ids.extend(interval(alphabet, k, i, v)?);
    }
    for _ in 0..dummies {
        ids.extend(interval(alphabet, k, i, &dummy)?);
    }
    for _ in 0..q {
        ids.extend_from_slice(&outer);
    }
    Ok(Sequence::new(Arc::clone(alphabet), ids)?)
}

/// Builds the k-sequence instance with the cascade (paper) weights.
pub fn build_klcs_instance(family: &VectorFamily, r: u64) -> Result<KLcsInstance, KlcsError> {
    let gadget = KGadgetWeights::paper(family.k(), family.dim(), r)?;
    build_klcs_instance_with(family, gadget)
}

pub fn build_klcs_instance_with(
    family: &VectorFamily,
    gadget: KGadgetWeights,
) -> Result<KLcsInstance, KlcsError> {
    let k = family.k();
    if gadget.k != k || gadget.d != family.dim() {
        return Err(KlcsError::InvalidSchedule {
            reason: "gadget weights do not match the family shape".to_string(),
        });
    }
    let schedule = KWeightSchedule::new(gadget, family.n())?;
    let alphabet = klcs_alphabet(k);
    let weights = schedule_weights(&schedule)?;

    // The k-th sequence has an empty outer chain, so it is built first and
    // its length becomes the repeat count Q for all the others.
    let p_k = build_sequence(&alphabet, family, k, 0)?;
    let q = p_k.len();
    let mut sequences = Vec::with_capacity(k);
    for i in 1..k {
        sequences.push(build_sequence(&alphabet, family, i, q)?);
    }
    sequences.push(p_k);

    for s in &sequences {
        // Reject parameterizations whose total weight leaves 63-bit range.
        weights.sequence_weight(s)?;
        debug_assert!(s.used_symbols().len() <= k + 7);
    }

    Ok(KLcsInstance {
        sequences,
        q,
        r: schedule.gadget.r,
        e_u: schedule.e_u()?,
        e_g: schedule.e_g()?,
        weights,
        schedule,
    })
}

impl KLcsInstance {
    pub fn k(&self) -> usize {
        self.schedule.k()
    }

    /// Threshold recomputed from the schedule, not the stored field.
    pub fn recompute_e_g(&self) -> Result<i64, KlcsError> {
        self.schedule.e_g()
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct KLcsInstanceJson {
    pub kind: String,
    pub k: usize,
    pub n: usize,
    pub d: usize,
    pub r: u64,
    pub alphabet: Vec<String>,
    pub weights: BTreeMap<String, i64>,
    pub sequences: Vec<String>,
    pub q: usize,
    pub e_u: i64,
    pub e_g: i64,
    pub schedule: KWeightSchedule,
}

impl KLcsInstance {
    pub fn to_json(&self) -> String {
        let alphabet = klcs_alphabet(self.k());
        let weights: BTreeMap<String, i64> = alphabet
            .glyphs()
            .iter()
            .map(|g| (g.clone(), self.weights.weight(alphabet.id(g).unwrap())))
            .collect();
        let dto = KLcsInstanceJson {
            kind: "klcs".to_string(),
            k: self.k(),
            n: self.schedule.n,
            d: self.schedule.gadget.d,
            r: self.r,
            alphabet: alphabet.glyphs().to_vec(),
            weights,
            sequences: self.sequences.iter().map(|s| s.render()).collect(),
            q: self.q,
            e_u: self.e_u,
            e_g: self.e_g,
            schedule: self.schedule.clone(),
        };
        serde_json::to_string_pretty(&dto).expect("instance serializes")
    }

    pub fn from_json(text: &str) -> Result<KLcsInstance, KlcsError> {
        let dto: KLcsInstanceJson = serde_json::from_str(text)
            .map_err(|e| KlcsError::BadInstance { reason: e.to_string() })?;
        if dto.kind != "klcs" {
            return Err(KlcsError::BadInstance {
                reason: format!("kind {:?} is not a klcs instance", dto.kind),
            });
        }
        dto.schedule.validate()?;
        let alphabet = klcs_alphabet(dto.k);
        if dto.alphabet != alphabet.glyphs() {
            return Err(KlcsError::BadInstance { reason: "unexpected alphabet".into() });
        }
        let weights = schedule_weights(&dto.schedule)?;
        let sequences = dto
            .sequences
            .iter()
            .map(|s| Sequence::parse(&alphabet, s).map_err(KlcsError::from))
            .collect::<Result<Vec<_>, _>>()?;
        if sequences.len() != dto.k {
            return Err(KlcsError::BadInstance {
                reason: format!("expected {} sequences, found {}", dto.k, sequences.len()),
            });
        }
        Ok(KLcsInstance {
            sequences,
            weights,
            q: dto.q,
            r: dto.r,
            e_u: dto.e_u,
            e_g: dto.e_g,
            schedule: dto.schedule,
        })
    }
}

//! Assembly of the two-sequence instance and its gap thresholds.
//!
//! The second sequence carries one real interval per input vector plus
//! n-1 all-ones dummy intervals on each side; the first sequence wraps its
//! n intervals in runs of the padding symbol `3` as long as the whole
//! second sequence. A far pair pushes the weighted LCS to E_G + 1 or more;
//! without one it stays at E_G.

use std::collections::BTreeMap;

use gapkit_core::{BitVector, Sequence, SymbolId, WeightedAlphabet};
use serde::{Deserialize, Serialize};

use crate::error::LcsError;
use crate::gadgets::{lcs_alphabet, schedule_weights, vector_gadget_1, vector_gadget_2};
use crate::schedule::WeightSchedule;

#[derive(Debug, Clone)]
pub struct LcsInstance {
    pub p1: Sequence,
    pub p2: Sequence,
    pub weights: WeightedAlphabet,
    pub schedule: WeightSchedule,
    pub n: usize,
    pub d: usize,
    pub r: u64,
    /// Score of one fully matched interval pair, E_U = 2C + A.
    pub e_u: i64,
    /// The gap threshold E_G = n E_U + 2n B.
    pub e_g: i64,
    /// True once the instance has been expanded to unit weights.
    pub expanded: bool,
}

fn gid(glyph: &str) -> SymbolId {
    lcs_alphabet().id(glyph).expect("instance glyph")
}

/// 0 ∘ VG_1(v) ∘ 2.
fn interval_1(v: &BitVector) -> Vec<SymbolId> {
    let mut ids = vec![gid("0")];
    ids.extend_from_slice(vector_gadget_1(v).symbols());
    ids.push(gid("2"));
    ids
}

/// 0 ∘ VG_2(v) ∘ 2 ∘ 3.
fn interval_2(v: &BitVector) -> Vec<SymbolId> {
    let mut ids = vec![gid("0")];
    ids.extend_from_slice(vector_gadget_2(v).symbols());
    ids.push(gid("2"));
    ids.push(gid("3"));
    ids
}

pub fn build_instance(
    a_list: &[BitVector],
    b_list: &[BitVector],
    r: u64,
    schedule: WeightSchedule,
) -> Result<LcsInstance, LcsError> {
    schedule.validate()?;
    if a_list.is_empty() || a_list.len() != b_list.len() {
        return Err(LcsError::BadLists {
            reason: format!(
                "need equal nonempty lists, got {} and {}",
                a_list.len(),
                b_list.len()
            ),
        });
    }
    let d = schedule.d;
    if r != schedule.r {
        return Err(LcsError::BadLists {
            reason: format!("r = {r} does not match the schedule's r = {}", schedule.r),
        });
    }
    for v in a_list.iter().chain(b_list) {
        if v.dim() != d {
            return Err(LcsError::BadLists {
                reason: format!("vector dimension {} does not match schedule d = {d}", v.dim()),
            });
        }
    }
    let n = a_list.len();
    let alphabet = lcs_alphabet();
    let weights = schedule_weights(&schedule)?;

    let dummy = BitVector::all_ones(d)?;
    let mut p2_ids = vec![gid("3")];
    for _ in 1..n {
        p2_ids.extend(interval_2(&dummy));
    }
    for v in b_list {
        p2_ids.extend(interval_2(v));
    }
    for _ in 1..n {
        p2_ids.extend(interval_2(&dummy));
    }
    let p2 = Sequence::new(std::sync::Arc::clone(&alphabet), p2_ids)?;

    let run = vec![gid("3"); p2.len()];
    let mut p1_ids = run.clone();
    let mut gadget_len = 0usize;
    for v in a_list {
        let interval = interval_1(v);
        gadget_len += interval.len();
        p1_ids.extend(interval);
    }
    p1_ids.extend(run);
    let p1 = Sequence::new(std::sync::Arc::clone(&alphabet), p1_ids)?;

    debug_assert_eq!(p1.len(), 2 * p2.len() + gadget_len);
    debug_assert!(p1.used_symbols().len() <= 7);

    // Reject parameterizations whose total weight leaves 63-bit range.
    weights.sequence_weight(&p1)?;
    weights.sequence_weight(&p2)?;

    Ok(LcsInstance {
        p1,
        p2,
        weights,
        schedule,
        n,
        d,
        r,
        e_u: schedule.e_u()?,
        e_g: schedule.e_g(n)?,
        expanded: false,
    })
}

impl LcsInstance {
    /// The gap threshold recomputed from the schedule, not the stored
    /// field; verification goes through this to catch builder drift.
    pub fn recompute_e_g(&self) -> Result<i64, LcsError> {
        self.schedule.e_g(self.n)
    }

    /// Expands both sequences to unit weights; scores become plain LCS
    /// lengths against the same thresholds.
    pub fn expand(&self, cap: u64) -> Result<LcsInstance, LcsError> {
        let p1 = crate::expand::unary_expand(&self.p1, &self.weights, cap)?;
        let p2 = crate::expand::unary_expand(&self.p2, &self.weights, cap)?;
        Ok(LcsInstance {
            p1,
            p2,
            weights: WeightedAlphabet::unit(std::sync::Arc::clone(&lcs_alphabet())),
            expanded: true,
            ..self.clone()
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LcsInstanceJson {
    pub kind: String,
    pub alphabet: Vec<String>,
    pub weights: BTreeMap<String, i64>,
    pub p1: String,
    pub p2: String,
    pub n: usize,
    pub d: usize,
    pub r: u64,
    pub e_u: i64,
    pub e_g: i64,
    pub schedule: WeightSchedule,
    pub expanded: bool,
}

impl LcsInstance {
    pub fn to_json(&self) -> String {
        let alphabet = lcs_alphabet();
        let weights: BTreeMap<String, i64> = alphabet
            .glyphs()
            .iter()
            .map(|g| (g.clone(), self.weights.weight(alphabet.id(g).unwrap())))
            .collect();
        let dto = LcsInstanceJson {
            kind: "lcs".to_string(),
            alphabet: alphabet.glyphs().to_vec(),
            weights,
            p1: self.p1.render(),
            p2: self.p2.render(),
            n: self.n,
            d: self.d,
            r: self.r,
            e_u: self.e_u,
            e_g: self.e_g,
            schedule: self.schedule,
            expanded: self.expanded,
        };
        serde_json::to_string_pretty(&dto).expect("instance serializes")
    }

    pub fn from_json(text: &str) -> Result<LcsInstance, LcsError> {
        let dto: LcsInstanceJson = serde_json::from_str(text)
            .map_err(|e| LcsError::BadInstance { reason: e.to_string() })?;
        if dto.kind != "lcs" {
            return Err(LcsError::BadInstance {
                reason: format!("kind {:?} is not an lcs instance", dto.kind),
            });
        }
        let alphabet = lcs_alphabet();
        if dto.alphabet != alphabet.glyphs() {
            return Err(LcsError::BadInstance { reason: "unexpected alphabet".into() });
        }
        let weights = if dto.expanded {
            WeightedAlphabet::unit(std::sync::Arc::clone(&alphabet))
        } else {
            schedule_weights(&dto.schedule)?
        };
        for (glyph, &w) in dto.weights.iter().map(|(g, w)| (g.as_str(), w)) {
            if weights.weight(alphabet.id(glyph)?) != w {
                return Err(LcsError::BadInstance {
                    reason: format!("weight of {glyph:?} does not match the schedule"),
                });
            }
        }
        Ok(LcsInstance {
            p1: Sequence::parse(&alphabet, &dto.p1)?,
            p2: Sequence::parse(&alphabet, &dto.p2)?,
            weights,
            schedule: dto.schedule,
            n: dto.n,
            d: dto.d,
            r: dto.r,
            e_u: dto.e_u,
            e_g: dto.e_g,
            expanded: dto.expanded,
        })
    }
}

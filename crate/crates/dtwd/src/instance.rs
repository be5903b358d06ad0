//! Point-sequence assembly for the Frechet/DTWD gap: the first sequence
//! wraps each vector gadget in s1/t1 sentinels, the second strings all of
//! its gadgets between the s2 s2* and t2* t2 guards.

use std::sync::Arc;

use gapkit_core::{BitVector, HalfUnits, Sequence, SymbolId};
use gapkit_solvers::mov_bruteforce;
use serde::{Deserialize, Serialize};

use crate::error::DtwdError;
use crate::pointsets::{build_frechet_pointsets, metricize, GadgetPointSets};

#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub points: GadgetPointSets,
    pub p1: Sequence,
    pub p2: Sequence,
    /// Whether an orthogonal pair exists (decided at build time by the
    /// brute-force vector oracle).
    pub has_orthogonal_pair: bool,
    pub expected_frechet: HalfUnits,
    pub expected_dtwd: HalfUnits,
}

fn coord_id(alphabet: &Arc<gapkit_core::Alphabet>, set: u8, bit: u8, j: usize) -> SymbolId {
    let parity = j % 2;
    alphabet
        .id(&format!("c{set}_{bit}_{parity}"))
        .expect("coordinate labels exist")
}

/// r_set then one coordinate point per dimension, parities alternating
/// with the 1-based coordinate index.
fn vector_gadget(alphabet: &Arc<gapkit_core::Alphabet>, set: u8, v: &BitVector) -> Vec<SymbolId> {
    let r = alphabet.id(&format!("r{set}")).expect("r label");
    let mut ids = vec![r];
    for j in 1..=v.dim() {
        ids.push(coord_id(alphabet, set, v.bit(j - 1), j));
    }
    ids
}

pub fn build_frechet_instance(
    a_list: &[BitVector],
    b_list: &[BitVector],
) -> Result<GadgetInstance, DtwdError> {
    let points = build_frechet_pointsets();
    let alphabet = Arc::clone(&points.alphabet);

    let s1 = alphabet.id("s1")?;
    let t1 = alphabet.id("t1")?;
    let mut p1_ids = Vec::new();
    for v in a_list {
        p1_ids.push(s1);
        p1_ids.extend(vector_gadget(&alphabet, 1, v));
        p1_ids.push(t1);
    }
    let p1 = Sequence::new(Arc::clone(&alphabet), p1_ids)?;

    let mut p2_ids = vec![alphabet.id("s2")?, alphabet.id("s2*")?];
    for v in b_list {
        p2_ids.extend(vector_gadget(&alphabet, 2, v));
    }
    p2_ids.push(alphabet.id("t2*")?);
    p2_ids.push(alphabet.id("t2")?);
    let p2 = Sequence::new(Arc::clone(&alphabet), p2_ids)?;

    let has_orthogonal_pair = mov_bruteforce(a_list, b_list, 0)?.is_some();
    let gap = HalfUnits::from_whole(i64::from(!has_orthogonal_pair));
    Ok(GadgetInstance {
        points,
        p1,
        p2,
        has_orthogonal_pair,
        expected_frechet: gap,
        expected_dtwd: gap,
    })
}

/// DTWD over the instance's non-metric table; the gap lemma says this is
/// 0 with an orthogonal pair and exactly 1 without.
pub fn dtwd_gap_check(instance: &GadgetInstance) -> Result<HalfUnits, DtwdError> {
    Ok(gapkit_solvers::dtwd(&instance.p1, &instance.p2, &instance.points.dist)?)
}

impl GadgetInstance {
    /// The same sequences against the metricized table; the Frechet gap
    /// moves to 1/2 vs 3/2.
    pub fn metric_points(&self) -> Result<GadgetPointSets, DtwdError> {
        metricize(&self.points)
    }

    pub fn expected_metric_frechet(&self) -> HalfUnits {
        HalfUnits(self.expected_frechet.0 + 1)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GadgetInstanceJson {
    pub kind: String,
    pub points: Vec<String>,
    /// Row-major half-unit distances over the full point alphabet.
    pub dist_half_units: Vec<Vec<i64>>,
    pub metric: bool,
    pub p1: String,
    pub p2: String,
    pub has_orthogonal_pair: bool,
    pub expected_frechet_half_units: i64,
    pub expected_dtwd_half_units: i64,
}

impl GadgetInstance {
    pub fn to_json(&self) -> String {
        let alphabet = &self.points.alphabet;
        let n = alphabet.len();
        let dist_half_units: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| self.points.dist.get(SymbolId(i as u32), SymbolId(j as u32)).0).collect())
            .collect();
        let dto = GadgetInstanceJson {
            kind: "frechet_gadget".to_string(),
            points: alphabet.glyphs().to_vec(),
            dist_half_units,
            metric: self.points.metric,
            p1: self.p1.render(),
            p2: self.p2.render(),
            has_orthogonal_pair: self.has_orthogonal_pair,
            expected_frechet_half_units: self.expected_frechet.0,
            expected_dtwd_half_units: self.expected_dtwd.0,
        };
        serde_json::to_string_pretty(&dto).expect("instance serializes")
    }

    pub fn from_json(text: &str) -> Result<GadgetInstance, DtwdError> {
        let dto: GadgetInstanceJson = serde_json::from_str(text)
            .map_err(|e| DtwdError::BadInstance { reason: e.to_string() })?;
        if dto.kind != "frechet_gadget" {
            return Err(DtwdError::BadInstance {
                reason: format!("kind {:?} is not a frechet_gadget instance", dto.kind),
            });
        }
        let base = build_frechet_pointsets();
        let alphabet = Arc::clone(&base.alphabet);
        if dto.points != alphabet.glyphs() {
            return Err(DtwdError::BadInstance { reason: "unexpected point labels".into() });
        }
        let points = if dto.metric { metricize(&base)? } else { base };
        let n = alphabet.len();
        for i in 0..n {
            for j in 0..n {
                let stored = dto
                    .dist_half_units
                    .get(i)
                    .and_then(|row| row.get(j))
                    .copied()
                    .ok_or_else(|| DtwdError::BadInstance { reason: "distance matrix shape".into() })?;
                if stored != points.dist.get(SymbolId(i as u32), SymbolId(j as u32)).0 {
                    return Err(DtwdError::BadInstance {
                        reason: format!("distance entry ({i}, {j}) does not match the gadget table"),
                    });
                }
            }
        }
        Ok(GadgetInstance {
            points,
            p1: Sequence::parse(&alphabet, &dto.p1)?,
            p2: Sequence::parse(&alphabet, &dto.p2)?,
            has_orthogonal_pair: dto.has_orthogonal_pair,
            expected_frechet: HalfUnits(dto.expected_frechet_half_units),
            expected_dtwd: HalfUnits(dto.expected_dtwd_half_units),
        })
    }
}

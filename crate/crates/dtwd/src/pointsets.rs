//! The constant point sets behind the 0-vs-1 Frechet/DTWD gap and their
//! metric variant.
//!
//! Sixteen labeled points: seven for the first sequence, nine for the
//! second. The non-metric distance f is 0/1 with a zero set built so that
//! a cost-0 traversal exists exactly when some vector pair is orthogonal;
//! adding 1/2 to every cross-set distance (and setting within-set
//! distances to 1) yields a table satisfying the triangle inequality with
//! the gap moved to 1/2 vs 3/2.

use std::sync::{Arc, OnceLock};

use gapkit_core::{Alphabet, DistanceTable, HalfUnits, SymbolId};

use crate::error::DtwdError;

/// Labels of the first sequence's points. Coordinate points are
/// `c1_<bit>_<parity>`.
pub const Q1_LABELS: [&str; 7] = ["s1", "r1", "t1", "c1_0_0", "c1_1_0", "c1_0_1", "c1_1_1"];

/// Labels of the second sequence's points.
pub const Q2_LABELS: [&str; 9] =
    ["s2", "s2*", "r2", "t2", "t2*", "c2_0_0", "c2_1_0", "c2_0_1", "c2_1_1"];

/// One shared alphabet over all sixteen point labels.
pub fn point_alphabet() -> Arc<Alphabet> {
    static ALPHABET: OnceLock<Arc<Alphabet>> = OnceLock::new();
    Arc::clone(ALPHABET.get_or_init(|| {
        Alphabet::new(Q1_LABELS.iter().chain(Q2_LABELS.iter()).map(|s| s.to_string()))
            .expect("static point alphabet")
    }))
}

#[derive(Debug, Clone)]
pub struct GadgetPointSets {
    pub alphabet: Arc<Alphabet>,
    pub dist: DistanceTable,
    pub metric: bool,
}

fn coordinate_parts(label: &str) -> Option<(u8, u8, u8)> {
    // c<set>_<bit>_<parity>
    let mut parts = label.split('_');
    let head = parts.next()?;
    let set: u8 = head.strip_prefix('c')?.parse().ok()?;
    let bit: u8 = parts.next()?.parse().ok()?;
    let parity: u8 = parts.next()?.parse().ok()?;
    Some((set, bit, parity))
}

/// The non-metric 0/1 distance between a Q1 point and a Q2 point.
fn cross_distance(q1: &str, q2: &str) -> i64 {
    let zero = q2 == "s2"
        || (q1 == "s1" && q2 != "t2*")
        || (q1 == "r1" && q2 == "r2")
        || q2 == "t2"
        || (q1 == "t1" && q2 != "s2*");
    if zero {
        return 0;
    }
    if let (Some((1, x, p)), Some((2, y, q))) = (coordinate_parts(q1), coordinate_parts(q2)) {
        if p == q && x * y == 0 {
            return 0;
        }
    }
    1
}

fn side(alphabet: &Alphabet, id: SymbolId) -> u8 {
    if Q1_LABELS.contains(&alphabet.glyph(id)) {
        1
    } else {
        2
    }
}

/// The non-metric table. Within-set entries are filled with 1 so the
/// table is complete; the constructed sequences only ever query cross-set
/// pairs. f is symmetric.
pub fn build_frechet_pointsets() -> GadgetPointSets {
    let alphabet = point_alphabet();
    let n = alphabet.len();
    let mut entries = vec![HalfUnits::from_whole(1); n * n];
    for i in 0..n {
        for j in 0..n {
            let gi = alphabet.glyph(SymbolId(i as u32));
            let gj = alphabet.glyph(SymbolId(j as u32));
            let si = side(&alphabet, SymbolId(i as u32));
            let sj = side(&alphabet, SymbolId(j as u32));
            let d = match (si, sj) {
                (1, 2) => cross_distance(gi, gj),
                (2, 1) => cross_distance(gj, gi),
                _ => 1,
            };
            entries[i * n + j] = HalfUnits::from_whole(d);
        }
    }
    let dist = DistanceTable::new(Arc::clone(&alphabet), Arc::clone(&alphabet), entries)
        .expect("static table is complete and nonnegative");
    GadgetPointSets { alphabet, dist, metric: false }
}

/// Cross-set distances become f + 1/2; within-set distances become 1. The
/// triangle inequality is asserted over all point triples and a violation
/// is an internal error.
pub fn metricize(ps: &GadgetPointSets) -> Result<GadgetPointSets, DtwdError> {
    let alphabet = Arc::clone(&ps.alphabet);
    let n = alphabet.len();
    let mut entries = vec![HalfUnits::from_whole(1); n * n];
    for i in 0..n {
        for j in 0..n {
            let si = side(&alphabet, SymbolId(i as u32));
            let sj = side(&alphabet, SymbolId(j as u32));
            entries[i * n + j] = if si == sj {
                HalfUnits::from_whole(1)
            } else {
                HalfUnits(ps.dist.get(SymbolId(i as u32), SymbolId(j as u32)).0 + 1)
            };
        }
    }
    let dist = DistanceTable::new(Arc::clone(&alphabet), Arc::clone(&alphabet), entries)?;
    let metric = GadgetPointSets { alphabet, dist, metric: true };
    metric.check_triangle()?;
    Ok(metric)
}

impl GadgetPointSets {
    pub fn get(&self, a: &str, b: &str) -> HalfUnits {
        self.dist.get_by_glyph(a, b).expect("labels come from the point alphabet")
    }

    /// d(a,c) <= d(a,b) + d(b,c) over all ordered triples.
    pub fn check_triangle(&self) -> Result<(), DtwdError> {
        let n = self.alphabet.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (a, b, c) = (SymbolId(a as u32), SymbolId(b as u32), SymbolId(c as u32));
                    let direct = self.dist.get(a, c).0;
                    let via = self.dist.get(a, b).0 + self.dist.get(b, c).0;
                    if direct > via {
                        return Err(DtwdError::TriangleViolation {
                            a: self.alphabet.glyph(a).to_string(),
                            b: self.alphabet.glyph(b).to_string(),
                            c: self.alphabet.glyph(c).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, SymbolId};
use crate::error::CoreError;

/// A nonnegative rational distance stored exactly as an integer count of
/// half-units: `HalfUnits(3)` is 3/2. Every distance the constructions use
/// is a multiple of 1/2, so no floating point is needed anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfUnits(pub i64);

impl HalfUnits {
    pub const ZERO: HalfUnits = HalfUnits(0);

    pub fn from_whole(units: i64) -> HalfUnits {
        HalfUnits(units * 2)
    }

    pub fn checked_add(self, other: HalfUnits) -> Result<HalfUnits, CoreError> {
        self.0
            .checked_add(other.0)
            .map(HalfUnits)
            .ok_or(CoreError::Overflow { context: "distance sum" })
    }
}

impl fmt::Display for HalfUnits {
    /// Renders as a decimal with a `.0` or `.5` fraction, e.g. `1.5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0.div_euclid(2);
        let frac = self.0.rem_euclid(2);
        write!(f, "{whole}.{}", if frac == 0 { '0' } else { '5' })
    }
}

/// A complete table of nonnegative distances between two labeled point
/// sets. Rows index the first set, columns the second; the two sets may be
/// the same alphabet (symbol distances) or disjoint (gadget point sets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    rows: Arc<Alphabet>,
    cols: Arc<Alphabet>,
    entries: Vec<HalfUnits>,
}

impl DistanceTable {
    pub fn new(
        rows: Arc<Alphabet>,
        cols: Arc<Alphabet>,
        entries: Vec<HalfUnits>,
    ) -> Result<DistanceTable, CoreError> {
        if entries.len() != rows.len() * cols.len() {
            return Err(CoreError::MissingDistance {
                row: format!("<{} rows>", rows.len()),
                col: format!("<{} cols>", cols.len()),
            });
        }
        for (i, &e) in entries.iter().enumerate() {
            if e.0 < 0 {
                let r = SymbolId((i / cols.len()) as u32);
                let c = SymbolId((i % cols.len()) as u32);
                return Err(CoreError::NegativeDistance {
                    row: rows.glyph(r).to_string(),
                    col: cols.glyph(c).to_string(),
                });
            }
        }
        Ok(DistanceTable { rows, cols, entries })
    }

    /// The 0/1 symbol distance over one alphabet: 0 for equal symbols, 1
    /// otherwise.
    pub fn symbol_distance(alphabet: &Arc<Alphabet>) -> DistanceTable {
        let n = alphabet.len();
        let mut entries = vec![HalfUnits::from_whole(1); n * n];
        for i in 0..n {
            entries[i * n + i] = HalfUnits::ZERO;
        }
        DistanceTable {
            rows: Arc::clone(alphabet),
            cols: Arc::clone(alphabet),
            entries,
        }
    }

    pub fn rows(&self) -> &Arc<Alphabet> {
        &self.rows
    }

    pub fn cols(&self) -> &Arc<Alphabet> {
        &self.cols
    }

    pub fn get(&self, row: SymbolId, col: SymbolId) -> HalfUnits {
        self.entries[row.index() * self.cols.len() + col.index()]
    }

    pub fn get_by_glyph(&self, row: &str, col: &str) -> Result<HalfUnits, CoreError> {
        Ok(self.get(self.rows.id(row)?, self.cols.id(col)?))
    }

    pub fn entries(&self) -> &[HalfUnits] {
        &self.entries
    }

    /// Symmetric tables (square, `d(s,t) = d(t,s)`) make DTWD symmetric.
    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i * n + j] == self.entries[j * n + i]))
    }
}

use std::sync::Arc;

use crate::alphabet::{same_alphabet, Alphabet, SymbolId};
use crate::arith;
use crate::error::CoreError;
use crate::sequence::Sequence;

/// A positive integer weight per symbol of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedAlphabet {
    alphabet: Arc<Alphabet>,
    weights: Vec<i64>,
}

impl WeightedAlphabet {
    pub fn new(alphabet: Arc<Alphabet>, weights: Vec<i64>) -> Result<WeightedAlphabet, CoreError> {
        if weights.len() != alphabet.len() {
            return Err(CoreError::InvalidAlphabet {
                reason: format!(
                    "weight table has {} entries for an alphabet of {} symbols",
                    weights.len(),
                    alphabet.len()
                ),
            });
        }
        for (i, &w) in weights.iter().enumerate() {
            if w < 1 {
                return Err(CoreError::InvalidWeight {
                    glyph: alphabet.glyph(SymbolId(i as u32)).to_string(),
                    weight: w,
                });
            }
        }
        Ok(WeightedAlphabet { alphabet, weights })
    }

    pub fn unit(alphabet: Arc<Alphabet>) -> WeightedAlphabet {
        let weights = vec![1; alphabet.len()];
        WeightedAlphabet { alphabet, weights }
    }

    /// Builds from `(glyph, weight)` pairs; every alphabet symbol must be
    /// covered.
    pub fn from_glyphs(
        alphabet: Arc<Alphabet>,
        pairs: &[(&str, i64)],
    ) -> Result<WeightedAlphabet, CoreError> {
        let mut weights = vec![0i64; alphabet.len()];
        for &(glyph, w) in pairs {
            let id = alphabet.id(glyph)?;
            weights[id.index()] = w;
        }
        WeightedAlphabet::new(alphabet, weights)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn weight(&self, id: SymbolId) -> i64 {
        self.weights[id.index()]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn covers(&self, alphabet: &Arc<Alphabet>) -> bool {
        same_alphabet(&self.alphabet, alphabet)
    }

    /// Total weight of a sequence, checked so constructed instances stay
    /// within 63-bit signed scores.
    pub fn sequence_weight(&self, seq: &Sequence) -> Result<i64, CoreError> {
        if !self.covers(seq.alphabet()) {
            return Err(CoreError::AlphabetMismatch);
        }
        arith::sum(seq.symbols().iter().map(|&id| self.weight(id)), "sequence weight")
    }
}

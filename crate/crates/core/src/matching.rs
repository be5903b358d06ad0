use crate::arith;
use crate::error::CoreError;
use crate::sequence::Sequence;
use crate::weights::WeightedAlphabet;

/// An alignment witness: an ordered list of index tuples, one index per
/// sequence. Valid matchings are strictly increasing in every coordinate
/// (no crossing pairs) and match equal symbols across each tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<Vec<usize>>,
}

impl Matching {
    pub fn new(pairs: Vec<Vec<usize>>) -> Matching {
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[Vec<usize>] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Linear-time validity check against the matched sequences.
    pub fn validate(&self, seqs: &[&Sequence]) -> Result<(), CoreError> {
        let k = seqs.len();
        for (row, tuple) in self.pairs.iter().enumerate() {
            if tuple.len() != k {
                return Err(CoreError::InvalidMatching {
                    reason: format!("tuple {row} has arity {}, expected {k}", tuple.len()),
                });
            }
            for (t, &idx) in tuple.iter().enumerate() {
                if idx >= seqs[t].len() {
                    return Err(CoreError::InvalidMatching {
                        reason: format!("tuple {row} indexes past the end of sequence {t}"),
                    });
                }
            }
            let sym = seqs[0].get(tuple[0]);
            for (t, &idx) in tuple.iter().enumerate() {
                if seqs[t].get(idx) != sym {
                    return Err(CoreError::InvalidMatching {
                        reason: format!("tuple {row} matches unequal symbols (sequence {t})"),
                    });
                }
            }
            if row > 0 {
                let prev = &self.pairs[row - 1];
                for t in 0..k {
                    if tuple[t] <= prev[t] {
                        return Err(CoreError::InvalidMatching {
                            reason: format!(
                                "tuples {} and {row} are not strictly increasing in coordinate {t}",
                                row - 1
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Recomputes the weighted score of the witness.
    pub fn score(&self, seqs: &[&Sequence], weights: &WeightedAlphabet) -> Result<i64, CoreError> {
        self.validate(seqs)?;
        arith::sum(
            self.pairs.iter().map(|tuple| weights.weight(seqs[0].get(tuple[0]))),
            "matching score",
        )
    }
}

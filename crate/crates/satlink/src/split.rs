//! Split-and-list: partition the variables into k contiguous blocks, list
//! every partial assignment per block, and turn each into a clause-indexed
//! bit vector with a 0 exactly where the partial assignment satisfies the
//! clause. The k-inner product of one vector per block then counts the
//! clauses the combined assignment leaves unsatisfied.

use gapkit_core::{BitVector, CnfFormula, VectorFamily};
use serde::Serialize;

use crate::error::SatError;

/// Enumeration guard: 2^20 partial assignments per block at most.
pub const MAX_BLOCK_VARS: usize = 20;

#[derive(Debug, Clone)]
pub struct SplitAssignmentTable {
    /// Variable indices (1-based) per block, in index order; the first
    /// blocks take the larger share when the count is not divisible.
    blocks: Vec<Vec<usize>>,
    /// One vector of dimension M per partial assignment, in binary counting
    /// order: bit b of the counter is the value of the b-th block variable.
    vectors: Vec<Vec<BitVector>>,
    num_clauses: usize,
}

impl SplitAssignmentTable {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn vectors(&self, block: usize) -> &[BitVector] {
        &self.vectors[block]
    }

    pub fn num_clauses(&self) -> usize {
        self.num_clauses
    }

    /// Equal-size lists for the k-list vector problems. Shorter lists are
    /// padded by repeating their last vector, which changes neither the
    /// minimum inner product nor the existence of a far tuple.
    pub fn to_family(&self) -> Result<VectorFamily, SatError> {
        let n = self.vectors.iter().map(|v| v.len()).max().unwrap_or(0);
        let lists = self
            .vectors
            .iter()
            .map(|list| {
                let mut list = list.clone();
                while list.len() < n {
                    list.push(list.last().expect("nonempty list").clone());
                }
                list
            })
            .collect();
        Ok(VectorFamily::new(lists)?)
    }

    /// Debug dump: blocks and vectors as 0/1 glyph strings.
    pub fn to_debug_json(&self) -> String {
        #[derive(Serialize)]
        struct Dump<'a> {
            k: usize,
            num_clauses: usize,
            blocks: &'a [Vec<usize>],
            vectors: Vec<Vec<String>>,
        }
        let dump = Dump {
            k: self.k(),
            num_clauses: self.num_clauses,
            blocks: &self.blocks,
            vectors: self
                .vectors
                .iter()
                .map(|list| list.iter().map(|v| v.render()).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&dump).expect("table serializes")
    }
}

/// Partitions `1..=n` into k contiguous blocks; the first `n % k` blocks
/// get the extra variable.
fn partition_vars(n: usize, k: usize) -> Vec<Vec<usize>> {
    let base = n / k;
    let extra = n % k;
    let mut blocks = Vec::with_capacity(k);
    let mut next = 1usize;
    for b in 0..k {
        let size = base + usize::from(b < extra);
        blocks.push((next..next + size).collect());
        next += size;
    }
    blocks
}

pub fn vectorize(cnf: &CnfFormula, k: usize) -> Result<SplitAssignmentTable, SatError> {
    if k < 2 {
        return Err(SatError::BadBlockCount { k });
    }
    let m = cnf.num_clauses();
    if m == 0 {
        return Err(SatError::OracleUnsupported {
            reason: "formula has no clauses; the vectors would have dimension 0".into(),
        });
    }
    let blocks = partition_vars(cnf.num_vars(), k);
    for (b, block) in blocks.iter().enumerate() {
        if block.len() > MAX_BLOCK_VARS {
            return Err(SatError::BlockTooLarge {
                block: b,
                size: block.len(),
                max: MAX_BLOCK_VARS,
            });
        }
    }

    let mut vectors = Vec::with_capacity(k);
    for block in &blocks {
        let mut list = Vec::with_capacity(1 << block.len());
        for counter in 0u64..(1u64 << block.len()) {
            let mut bits = vec![1u8; m];
            for (j, clause) in cnf.clauses().iter().enumerate() {
                let satisfied = clause.iter().any(|&lit| {
                    let var = lit.unsigned_abs() as usize;
                    match block.iter().position(|&v| v == var) {
                        Some(b) => {
                            let value = counter >> b & 1 == 1;
                            if lit > 0 {
                                value
                            } else {
                                !value
                            }
                        }
                        None => false,
                    }
                });
                if satisfied {
                    bits[j] = 0;
                }
            }
            list.push(BitVector::new(bits)?);
        }
        vectors.push(list);
    }

    Ok(SplitAssignmentTable { blocks, vectors, num_clauses: m })
}

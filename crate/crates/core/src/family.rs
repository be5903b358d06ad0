use crate::bitvec::BitVector;
use crate::error::CoreError;

/// `k >= 2` lists of `n` bit vectors sharing a dimension `d`: the input of
/// the k-list orthogonality problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFamily {
    lists: Vec<Vec<BitVector>>,
    dim: usize,
}

impl VectorFamily {
    pub fn new(lists: Vec<Vec<BitVector>>) -> Result<VectorFamily, CoreError> {
        if lists.len() < 2 {
            return Err(CoreError::InvalidFamily {
                reason: format!("family needs k >= 2 lists, got {}", lists.len()),
            });
        }
        let n = lists[0].len();
        if n == 0 {
            return Err(CoreError::InvalidFamily { reason: "lists must be nonempty".to_string() });
        }
        let dim = lists[0][0].dim();
        for (t, list) in lists.iter().enumerate() {
            if list.len() != n {
                return Err(CoreError::InvalidFamily {
                    reason: format!("list {t} has {} vectors, expected {n}", list.len()),
                });
            }
            for v in list {
                if v.dim() != dim {
                    return Err(CoreError::DimensionMismatch { left: dim, right: v.dim() });
                }
            }
        }
        Ok(VectorFamily { lists, dim })
    }

    /// Two-list family, the plain orthogonal-vectors shape.
    pub fn pair(a: Vec<BitVector>, b: Vec<BitVector>) -> Result<VectorFamily, CoreError> {
        VectorFamily::new(vec![a, b])
    }

    pub fn k(&self) -> usize {
        self.lists.len()
    }

    pub fn n(&self) -> usize {
        self.lists[0].len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn list(&self, t: usize) -> &[BitVector] {
        &self.lists[t]
    }

    pub fn lists(&self) -> &[Vec<BitVector>] {
        &self.lists
    }
}

/// A CNF formula: clauses of nonzero signed literals over variables
/// `1..=num_vars`. Duplicate or complementary literals within a clause are
/// kept verbatim; satisfaction is evaluated literally.
use crate::error::CoreError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula, CoreError> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(CoreError::InvalidCnf { reason: format!("clause {i} is empty") });
            }
            for &lit in clause {
                if lit == 0 {
                    return Err(CoreError::InvalidCnf {
                        reason: format!("clause {i} contains a zero literal"),
                    });
                }
                let var = lit.unsigned_abs() as usize;
                if var > num_vars {
                    return Err(CoreError::InvalidCnf {
                        reason: format!(
                            "clause {i} references variable {var}, but the formula has {num_vars}"
                        ),
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Evaluates clause `j` under a total assignment given as a bit per
    /// variable (index 0 holds variable 1).
    pub fn clause_satisfied(&self, j: usize, assignment: &[bool]) -> bool {
        self.clauses[j].iter().any(|&lit| {
            let value = assignment[lit.unsigned_abs() as usize - 1];
            if lit > 0 {
                value
            } else {
                !value
            }
        })
    }

    pub fn count_satisfied(&self, assignment: &[bool]) -> usize {
        (0..self.clauses.len())
            .filter(|&j| self.clause_satisfied(j, assignment))
            .count()
    }
}

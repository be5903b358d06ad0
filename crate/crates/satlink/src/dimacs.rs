//! DIMACS CNF reader: `c` comment lines, a `p cnf <vars> <clauses>` header,
//! then whitespace-separated literals with `0` terminating each clause.
//! Clause order is preserved.

use gapkit_core::CnfFormula;

use crate::error::SatError;

pub fn parse_dimacs(text: &str) -> Result<CnfFormula, SatError> {
    let mut num_vars: Option<usize> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_literal_line = 0usize;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
            continue;
        }
        if trimmed.starts_with('p') {
            if num_vars.is_some() {
                return Err(SatError::Parse { line, reason: "duplicate header".into() });
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(SatError::Parse {
                    line,
                    reason: format!("malformed header {trimmed:?}, expected 'p cnf <vars> <clauses>'"),
                });
            }
            let vars: usize = fields[2].parse().map_err(|_| SatError::Parse {
                line,
                reason: format!("bad variable count {:?}", fields[2]),
            })?;
            // The clause count is read for shape but the actual clauses decide.
            let _: usize = fields[3].parse().map_err(|_| SatError::Parse {
                line,
                reason: format!("bad clause count {:?}", fields[3]),
            })?;
            num_vars = Some(vars);
            continue;
        }

        let vars = num_vars.ok_or(SatError::Parse {
            line,
            reason: "literals before the 'p cnf' header".into(),
        })?;
        for token in trimmed.split_whitespace() {
            let lit: i32 = token.parse().map_err(|_| SatError::Parse {
                line,
                reason: format!("bad literal {token:?}"),
            })?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(SatError::Parse { line, reason: "empty clause".into() });
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                if lit.unsigned_abs() as usize > vars {
                    return Err(SatError::Parse {
                        line,
                        reason: format!("literal {lit} out of range 1..={vars}"),
                    });
                }
                current.push(lit);
                last_literal_line = line;
            }
        }
    }

    let vars = num_vars.ok_or(SatError::Parse { line: 0, reason: "missing header".into() })?;
    if !current.is_empty() {
        return Err(SatError::Parse {
            line: last_literal_line,
            reason: "clause not terminated by 0".into(),
        });
    }
    CnfFormula::new(vars, clauses).map_err(SatError::from)
}

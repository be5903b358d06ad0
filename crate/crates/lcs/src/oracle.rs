//! The string-route decision oracle: answer far-pair queries by building
//! the weighted instance and comparing its WLCS against the gap threshold.
//! Plugged into the MAX-SAT binary search, this exercises the whole
//! pipeline from CNF to vectors to strings to score.

use gapkit_core::VectorFamily;
use gapkit_satlink::{MovOracle, SatError};
use gapkit_solvers::wlcs;

use crate::instance::build_instance;
use crate::schedule::WeightSchedule;

pub struct LcsMovOracle;

impl MovOracle for LcsMovOracle {
    fn exists_far(&mut self, family: &VectorFamily, r: u64) -> Result<bool, SatError> {
        if family.k() != 2 {
            return Err(SatError::OracleUnsupported {
                reason: format!("the two-sequence construction needs k = 2, got {}", family.k()),
            });
        }
        // Inner products never exceed d, so r >= d makes every pair far and
        // the schedule (which needs r < d) is not consulted.
        if r >= family.dim() as u64 {
            return Ok(true);
        }
        let schedule = WeightSchedule::compact(family.dim(), r)
            .map_err(|e| SatError::OracleUnsupported { reason: e.to_string() })?;
        let instance = build_instance(family.list(0), family.list(1), r, schedule)
            .map_err(|e| SatError::OracleUnsupported { reason: e.to_string() })?;
        let score = wlcs(&instance.p1, &instance.p2, &instance.weights)?;
        Ok(score > instance.e_g)
    }
}

//! The weight schedule for the two-sequence construction and the
//! inequalities its gap argument relies on.
//!
//! Two constructors: `paper` uses the cascade X = 100d, B = A^2, C = B^2,
//! whose weights are far too large to expand into unary strings; `compact`
//! picks the smallest B and C satisfying the same inequalities, so whole
//! instances can be expanded and solved as plain LCS.

use gapkit_core::arith::{add, mul};
use serde::{Deserialize, Serialize};

use crate::error::LcsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSchedule {
    pub d: usize,
    pub r: u64,
    /// w(5); the coordinate-gadget match unit.
    pub x: i64,
    /// w(1); the score of a close vector-gadget pair.
    pub a: i64,
    /// w(3); the padding symbol.
    pub b: i64,
    /// w(0) = w(2); the interval delimiters.
    pub c: i64,
}

fn ov(reason: &str) -> LcsError {
    LcsError::InvalidSchedule { reason: reason.to_string() }
}

impl WeightSchedule {
    /// A = (r+1) * 2X + (d - (r+1)) * (2X + 1).
    pub fn close_pair_score(d: usize, r: u64, x: i64) -> Result<i64, LcsError> {
        let d = d as i64;
        let r = r as i64;
        if r + 1 > d {
            return Err(ov("r must be at most d - 1"));
        }
        let far_coords = mul(r + 1, 2 * x, "A").map_err(|_| ov("A overflows"))?;
        let close_coords = mul(d - (r + 1), 2 * x + 1, "A").map_err(|_| ov("A overflows"))?;
        add(far_coords, close_coords, "A").map_err(|_| ov("A overflows"))
    }

    pub fn paper(d: usize, r: u64) -> Result<WeightSchedule, LcsError> {
        let x = 100 * d as i64;
        let a = Self::close_pair_score(d, r, x)?;
        let b = mul(a, a, "B").map_err(|_| ov("B = A^2 overflows"))?;
        let c = mul(b, b, "C").map_err(|_| ov("C = B^2 overflows"))?;
        let schedule = WeightSchedule { d, r, x, a, b, c };
        schedule.validate()?;
        Ok(schedule)
    }

    /// Smallest B and C passing `validate`, computed directly from the
    /// inequalities.
    pub fn compact(d: usize, r: u64) -> Result<WeightSchedule, LcsError> {
        let x = 100 * d as i64;
        let a = Self::close_pair_score(d, r, x)?;
        let delta = d as i64 * (2 * x + 2);
        let b = delta + 1;
        let bound = |num: i64| -> i64 { (num - a).div_euclid(2) + i64::from((num - a).rem_euclid(2) != 0) };
        let c = (a + delta + 1)
            .max(bound(2 * b))
            .max(bound(10 * b + 1))
            .max(bound(10 * delta + 1));
        let schedule = WeightSchedule { d, r, x, a, b, c };
        schedule.validate()?;
        Ok(schedule)
    }

    /// Every inequality the gap proofs use, plus overflow checks on the
    /// derived thresholds.
    pub fn validate(&self) -> Result<(), LcsError> {
        if self.d < 1 {
            return Err(ov("d must be >= 1"));
        }
        if self.r as usize >= self.d {
            return Err(ov("r must be at most d - 1"));
        }
        if self.x < 100 * self.d as i64 {
            return Err(ov("X must be at least 100 d"));
        }
        if self.a != Self::close_pair_score(self.d, self.r, self.x)? {
            return Err(ov("A must equal (r+1) 2X + (d-(r+1)) (2X+1)"));
        }
        let delta = self.interior_slack()?;
        if delta > self.b - 1 {
            return Err(ov("d (2X+2) must be at most B - 1"));
        }
        let e_u = self.e_u()?;
        let e_b = self.e_b()?;
        if e_u <= 2 * self.b - 1 {
            return Err(ov("E_U must exceed 2B - 1"));
        }
        if 10 * self.b >= e_u {
            return Err(ov("10 B must stay below E_U"));
        }
        let lhs = mul(10, e_b, "1.1 E_U check").map_err(|_| ov("E_B overflows"))?;
        let rhs = mul(11, e_u, "1.1 E_U check").map_err(|_| ov("E_U overflows"))?;
        if lhs >= rhs {
            return Err(ov("E_B must stay below 1.1 E_U"));
        }
        if self.c <= add(self.a, delta, "C check").map_err(|_| ov("C bound overflows"))? {
            return Err(ov("C must exceed A + d (2X+2)"));
        }
        // E_G for any plausible n must stay in 63-bit range; spot check n = 1.
        self.e_g(1)?;
        Ok(())
    }

    /// d * (2X + 2): the most weight an interval can hold beyond E_U.
    pub fn interior_slack(&self) -> Result<i64, LcsError> {
        mul(self.d as i64, 2 * self.x + 2, "interior slack").map_err(|_| ov("d (2X+2) overflows"))
    }

    /// E_U = 2C + A: a fully matched interval pair.
    pub fn e_u(&self) -> Result<i64, LcsError> {
        add(mul(2, self.c, "E_U").map_err(|_| ov("E_U overflows"))?, self.a, "E_U")
            .map_err(|_| ov("E_U overflows"))
    }

    /// E_B = 2C + A + d(2X+2): all symbols of an interval.
    pub fn e_b(&self) -> Result<i64, LcsError> {
        add(self.e_u()?, self.interior_slack()?, "E_B").map_err(|_| ov("E_B overflows"))
    }

    /// E_G(n) = n E_U + 2n B: the gap threshold for an n-vector instance.
    pub fn e_g(&self, n: usize) -> Result<i64, LcsError> {
        let n = n as i64;
        let intervals = mul(n, self.e_u()?, "E_G").map_err(|_| ov("E_G overflows"))?;
        let padding = mul(2 * n, self.b, "E_G").map_err(|_| ov("E_G overflows"))?;
        add(intervals, padding, "E_G").map_err(|_| ov("E_G overflows"))
    }
}

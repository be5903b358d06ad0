//! Weights for the k-sequence construction.
//!
//! Gadget level: unit symbols a, b, c, a heavy spacer d, a heavier
//! separator e, and an f symbol worth exactly the close-tuple score E_n.
//! Each coordinate gadget carries 2^k + 1 copies of d, so the far/close
//! coordinate scores are E_o^c = 2 + (2^k + 1) w(d) and E_n^c = E_o^c - 1,
//! and a vector-gadget tuple scores
//! E_o = (d+1) w(e) + (d-r) E_o^c + r E_n^c when far, E_n = E_o - 1 when
//! close.
//!
//! Selection level: padding weights B_k = (10kD)^2, B_i = 2k B_{i+1}, and
//! interval delimiters 0/2 at C = 10 k^2 B_2, giving the gap threshold
//! E_G = n E_U + B_2 + (2n+1) sum B_i with E_U = 2C + E_n.

use gapkit_core::arith::{add, mul};
use serde::{Deserialize, Serialize};

use crate::error::KlcsError;

pub const MAX_BUILDER_K: usize = 6;

fn ov(reason: String) -> KlcsError {
    KlcsError::InvalidSchedule { reason }
}

/// The vector-gadget-level weights; enough for the coordinate and vector
/// gadget claims and for the windowed construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGadgetWeights {
    pub k: usize,
    pub d: usize,
    pub r: u64,
    /// Weight of the d spacer symbol.
    pub w_d: i64,
    /// Weight of the e separator symbol.
    pub w_e: i64,
}

impl KGadgetWeights {
    /// Cascade weights: w(d) = 4^k, w(e) = 100 E_o^c.
    pub fn paper(k: usize, d: usize, r: u64) -> Result<KGadgetWeights, KlcsError> {
        check_shape(k, d, r)?;
        let w_d = 4i64.checked_pow(k as u32).ok_or_else(|| ov("4^k overflows".into()))?;
        let spacers = slot_count(k)? + 2;
        let e_o_c = add(2, mul(spacers, w_d, "E_o^c").map_err(|e| ov(e.to_string()))?, "E_o^c")
            .map_err(|e| ov(e.to_string()))?;
        let w_e = mul(100, e_o_c, "w(e)").map_err(|e| ov(e.to_string()))?;
        let w = KGadgetWeights { k, d, r, w_d, w_e };
        w.validate()?;
        Ok(w)
    }

    /// Smallest weights the gadget arguments support; keeps expanded
    /// gadgets short enough for windowed solving.
    pub fn compact(k: usize, d: usize, r: u64) -> Result<KGadgetWeights, KlcsError> {
        check_shape(k, d, r)?;
        let two_k = slot_count(k)? + 1;
        let w = KGadgetWeights { k, d, r, w_d: two_k, w_e: d as i64 * (two_k - 1) + 1 };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<(), KlcsError> {
        check_shape(self.k, self.d, self.r)?;
        let two_k = slot_count(self.k)? + 1;
        if self.w_d < two_k - 1 {
            return Err(ov(format!(
                "w(d) = {} is below 2^k - 1 = {}; dropping a d could beat a slot match",
                self.w_d,
                two_k - 1
            )));
        }
        if self.w_e < self.d as i64 * (two_k - 1) + 1 {
            return Err(ov(format!(
                "w(e) = {} is below d (2^k - 1) + 1; skipping an e could pay off",
                self.w_e
            )));
        }
        self.e_n()?;
        Ok(())
    }

    /// Far-coordinate score: two unit matches plus all 2^k + 1 d symbols.
    pub fn e_o_c(&self) -> Result<i64, KlcsError> {
        let d_total = mul(slot_count(self.k)? + 2, self.w_d, "E_o^c")
            .map_err(|e| ov(e.to_string()))?;
        add(2, d_total, "E_o^c").map_err(|e| ov(e.to_string()))
    }

    pub fn e_n_c(&self) -> Result<i64, KlcsError> {
        Ok(self.e_o_c()? - 1)
    }

    /// Far-tuple score: all d+1 separators plus the per-coordinate scores
    /// at inner product exactly r.
    pub fn e_o(&self) -> Result<i64, KlcsError> {
        let separators = mul(self.d as i64 + 1, self.w_e, "E_o").map_err(|e| ov(e.to_string()))?;
        let far = mul(self.d as i64 - self.r as i64, self.e_o_c()?, "E_o")
            .map_err(|e| ov(e.to_string()))?;
        let close = mul(self.r as i64, self.e_n_c()?, "E_o").map_err(|e| ov(e.to_string()))?;
        add(add(separators, far, "E_o").map_err(|e| ov(e.to_string()))?, close, "E_o")
            .map_err(|e| ov(e.to_string()))
    }

    /// Close-tuple score, also the weight of the f symbol.
    pub fn e_n(&self) -> Result<i64, KlcsError> {
        Ok(self.e_o()? - 1)
    }

    /// Total weight of the heaviest coordinate gadget (the bit-0 variant,
    /// which carries the extra c).
    pub fn coord_gadget_weight(&self) -> Result<i64, KlcsError> {
        let slots = slot_count(self.k)?;
        let d_total = mul(slots + 2, self.w_d, "gadget weight").map_err(|e| ov(e.to_string()))?;
        add(d_total, slots + 1, "gadget weight").map_err(|e| ov(e.to_string()))
    }

    /// D: the maximum total weight of a vector gadget (f + separators +
    /// heaviest coordinate gadgets).
    pub fn max_vector_gadget_weight(&self) -> Result<i64, KlcsError> {
        let separators =
            mul(self.d as i64 + 1, self.w_e, "D").map_err(|e| ov(e.to_string()))?;
        let coords = mul(self.d as i64, self.coord_gadget_weight()?, "D")
            .map_err(|e| ov(e.to_string()))?;
        let body = add(separators, coords, "D").map_err(|e| ov(e.to_string()))?;
        add(body, self.e_n()?, "D").map_err(|e| ov(e.to_string()))
    }
}

fn check_shape(k: usize, d: usize, r: u64) -> Result<(), KlcsError> {
    if !(2..=MAX_BUILDER_K).contains(&k) {
        return Err(KlcsError::UnsupportedK { k });
    }
    if d < 1 {
        return Err(ov("d must be >= 1".into()));
    }
    if r > d as u64 {
        return Err(ov(format!("r = {r} exceeds d = {d}")));
    }
    Ok(())
}

/// 2^k - 1: the number of binary-expansion slots per coordinate gadget.
fn slot_count(k: usize) -> Result<i64, KlcsError> {
    1i64.checked_shl(k as u32)
        .map(|v| v - 1)
        .ok_or_else(|| ov("2^k overflows".into()))
}

/// The full schedule for the padded k-sequence instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KWeightSchedule {
    pub gadget: KGadgetWeights,
    pub n: usize,
    /// Padding weights B_2..B_k (index 0 holds B_2).
    pub b: Vec<i64>,
    /// Weight of the interval delimiters 0 and 2.
    pub c: i64,
}

impl KWeightSchedule {
    pub fn new(gadget: KGadgetWeights, n: usize) -> Result<KWeightSchedule, KlcsError> {
        if n < 1 {
            return Err(ov("n must be >= 1".into()));
        }
        let k = gadget.k;
        let big_d = gadget.max_vector_gadget_weight()?;
        let base = mul(10 * k as i64, big_d, "B_k").map_err(|e| ov(e.to_string()))?;
        let b_k = mul(base, base, "B_k").map_err(|e| ov(e.to_string()))?;
        let mut b = vec![b_k];
        for _ in 2..k {
            let next = mul(2 * k as i64, b[b.len() - 1], "B_i").map_err(|e| ov(e.to_string()))?;
            b.push(next);
        }
        b.reverse();
        let c = mul(10 * (k * k) as i64, b[0], "C").map_err(|e| ov(e.to_string()))?;
        let schedule = KWeightSchedule { gadget, n, b, c };
        schedule.validate()?;
        Ok(schedule)
    }

    pub fn k(&self) -> usize {
        self.gadget.k
    }

    /// B = B_k, the smallest padding weight.
    pub fn b_k(&self) -> i64 {
        *self.b.last().expect("k >= 2 keeps b nonempty")
    }

    /// B_i for i in 2..=k.
    pub fn b_i(&self, i: usize) -> i64 {
        self.b[i - 2]
    }

    /// The ordering chain C > B_2 > ... > B_k > D > E_o and the
    /// one-interval slack bound (k-1) D < B.
    pub fn validate(&self) -> Result<(), KlcsError> {
        self.gadget.validate()?;
        if self.b.len() != self.k() - 1 {
            return Err(ov("padding weight count must be k - 1".into()));
        }
        let big_d = self.gadget.max_vector_gadget_weight()?;
        let mut chain = vec![self.c];
        chain.extend_from_slice(&self.b);
        chain.push(big_d);
        chain.push(self.gadget.e_o()?);
        if !chain.windows(2).all(|w| w[0] > w[1]) {
            return Err(ov(format!("weight chain is not strictly decreasing: {chain:?}")));
        }
        let slack = mul(self.k() as i64 - 1, big_d, "(k-1) D").map_err(|e| ov(e.to_string()))?;
        if slack >= self.b_k() {
            return Err(ov("(k-1) D must stay below B".into()));
        }
        self.e_g()?;
        Ok(())
    }

    /// E_U = 2C + E_n.
    pub fn e_u(&self) -> Result<i64, KlcsError> {
        add(mul(2, self.c, "E_U").map_err(|e| ov(e.to_string()))?, self.gadget.e_n()?, "E_U")
            .map_err(|e| ov(e.to_string()))
    }

    /// E_G = n E_U + B_2 + (2n+1) sum_{i=2}^k B_i.
    pub fn e_g(&self) -> Result<i64, KlcsError> {
        let n = self.n as i64;
        let intervals = mul(n, self.e_u()?, "E_G").map_err(|e| ov(e.to_string()))?;
        let mut total = add(intervals, self.b[0], "E_G").map_err(|e| ov(e.to_string()))?;
        for &b_i in &self.b {
            let part = mul(2 * n + 1, b_i, "E_G").map_err(|e| ov(e.to_string()))?;
            total = add(total, part, "E_G").map_err(|e| ov(e.to_string()))?;
        }
        Ok(total)
    }
}

use crate::error::CoreError;

/// A vector in `{0,1}^d`, `d >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    bits: Vec<u8>,
}

impl BitVector {
    pub fn new(bits: Vec<u8>) -> Result<BitVector, CoreError> {
        if bits.is_empty() {
            return Err(CoreError::InvalidFamily {
                reason: "bit vector dimension must be >= 1".to_string(),
            });
        }
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(CoreError::InvalidFamily {
                reason: format!("bit vector entry {b} is not 0/1"),
            });
        }
        Ok(BitVector { bits })
    }

    pub fn from_bools(bits: &[bool]) -> Result<BitVector, CoreError> {
        BitVector::new(bits.iter().map(|&b| b as u8).collect())
    }

    /// Parses a line of `0`/`1` glyphs such as `"0110"`.
    pub fn parse(text: &str) -> Result<BitVector, CoreError> {
        let mut bits = Vec::new();
        for c in text.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                c if c.is_whitespace() => {}
                c => {
                    return Err(CoreError::InvalidFamily {
                        reason: format!("unexpected character {c:?} in bit vector"),
                    })
                }
            }
        }
        BitVector::new(bits)
    }

    pub fn all_ones(dim: usize) -> Result<BitVector, CoreError> {
        BitVector::new(vec![1; dim])
    }

    pub fn dim(&self) -> usize {
        self.bits.len()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn popcount(&self) -> u64 {
        self.bits.iter().map(|&b| b as u64).sum()
    }

    pub fn render(&self) -> String {
        self.bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
    }
}

fn check_dims(vs: &[&BitVector]) -> Result<usize, CoreError> {
    let d = vs[0].dim();
    for v in vs {
        if v.dim() != d {
            return Err(CoreError::DimensionMismatch { left: d, right: v.dim() });
        }
    }
    Ok(d)
}

/// Number of coordinates where both vectors are 1.
pub fn inner_product(a: &BitVector, b: &BitVector) -> Result<u64, CoreError> {
    check_dims(&[a, b])?;
    Ok(a.bits
        .iter()
        .zip(&b.bits)
        .map(|(&x, &y)| (x & y) as u64)
        .sum())
}

/// Number of coordinates where all `k` vectors are 1, `k >= 2`.
pub fn k_inner_product(vs: &[&BitVector]) -> Result<u64, CoreError> {
    if vs.len() < 2 {
        return Err(CoreError::InvalidFamily {
            reason: format!("k-inner product needs k >= 2 vectors, got {}", vs.len()),
        });
    }
    let d = check_dims(vs)?;
    let mut total = 0u64;
    for h in 0..d {
        if vs.iter().all(|v| v.bit(h) == 1) {
            total += 1;
        }
    }
    Ok(total)
}

/// A tuple of vectors is `r`-far when its inner product is at most `r`.
pub fn is_far(vs: &[&BitVector], r: u64) -> Result<bool, CoreError> {
    Ok(k_inner_product(vs)? <= r)
}

//! Dynamic time warping distance and discrete Frechet distance over a
//! distance table.
//!
//! Both run the same monotone-traversal DP; DTWD accumulates the sum of
//! configuration distances, Frechet the maximum. The starting configuration
//! (both markers at position 1) contributes its distance once; every move
//! then adds (or maxes in) the destination configuration's distance.

use gapkit_core::{same_alphabet, DistanceTable, HalfUnits, Sequence};

use crate::error::SolverError;

fn check_inputs(
    x: &Sequence,
    y: &Sequence,
    dist: &DistanceTable,
) -> Result<(), SolverError> {
    if x.is_empty() || y.is_empty() {
        return Err(SolverError::EmptySequence);
    }
    if !same_alphabet(x.alphabet(), dist.rows()) || !same_alphabet(y.alphabet(), dist.cols()) {
        return Err(SolverError::TableMismatch);
    }
    Ok(())
}

fn warp_dp(
    x: &Sequence,
    y: &Sequence,
    dist: &DistanceTable,
    accumulate: impl Fn(i64, i64) -> i64,
) -> Vec<i64> {
    let (a, b) = (x.symbols(), y.symbols());
    let n = b.len();
    let mut dp = vec![0i64; a.len() * n];
    for (i, &sa) in a.iter().enumerate() {
        for (j, &sb) in b.iter().enumerate() {
            let d = dist.get(sa, sb).0;
            dp[i * n + j] = match (i, j) {
                (0, 0) => d,
                (0, _) => accumulate(dp[j - 1], d),
                (_, 0) => accumulate(dp[(i - 1) * n], d),
                _ => {
                    let best = dp[(i - 1) * n + j]
                        .min(dp[i * n + j - 1])
                        .min(dp[(i - 1) * n + j - 1]);
                    accumulate(best, d)
                }
            };
        }
    }
    dp
}

/// Minimum total configuration distance over monotone traversals, in
/// half-units.
pub fn dtwd(x: &Sequence, y: &Sequence, dist: &DistanceTable) -> Result<HalfUnits, SolverError> {
    check_inputs(x, y, dist)?;
    let dp = warp_dp(x, y, dist, |acc, d| acc + d);
    Ok(HalfUnits(dp[dp.len() - 1]))
}

/// Minimum over traversals of the maximum configuration distance, in
/// half-units.
pub fn frechet(x: &Sequence, y: &Sequence, dist: &DistanceTable) -> Result<HalfUnits, SolverError> {
    check_inputs(x, y, dist)?;
    let dp = warp_dp(x, y, dist, |acc, d| acc.max(d));
    Ok(HalfUnits(dp[dp.len() - 1]))
}

/// DTWD with the traversal that realizes it. Tie-break: prefer diagonal,
/// then left, then up.
pub fn dtwd_with_traversal(
    x: &Sequence,
    y: &Sequence,
    dist: &DistanceTable,
) -> Result<(HalfUnits, Vec<(usize, usize)>), SolverError> {
    check_inputs(x, y, dist)?;
    let dp = warp_dp(x, y, dist, |acc, d| acc + d);
    let n = y.len();
    let mut path = Vec::new();
    let (mut i, mut j) = (x.len() - 1, n - 1);
    loop {
        path.push((i, j));
        if i == 0 && j == 0 {
            break;
        }
        let d = dist.get(x.get(i), y.get(j)).0;
        let here = dp[i * n + j];
        if i > 0 && j > 0 && here == dp[(i - 1) * n + j - 1] + d {
            i -= 1;
            j -= 1;
        } else if j > 0 && here == dp[i * n + j - 1] + d {
            j -= 1;
        } else {
            i -= 1;
        }
    }
    path.reverse();
    Ok((HalfUnits(dp[dp.len() - 1]), path))
}

/// Recomputes a traversal's DTWD cost, including the start configuration.
pub fn traversal_cost(
    x: &Sequence,
    y: &Sequence,
    dist: &DistanceTable,
    path: &[(usize, usize)],
) -> Result<HalfUnits, SolverError> {
    check_inputs(x, y, dist)?;
    let mut total = HalfUnits::ZERO;
    for &(i, j) in path {
        total = total.checked_add(dist.get(x.get(i), y.get(j)))?;
    }
    Ok(total)
}

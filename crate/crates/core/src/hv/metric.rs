//! Distances and activity, all computed with word-wise popcounts.

use super::state::State;
use crate::error::{check_open_unit, check_unit, Result};
use crate::theory::binomial_cdf;

#[inline]
fn fold_pairs(x: &State, y: &State, f: impl Fn(u64, u64) -> u64) -> Result<usize> {
    x.check_dims(y)?;
    Ok(x.words()
        .iter()
        .zip(y.words())
        .map(|(&a, &b)| f(a, b).count_ones() as usize)
        .sum())
}

/// Number of differing components, `|XOR(x, y)|`.
pub fn hamming_count(x: &State, y: &State) -> Result<usize> {
    fold_pairs(x, y, |a, b| a ^ b)
}

/// Normalised Hamming distance `|XOR(x, y)| / N`.
pub fn hamming(x: &State, y: &State) -> Result<f64> {
    Ok(hamming_count(x, y)? as f64 / x.n_dims() as f64)
}

/// `1 - |AND| / |OR|`; two all-zero states are at distance 0.
pub fn jaccard(x: &State, y: &State) -> Result<f64> {
    let union = fold_pairs(x, y, |a, b| a | b)?;
    if union == 0 {
        return Ok(0.0);
    }
    let inter = fold_pairs(x, y, |a, b| a & b)?;
    Ok(1.0 - inter as f64 / union as f64)
}

/// Fraction of active components, `|x| / N`.
pub fn activity(x: &State) -> f64 {
    x.count_ones() as f64 / x.n_dims() as f64
}

/// Probability that two independent `ref_q`-states are at most as far apart
/// as `x` and `y`.
///
/// Components of two independent `ref_q`-states disagree with probability
/// `2 ref_q (1 - ref_q)`, so the reference distance count is
/// `Binomial(N, 2 ref_q (1 - ref_q))` and the result is its CDF at
/// `|XOR(x, y)|`.
pub fn global_distance(x: &State, y: &State, ref_q: f64) -> Result<f64> {
    check_open_unit("ref_q", ref_q)?;
    let count = hamming_count(x, y)?;
    global_distance_from_count(count, x.n_dims(), ref_q)
}

/// [`global_distance`] for a precomputed differing-component count.
pub fn global_distance_from_count(count: usize, n_dims: usize, ref_q: f64) -> Result<f64> {
    check_open_unit("ref_q", ref_q)?;
    binomial_cdf(count as u64, n_dims as u64, 2.0 * ref_q * (1.0 - ref_q))
}

/// `x ≈ y` iff `D(x, y) <= epsilon`.
pub fn approx_equal(x: &State, y: &State, ref_q: f64, epsilon: f64) -> Result<bool> {
    check_unit("epsilon", epsilon)?;
    Ok(global_distance(x, y, ref_q)? <= epsilon)
}

//! Closed-form predictions for the bundling algebra.
//!
//! Everything here is deterministic and serves as the oracle side of the
//! Monte Carlo experiments. All formulas assume independent operands whose
//! components are i.i.d., so each reduces to a per-component calculation.

use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::error::{check_unit, Error, Result};

/// `d(x, y) = 2q(1-q)` for independent q-states.
pub fn expected_pair_distance(q: f64) -> Result<f64> {
    check_unit("q", q)?;
    Ok(2.0 * q * (1.0 - q))
}

/// `d(x, x*y) = 1 - q` for independent q-states.
pub fn expected_bind_distance(q: f64) -> Result<f64> {
    check_unit("q", q)?;
    Ok(1.0 - q)
}

/// Two predictions for `d(x, x ⊕p y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BundleDistance {
    /// `q(1-q)`: a 1/0 disagreement is lost with probability `1-p`, a 0/1
    /// disagreement is gained with probability `p`, each case has mass
    /// `q(1-q)`.
    pub consistent: f64,
    /// `2q(1-q)(1-p)`, the commonly quoted contraction formula. Disagrees with
    /// simulation except at `p = 1/2`; kept for reporting.
    pub paper_variant: f64,
}

pub fn expected_bundle_distance(q: f64, p: f64) -> Result<BundleDistance> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    Ok(BundleDistance {
        consistent: q * (1.0 - q),
        paper_variant: 2.0 * q * (1.0 - q) * (1.0 - p),
    })
}

/// Activity of `a ⊕p b` for independent operands of activities `a` and `b`.
#[inline]
pub fn bundle_activity(a: f64, b: f64, p: f64) -> f64 {
    a * b + p * (a * (1.0 - b) + b * (1.0 - a))
}

/// `P(1..=k)`: activity of a left fold of `k` independent q-states.
///
/// `P(1) = q`, `P(n) = q P(n-1) + p [(1-q) P(n-1) + q (1 - P(n-1))]`.
pub fn activity_recurrence(q: f64, p: f64, k: usize) -> Result<Vec<f64>> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    if k == 0 {
        return Err(Error::Empty("summand count k"));
    }
    let mut out = Vec::with_capacity(k);
    let mut current = q;
    out.push(current);
    for _ in 1..k {
        current = bundle_activity(current, q, p);
        out.push(current);
    }
    Ok(out)
}

/// Slope of the affine map `P(n-1) -> P(n)`: `q + p(1-q) - pq`.
///
/// Gaps to the fixed point shrink by exactly this factor per summand.
pub fn contraction_factor(q: f64, p: f64) -> f64 {
    q + p * (1.0 - q) - p * q
}

/// Fixed point `pq / (1 - p(1-q) - q(1-p))` of the activity recurrence.
pub fn activity_limit(q: f64, p: f64) -> Result<f64> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    let denom = 1.0 - p * (1.0 - q) - q * (1.0 - p);
    if denom.abs() < 1e-300 {
        return Err(Error::DegenerateLimit(denom));
    }
    Ok(p * q / denom)
}

/// `p - (p - 1/2) 2^(1-k)`: activity of `k` bundled dense states.
pub fn activity_dense(p: f64, k: usize) -> Result<f64> {
    check_unit("p", p)?;
    if k == 0 {
        return Err(Error::Empty("summand count k"));
    }
    Ok(p - (p - 0.5) * 2f64.powi(1 - k as i32))
}

/// Lower bound `2p(1-q)` on `d(x ⊕p y, x*y)`.
pub fn separation_bound(q: f64, p: f64) -> Result<f64> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    Ok(2.0 * p * (1.0 - q))
}

/// Exact `E d(x ⊕p y, x*y) = (1-q)^2 + 2pq(1-q)`.
///
/// Agreeing components bind to 1 and the bundle copies the common bit, which
/// mismatches when both are 0. Disagreeing components bind to 0 and mismatch
/// when the bundle draws a 1.
pub fn separation_expected(q: f64, p: f64) -> Result<f64> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    Ok((1.0 - q).powi(2) + 2.0 * p * q * (1.0 - q))
}

/// Exact `E d(x*(y ⊕p z), (x*y) ⊕p (x*z))` for independent q-states.
///
/// Only `y != z` components can differ. There `x*y != x*z`, the right side is
/// a fresh Bernoulli(p), and the left is a Bernoulli(p) draw passed through
/// XNOR with `x`: identity for `x = 1`, negation for `x = 0`.
pub fn distributivity_expected(q: f64, p: f64) -> Result<f64> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    let differ_same_sign = 2.0 * p * (1.0 - p);
    let differ_negated = p * p + (1.0 - p) * (1.0 - p);
    Ok(2.0 * q * (1.0 - q) * (q * differ_same_sign + (1.0 - q) * differ_negated))
}

/// Exact `E d((x ⊕p y) ⊕p z, x ⊕p (y ⊕p z))` for independent q-states,
/// by enumerating the three bits and the four noise draws of one component.
pub fn associativity_defect_expected(q: f64, p: f64) -> Result<f64> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    let weight = |bit: u32, pr: f64| if bit == 1 { pr } else { 1.0 - pr };
    let add = |a: u32, b: u32, noise: u32| if a == b { a } else { noise };
    let mut total = 0.0;
    for case in 0u32..128 {
        let bit = |i: u32| case >> i & 1;
        let (x, y, z) = (bit(0), bit(1), bit(2));
        let noise = [bit(3), bit(4), bit(5), bit(6)];
        let left = add(add(x, y, noise[0]), z, noise[1]);
        let right = add(x, add(y, z, noise[2]), noise[3]);
        if left != right {
            total += weight(x, q)
                * weight(y, q)
                * weight(z, q)
                * noise.iter().map(|&n| weight(n, p)).product::<f64>();
        }
    }
    Ok(total)
}

/// `E d(y, L_t)` for `L_0 = x`, `L_t = L_{t-1} ⊕p y`, independent q-states.
///
/// A mismatch where `y = 1` is repaired with probability `p` per step, one
/// where `y = 0` with probability `1-p`; repaired components stay repaired.
pub fn convergence_distance(q: f64, p: f64, t: usize) -> Result<f64> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    let t = t as i32;
    Ok(q * (1.0 - q) * ((1.0 - p).powi(t) + p.powi(t)))
}

/// Least-squares slope of `ln(values[t])` against `t`, returned as a per-step
/// ratio. Non-positive entries are skipped.
pub fn fitted_decay_rate(values: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > 0.0)
        .map(|(t, &v)| (t as f64, v.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some((sxy / sxx).exp())
}

/// Which fold of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
pub enum Fold {
    /// `((η ⊕ a) ⊕ b) ⊕ ...`
    L,
    /// `η ⊕ (a ⊕ (b ⊕ ...))`
    R,
}

/// Expected `d(item, B)` where `item` (activity `q`) is bundled with an
/// independent partner of activity `partner`, after which the bundle is
/// bundled with independent summands of the given activities.
pub fn tracked_item_distance(q: f64, partner: f64, p: f64, later: &[f64]) -> f64 {
    // joint[a][b]: item bit a, bundle bit b.
    let mut joint = [[0.0f64; 2]; 2];
    for (a, pa) in [(0, 1.0 - q), (1, q)] {
        for (b, pb) in [(0, 1.0 - partner), (1, partner)] {
            let mass = pa * pb;
            if a == b {
                joint[a][b] += mass;
            } else {
                joint[a][1] += mass * p;
                joint[a][0] += mass * (1.0 - p);
            }
        }
    }
    for &s in later {
        let stay_on = s + (1.0 - s) * p;
        let turn_on = s * p;
        for row in joint.iter_mut() {
            let on = row[1] * stay_on + row[0] * turn_on;
            let total = row[0] + row[1];
            *row = [total - on, on];
        }
    }
    joint[0][1] + joint[1][0]
}

/// Expected distance from each list position to the L or R fold of `k`
/// independent q-states with an independent initial state of activity
/// `eta_activity`.
pub fn fold_profile(which: Fold, k: usize, q: f64, p: f64, eta_activity: f64) -> Result<Vec<f64>> {
    check_unit("q", q)?;
    check_unit("p", p)?;
    check_unit("eta_activity", eta_activity)?;
    if k == 0 {
        return Err(Error::Empty("list"));
    }
    let profile = match which {
        Fold::L => {
            // Activity of η ⊕ x_1 ⊕ ... ⊕ x_{j-1}, built up front to back.
            let mut pre = eta_activity;
            (0..k)
                .map(|j| {
                    let later = vec![q; k - 1 - j];
                    let d = tracked_item_distance(q, pre, p, &later);
                    pre = bundle_activity(pre, q, p);
                    d
                })
                .collect()
        }
        Fold::R => {
            // tails[m]: activity of the right fold of the last m items.
            let mut tails = vec![0.0; k + 1];
            tails[1] = q;
            for m in 2..=k {
                tails[m] = bundle_activity(q, tails[m - 1], p);
            }
            (0..k)
                .map(|j| {
                    let (partner, outer) = if k == 1 {
                        (eta_activity, 0)
                    } else if j == k - 1 {
                        (q, k - 2)
                    } else {
                        (tails[k - 1 - j], j)
                    };
                    let mut later = vec![q; outer];
                    if k > 1 {
                        later.push(eta_activity);
                    }
                    tracked_item_distance(q, partner, p, &later)
                })
                .collect()
        }
    };
    Ok(profile)
}

// C(60, 30) < 2^60, so every coefficient below is an exact integer.
const SMALL_N: u64 = 60;

fn small_binomial_cdf(k: u64, n: u64, prob: f64) -> f64 {
    let term =
        |coeff: u64, i: u64| coeff as f64 * prob.powi(i as i32) * (1.0 - prob).powi((n - i) as i32);
    let mut coeff: u64 = 1;
    let mut sum = term(coeff, 0);
    for i in 1..=k {
        coeff = coeff * (n - i + 1) / i;
        sum += term(coeff, i);
    }
    sum.min(1.0)
}

// Loader's saddle-point form: no large ln-gamma values cancel, so the
// relative error stays near machine precision for any n.
fn stirlerr(n: f64) -> f64 {
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;
    if n <= 15.0 {
        return ln_gamma(n + 1.0) - (n + 0.5) * n.ln() + n
            - 0.5 * (2.0 * std::f64::consts::PI).ln();
    }
    let nn = n * n;
    if n > 500.0 {
        return (S0 - S1 / nn) / n;
    }
    if n > 80.0 {
        return (S0 - (S1 - S2 / nn) / nn) / n;
    }
    if n > 35.0 {
        return (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / n;
    }
    (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n
}

// x ln(x/m) + m - x without cancellation near x = m.
fn bd0(x: f64, m: f64) -> f64 {
    if (x - m).abs() < 0.1 * (x + m) {
        let v = (x - m) / (x + m);
        let mut s = (x - m) * v;
        let mut ej = 2.0 * x * v;
        let v2 = v * v;
        for j in 1..1000 {
            ej *= v2;
            let next = s + ej / (2 * j + 1) as f64;
            if next == s {
                return next;
            }
            s = next;
        }
        return s;
    }
    x * (x / m).ln() + m - x
}

fn ln_binomial_pmf(k: u64, n: u64, prob: f64) -> f64 {
    let (kf, nf) = (k as f64, n as f64);
    if k == 0 {
        return nf * (-prob).ln_1p();
    }
    if k == n {
        return nf * prob.ln();
    }
    let rest = nf - kf;
    stirlerr(nf) - stirlerr(kf) - stirlerr(rest) - bd0(kf, nf * prob) - bd0(rest, nf * (1.0 - prob))
        + 0.5 * (nf / (2.0 * std::f64::consts::PI * kf * rest)).ln()
}

/// `P[Binomial(n, prob) <= k]`.
///
/// The probability mass at `k` is evaluated with Loader's saddle-point
/// expansion, then the shorter
/// tail is summed outward from `k` with the ratio recurrence until terms fall
/// below double precision. For `k` below the mean the lower tail is the
/// result; otherwise the result is one minus the upper tail. Up to `n = 60`
/// the terms are summed directly with exact integer coefficients.
pub fn binomial_cdf(k: u64, n: u64, prob: f64) -> Result<f64> {
    check_unit("prob", prob)?;
    if k > n {
        return Err(Error::OutOfRange {
            name: "k",
            value: k as f64,
            range: "[0,n]",
        });
    }
    if k == n || prob == 0.0 {
        return Ok(1.0);
    }
    if prob == 1.0 {
        return Ok(0.0);
    }
    if n <= SMALL_N {
        return Ok(small_binomial_cdf(k, n, prob));
    }
    let nf = n as f64;
    let odds = prob / (1.0 - prob);
    let ln_pmf = |i: u64| ln_binomial_pmf(i, n, prob);
    if (k as f64) < nf * prob {
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut i = k;
        while i > 0 {
            term *= i as f64 / ((n - i + 1) as f64 * odds);
            sum += term;
            if term < sum * 1e-17 {
                break;
            }
            i -= 1;
        }
        Ok((ln_pmf(k) + sum.ln()).exp().min(1.0))
    } else {
        let start = k + 1;
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut i = start;
        while i < n {
            term *= (n - i) as f64 / ((i + 1) as f64) * odds;
            sum += term;
            if term < sum * 1e-17 {
                break;
            }
            i += 1;
        }
        let upper = (ln_pmf(start) + sum.ln()).exp();
        Ok((1.0 - upper).clamp(0.0, 1.0))
    }
}

/// `P[Binomial(n, prob) = k]`.
pub fn binomial_pmf(k: u64, n: u64, prob: f64) -> Result<f64> {
    let upper = binomial_cdf(k, n, prob)?;
    if k == 0 {
        return Ok(upper);
    }
    // Differencing loses precision in the bulk; fine for the small-k use.
    Ok(upper - binomial_cdf(k - 1, n, prob)?)
}

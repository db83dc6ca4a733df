//! Monte Carlo check of the algebraic property list over a (p, q) grid.
//!
//! Property ids:
//!
//! | id | statistic | oracle | `paper_value` |
//! |----|-----------|--------|---------------|
//! | 1 | fraction of trials with `x ⊕ x = x` and `x * x = 1` bit-exact | 1 | 1 |
//! | 2 | mean `d(x*(y⊕z), x*y ⊕ x*z)` | case enumeration | NaN |
//! | 3 | 1 if `D(x, x⊕y) < D(x,y) < D(x, x*y)` and likewise for `d` (means), `q < 1/2` only | 1 | 1 |
//! | 4 | mean `d(x⊕y, x*y)`, `p <= 1/2` only | `(1-q)^2 + 2pq(1-q)` | bound `2p(1-q)` |
//! | 5 | mean associativity defect | case enumeration | 0 at `p ∈ {0,1}` |
//! | 6 | mean `d(x, x⊕y)` | `q(1-q)` | `2q(1-q)(1-p)` |

use super::config::ExperimentConfig;
use super::runners::root_stream;
use super::table::{TableMetadata, TrialTable};
use crate::error::Result;
use crate::hv::{bind, bundle, global_distance_from_count, hamming, hamming_count, State};
use crate::stats::{column_summaries, Summary};
use crate::theory::{
    associativity_defect_expected, distributivity_expected, expected_bundle_distance,
    separation_bound, separation_expected,
};
use crate::trials::run_trials;

pub const PROPERTY_COLUMNS: &[&str] = &[
    "property_id",
    "p",
    "q",
    "statistic",
    "stderr",
    "oracle_value",
    "paper_value",
    "pass",
];

/// Match threshold in standard errors.
pub const MATCH_SIGMA: f64 = 3.0;
/// Separation threshold in standard errors.
pub const SEPARATION_SIGMA: f64 = 5.0;

// Per-trial measurement slots.
const IDEMPOTENT: usize = 0;
const DISTRIB: usize = 1;
const D_BUNDLE: usize = 2;
const D_PAIR: usize = 3;
const D_BIND: usize = 4;
const G_BUNDLE: usize = 5;
const G_PAIR: usize = 6;
const G_BIND: usize = 7;
const SEPARATION: usize = 8;
const ASSOC: usize = 9;
const SLOTS: usize = 10;

fn measure(n: usize, q: f64, p: f64, s: &mut crate::RandomStream) -> Result<Vec<f64>> {
    let x = State::random(n, q, s)?;
    let y = State::random(n, q, s)?;
    let z = State::random(n, q, s)?;
    let mut out = vec![0.0; SLOTS];

    let idem = bundle(&x, &x, p, s)? == x && bind(&x, &x)? == State::ones(n);
    out[IDEMPOTENT] = if idem { 1.0 } else { 0.0 };

    let lhs = bind(&x, &bundle(&y, &z, p, s)?)?;
    let rhs = bundle(&bind(&x, &y)?, &bind(&x, &z)?, p, s)?;
    out[DISTRIB] = hamming(&lhs, &rhs)?;

    let sum = bundle(&x, &y, p, s)?;
    let prod = bind(&x, &y)?;
    let counts = [
        hamming_count(&x, &sum)?,
        hamming_count(&x, &y)?,
        hamming_count(&x, &prod)?,
    ];
    for (slot, c) in [D_BUNDLE, D_PAIR, D_BIND].into_iter().zip(counts) {
        out[slot] = c as f64 / n as f64;
    }
    for (slot, c) in [G_BUNDLE, G_PAIR, G_BIND].into_iter().zip(counts) {
        out[slot] = global_distance_from_count(c, n, q)?;
    }
    out[SEPARATION] = hamming(&sum, &prod)?;

    let left = bundle(&bundle(&x, &y, p, s)?, &z, p, s)?;
    let right = bundle(&x, &bundle(&y, &z, p, s)?, p, s)?;
    out[ASSOC] = hamming(&left, &right)?;
    Ok(out)
}

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn strictly_ordered(a: &Summary, b: &Summary, c: &Summary) -> bool {
    a.mean < b.mean && b.mean < c.mean
}

pub(super) fn run_properties(config: &ExperimentConfig, meta: TableMetadata) -> Result<TrialTable> {
    let mut table = TrialTable::new(PROPERTY_COLUMNS, meta);
    let n = config.params.n_dims;
    let root = root_stream(config);
    for &q in &config.q_grid {
        for &p in &config.p_grid {
            let stream = root.fork(format_args!("q={q}/p={p}"));
            let runs = run_trials(&stream, config.trials, config.jobs, |_, s| {
                measure(n, q, p, s)
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
            let s = column_summaries(&runs);

            let idem = &s[IDEMPOTENT];
            table.push(vec![
                1.0,
                p,
                q,
                idem.mean,
                idem.stderr,
                1.0,
                1.0,
                flag(idem.mean == 1.0),
            ])?;

            let dist = &s[DISTRIB];
            let oracle = distributivity_expected(q, p)?;
            let pass = dist.z_against(oracle).abs() < MATCH_SIGMA;
            table.push(vec![
                2.0,
                p,
                q,
                dist.mean,
                dist.stderr,
                oracle,
                f64::NAN,
                flag(pass),
            ])?;

            if q < 0.5 {
                let ordered = strictly_ordered(&s[D_BUNDLE], &s[D_PAIR], &s[D_BIND])
                    && strictly_ordered(&s[G_BUNDLE], &s[G_PAIR], &s[G_BIND]);
                table.push(vec![3.0, p, q, flag(ordered), 0.0, 1.0, 1.0, flag(ordered)])?;
            }

            if p <= 0.5 {
                let sep = &s[SEPARATION];
                let oracle = separation_expected(q, p)?;
                let bound = separation_bound(q, p)?;
                let pass = sep.mean >= bound - MATCH_SIGMA * sep.stderr
                    && sep.z_against(oracle).abs() < MATCH_SIGMA;
                table.push(vec![
                    4.0,
                    p,
                    q,
                    sep.mean,
                    sep.stderr,
                    oracle,
                    bound,
                    flag(pass),
                ])?;
            }

            let assoc = &s[ASSOC];
            let oracle = associativity_defect_expected(q, p)?;
            let boundary = p == 0.0 || p == 1.0;
            let pass = if boundary {
                assoc.mean == 0.0
            } else {
                assoc.z_against(0.0) >= SEPARATION_SIGMA
                    && assoc.z_against(oracle).abs() < MATCH_SIGMA
            };
            let paper = if boundary { 0.0 } else { f64::NAN };
            table.push(vec![
                5.0,
                p,
                q,
                assoc.mean,
                assoc.stderr,
                oracle,
                paper,
                flag(pass),
            ])?;

            let contraction = &s[D_BUNDLE];
            let predicted = expected_bundle_distance(q, p)?;
            let pass = contraction.z_against(predicted.consistent).abs() < MATCH_SIGMA;
            table.push(vec![
                6.0,
                p,
                q,
                contraction.mean,
                contraction.stderr,
                predicted.consistent,
                predicted.paper_variant,
                flag(pass),
            ])?;
        }
    }
    Ok(table)
}

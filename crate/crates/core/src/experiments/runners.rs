//! One runner per experiment kind. Each returns rows in a fixed column order;
//! empirical columns sit next to their closed-form counterpart wherever one
//! exists.

use super::config::ExperimentConfig;
use super::table::{TableMetadata, TrialTable};
use crate::error::Result;
use crate::hv::{activity, bundle, RandomStream, State};
use crate::sequence::{
    converge, converge_right, fold_profiles, recall_scores, similarity_profile, FilterState,
    ListSetup, SimilarPair,
};
use crate::stats::column_summaries;
use crate::theory::{
    activity_recurrence, convergence_distance, fitted_decay_rate, fold_profile, Fold,
};
use crate::trials::run_trials;

pub const ACTIVITY_COLUMNS: &[&str] = &["p", "k", "empirical_Q", "theory_Q", "abs_err"];
pub const GRADIENT_COLUMNS: &[&str] = &[
    "position",
    "mean_d_L",
    "mean_d_R",
    "mean_D_L",
    "mean_D_R",
    "stderr_L",
    "stderr_R",
    "theory_d_L",
    "theory_d_R",
];
pub const SIMILARITY_COLUMNS: &[&str] = &[
    "position",
    "baseline_mean",
    "modified_mean",
    "z_score",
    "baseline_stderr",
    "modified_stderr",
];
pub const CONVERGENCE_COLUMNS: &[&str] = &[
    "p",
    "m",
    "mean_d",
    "stderr",
    "theory_d",
    "fitted_rate",
    "theory_rate",
    "mean_d_R",
    "stderr_R",
];
pub const SERIAL_POSITION_COLUMNS: &[&str] = &["position", "recall_score", "stderr"];
pub const FILTER_COLUMNS: &[&str] = &[
    "step",
    "repeated",
    "mean_novelty",
    "stderr_novelty",
    "mean_recency",
    "stderr_recency",
];

pub(super) fn root_stream(config: &ExperimentConfig) -> RandomStream {
    RandomStream::new(config.params.seed, config.kind.to_string())
}

fn list_setup(config: &ExperimentConfig) -> ListSetup {
    ListSetup::new(config.params, config.k).with_eta(config.eta)
}

pub(super) fn run_activity(config: &ExperimentConfig, meta: TableMetadata) -> Result<TrialTable> {
    let mut table = TrialTable::new(ACTIVITY_COLUMNS, meta);
    let (n, q, k_max) = (config.params.n_dims, config.params.q, config.k);
    let root = root_stream(config);
    for &p in &config.p_grid {
        let runs = run_trials(
            &root.fork(format_args!("p={p}")),
            config.trials,
            config.jobs,
            |_, s| {
                let mut acts = Vec::with_capacity(k_max);
                let mut acc = State::random(n, q, s)?;
                acts.push(activity(&acc));
                for _ in 1..k_max {
                    acc = bundle(&acc, &State::random(n, q, s)?, p, s)?;
                    acts.push(activity(&acc));
                }
                Ok::<_, crate::Error>(acts)
            },
        )
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let theory = activity_recurrence(q, p, k_max)?;
        for (k, (s, t)) in column_summaries(&runs).iter().zip(&theory).enumerate() {
            table.push(vec![p, (k + 1) as f64, s.mean, *t, (s.mean - t).abs()])?;
        }
    }
    Ok(table)
}

pub(super) fn run_gradient(config: &ExperimentConfig, meta: TableMetadata) -> Result<TrialTable> {
    let mut table = TrialTable::new(GRADIENT_COLUMNS, meta);
    let setup = list_setup(config);
    let (l, r) = fold_profiles(
        &setup,
        config.trials,
        config.ref_q(),
        &root_stream(config),
        config.jobs,
    )?;
    let (q, p) = (config.params.q, config.params.p);
    let theory_l = fold_profile(Fold::L, config.k, q, p, setup.eta_activity())?;
    let theory_r = fold_profile(Fold::R, config.k, q, p, setup.eta_activity())?;
    for i in 0..config.k {
        table.push(vec![
            (i + 1) as f64,
            l.local[i].mean,
            r.local[i].mean,
            l.global[i].mean,
            r.global[i].mean,
            l.local[i].stderr,
            r.local[i].stderr,
            theory_l[i],
            theory_r[i],
        ])?;
    }
    Ok(table)
}

pub(super) fn run_similarity(config: &ExperimentConfig, meta: TableMetadata) -> Result<TrialTable> {
    let mut table = TrialTable::new(SIMILARITY_COLUMNS, meta);
    let pair = SimilarPair {
        replaced: config.similar_pair.0,
        source: config.similar_pair.1,
        delta: config.delta,
        mode: config.similarity_mode,
    };
    let sim = similarity_profile(
        &list_setup(config),
        pair,
        config.trials,
        config.ref_q(),
        &root_stream(config),
        config.jobs,
    )?;
    for i in 0..config.k {
        table.push(vec![
            (i + 1) as f64,
            sim.baseline.local[i].mean,
            sim.modified.local[i].mean,
            sim.z_scores[i],
            sim.baseline.local[i].stderr,
            sim.modified.local[i].stderr,
        ])?;
    }
    Ok(table)
}

pub(super) fn run_convergence(
    config: &ExperimentConfig,
    meta: TableMetadata,
) -> Result<TrialTable> {
    let mut table = TrialTable::new(CONVERGENCE_COLUMNS, meta);
    let (n, q, m) = (config.params.n_dims, config.params.q, config.m);
    let root = root_stream(config);
    for &p in &config.p_grid {
        let runs = run_trials(
            &root.fork(format_args!("p={p}")),
            config.trials,
            config.jobs,
            |_, s| {
                let x = State::random(n, q, s)?;
                let y = State::random(n, q, s)?;
                let left = converge(&x, &y, p, m, s)?;
                let right = converge_right(&x, &y, p, m, s)?;
                Ok::<_, crate::Error>((left, right))
            },
        )
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let (left, right): (Vec<_>, Vec<_>) = runs.into_iter().unzip();
        let left = column_summaries(&left);
        let right = column_summaries(&right);
        let theory: Vec<f64> = (1..=m)
            .map(|t| convergence_distance(q, p, t))
            .collect::<Result<_>>()?;
        let means: Vec<f64> = left.iter().map(|s| s.mean).collect();
        let fitted = fitted_decay_rate(&means).unwrap_or(f64::NAN);
        let theory_rate = fitted_decay_rate(&theory).unwrap_or(f64::NAN);
        for t in 0..m {
            table.push(vec![
                p,
                (t + 1) as f64,
                left[t].mean,
                left[t].stderr,
                theory[t],
                fitted,
                theory_rate,
                right[t].mean,
                right[t].stderr,
            ])?;
        }
    }
    Ok(table)
}

pub(super) fn run_serial_position(
    config: &ExperimentConfig,
    meta: TableMetadata,
) -> Result<TrialTable> {
    let mut table = TrialTable::new(SERIAL_POSITION_COLUMNS, meta);
    let scores = recall_scores(
        &list_setup(config),
        config.distractors,
        config.trials,
        &root_stream(config),
        config.jobs,
    )?;
    for (i, s) in scores.iter().enumerate() {
        table.push(vec![(i + 1) as f64, s.mean, s.stderr])?;
    }
    Ok(table)
}

/// Whether step `t` (0-based) of the demo stream repeats the item seen two
/// steps earlier.
pub fn filter_demo_repeats(t: usize) -> bool {
    t % 4 == 3
}

pub(super) fn run_filter_demo(
    config: &ExperimentConfig,
    meta: TableMetadata,
) -> Result<TrialTable> {
    let mut table = TrialTable::new(FILTER_COLUMNS, meta);
    let (n, q) = (config.params.n_dims, config.params.q);
    let setup = list_setup(config);
    let runs = run_trials(&root_stream(config), config.trials, config.jobs, |_, s| {
        let eta = setup.draw_eta(s)?;
        let mut filter = FilterState::new(eta, config.window, config.params)?;
        let mut seen: Vec<State> = Vec::with_capacity(config.k);
        let mut novelty = Vec::with_capacity(config.k);
        let mut recency = Vec::with_capacity(config.k);
        for t in 0..config.k {
            let x = if filter_demo_repeats(t) {
                seen[t - 2].clone()
            } else {
                State::random(n, q, s)?
            };
            let reading = filter.step(&x, s)?;
            novelty.push(reading.novelty);
            recency.push(reading.recency);
            seen.push(x);
        }
        Ok::<_, crate::Error>((novelty, recency))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let (novelty, recency): (Vec<_>, Vec<_>) = runs.into_iter().unzip();
    let novelty = column_summaries(&novelty);
    let recency = column_summaries(&recency);
    for t in 0..config.k {
        table.push(vec![
            t as f64,
            if filter_demo_repeats(t) { 1.0 } else { 0.0 },
            novelty[t].mean,
            novelty[t].stderr,
            recency[t].mean,
            recency[t].stderr,
        ])?;
    }
    Ok(table)
}

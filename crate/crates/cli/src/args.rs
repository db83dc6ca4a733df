//! Command-line grammar and the merge of flags over a JSON config file.

// Doc comments below double as clap help text, where `[0,1]` is not a link.
#![allow(rustdoc::broken_intra_doc_links)]

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nabundle::experiments::{ExperimentConfig, ExperimentKind};
use nabundle::hv::{SimilarityMode, SpaceParams};
use nabundle::sequence::{EtaMode, DEFAULT_WINDOW};
use serde::Deserialize;

use crate::CliError;

pub const JOBS_ENV: &str = "NABUNDLE_JOBS";

#[derive(Debug, Parser)]
#[command(
    name = "nabundle",
    version,
    about = "Monte Carlo experiments and a desk calculator for non-associative bundling of binary states",
    subcommand_required = true,
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean activity of a left fold of k q-states against the recurrence.
    Activity(ExperimentArgs),
    /// Per-position distances of list items to the L and R bundles.
    Gradient(ExperimentArgs),
    /// L profile of a baseline list against one with a similar item injected.
    Similarity(ExperimentArgs),
    /// Distance of y from L_m and R_m while x is driven towards y.
    Convergence(ExperimentArgs),
    /// Recall score per list position by nearest-neighbour cleanup.
    SerialPosition(ExperimentArgs),
    /// Monte Carlo check of the algebraic properties over a (p, q) grid.
    Properties(ExperimentArgs),
    /// Novelty and recency readings of the online stream filter.
    Filter(ExperimentArgs),
    /// Apply one operation to literal bit strings, e.g. `op bind 0110 0101`.
    Op(OpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Flip,
    Swap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EtaArg {
    Random,
    Zero,
}

/// Flags shared by every experiment. All are optional on the command line so
/// that a `--config` file can supply them; flags win on conflict.
#[derive(Debug, Default, Args)]
pub struct ExperimentArgs {
    /// Flat JSON object keyed by flag name without the leading dashes, e.g. {"p-grid": [0.1, 0.2]}
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Seed for all randomness (required here or in the config file)
    #[arg(long)]
    pub seed: Option<u64>,
    /// Dimension N [default: 10000]
    #[arg(long)]
    pub n: Option<usize>,
    /// Mean activity of item states, in (0,1) [default: 0.5]
    #[arg(long, value_parser = probability)]
    pub q: Option<f64>,
    /// Bundling noise p, in [0,1] [default: 0.5]
    #[arg(long, value_parser = probability)]
    pub p: Option<f64>,
    /// Comma-separated p values for activity, convergence and properties [default: --p]
    #[arg(long, value_delimiter = ',', value_parser = probability)]
    pub p_grid: Option<Vec<f64>>,
    /// Comma-separated q values for properties [default: --q]
    #[arg(long, value_delimiter = ',', value_parser = probability)]
    pub q_grid: Option<Vec<f64>>,
    /// List length, or number of steps for filter [default: 7]
    #[arg(long)]
    pub k: Option<usize>,
    /// Number of independent trials [default: 100]
    #[arg(long)]
    pub trials: Option<usize>,
    /// Convergence iterations [default: 10]
    #[arg(long)]
    pub m: Option<usize>,
    /// Distance between the similar item and its source, in [0,1] [default: 0.1]
    #[arg(long, value_parser = probability)]
    pub delta: Option<f64>,
    /// How the similar item is produced [default: flip]
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Similarity pair "i,j": position i is replaced by a state similar to item j [default: 4,6]
    #[arg(long, value_parser = pair)]
    pub pair: Option<(usize, usize)>,
    /// Recency window of the filter [default: 8]
    #[arg(long)]
    pub window: Option<usize>,
    /// Extra random entries in the cleanup memory [default: 0]
    #[arg(long)]
    pub distractors: Option<usize>,
    /// Initial state of every list [default: random]
    #[arg(long, value_enum)]
    pub eta: Option<EtaArg>,
    /// Reference activity for the global distance D [default: --q]
    #[arg(long, value_parser = probability)]
    pub ref_q: Option<f64>,
    /// Worker threads; falls back to $NABUNDLE_JOBS [default: 1]
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write CSV here instead of standard output
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Bind,
    Bundle,
    Hamming,
    Jaccard,
    /// Global distance D
    Global,
    /// Fraction of ones in the first operand
    Activity,
}

#[derive(Debug, Args)]
pub struct OpArgs {
    #[arg(value_enum)]
    pub op: OpKind,
    /// First operand as a 0/1 string, bit 0 first
    pub a: String,
    /// Second operand (not used by `activity`)
    pub b: Option<String>,
    /// Bundling noise p for `bundle`, in [0,1]
    #[arg(long, value_parser = probability, default_value_t = 0.5)]
    pub p: f64,
    /// Reference activity for `global`, in (0,1)
    #[arg(long, value_parser = probability, default_value_t = 0.5)]
    pub ref_q: f64,
    /// Seed for the bundling noise
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn probability(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a number"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside the range [0,1]"))
    }
}

fn pair(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [i, j] => Ok((
            i.parse().map_err(|_| format!("'{i}' is not a position"))?,
            j.parse().map_err(|_| format!("'{j}' is not a position"))?,
        )),
        _ => Err(format!("expected two positions 'i,j', got '{s}'")),
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    seed: Option<u64>,
    n: Option<usize>,
    q: Option<f64>,
    p: Option<f64>,
    p_grid: Option<Vec<f64>>,
    q_grid: Option<Vec<f64>>,
    k: Option<usize>,
    trials: Option<usize>,
    m: Option<usize>,
    delta: Option<f64>,
    mode: Option<ModeArg>,
    pair: Option<(usize, usize)>,
    window: Option<usize>,
    distractors: Option<usize>,
    eta: Option<EtaArg>,
    ref_q: Option<f64>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
}

fn read_config(path: &PathBuf) -> Result<FileConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Runtime(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))
}

fn env_jobs() -> Result<Option<usize>, CliError> {
    match std::env::var(JOBS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{JOBS_ENV}='{v}' is not a positive integer"))),
        Err(_) => Ok(None),
    }
}

impl ExperimentArgs {
    /// Resolves flags over the config file over the environment over defaults.
    pub fn resolve(self, kind: ExperimentKind) -> Result<ExperimentConfig, CliError> {
        let file = match &self.config {
            Some(path) => read_config(path)?,
            None => FileConfig::default(),
        };
        macro_rules! pick {
            ($field:ident) => {
                self.$field.or(file.$field)
            };
        }
        let seed = pick!(seed).ok_or_else(|| {
            CliError::Usage("--seed is required (on the command line or in the config file)".into())
        })?;
        let defaults = SpaceParams::default();
        let params = SpaceParams::new(
            pick!(n).unwrap_or(defaults.n_dims),
            pick!(q).unwrap_or(defaults.q),
            pick!(p).unwrap_or(defaults.p),
            seed,
        )
        .map_err(|e| CliError::Usage(e.to_string()))?;

        let mut c = ExperimentConfig::new(kind, params);
        if let Some(v) = pick!(p_grid) {
            c.p_grid = v;
        }
        if let Some(v) = pick!(q_grid) {
            c.q_grid = v;
        }
        c.k = pick!(k).unwrap_or(c.k);
        c.trials = pick!(trials).unwrap_or(c.trials);
        c.m = pick!(m).unwrap_or(c.m);
        c.delta = pick!(delta).unwrap_or(c.delta);
        if let Some(mode) = pick!(mode) {
            c.similarity_mode = match mode {
                ModeArg::Flip => SimilarityMode::Flip,
                ModeArg::Swap => SimilarityMode::Swap,
            };
        }
        c.similar_pair = pick!(pair).unwrap_or(c.similar_pair);
        c.window = pick!(window).unwrap_or(DEFAULT_WINDOW);
        c.distractors = pick!(distractors).unwrap_or(c.distractors);
        if let Some(eta) = pick!(eta) {
            c.eta = match eta {
                EtaArg::Random => EtaMode::Random,
                EtaArg::Zero => EtaMode::Zero,
            };
        }
        c.ref_q = pick!(ref_q);
        c.jobs = match pick!(jobs) {
            Some(j) => j,
            None => env_jobs()?.unwrap_or(1),
        };
        c.out = pick!(out);
        c.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(c)
    }
}

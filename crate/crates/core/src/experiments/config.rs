use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{check_open_unit, check_unit, Error, Result};
use crate::hv::{SimilarityMode, SpaceParams};
use crate::sequence::{EtaMode, DEFAULT_WINDOW};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Activity,
    Gradient,
    Similarity,
    Convergence,
    SerialPosition,
    Properties,
    FilterDemo,
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::Activity => "activity",
            Self::Gradient => "gradient",
            Self::Similarity => "similarity",
            Self::Convergence => "convergence",
            Self::SerialPosition => "serial_position",
            Self::Properties => "properties",
            Self::FilterDemo => "filter_demo",
        };
        f.write_str(name)
    }
}

/// Declarative description of one Monte Carlo run.
///
/// Not every field applies to every kind: `p_grid` drives activity,
/// convergence and properties; `q_grid` only properties; the list-based
/// kinds use `params.p` and `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub params: SpaceParams,
    /// List length, maximum summand count (activity) or stream length (filter).
    pub k: usize,
    pub trials: usize,
    pub p_grid: Vec<f64>,
    pub q_grid: Vec<f64>,
    /// Convergence iterations.
    pub m: usize,
    /// Similarity level for the similarity experiment.
    pub delta: f64,
    pub similarity_mode: SimilarityMode,
    /// 1-based (replaced, source) positions for the similarity experiment.
    pub similar_pair: (usize, usize),
    pub window: usize,
    /// Extra random entries in the cleanup memory for serial-position recall.
    pub distractors: usize,
    pub eta: EtaMode,
    /// Reference activity for global distances; defaults to `params.q`.
    pub ref_q: Option<f64>,
    pub jobs: usize,
    /// Output destination; not part of the serialized echo.
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(kind: ExperimentKind, params: SpaceParams) -> Self {
        Self {
            kind,
            params,
            k: 7,
            trials: 100,
            p_grid: vec![params.p],
            q_grid: vec![params.q],
            m: 10,
            delta: 0.1,
            similarity_mode: SimilarityMode::Flip,
            similar_pair: (4, 6),
            window: DEFAULT_WINDOW,
            distractors: 0,
            eta: EtaMode::Random,
            ref_q: None,
            jobs: 1,
            out: None,
        }
    }

    pub fn ref_q(&self) -> f64 {
        self.ref_q.unwrap_or(self.params.q)
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        let positive = |name: &'static str, v: usize| {
            if v == 0 {
                Err(Error::Config(format!("{name} must be at least 1")))
            } else {
                Ok(())
            }
        };
        positive("trials", self.trials)?;
        positive("k", self.k)?;
        positive("m", self.m)?;
        positive("window", self.window)?;
        positive("jobs", self.jobs)?;
        if self.p_grid.is_empty() {
            return Err(Error::Config("p_grid must not be empty".into()));
        }
        if self.q_grid.is_empty() {
            return Err(Error::Config("q_grid must not be empty".into()));
        }
        for &p in &self.p_grid {
            check_unit("p", p)?;
        }
        for &q in &self.q_grid {
            check_open_unit("q", q)?;
        }
        check_unit("delta", self.delta)?;
        if let Some(r) = self.ref_q {
            check_open_unit("ref_q", r)?;
        }
        if self.kind == ExperimentKind::Similarity {
            let (a, b) = self.similar_pair;
            if a == b || !(1..=self.k).contains(&a) || !(1..=self.k).contains(&b) {
                return Err(Error::Config(format!(
                    "similar pair ({a}, {b}) must be two distinct positions in 1..={}",
                    self.k
                )));
            }
        }
        Ok(())
    }
}

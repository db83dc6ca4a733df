//! Declarative Monte Carlo experiments producing [`TrialTable`]s.
//!
//! Every run is a pure function of its [`ExperimentConfig`]: the root stream
//! is `(seed, kind)`, grid points and trials fork from it by label, and rows
//! come out in a fixed order regardless of `jobs`.

mod config;
mod properties;
mod runners;
mod table;

use std::time::Instant;

pub use config::{ExperimentConfig, ExperimentKind};
pub use properties::{MATCH_SIGMA, PROPERTY_COLUMNS, SEPARATION_SIGMA};
pub use runners::{
    filter_demo_repeats, ACTIVITY_COLUMNS, CONVERGENCE_COLUMNS, FILTER_COLUMNS, GRADIENT_COLUMNS,
    SERIAL_POSITION_COLUMNS, SIMILARITY_COLUMNS,
};
pub use table::{TableMetadata, TrialTable};

use crate::error::{Error, Result};

/// Validates `config`, dispatches on its kind and stamps the metadata.
pub fn run(config: &ExperimentConfig) -> Result<TrialTable> {
    config.validate()?;
    let started = Instant::now();
    let meta = TableMetadata {
        seed: config.params.seed,
        config: serde_json::to_string(config).map_err(|e| Error::Config(e.to_string()))?,
        wall_time_s: 0.0,
    };
    let mut table = match config.kind {
        ExperimentKind::Activity => runners::run_activity(config, meta),
        ExperimentKind::Gradient => runners::run_gradient(config, meta),
        ExperimentKind::Similarity => runners::run_similarity(config, meta),
        ExperimentKind::Convergence => runners::run_convergence(config, meta),
        ExperimentKind::SerialPosition => runners::run_serial_position(config, meta),
        ExperimentKind::Properties => properties::run_properties(config, meta),
        ExperimentKind::FilterDemo => runners::run_filter_demo(config, meta),
    }?;
    table.metadata.wall_time_s = started.elapsed().as_secs_f64();
    Ok(table)
}

macro_rules! runner {
    ($name:ident, $kind:ident) => {
        #[doc = concat!("Runs `config` as a `", stringify!($kind), "` experiment.")]
        pub fn $name(config: &ExperimentConfig) -> Result<TrialTable> {
            run(&ExperimentConfig {
                kind: ExperimentKind::$kind,
                ..config.clone()
            })
        }
    };
}

runner!(run_activity, Activity);
runner!(run_gradient, Gradient);
runner!(run_similarity, Similarity);
runner!(run_convergence, Convergence);
runner!(run_serial_position, SerialPosition);
runner!(run_properties, Properties);
runner!(run_filter_demo, FilterDemo);

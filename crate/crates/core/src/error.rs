use thiserror::Error;

/// Errors raised by the algebra, the theory oracles and the experiment runners.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parameter `{name}` = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error(
        "swap of {requested} bit pairs is infeasible: at most {bound} (min of ones and zeros)"
    )]
    InfeasibleSwap { requested: usize, bound: usize },

    #[error("activity fixed point is undefined: 1 - p(1-q) - q(1-p) = {0}")]
    DegenerateLimit(f64),

    #[error("{0} must not be empty")]
    Empty(&'static str),

    #[error("invalid bit string: {0}")]
    BitString(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            range: "[0,1]",
        })
    }
}

pub(crate) fn check_open_unit(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            range: "(0,1)",
        })
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{check_open_unit, check_unit, Error, Result};

/// Parameters of a state space: dimension, base activity, bundling noise and
/// master seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaceParams {
    pub n_dims: usize,
    pub q: f64,
    pub p: f64,
    pub seed: u64,
}

impl SpaceParams {
    pub fn new(n_dims: usize, q: f64, p: f64, seed: u64) -> Result<Self> {
        let params = Self { n_dims, q, p, seed };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_dims == 0 {
            return Err(Error::OutOfRange {
                name: "n_dims",
                value: 0.0,
                range: "[1,inf)",
            });
        }
        check_open_unit("q", self.q)?;
        check_unit("p", self.p)
    }

    /// Whether `p` and `q` sit in the sparse operating range `0 < p,q <= 1/2`.
    pub fn in_operating_range(&self) -> bool {
        self.p > 0.0 && self.p <= 0.5 && self.q > 0.0 && self.q <= 0.5
    }

    /// Human-readable warnings for valid parameters outside the operating range.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !(self.p > 0.0 && self.p <= 0.5) {
            out.push(format!(
                "p = {} is outside the sparse operating range (0, 1/2]",
                self.p
            ));
        }
        if self.q > 0.5 {
            out.push(format!(
                "q = {} is outside the sparse operating range (0, 1/2]",
                self.q
            ));
        }
        out
    }

    pub fn with_p(self, p: f64) -> Self {
        Self { p, ..self }
    }

    pub fn with_q(self, q: f64) -> Self {
        Self { q, ..self }
    }
}

impl Default for SpaceParams {
    fn default() -> Self {
        Self {
            n_dims: 10_000,
            q: 0.5,
            p: 0.5,
            seed: 0,
        }
    }
}

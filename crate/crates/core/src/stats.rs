//! Trial-level summary statistics.

use serde::Serialize;

/// Mean and standard error of a sample of trial-level values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator).
    pub std_dev: f64,
    /// `std_dev / sqrt(n)`.
    pub stderr: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        let n = values.len();
        if n == 0 {
            return Self {
                n,
                mean: f64::NAN,
                std_dev: f64::NAN,
                stderr: f64::NAN,
            };
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let std_dev = if n > 1 {
            let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
            (ss / (n - 1) as f64).sqrt()
        } else {
            0.0
        };
        Self {
            n,
            mean,
            std_dev,
            stderr: std_dev / (n as f64).sqrt(),
        }
    }

    /// `(mean - target) / stderr`. Zero error with a nonzero gap is infinite.
    pub fn z_against(&self, target: f64) -> f64 {
        z_score(self.mean - target, self.stderr)
    }
}

/// Gap over its standard error, with the degenerate zero-error cases made
/// explicit: a zero gap is 0, a nonzero gap is ±infinity.
pub fn z_score(gap: f64, stderr: f64) -> f64 {
    if stderr > 0.0 {
        gap / stderr
    } else if gap == 0.0 {
        0.0
    } else {
        gap.signum() * f64::INFINITY
    }
}

/// Z-score of the difference of two independent means.
pub fn z_difference(a: &Summary, b: &Summary) -> f64 {
    z_score(a.mean - b.mean, a.stderr.hypot(b.stderr))
}

/// Per-column summaries of equal-length trial vectors.
pub fn column_summaries(rows: &[Vec<f64>]) -> Vec<Summary> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| Summary::of(&rows.iter().map(|r| r[c]).collect::<Vec<_>>()))
        .collect()
}

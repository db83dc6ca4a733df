//! Online stream filter.
//!
//! The L fold extends one item at a time, so it is kept exactly. The R fold
//! needs every later item before the earliest one can be folded in, so it is
//! recomputed over a bounded window of the most recent inputs.

use std::collections::VecDeque;

use serde::Serialize;

use super::fold::right_bundle;
use crate::error::{Error, Result};
use crate::hv::{activity, bundle, global_distance, RandomStream, SpaceParams, State};

pub const DEFAULT_WINDOW: usize = 8;

#[derive(Debug, Clone)]
pub struct FilterState {
    online_left: State,
    eta: State,
    window: VecDeque<State>,
    capacity: usize,
    params: SpaceParams,
}

/// Scores of one input against the filter before it is absorbed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FilterReading {
    /// `D(x, L)` against the running L bundle before the update.
    pub novelty: f64,
    /// `D(x, R)` against the R fold of the window after the update.
    pub recency: f64,
}

impl FilterState {
    pub fn new(eta: State, window: usize, params: SpaceParams) -> Result<Self> {
        params.validate()?;
        if window == 0 {
            return Err(Error::Empty("filter window"));
        }
        if eta.n_dims() != params.n_dims {
            return Err(Error::DimensionMismatch {
                left: params.n_dims,
                right: eta.n_dims(),
            });
        }
        Ok(Self {
            online_left: eta.clone(),
            eta,
            window: VecDeque::with_capacity(window),
            capacity: window,
            params,
        })
    }

    pub fn online_left(&self) -> &State {
        &self.online_left
    }

    pub fn window(&self) -> impl Iterator<Item = &State> {
        self.window.iter()
    }

    pub fn window_len(&self) -> usize {
        self.window.len()
    }

    /// Reference activity for `D`: the running bundle's activity, kept one
    /// count away from 0 and N.
    fn ref_q(&self) -> f64 {
        let n = self.params.n_dims as f64;
        let lo = 1.0 / n;
        let hi = 1.0 - lo;
        if lo >= hi {
            return 0.5;
        }
        activity(&self.online_left).clamp(lo, hi)
    }

    pub fn step(&mut self, x: &State, stream: &mut RandomStream) -> Result<FilterReading> {
        let novelty = global_distance(x, &self.online_left, self.ref_q())?;
        self.online_left = bundle(&self.online_left, x, self.params.p, stream)?;
        if self.window.len() == self.capacity {
            self.window.pop_front();
        }
        self.window.push_back(x.clone());
        let items: Vec<State> = self.window.iter().cloned().collect();
        let right = right_bundle(&self.eta, &items, self.params.p, stream)?;
        let recency = global_distance(x, &right, self.ref_q())?;
        Ok(FilterReading { novelty, recency })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::Summary;
    use crate::theory::binomial_cdf;

    fn params(p: f64) -> SpaceParams {
        SpaceParams::new(10_000, 0.5, p, 17).unwrap()
    }

    #[test]
    fn first_item_equal_to_eta_has_minimal_novelty() {
        let mut s = RandomStream::new(17, "filter-first");
        let x = State::random(10_000, 0.5, &mut s).unwrap();
        let mut f = FilterState::new(x.clone(), DEFAULT_WINDOW, params(0.5)).unwrap();
        let r = f.step(&x, &mut s).unwrap();
        let ref_q = activity(&x);
        let pmf0 = binomial_cdf(0, 10_000, 2.0 * ref_q * (1.0 - ref_q)).unwrap();
        assert_eq!(r.novelty, pmf0);
        assert!(r.novelty < 1e-100);
    }

    #[test]
    fn window_is_bounded() {
        let mut s = RandomStream::new(17, "filter-window");
        let eta = State::zeros(256);
        let mut f = FilterState::new(eta, 3, SpaceParams::new(256, 0.5, 0.5, 1).unwrap()).unwrap();
        for _ in 0..10 {
            let x = State::random(256, 0.5, &mut s).unwrap();
            f.step(&x, &mut s).unwrap();
            assert!(f.window_len() <= 3);
        }
        assert_eq!(f.window_len(), 3);
        assert!(FilterState::new(
            State::zeros(8),
            0,
            SpaceParams::new(8, 0.5, 0.5, 1).unwrap()
        )
        .is_err());
    }

    #[test]
    fn repeated_item_novelty_decreases() {
        let root = RandomStream::new(17, "filter-repeat");
        let steps = 6;
        let runs: Vec<Vec<f64>> = (0..50)
            .map(|t| {
                let mut s = root.fork(t);
                let eta = State::random(10_000, 0.5, &mut s).unwrap();
                let x = State::random(10_000, 0.5, &mut s).unwrap();
                let mut f = FilterState::new(eta, DEFAULT_WINDOW, params(0.5)).unwrap();
                (0..steps)
                    .map(|_| f.step(&x, &mut s).unwrap().novelty)
                    .collect()
            })
            .collect();
        let means: Vec<f64> = crate::stats::column_summaries(&runs)
            .iter()
            .map(|c| c.mean)
            .collect();
        assert!(means.windows(2).all(|w| w[1] <= w[0]), "{means:?}");
    }

    #[test]
    fn fresh_items_match_independent_baseline() {
        let mut s = RandomStream::new(17, "filter-fresh");
        let eta = State::random(10_000, 0.5, &mut s).unwrap();
        let mut f = FilterState::new(eta, DEFAULT_WINDOW, params(0.5)).unwrap();
        let novelty: Vec<f64> = (0..100)
            .map(|_| {
                let x = State::random(10_000, 0.5, &mut s).unwrap();
                f.step(&x, &mut s).unwrap().novelty
            })
            .collect();
        // Baseline: D between pairs of independent dense states, referenced
        // to the second state's activity as the filter does.
        let baseline: Vec<f64> = (0..100)
            .map(|_| {
                let a = State::random(10_000, 0.5, &mut s).unwrap();
                let b = State::random(10_000, 0.5, &mut s).unwrap();
                global_distance(&a, &b, activity(&b)).unwrap()
            })
            .collect();
        let z = crate::stats::z_difference(&Summary::of(&novelty), &Summary::of(&baseline));
        assert!(z.abs() < 3.0, "z = {z}");
    }
}

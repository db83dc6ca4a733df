//! Binding and bundling.

use super::rng::{BernoulliWords, RandomStream};
use super::state::State;
use crate::error::{check_unit, Result};

/// Component-wise XNOR: bit `i` is set iff `x_i == y_i`.
pub fn bind(x: &State, y: &State) -> Result<State> {
    x.zip_words(y, |a, b| !(a ^ b))
}

/// Stochastic superposition `x ⊕p y`.
///
/// Agreeing components are copied. Each disagreeing component becomes 1 with
/// probability `p`, independently, so `p = 0` is AND and `p = 1` is OR. Noise
/// words are only drawn for words that contain a disagreement.
pub fn bundle(x: &State, y: &State, p: f64, stream: &mut RandomStream) -> Result<State> {
    check_unit("p", p)?;
    let gen = BernoulliWords::new(p);
    x.zip_words(y, |a, b| {
        let diff = a ^ b;
        if diff == 0 {
            a
        } else {
            (a & b) | (diff & gen.draw(stream))
        }
    })
}

pub fn and(x: &State, y: &State) -> Result<State> {
    x.zip_words(y, |a, b| a & b)
}

pub fn or(x: &State, y: &State) -> Result<State> {
    x.zip_words(y, |a, b| a | b)
}

pub fn xor(x: &State, y: &State) -> Result<State> {
    x.zip_words(y, |a, b| a ^ b)
}

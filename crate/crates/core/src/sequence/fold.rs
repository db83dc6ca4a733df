use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hv::{bundle, RandomStream, SpaceParams, State};

/// `((η ⊕ a) ⊕ b) ⊕ ...`; the empty fold is `η`.
pub fn left_bundle(
    eta: &State,
    items: &[State],
    p: f64,
    stream: &mut RandomStream,
) -> Result<State> {
    items
        .iter()
        .try_fold(eta.clone(), |acc, item| bundle(&acc, item, p, stream))
}

/// `η ⊕ (a ⊕ (b ⊕ (... ⊕ (y ⊕ z))))`; the empty fold is `η`.
///
/// `η` is applied last, on the outside. The two innermost items enter through
/// one symmetric bundle.
pub fn right_bundle(
    eta: &State,
    items: &[State],
    p: f64,
    stream: &mut RandomStream,
) -> Result<State> {
    let Some((last, rest)) = items.split_last() else {
        return Ok(eta.clone());
    };
    let inner = rest
        .iter()
        .rev()
        .try_fold(last.clone(), |acc, item| bundle(item, &acc, p, stream))?;
    bundle(eta, &inner, p, stream)
}

/// Both folds of one sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct MemoryState {
    pub left: State,
    pub right: State,
    pub count: usize,
    pub eta: State,
}

impl MemoryState {
    pub fn empty(eta: State) -> Self {
        Self {
            left: eta.clone(),
            right: eta.clone(),
            count: 0,
            eta,
        }
    }

    pub fn bundle(&self, which: crate::theory::Fold) -> &State {
        match which {
            crate::theory::Fold::L => &self.left,
            crate::theory::Fold::R => &self.right,
        }
    }
}

/// Encodes `items` as the pair `(L, R)`. The L fold draws its noise first,
/// then the R fold, from the same stream.
pub fn encode_sequence(
    eta: &State,
    items: &[State],
    p: f64,
    stream: &mut RandomStream,
) -> Result<MemoryState> {
    if let Some(bad) = items.iter().find(|s| s.n_dims() != eta.n_dims()) {
        return Err(Error::DimensionMismatch {
            left: eta.n_dims(),
            right: bad.n_dims(),
        });
    }
    let left = left_bundle(eta, items, p, stream)?;
    let right = right_bundle(eta, items, p, stream)?;
    Ok(MemoryState {
        left,
        right,
        count: items.len(),
        eta: eta.clone(),
    })
}

/// Choice of initial state for generated lists.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EtaMode {
    /// A fresh q-state per list.
    #[default]
    Random,
    /// The all-zero state.
    Zero,
}

/// Shape of the randomly generated lists used by the ensemble experiments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ListSetup {
    pub params: SpaceParams,
    pub k: usize,
    pub eta: EtaMode,
}

impl ListSetup {
    pub fn new(params: SpaceParams, k: usize) -> Self {
        Self {
            params,
            k,
            eta: EtaMode::Random,
        }
    }

    pub fn with_eta(self, eta: EtaMode) -> Self {
        Self { eta, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.k == 0 {
            return Err(Error::Empty("list"));
        }
        Ok(())
    }

    /// Expected activity of the initial state.
    pub fn eta_activity(&self) -> f64 {
        match self.eta {
            EtaMode::Random => self.params.q,
            EtaMode::Zero => 0.0,
        }
    }

    pub fn draw_eta(&self, stream: &mut RandomStream) -> Result<State> {
        match self.eta {
            EtaMode::Random => State::random(self.params.n_dims, self.params.q, stream),
            EtaMode::Zero => Ok(State::zeros(self.params.n_dims)),
        }
    }

    pub fn draw_items(&self, stream: &mut RandomStream) -> Result<Vec<State>> {
        (0..self.k)
            .map(|_| State::random(self.params.n_dims, self.params.q, stream))
            .collect()
    }
}

//! Binary hypervectors with stochastic, non-associative bundling.
//!
//! States are bit-packed binary vectors. Binding is component-wise XNOR.
//! Bundling `x ⊕p y` copies agreeing components and resolves each
//! disagreement to 1 with probability `p`, so it is AND at `p = 0`, OR at
//! `p = 1`, and non-associative in between. Folding a list from the left and
//! from the right then gives two different bundles that carry recency and
//! primacy gradients.
//!
//! [`theory`] holds closed-form predictions, [`sequence`] the list-level
//! machinery, and [`experiments`] the Monte Carlo runners that compare the
//! two.

pub mod error;
pub mod experiments;
pub mod hv;
pub mod sequence;
pub mod stats;
pub mod theory;
pub mod trials;

pub use error::{Error, Result};
pub use hv::{RandomStream, SpaceParams, State};

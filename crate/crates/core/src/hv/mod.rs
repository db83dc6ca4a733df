//! The state space: bit-packed states, seeded randomness, binding, bundling
//! and distances.

pub mod metric;
pub mod ops;
pub mod params;
pub mod rng;
pub mod state;

pub use metric::{
    activity, approx_equal, global_distance, global_distance_from_count, hamming, hamming_count,
    jaccard,
};
pub use ops::{bind, bundle};
pub use params::SpaceParams;
pub use rng::RandomStream;
pub use state::{random_state, similar_state, SimilarityMode, State};

//! Sequences under non-associative bundling: L/R folds, distance profiles,
//! convergence, recall and the online filter.

pub mod converge;
pub mod filter;
pub mod fold;
pub mod profile;
pub mod recall;

pub use converge::{converge, converge_right};
pub use filter::{FilterReading, FilterState, DEFAULT_WINDOW};
pub use fold::{encode_sequence, left_bundle, right_bundle, EtaMode, ListSetup, MemoryState};
pub use profile::{
    distance_profile, fold_profiles, item_distances, similarity_profile, DistanceProfile,
    ItemDistance, SimilarPair, SimilarityProfiles,
};
pub use recall::{recall_positions, recall_scores, CleanupMemory};

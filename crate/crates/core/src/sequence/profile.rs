//! Per-position distance profiles over ensembles of random lists.

use serde::Serialize;

use super::fold::{encode_sequence, ListSetup, MemoryState};
use crate::error::{check_open_unit, Error, Result};
use crate::hv::{
    global_distance_from_count, hamming_count, similar_state, RandomStream, SimilarityMode, State,
};
use crate::stats::{column_summaries, z_difference, Summary};
use crate::theory::Fold;
use crate::trials::run_trials;

/// Local and global distance from one list item to one bundle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ItemDistance {
    pub local: f64,
    pub global: f64,
}

/// Distances from every item to the chosen bundle of a single memory state.
pub fn item_distances(
    memory: &MemoryState,
    items: &[State],
    which: Fold,
    ref_q: f64,
) -> Result<Vec<ItemDistance>> {
    check_open_unit("ref_q", ref_q)?;
    if items.is_empty() {
        return Err(Error::Empty("list"));
    }
    let target = memory.bundle(which);
    items
        .iter()
        .map(|item| {
            let count = hamming_count(item, target)?;
            Ok(ItemDistance {
                local: count as f64 / target.n_dims() as f64,
                global: global_distance_from_count(count, target.n_dims(), ref_q)?,
            })
        })
        .collect()
}

/// Trial-averaged distances per serial position (index 0 is position 1).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceProfile {
    pub which: Fold,
    pub local: Vec<Summary>,
    pub global: Vec<Summary>,
}

impl DistanceProfile {
    fn from_trials(which: Fold, trials: &[Vec<ItemDistance>]) -> Self {
        let local: Vec<Vec<f64>> = trials
            .iter()
            .map(|t| t.iter().map(|d| d.local).collect())
            .collect();
        let global: Vec<Vec<f64>> = trials
            .iter()
            .map(|t| t.iter().map(|d| d.global).collect())
            .collect();
        Self {
            which,
            local: column_summaries(&local),
            global: column_summaries(&global),
        }
    }

    pub fn len(&self) -> usize {
        self.local.len()
    }

    pub fn is_empty(&self) -> bool {
        self.local.is_empty()
    }

    pub fn mean_local(&self) -> Vec<f64> {
        self.local.iter().map(|s| s.mean).collect()
    }

    pub fn mean_global(&self) -> Vec<f64> {
        self.global.iter().map(|s| s.mean).collect()
    }
}

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        Err(Error::Empty("trials"))
    } else {
        Ok(())
    }
}

fn encode_fresh(setup: &ListSetup, stream: &mut RandomStream) -> Result<(MemoryState, Vec<State>)> {
    let eta = setup.draw_eta(stream)?;
    let items = setup.draw_items(stream)?;
    let memory = encode_sequence(&eta, &items, setup.params.p, stream)?;
    Ok((memory, items))
}

/// L and R profiles from the same ensemble of freshly generated lists.
pub fn fold_profiles(
    setup: &ListSetup,
    trials: usize,
    ref_q: f64,
    root: &RandomStream,
    jobs: usize,
) -> Result<(DistanceProfile, DistanceProfile)> {
    setup.validate()?;
    check_trials(trials)?;
    check_open_unit("ref_q", ref_q)?;
    let per_trial = run_trials(root, trials, jobs, |_, stream| -> Result<_> {
        let (memory, items) = encode_fresh(setup, stream)?;
        Ok((
            item_distances(&memory, &items, Fold::L, ref_q)?,
            item_distances(&memory, &items, Fold::R, ref_q)?,
        ))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let (l, r): (Vec<_>, Vec<_>) = per_trial.into_iter().unzip();
    Ok((
        DistanceProfile::from_trials(Fold::L, &l),
        DistanceProfile::from_trials(Fold::R, &r),
    ))
}

/// Profile of one fold, averaged over `trials` independently generated lists.
pub fn distance_profile(
    setup: &ListSetup,
    which: Fold,
    trials: usize,
    ref_q: f64,
    root: &RandomStream,
    jobs: usize,
) -> Result<DistanceProfile> {
    let (l, r) = fold_profiles(setup, trials, ref_q, root, jobs)?;
    Ok(match which {
        Fold::L => l,
        Fold::R => r,
    })
}

/// Which list item is overwritten and what it is made similar to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarPair {
    /// 1-based position whose item is replaced.
    pub replaced: usize,
    /// 1-based position of the item the replacement is derived from.
    pub source: usize,
    pub delta: f64,
    pub mode: SimilarityMode,
}

impl SimilarPair {
    fn validate(&self, k: usize) -> Result<()> {
        let in_range = |i: usize| (1..=k).contains(&i);
        if !in_range(self.replaced) || !in_range(self.source) {
            return Err(Error::Config(format!(
                "similar pair ({}, {}) outside positions 1..={k}",
                self.replaced, self.source
            )));
        }
        if self.replaced == self.source {
            return Err(Error::Config("similar pair positions must differ".into()));
        }
        crate::error::check_unit("delta", self.delta)
    }
}

/// Baseline and modified L profiles with per-position z-scores.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimilarityProfiles {
    pub baseline: DistanceProfile,
    pub modified: DistanceProfile,
    /// `(modified - baseline) / stderr` of the local distance, per position.
    pub z_scores: Vec<f64>,
}

/// Compares the L profile of independent lists against lists in which one
/// item is replaced by a state similar to another item of the same list.
///
/// Baseline and modified ensembles use disjoint streams, so the per-position
/// z-score treats the two means as independent.
pub fn similarity_profile(
    setup: &ListSetup,
    pair: SimilarPair,
    trials: usize,
    ref_q: f64,
    root: &RandomStream,
    jobs: usize,
) -> Result<SimilarityProfiles> {
    setup.validate()?;
    check_trials(trials)?;
    check_open_unit("ref_q", ref_q)?;
    pair.validate(setup.k)?;
    let baseline = distance_profile(setup, Fold::L, trials, ref_q, &root.fork("baseline"), jobs)?;
    let modified_root = root.fork("modified");
    let per_trial = run_trials(&modified_root, trials, jobs, |_, stream| -> Result<_> {
        let eta = setup.draw_eta(stream)?;
        let mut items = setup.draw_items(stream)?;
        items[pair.replaced - 1] =
            similar_state(&items[pair.source - 1], pair.delta, pair.mode, stream)?;
        let memory = encode_sequence(&eta, &items, setup.params.p, stream)?;
        item_distances(&memory, &items, Fold::L, ref_q)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let modified = DistanceProfile::from_trials(Fold::L, &per_trial);
    let z_scores = modified
        .local
        .iter()
        .zip(&baseline.local)
        .map(|(m, b)| z_difference(m, b))
        .collect();
    Ok(SimilarityProfiles {
        baseline,
        modified,
        z_scores,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hv::SpaceParams;
    use crate::theory::fold_profile;

    fn dense(p: f64, k: usize) -> ListSetup {
        ListSetup::new(SpaceParams::new(10_000, 0.5, p, 31).unwrap(), k)
    }

    #[test]
    fn gradient_directions_and_last_item_oracle() {
        let setup = dense(0.5, 7);
        let root = RandomStream::new(31, "profile-test");
        let (l, r) = fold_profiles(&setup, 200, 0.5, &root, 2).unwrap();
        let gap_l = z_difference(&l.local[0], &l.local[6]);
        let gap_r = z_difference(&r.local[6], &r.local[0]);
        assert!(gap_l > 5.0, "L gap z = {gap_l}");
        assert!(gap_r > 5.0, "R gap z = {gap_r}");
        assert!(l.local[6].z_against(0.25).abs() < 3.0);
        let oracle = fold_profile(Fold::L, 7, 0.5, 0.5, 0.5).unwrap();
        for (s, o) in l.local.iter().zip(&oracle) {
            assert!(s.z_against(*o).abs() < 3.5, "{s:?} vs {o}");
        }
    }

    #[test]
    fn associative_profile_is_flat() {
        let setup = dense(0.0, 7);
        let root = RandomStream::new(31, "flat");
        let l = distance_profile(&setup, Fold::L, 200, 0.5, &root, 2).unwrap();
        for a in &l.local {
            for b in &l.local {
                assert!(z_difference(a, b).abs() < 3.5);
            }
        }
    }

    #[test]
    fn identical_items_share_a_profile_value() {
        let setup = dense(0.5, 7);
        let pair = SimilarPair {
            replaced: 4,
            source: 6,
            delta: 0.0,
            mode: SimilarityMode::Flip,
        };
        let root = RandomStream::new(31, "dup");
        let sim = similarity_profile(&setup, pair, 200, 0.5, &root, 2).unwrap();
        let z = z_difference(&sim.modified.local[3], &sim.modified.local[5]);
        assert!(z.abs() < 3.0, "z = {z}");
    }

    #[test]
    fn pair_validation() {
        let setup = dense(0.5, 3);
        let root = RandomStream::new(1, "v");
        let mk = |replaced, source| SimilarPair {
            replaced,
            source,
            delta: 0.1,
            mode: SimilarityMode::Flip,
        };
        assert!(similarity_profile(&setup, mk(2, 2), 2, 0.5, &root, 1).is_err());
        assert!(similarity_profile(&setup, mk(0, 2), 2, 0.5, &root, 1).is_err());
        assert!(similarity_profile(&setup, mk(1, 4), 2, 0.5, &root, 1).is_err());
        assert!(fold_profiles(&setup, 0, 0.5, &root, 1).is_err());
    }

    #[test]
    fn item_distances_requires_items() {
        let m = MemoryState::empty(State::zeros(8));
        assert!(item_distances(&m, &[], Fold::L, 0.5).is_err());
        let d = item_distances(&m, &[State::ones(8)], Fold::R, 0.5).unwrap();
        assert_eq!(d[0].local, 1.0);
        assert_eq!(d[0].global, 1.0);
    }
}

//! Cleanup memory and nearest-neighbour recall.

use super::fold::{encode_sequence, ListSetup, MemoryState};
use crate::error::{Error, Result};
use crate::hv::{hamming_count, RandomStream, State};
use crate::stats::{column_summaries, Summary};
use crate::trials::run_trials;

/// An ordered store of labelled item states.
#[derive(Debug, Clone, Default)]
pub struct CleanupMemory {
    entries: Vec<(String, State)>,
}

impl CleanupMemory {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an entry; labels must be unique and dimensions must agree.
    pub fn insert(&mut self, label: impl Into<String>, state: State) -> Result<()> {
        let label = label.into();
        if self.entries.iter().any(|(l, _)| *l == label) {
            return Err(Error::Config(format!("duplicate cleanup label {label:?}")));
        }
        if let Some((_, first)) = self.entries.first() {
            first.check_dims(&state)?;
        }
        self.entries.push((label, state));
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.entries[index].0
    }

    pub fn state(&self, index: usize) -> &State {
        &self.entries[index].1
    }

    pub fn position_of(&self, state: &State) -> Option<usize> {
        self.entries.iter().position(|(_, s)| s == state)
    }

    /// Index of the strictly nearest entry by Hamming distance, or `None`
    /// when the minimum is shared.
    pub fn nearest_unique(&self, probe: &State) -> Result<Option<usize>> {
        if self.entries.is_empty() {
            return Err(Error::Empty("cleanup memory"));
        }
        let mut best = usize::MAX;
        let mut winner = None;
        for (i, (_, s)) in self.entries.iter().enumerate() {
            let d = hamming_count(probe, s)?;
            if d < best {
                best = d;
                winner = Some(i);
            } else if d == best {
                winner = None;
            }
        }
        Ok(winner)
    }
}

/// Whether each list item is recalled from `memory`: the item must be the
/// unique nearest cleanup entry to L or to R.
pub fn recall_positions(
    memory: &MemoryState,
    items: &[State],
    cleanup: &CleanupMemory,
) -> Result<Vec<bool>> {
    let from_left = cleanup.nearest_unique(&memory.left)?;
    let from_right = cleanup.nearest_unique(&memory.right)?;
    items
        .iter()
        .map(|item| {
            let idx = cleanup
                .position_of(item)
                .ok_or_else(|| Error::Config("list item missing from cleanup memory".into()))?;
            Ok(from_left == Some(idx) || from_right == Some(idx))
        })
        .collect()
}

/// Per-position recall rate over freshly generated lists. The cleanup
/// memory of each trial holds the list items plus `distractors` unrelated
/// q-states.
pub fn recall_scores(
    setup: &ListSetup,
    distractors: usize,
    trials: usize,
    root: &RandomStream,
    jobs: usize,
) -> Result<Vec<Summary>> {
    setup.validate()?;
    if trials == 0 {
        return Err(Error::Empty("trials"));
    }
    let rows = run_trials(root, trials, jobs, |_, stream| -> Result<Vec<f64>> {
        let eta = setup.draw_eta(stream)?;
        let items = setup.draw_items(stream)?;
        let memory = encode_sequence(&eta, &items, setup.params.p, stream)?;
        let mut cleanup = CleanupMemory::new();
        for (i, item) in items.iter().enumerate() {
            cleanup.insert(format!("item/{}", i + 1), item.clone())?;
        }
        for i in 0..distractors {
            let s = State::random(setup.params.n_dims, setup.params.q, stream)?;
            cleanup.insert(format!("distractor/{}", i + 1), s)?;
        }
        Ok(recall_positions(&memory, &items, &cleanup)?
            .into_iter()
            .map(|hit| if hit { 1.0 } else { 0.0 })
            .collect())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(column_summaries(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hv::SpaceParams;

    fn st(s: &str) -> State {
        s.parse().unwrap()
    }

    #[test]
    fn nearest_unique_and_ties() {
        let mut c = CleanupMemory::new();
        c.insert("a", st("1100")).unwrap();
        c.insert("b", st("0011")).unwrap();
        assert_eq!(c.nearest_unique(&st("1110")).unwrap(), Some(0));
        assert_eq!(c.nearest_unique(&st("1010")).unwrap(), None);
        assert!(c.insert("a", st("1111")).is_err());
        assert!(c.insert("c", st("111")).is_err());
        assert!(CleanupMemory::new().nearest_unique(&st("1")).is_err());
    }

    #[test]
    fn single_item_is_always_recalled() {
        let setup = ListSetup::new(SpaceParams::new(10_000, 0.5, 0.5, 3).unwrap(), 1);
        let scores = recall_scores(&setup, 0, 50, &RandomStream::new(3, "one"), 1).unwrap();
        assert_eq!(scores[0].mean, 1.0);
    }

    #[test]
    fn ends_beat_the_middle() {
        let setup = ListSetup::new(SpaceParams::new(10_000, 0.5, 0.5, 3).unwrap(), 7);
        let s = recall_scores(&setup, 0, 100, &RandomStream::new(3, "u"), 2).unwrap();
        assert!(s[0].mean > s[3].mean && s[6].mean > s[3].mean, "{s:?}");
    }
}

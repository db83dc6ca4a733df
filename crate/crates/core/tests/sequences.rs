//! Ensemble properties of L/R folds, profiles and recall.

use nabundle::hv::{activity, hamming, RandomStream, SimilarityMode, SpaceParams, State};
use nabundle::sequence::{
    encode_sequence, left_bundle, recall_scores, similarity_profile, EtaMode, ListSetup,
    SimilarPair,
};
use nabundle::stats::{z_difference, Summary};
use nabundle::theory::{activity_limit, activity_recurrence};
use nabundle::trials::run_trials;

const N: usize = 10_000;

fn params(q: f64, p: f64) -> SpaceParams {
    SpaceParams::new(N, q, p, 77).unwrap()
}

#[test]
fn reversal_changes_the_left_bundle() {
    let root = RandomStream::new(1, "reversal");
    let runs = run_trials(&root, 100, 4, |_, s| {
        let eta = State::random(N, 0.5, s).unwrap();
        let items: Vec<State> = (0..5).map(|_| State::random(N, 0.5, s).unwrap()).collect();
        let reversed: Vec<State> = items.iter().rev().cloned().collect();
        let a = left_bundle(&eta, &items, 0.5, s).unwrap();
        let again = left_bundle(&eta, &items, 0.5, s).unwrap();
        let b = left_bundle(&eta, &reversed, 0.5, s).unwrap();
        (hamming(&a, &b).unwrap(), hamming(&a, &again).unwrap())
    });
    let reversed = Summary::of(&runs.iter().map(|r| r.0).collect::<Vec<_>>());
    let repeated = Summary::of(&runs.iter().map(|r| r.1).collect::<Vec<_>>());
    assert!(reversed.z_against(0.0) >= 5.0);
    // More than the noise floor of re-encoding the same order.
    assert!(
        z_difference(&reversed, &repeated) >= 5.0,
        "{reversed:?} vs {repeated:?}"
    );
}

#[test]
fn activity_follows_the_recurrence_on_a_grid() {
    for &q in &[0.25, 0.5] {
        for &p in &[0.1, 0.25, 0.5] {
            let root = RandomStream::new(2, format!("activity/q={q}/p={p}"));
            let runs = run_trials(&root, 50, 4, |_, s| {
                let mut acc = State::random(N, q, s).unwrap();
                let mut out = vec![activity(&acc)];
                for _ in 1..30 {
                    acc =
                        nabundle::hv::bundle(&acc, &State::random(N, q, s).unwrap(), p, s).unwrap();
                    out.push(activity(&acc));
                }
                out
            });
            let theory = activity_recurrence(q, p, 30).unwrap();
            for (k, want) in theory.iter().enumerate() {
                let s = Summary::of(&runs.iter().map(|r| r[k]).collect::<Vec<_>>());
                assert!(
                    s.z_against(*want).abs() < 3.0,
                    "q={q} p={p} k={}: {} vs {want}",
                    k + 1,
                    s.mean
                );
            }
        }
    }
}

#[test]
fn left_and_right_become_quasi_orthogonal() {
    let lengths = [2usize, 4, 8, 12, 16, 20];
    let root = RandomStream::new(3, "orthogonality");
    let runs = run_trials(&root, 100, 4, |_, s| {
        lengths
            .iter()
            .map(|&k| {
                let eta = State::random(N, 0.5, s).unwrap();
                let items: Vec<State> = (0..k).map(|_| State::random(N, 0.5, s).unwrap()).collect();
                let m = encode_sequence(&eta, &items, 0.5, s).unwrap();
                hamming(&m.left, &m.right).unwrap()
            })
            .collect::<Vec<_>>()
    });
    let s: Vec<Summary> = (0..lengths.len())
        .map(|i| Summary::of(&runs.iter().map(|r| r[i]).collect::<Vec<_>>()))
        .collect();
    for w in s.windows(2) {
        assert!(z_difference(&w[1], &w[0]) > -3.0, "{w:?}");
    }
    let q = *activity_recurrence(0.5, 0.5, 21).unwrap().last().unwrap();
    assert!(s.last().unwrap().z_against(2.0 * q * (1.0 - q)).abs() < 3.0);
}

#[test]
fn long_bundles_stay_inhomogeneous() {
    for &(q, p) in &[(0.5, 0.1), (0.5, 0.5), (0.5, 0.9), (0.25, 0.3)] {
        let root = RandomStream::new(4, format!("inhomogeneous/{q}/{p}"));
        let runs = run_trials(&root, 30, 4, |_, s| {
            let eta = State::random(N, q, s).unwrap();
            let items: Vec<State> = (0..100).map(|_| State::random(N, q, s).unwrap()).collect();
            activity(&left_bundle(&eta, &items, p, s).unwrap())
        });
        let limit = activity_limit(q, p).unwrap();
        let mean = Summary::of(&runs);
        assert!(
            mean.z_against(limit).abs() < 3.0,
            "q={q} p={p}: {mean:?} vs {limit}"
        );
        assert!(
            runs.iter().all(|&a| a > 0.05 && a < 0.95),
            "q={q} p={p}: {runs:?}"
        );
    }
}

fn similarity(delta: f64, pair: (usize, usize)) -> nabundle::sequence::SimilarityProfiles {
    let setup = ListSetup::new(params(0.5, 0.5), 7);
    let pair = SimilarPair {
        replaced: pair.0,
        source: pair.1,
        delta,
        mode: SimilarityMode::Flip,
    };
    similarity_profile(
        &setup,
        pair,
        300,
        0.5,
        &RandomStream::new(5, "similarity"),
        4,
    )
    .unwrap()
}

#[test]
fn duplicated_item_shares_its_profile_value() {
    let sim = similarity(0.0, (2, 5));
    let m = &sim.modified.local;
    // Positions 2 and 5 hold the same state in every trial.
    let z = z_difference(&m[1], &m[4]);
    assert!(z.abs() < 3.0, "{z}");
}

#[test]
fn independent_replacement_leaves_the_profile_alone() {
    let sim = similarity(0.5, (4, 6));
    for (i, z) in sim.z_scores.iter().enumerate() {
        assert!(z.abs() < 3.0, "position {}: {z}", i + 1);
    }
}

#[test]
fn similar_item_deviates_at_its_position() {
    let sim = similarity(0.1, (4, 6));
    assert!(sim.z_scores[3].abs() >= 5.0, "{:?}", sim.z_scores);
}

#[test]
fn associative_recall_is_uniform() {
    let setup = ListSetup::new(params(0.5, 0.0), 7);
    let scores = recall_scores(&setup, 0, 500, &RandomStream::new(6, "recall"), 4).unwrap();
    let grand = scores.iter().map(|s| s.mean).sum::<f64>() / scores.len() as f64;
    for s in &scores {
        assert!(s.z_against(grand).abs() < 3.0, "{scores:?}");
    }
}

#[test]
fn zero_eta_is_supported() {
    let setup = ListSetup::new(params(0.5, 0.5), 3).with_eta(EtaMode::Zero);
    let mut s = RandomStream::new(7, "eta");
    assert_eq!(setup.draw_eta(&mut s).unwrap(), State::zeros(N));
    assert_eq!(setup.eta_activity(), 0.0);
}

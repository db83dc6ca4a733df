use nabundle::hv::{bind, bundle, hamming, hamming_count, jaccard, ops, RandomStream, State};
use nabundle::sequence::{left_bundle, right_bundle};
use proptest::prelude::*;

fn states(seed: u64, n: usize, q: f64, count: usize) -> Vec<State> {
    let mut s = RandomStream::new(seed, "proptest-states");
    (0..count)
        .map(|_| State::random(n, q, &mut s).unwrap())
        .collect()
}

fn arb_setup() -> impl Strategy<Value = (u64, usize, f64)> {
    (any::<u64>(), 1usize..300, 0.05f64..0.95)
}

proptest! {
    #[test]
    fn bundle_and_bind_are_idempotent_and_self_inverse((seed, n, q) in arb_setup(), p in 0.0f64..=1.0) {
        let x = &states(seed, n, q, 1)[0];
        let mut s = RandomStream::new(seed, "noise");
        prop_assert_eq!(&bundle(x, x, p, &mut s).unwrap(), x);
        prop_assert_eq!(bind(x, x).unwrap(), State::ones(n));
    }

    #[test]
    fn bundle_keeps_agreeing_components((seed, n, q) in arb_setup(), p in 0.0f64..=1.0) {
        let v = states(seed, n, q, 2);
        let mut s = RandomStream::new(seed, "noise");
        let out = bundle(&v[0], &v[1], p, &mut s).unwrap();
        for i in 0..n {
            if v[0].get(i) == v[1].get(i) {
                prop_assert_eq!(out.get(i), v[0].get(i));
            }
        }
        // AND <= result <= OR component-wise.
        prop_assert_eq!(ops::and(&out, &ops::and(&v[0], &v[1]).unwrap()).unwrap(), ops::and(&v[0], &v[1]).unwrap());
        prop_assert_eq!(ops::or(&out, &ops::or(&v[0], &v[1]).unwrap()).unwrap(), ops::or(&v[0], &v[1]).unwrap());
    }

    #[test]
    fn distance_is_one_minus_bind_activity((seed, n, q) in arb_setup()) {
        let v = states(seed, n, q, 2);
        let b = bind(&v[0], &v[1]).unwrap();
        prop_assert_eq!(hamming_count(&v[0], &v[1]).unwrap(), n - b.count_ones());
        prop_assert!((hamming(&v[0], &v[1]).unwrap() - (1.0 - b.count_ones() as f64 / n as f64)).abs() < 1e-12);
    }

    #[test]
    fn hamming_is_a_metric((seed, n, q) in arb_setup()) {
        let v = states(seed, n, q, 3);
        let d = |a: &State, b: &State| hamming_count(a, b).unwrap();
        prop_assert_eq!(d(&v[0], &v[0]), 0);
        prop_assert_eq!(d(&v[0], &v[1]), d(&v[1], &v[0]));
        prop_assert!(d(&v[0], &v[2]) <= d(&v[0], &v[1]) + d(&v[1], &v[2]));
        let j = jaccard(&v[0], &v[1]).unwrap();
        prop_assert!((0.0..=1.0).contains(&j));
    }

    #[test]
    fn boundary_bundling_is_associative_and_commutative((seed, n, q) in arb_setup(), or in any::<bool>()) {
        let p = if or { 1.0 } else { 0.0 };
        let v = states(seed, n, q, 3);
        let mut s = RandomStream::new(seed, "noise");
        let xy = bundle(&v[0], &v[1], p, &mut s).unwrap();
        let yz = bundle(&v[1], &v[2], p, &mut s).unwrap();
        let left = bundle(&xy, &v[2], p, &mut s).unwrap();
        let right = bundle(&v[0], &yz, p, &mut s).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(xy, bundle(&v[1], &v[0], p, &mut s).unwrap());
    }

    #[test]
    fn boundary_folds_coincide((seed, n, q) in arb_setup(), k in 0usize..8, or in any::<bool>()) {
        let p = if or { 1.0 } else { 0.0 };
        let v = states(seed, n, q, k + 1);
        let mut s = RandomStream::new(seed, "noise");
        let l = left_bundle(&v[0], &v[1..], p, &mut s).unwrap();
        let r = right_bundle(&v[0], &v[1..], p, &mut s).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn same_stream_same_bundle((seed, n, q) in arb_setup(), p in 0.0f64..=1.0) {
        let v = states(seed, n, q, 2);
        let a = bundle(&v[0], &v[1], p, &mut RandomStream::new(seed, "det")).unwrap();
        let b = bundle(&v[0], &v[1], p, &mut RandomStream::new(seed, "det")).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn bit_string_round_trip(bits in proptest::collection::vec(any::<bool>(), 1..200)) {
        let x = State::from_bits(&bits).unwrap();
        let text = x.to_string();
        prop_assert_eq!(text.parse::<State>().unwrap(), x);
    }
}

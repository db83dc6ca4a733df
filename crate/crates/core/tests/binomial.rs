//! `binomial_cdf` against exact rational enumeration and high-precision
//! reference values.

use nabundle::theory::binomial_cdf;

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// CDF for `prob = num / den`, summed in integers and divided once.
fn rational_cdf(k: u64, n: u64, num: u128, den: u128) -> f64 {
    let total: u128 = (0..=k as u128)
        .map(|i| choose(n as u128, i) * num.pow(i as u32) * (den - num).pow((n as u128 - i) as u32))
        .sum();
    total as f64 / (den.pow(n as u32)) as f64
}

#[test]
fn matches_rational_enumeration_up_to_twenty() {
    for n in 1..=20u64 {
        for &(num, den) in &[(1u128, 2u128), (1, 4), (3, 10), (7, 10), (1, 10)] {
            let prob = num as f64 / den as f64;
            for k in 0..=n {
                let got = binomial_cdf(k, n, prob).unwrap();
                let want = rational_cdf(k, n, num, den);
                assert!(
                    (got - want).abs() <= 1e-14 * want.max(1e-300) + 1e-300,
                    "n={n} k={k} p={prob}: {got} vs {want}"
                );
            }
        }
    }
}

#[test]
fn small_enumerated_values() {
    assert_eq!(binomial_cdf(4, 4, 0.5).unwrap(), 1.0);
    assert_eq!(binomial_cdf(0, 4, 0.5).unwrap(), 0.0625);
    assert_eq!(binomial_cdf(2, 4, 0.5).unwrap(), 0.6875);
}

/// `(n, prob, k, cdf)` from 50-digit summation of the pmf.
const REFERENCE: &[(u64, f64, u64, f64)] = &[
    (10000, 0.5, 4600, 6.521226063700102e-16),
    (10000, 0.5, 4850, 0.0013939837588563594),
    (10000, 0.5, 4950, 0.161087099897656),
    (10000, 0.5, 4995, 0.464143903040951),
    (10000, 0.5, 5000, 0.5039893230696911),
    (10000, 0.5, 5025, 0.6949731673649452),
    (10000, 0.5, 5100, 0.9777871004769597),
    (10000, 0.42, 3805, 4.808845495322668e-16),
    (10000, 0.42, 4052, 0.001381229104334975),
    (10000, 0.42, 4151, 0.16289204826574225),
    (10000, 0.42, 4195, 0.4638901207627889),
    (10000, 0.42, 4200, 0.5042569075475622),
    (10000, 0.42, 4225, 0.6974390105053406),
    (10000, 0.42, 4299, 0.9780147895582669),
    (250000, 0.3, 73167, 5.449617782946347e-16),
    (250000, 0.3, 74313, 0.0013567121160215443),
    (250000, 0.3, 74771, 0.15932054817013133),
    (250000, 0.3, 74977, 0.46100193605809964),
    (250000, 0.3, 75000, 0.5009866368796836),
    (250000, 0.3, 75115, 0.6929747854552554),
    (250000, 0.3, 75458, 0.9772599878262274),
    (1000000, 0.5, 496000, 6.269548031240336e-16),
    (1000000, 0.5, 498500, 0.0013543276530298784),
    (1000000, 0.5, 499500, 0.15889734568165276),
    (1000000, 0.5, 499950, 0.46056913829566226),
    (1000000, 0.5, 500000, 0.5003989421806658),
    (1000000, 0.5, 500250, 0.6918144275366128),
    (1000000, 0.5, 501000, 0.9773038320453279),
];

#[test]
fn matches_high_precision_references() {
    for &(n, prob, k, want) in REFERENCE {
        let got = binomial_cdf(k, n, prob).unwrap();
        assert!(
            (got - want).abs() <= 1e-12 * want,
            "n={n} p={prob} k={k}: {got} vs {want}"
        );
    }
}

#[test]
fn monotone_in_k() {
    for &(n, prob) in &[(50u64, 0.3), (5_000, 0.5), (100_000, 0.1)] {
        let mut last = 0.0;
        let step = (n / 200).max(1);
        for k in (0..=n).step_by(step as usize) {
            let v = binomial_cdf(k, n, prob).unwrap();
            assert!(v >= last, "n={n} k={k}");
            last = v;
        }
    }
}

#[test]
fn range_errors() {
    assert!(binomial_cdf(5, 4, 0.5).is_err());
    assert!(binomial_cdf(1, 4, 1.5).is_err());
    assert_eq!(binomial_cdf(0, 4, 0.0).unwrap(), 1.0);
    assert_eq!(binomial_cdf(3, 4, 1.0).unwrap(), 0.0);
}

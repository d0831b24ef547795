//! Cross-module property tests on the public API.

use num_complex::Complex64;
use proptest::prelude::*;

use qcompare::coherent::{comparator_network, success_prob_coherent, CoherentPair};
use qcompare::finite::{
    delta_extra_copy, failure_overlap, success_prob_pure, EnsembleSpec, OverlapSquared,
};
use qcompare::oracle::{
    haar_random_state, mc_mean_overlap_power, seeded_stream, sym_overlap_permutation_sum,
};

proptest! {
    /// The permutation-sum oracle and the closed form agree on random
    /// states and every small ensemble shape.
    #[test]
    fn oracle_matches_closed_form(seed in any::<u64>(), d in 2u32..=3, k in 1u32..=4, l in 1u32..=4) {
        prop_assume!(k + l <= 5);
        let mut rng = seeded_stream(seed, 0);
        let a = haar_random_state(d, &mut rng);
        let b = haar_random_state(d, &mut rng);
        let brute = sym_overlap_permutation_sum(&a, &b, k, l).unwrap();
        let spec = EnsembleSpec::new(k, l, d).unwrap();
        let closed = 1.0 - success_prob_pure(a.overlap_squared(&b), spec).value();
        prop_assert!((brute - closed).abs() <= 1e-10);
    }

    /// The simulated network reproduces the coherent closed form.
    #[test]
    fn network_matches_closed_form(
        re1 in -3.0f64..3.0, im1 in -3.0f64..3.0,
        re2 in -3.0f64..3.0, im2 in -3.0f64..3.0,
        k in 1u32..=10, l in 1u32..=10,
    ) {
        let pair = CoherentPair::new(
            Complex64::new(re1, im1),
            Complex64::new(re2, im2),
            k,
            l,
        ).unwrap();
        let (_, simulated) = comparator_network(&pair);
        let closed = success_prob_coherent(&pair);
        prop_assert!((simulated.value() - closed.value()).abs() <= 1e-12);
    }

    /// Success probability is symmetric in the copy counts, bit for bit.
    #[test]
    fn success_symmetric(xv in 0.0f64..=1.0, k in 1u32..=15, l in 1u32..=15) {
        let x = OverlapSquared::new(xv).unwrap();
        let forward = success_prob_pure(x, EnsembleSpec::new(k, l, 2).unwrap()).value();
        let swapped = success_prob_pure(x, EnsembleSpec::new(l, k, 2).unwrap()).value();
        prop_assert_eq!(forward, swapped);
    }

    /// An extra copy never lowers the success probability.
    #[test]
    fn extra_copy_never_hurts(xv in 0.0f64..=1.0, k in 1u32..=12, l in 1u32..=12) {
        let x = OverlapSquared::new(xv).unwrap();
        let (gain, poly) = delta_extra_copy(x, EnsembleSpec::new(k, l, 2).unwrap());
        prop_assert!(gain >= -1e-12);
        prop_assert!(poly.admits_nonneg_certificate(1e-12));
    }

    /// The exact failure rational always lies in [0, 1] and hits the
    /// endpoints exactly.
    #[test]
    fn failure_overlap_bounds(xv in 0.0f64..=1.0, k in 1u32..=10, l in 1u32..=10) {
        use num_traits::ToPrimitive;
        let x = OverlapSquared::new(xv).unwrap();
        let f = failure_overlap(x, k, l);
        let v = f.to_f64().unwrap();
        prop_assert!((0.0..=1.0).contains(&v));
        if xv == 1.0 {
            prop_assert!(f.is_integer() && v == 1.0);
        }
    }
}

/// Monte Carlo means are reproducible for each worker count and stay
/// statistically consistent across worker counts.
#[test]
fn mc_worker_partitioning_is_deterministic() {
    let single = mc_mean_overlap_power(2, 1, 20_000, 77, 1);
    for workers in [1usize, 2, 4, 7] {
        let first = mc_mean_overlap_power(2, 1, 20_000, 77, workers);
        let second = mc_mean_overlap_power(2, 1, 20_000, 77, workers);
        assert_eq!(
            first.mean.to_bits(),
            second.mean.to_bits(),
            "workers={workers}"
        );
        // different partitions resample, but estimate the same mean (1/2)
        assert!(
            (first.mean - single.mean).abs() <= 4.0 * (first.std_error + single.std_error),
            "workers={workers}: {} vs {}",
            first.mean,
            single.mean
        );
    }
}

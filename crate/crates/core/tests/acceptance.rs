//! Acceptance suite: one test per release criterion, each at its stated
//! tolerance, printing one pass/fail line (visible with `--nocapture`).

use std::cmp::Ordering;

use num_complex::Complex64;
use rand::Rng;

use qcompare::coherent::{
    comparator_network, concentrate, copy_tradeoff, sample_detection, success_prob_coherent,
    CoherentPair, ModeRegister,
};
use qcompare::combinatorics::{sym_dim, SignedPolynomial};
use qcompare::finite::{
    avg_success, delta_poly, lambda_poly, lambda_split, mean_overlap_power, success_prob_pure,
    EnsembleSpec, OverlapSquared,
};
use qcompare::oracle::{
    coherent_failure_quadrature, expectation, haar_random_state, mc_average_success, mc_estimate,
    mc_mean_overlap_power, seeded_stream, sym_overlap_permutation_sum, sym_projector_matrix,
    ProductState,
};

fn report(name: &str, max_deviation: f64, tolerance: f64) {
    let passed = max_deviation <= tolerance;
    println!(
        "criterion {name}: {} — max deviation {max_deviation:.3e} (tolerance {tolerance:.1e})",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(
        passed,
        "{name}: max deviation {max_deviation} exceeds tolerance {tolerance}"
    );
}

fn copy_pairs_with_total_at_most(max_total: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for k in 1..max_total {
        for l in 1..=(max_total - k) {
            pairs.push((k, l));
        }
    }
    pairs
}

/// All `(d, n)` with `n >= 2` and `d^n <= 256`.
fn projector_cases() -> Vec<(u32, u32)> {
    let mut cases = Vec::new();
    for d in 2..=16u32 {
        let mut n = 2u32;
        while u64::from(d).pow(n) <= 256 {
            cases.push((d, n));
            n += 1;
        }
    }
    cases
}

#[test]
fn acceptance_01_closed_form_vs_permutation_oracle() {
    let mut rng = seeded_stream(0xACC0, 1);
    let mut worst = 0.0f64;
    for d in [2u32, 3] {
        for &(k, l) in &copy_pairs_with_total_at_most(5) {
            let spec = EnsembleSpec::new(k, l, d).unwrap();
            for _ in 0..100 {
                let a = haar_random_state(d, &mut rng);
                let b = haar_random_state(d, &mut rng);
                let brute = sym_overlap_permutation_sum(&a, &b, k, l).unwrap();
                let closed = 1.0 - success_prob_pure(a.overlap_squared(&b), spec).value();
                worst = worst.max((brute - closed).abs());
            }
        }
    }
    report("01 closed form vs permutation oracle", worst, 1e-10);
}

#[test]
fn acceptance_02_average_success_vs_monte_carlo() {
    assert_eq!(
        avg_success(EnsembleSpec::new(1, 1, 2).unwrap()).value(),
        0.25,
        "exact balanced-qubit average"
    );
    let mut worst_z = 0.0f64;
    for d in [2u32, 3, 4] {
        for (k, l) in [(1u32, 1u32), (2, 1), (2, 2), (3, 2)] {
            let spec = EnsembleSpec::new(k, l, d).unwrap();
            let exact = avg_success(spec).value();
            let estimate = mc_average_success(spec, 100_000, 0xACC0 + 2, 1);
            let z = (estimate.mean - exact).abs() / estimate.std_error;
            worst_z = worst_z.max(z);
        }
    }
    report("02 average success vs Monte Carlo (z-score)", worst_z, 3.0);
}

#[test]
fn acceptance_03_mean_overlap_powers() {
    let mut worst_z = 0.0f64;
    for d in [2u32, 3, 4] {
        for m in 0..=4u32 {
            let exact = mean_overlap_power(d, u64::from(m)).value();
            let estimate = mc_mean_overlap_power(d, m, 100_000, 0xACC0 + 3, 1);
            let diff = (estimate.mean - exact).abs();
            if diff > 0.0 {
                worst_z = worst_z.max(diff / estimate.std_error);
            }
        }
    }
    report(
        "03 mean overlap powers vs Monte Carlo (z-score)",
        worst_z,
        3.0,
    );
}

#[test]
fn acceptance_04_projector_laws_and_no_error() {
    let mut rng = seeded_stream(0xACC0, 4);
    let mut worst_law = 0.0f64;
    let mut worst_trace = 0.0f64;
    let mut worst_leak = 0.0f64;
    for (d, n) in projector_cases() {
        let projector = sym_projector_matrix(d, n).unwrap();
        let squared = projector.dot(&projector);
        for i in 0..projector.nrows() {
            for j in 0..projector.ncols() {
                worst_law = worst_law
                    .max((projector[[i, j]] - projector[[j, i]].conj()).norm())
                    .max((squared[[i, j]] - projector[[i, j]]).norm());
            }
        }
        let trace: Complex64 = projector.diag().iter().sum();
        worst_trace = worst_trace.max((trace.re - sym_dim(d, u64::from(n)).to_f64()).abs());

        for _ in 0..100 {
            let psi = haar_random_state(d, &mut rng);
            let vector = ProductState::identical_copies(&psi, n).tensor_vector();
            worst_leak = worst_leak.max((1.0 - expectation(&projector, &vector)).abs());
        }
    }
    report("04a projector Hermitian+idempotent", worst_law, 1e-12);
    report(
        "04b projector trace vs symmetric dimension",
        worst_trace,
        1e-10,
    );
    report(
        "04c no-error condition on identical copies",
        worst_leak,
        1e-12,
    );
}

#[test]
fn acceptance_05_monotonicity_split_and_certificates() {
    let certificate_tol = 1e-12;

    let mut worst_delta = 0.0f64;
    let mut certificates_ok = true;
    for k in 1..=12u32 {
        for l in 1..=12u32 {
            let base = EnsembleSpec::new(k, l, 2).unwrap();
            let more = EnsembleSpec::new(k + 1, l, 2).unwrap();
            for x in OverlapSquared::unit_grid(1001) {
                let gain = success_prob_pure(x, more).value() - success_prob_pure(x, base).value();
                worst_delta = worst_delta.max(-gain);
            }
            certificates_ok &= delta_poly(k, l).admits_nonneg_certificate(certificate_tol);
        }
    }
    report(
        "05a extra-copy gain nonnegative on grid",
        worst_delta.max(0.0),
        1e-12,
    );

    let mut worst_lambda = 0.0f64;
    for total in 3..=24u32 {
        for k in 1..=(total - 2) {
            for x in OverlapSquared::unit_grid(1001) {
                let gain = lambda_split(x, k, total).unwrap();
                // moving toward the even split helps, past it hurts
                let violation = if 2 * k < total { -gain } else { gain };
                worst_lambda = worst_lambda.max(violation);
            }
            let poly = lambda_poly(k, total).unwrap();
            let oriented = if 2 * k < total {
                poly
            } else {
                SignedPolynomial::new(poly.coefficients().iter().map(|c| -c).collect())
            };
            certificates_ok &= oriented.admits_nonneg_certificate(certificate_tol);
        }
    }
    report(
        "05b rebalance sign pattern on grid",
        worst_lambda.max(0.0),
        1e-12,
    );
    report(
        "05c sign-split certificates hold",
        if certificates_ok { 0.0 } else { 1.0 },
        0.0,
    );
}

#[test]
fn acceptance_06_coherent_closed_form_network_quadrature() {
    // anchor: 1 - exp(-1/2)
    let anchor = success_prob_coherent(
        &CoherentPair::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), 1, 1).unwrap(),
    )
    .value();
    assert!(
        (anchor - 0.3934693402873666).abs() <= 1e-15,
        "anchor {anchor}"
    );

    let mut rng = seeded_stream(0xACC0, 6);
    let mut worst_network = 0.0f64;
    let mut worst_quadrature = 0.0f64;
    for _ in 0..1000 {
        let pair = CoherentPair::new(
            Complex64::new(rng.random_range(-1.4..1.4), rng.random_range(-1.4..1.4)),
            Complex64::new(rng.random_range(-1.4..1.4), rng.random_range(-1.4..1.4)),
            rng.random_range(1..=5),
            rng.random_range(1..=5),
        )
        .unwrap();
        let closed = success_prob_coherent(&pair).value();
        let (_, network) = comparator_network(&pair);
        let quadrature =
            coherent_failure_quadrature(pair.alpha1(), pair.alpha2(), pair.k(), pair.l(), 8.0, 201)
                .unwrap();
        worst_network = worst_network.max((network.value() - closed).abs());
        worst_quadrature = worst_quadrature
            .max((quadrature - closed).abs())
            .max((quadrature - network.value()).abs());
    }
    report("06a network vs closed form", worst_network, 1e-12);
    report(
        "06b quadrature vs closed form and network",
        worst_quadrature,
        1e-8,
    );
}

#[test]
fn acceptance_07_cascade_exactness() {
    let mut rng = seeded_stream(0xACC0, 7);
    let mut worst = 0.0f64;
    for count in 1..=10u32 {
        for _ in 0..100 {
            let alpha = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            let out = concentrate(&ModeRegister::uniform(alpha, count).unwrap()).unwrap();
            let expected = alpha * f64::from(count).sqrt();
            worst = worst.max((out.amplitudes()[0] - expected).norm());
            for residual in &out.amplitudes()[1..] {
                worst = worst.max(residual.norm());
            }
        }
    }
    report("07 concentration cascade exactness", worst, 1e-12);
}

#[test]
fn acceptance_08_coherent_dominates_generic() {
    // strict separation at the quoted point
    let x = OverlapSquared::new(0.25).unwrap();
    let generic = success_prob_pure(x, EnsembleSpec::new(1, 1, 2).unwrap()).value();
    let coherent = success_prob_coherent(
        &CoherentPair::new(
            Complex64::new(0.0, 0.0),
            Complex64::new((-0.25f64.ln()).sqrt(), 0.0),
            1,
            1,
        )
        .unwrap(),
    )
    .value();
    assert_eq!(generic, 0.375);
    assert!(
        (coherent - 0.5).abs() <= 1e-12,
        "coherent at x=0.25: {coherent}"
    );
    assert!(coherent > generic);

    let mut worst = 0.0f64;
    for k in 1..=4u32 {
        let spec = EnsembleSpec::new(k, k, 2).unwrap();
        for x in OverlapSquared::unit_grid(1001) {
            let generic = success_prob_pure(x, spec).value();
            let coherent = if x.value() > 0.0 {
                success_prob_coherent(
                    &CoherentPair::new(
                        Complex64::new(0.0, 0.0),
                        Complex64::new((-x.value().ln()).sqrt(), 0.0),
                        k,
                        k,
                    )
                    .unwrap(),
                )
                .value()
            } else {
                1.0
            };
            worst = worst.max(generic - coherent);
        }
    }
    report("08 coherent dominance over generic", worst.max(0.0), 1e-12);
}

#[test]
fn acceptance_09_detection_sampling() {
    let mut worst_z = 0.0f64;
    for (case, mean_photons) in [0.5f64, 1.0, 4.0].into_iter().enumerate() {
        let amplitude = Complex64::new(mean_photons.sqrt(), 0.0);
        let expected = 1.0 - (-mean_photons).exp();
        let estimate = mc_estimate(100_000, 0xACC0 + 9 + case as u64, 1, |rng| {
            f64::from(u8::from(sample_detection(amplitude, rng).clicked))
        });
        let binomial_se = (expected * (1.0 - expected) / 100_000.0).sqrt();
        worst_z = worst_z.max((estimate.mean - expected).abs() / binomial_se);
    }
    report("09 detection sampling (z-score)", worst_z, 3.0);
}

#[test]
fn acceptance_10_limits() {
    // finite-l convergence toward 1 - x; the exact error is (1-x)/(l+1),
    // well under the stated 2/l bound
    let mut worst_excess = f64::NEG_INFINITY;
    for l in [1u32, 2, 5, 10, 100, 1_000, 10_000] {
        let spec = EnsembleSpec::new(1, l, 2).unwrap();
        for x in OverlapSquared::unit_grid(101) {
            let err = (success_prob_pure(x, spec).value() - (1.0 - x.value())).abs();
            worst_excess = worst_excess.max(err - 2.0 / f64::from(l));
        }
    }
    report(
        "10a one-vs-many convergence bound",
        worst_excess.max(0.0),
        0.0,
    );

    let threshold_k =
        (1..=64u32).find(|&k| avg_success(EnsembleSpec::new(k, k, 2).unwrap()).value() > 0.95);
    println!(
        "criterion 10b balanced average exceeds 0.95 at k = {:?} (<= 64)",
        threshold_k
    );
    assert!(threshold_k.is_some(), "no k <= 64 exceeds 0.95");
    // derived from the exact ratio: 1 - (2k+1)/(k+1)^2 first exceeds 0.95 at k = 39
    assert_eq!(threshold_k, Some(39));
    report("10b balanced average exceeds 0.95 by k=64", 0.0, 0.0);
}

#[test]
fn acceptance_copy_tradeoff_is_exact() {
    // supporting identity for the coherent criteria: harmonic-mean ordering
    // by exact cross multiplication
    let mut ok = true;
    for k in 1..=100u32 {
        for l in 1..=100u32 {
            ok &= copy_tradeoff(k + 1, l, k, l) == Ordering::Greater;
            ok &= copy_tradeoff(k, l, l, k) == Ordering::Equal;
        }
    }
    report(
        "supplement copy-tradeoff ordering",
        if ok { 0.0 } else { 1.0 },
        0.0,
    );
}

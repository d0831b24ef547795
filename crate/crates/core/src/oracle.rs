//! Independent brute-force verification engines.
//!
//! Everything in this module deliberately avoids the combinatorial
//! shortcuts used by the closed forms in [`crate::finite`]:
//!
//! - [`sym_overlap_permutation_sum`] evaluates the symmetric-projector
//!   overlap by enumerating every permutation and multiplying single-system
//!   inner products, with no caching and no crossing-count bookkeeping.
//! - [`sym_projector_matrix`] builds the dense projector as the literal
//!   average of permutation matrices on small tensor products.
//! - [`mc_average_success`] and [`mc_mean_overlap_power`] estimate the
//!   uniform-measure averages by sampling.
//! - [`coherent_failure_quadrature`] integrates the coherent failure
//!   integral on a 2-D grid, checking both the coherent closed form and its
//!   normalization constant.
//! - [`fock_overlap_check`] recovers the coherent overlap law from
//!   truncated number-basis expansions.
//!
//! Hard caps keep the exponential-cost oracles at desk scale; they exist to
//! verify, not to perform.

use itertools::Itertools;
use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::finite::{success_prob_pure, EnsembleSpec, OverlapSquared};

/// Largest `k + l` accepted by the permutation-sum oracle (8! = 40320 terms).
pub const MAX_PERMUTATION_SYSTEMS: u32 = 8;

/// Largest tensor-product dimension `d^n` accepted by the matrix oracle.
pub const MAX_MATRIX_DIM: u64 = 1024;

const NORM_TOL: f64 = 1e-12;

/// A pure state as an explicit amplitude vector, unit-norm within 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyState);
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "states live in different spaces");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|<self|other>|^2`, clamped against floating round-off.
    pub fn overlap_squared(&self, other: &PureState) -> OverlapSquared {
        OverlapSquared::new(self.inner(other).norm_sqr())
            .expect("overlap of unit vectors lies in [0, 1]")
    }
}

/// A state distributed by the unitarily invariant measure on the unit
/// sphere of `d`-dimensional complex space: 2d independent standard
/// normals, formed into d complex amplitudes and normalized.
///
/// For `d = 1` the normalized representative `(1)` is returned.
pub fn haar_random_state<R: Rng + ?Sized>(d: u32, rng: &mut R) -> PureState {
    assert!(d >= 1, "dimension must be at least 1");
    if d == 1 {
        return PureState {
            amplitudes: vec![Complex64::new(1.0, 0.0)],
        };
    }
    loop {
        let amplitudes: Vec<Complex64> = (0..d)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(re, im)
            })
            .collect();
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr > 0.0 {
            let norm = norm_sqr.sqrt();
            return PureState {
                amplitudes: amplitudes.into_iter().map(|a| a / norm).collect(),
            };
        }
    }
}

/// An explicit product state: `boundary` copies of one factor followed by
/// the remaining copies of another.
#[derive(Debug, Clone)]
pub struct ProductState {
    factors: Vec<PureState>,
    boundary: usize,
}

impl ProductState {
    /// `|psi1>^k (x) |psi2>^l`, the comparator input.
    pub fn comparator_input(psi1: &PureState, psi2: &PureState, k: u32, l: u32) -> Self {
        assert!(k >= 1 && l >= 1, "copy counts must be positive");
        assert_eq!(psi1.dim(), psi2.dim(), "states live in different spaces");
        let mut factors = vec![psi1.clone(); k as usize];
        factors.extend(std::iter::repeat_n(psi2.clone(), l as usize));
        Self {
            factors,
            boundary: k as usize,
        }
    }

    /// `|psi>^n`, the identical-copy input of the no-error condition.
    pub fn identical_copies(psi: &PureState, n: u32) -> Self {
        assert!(n >= 1, "need at least one copy");
        Self {
            factors: vec![psi.clone(); n as usize],
            boundary: n as usize,
        }
    }

    pub fn factors(&self) -> &[PureState] {
        &self.factors
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// Full tensor-product amplitude vector, factor 0 most significant.
    pub fn tensor_vector(&self) -> Vec<Complex64> {
        let mut acc = vec![Complex64::new(1.0, 0.0)];
        for factor in &self.factors {
            let mut next = Vec::with_capacity(acc.len() * factor.dim());
            for &a in &acc {
                for &b in factor.amplitudes() {
                    next.push(a * b);
                }
            }
            acc = next;
        }
        acc
    }
}

/// `<Psi| P_sym |Psi>` for `|Psi> = |psi1>^k (x) |psi2>^l`, by enumerating
/// all `(k+l)!` permutations and taking each term as a product of
/// single-system inner products.
///
/// Inner products are recomputed for every permutation; no crossing-count
/// shortcut enters, so this is an independent oracle for the closed form.
/// Rejects `k + l > 8`.
pub fn sym_overlap_permutation_sum(
    psi1: &PureState,
    psi2: &PureState,
    k: u32,
    l: u32,
) -> Result<f64> {
    assert!(k >= 1 && l >= 1, "copy counts must be positive");
    let n = k + l;
    if n > MAX_PERMUTATION_SYSTEMS {
        return Err(Error::PermutationCapExceeded {
            got: n,
            max: MAX_PERMUTATION_SYSTEMS,
        });
    }
    let n = n as usize;
    let factors: Vec<&PureState> = (0..n)
        .map(|i| if i < k as usize { psi1 } else { psi2 })
        .collect();
    let mut sum = Complex64::new(0.0, 0.0);
    for perm in (0..n).permutations(n) {
        let mut term = Complex64::new(1.0, 0.0);
        for (i, &target) in perm.iter().enumerate() {
            term *= factors[i].inner(factors[target]);
        }
        sum += term;
    }
    let factorial: f64 = (1..=n as u64).product::<u64>() as f64;
    Ok(sum.re / factorial)
}

/// Dense projector onto the completely symmetric subspace of `n` systems of
/// dimension `d`: the average of all `n!` permutation matrices acting on
/// tensor-product basis indices. Rejects `d^n > 1024`.
pub fn sym_projector_matrix(d: u32, n: u32) -> Result<Array2<Complex64>> {
    assert!(d >= 1 && n >= 1, "need d >= 1 and n >= 1");
    let dim = (u64::from(d))
        .checked_pow(n)
        .filter(|&dim| dim <= MAX_MATRIX_DIM)
        .ok_or(Error::MatrixCapExceeded {
            got: u64::from(d).saturating_pow(n),
            max: MAX_MATRIX_DIM,
        })? as usize;

    let n = n as usize;
    let d = d as usize;
    let factorial: f64 = (1..=n as u64).product::<u64>() as f64;
    let weight = Complex64::new(1.0 / factorial, 0.0);

    // digits[col] = base-d expansion of col, most significant first
    let digits: Vec<Vec<usize>> = (0..dim)
        .map(|col| {
            let mut rem = col;
            let mut ds = vec![0usize; n];
            for slot in (0..n).rev() {
                ds[slot] = rem % d;
                rem /= d;
            }
            ds
        })
        .collect();

    let mut projector = Array2::from_elem((dim, dim), Complex64::new(0.0, 0.0));
    for perm in (0..n).permutations(n) {
        for (col, col_digits) in digits.iter().enumerate() {
            let mut row = 0usize;
            let mut permuted = vec![0usize; n];
            for (slot, &target) in perm.iter().enumerate() {
                permuted[target] = col_digits[slot];
            }
            for &digit in &permuted {
                row = row * d + digit;
            }
            projector[[row, col]] += weight;
        }
    }
    Ok(projector)
}

/// `<v| op |v>` (real part) for a dense operator on a tensor-product space.
pub fn expectation(op: &Array2<Complex64>, state: &[Complex64]) -> f64 {
    assert_eq!(op.nrows(), state.len(), "operator/state dimension mismatch");
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, row) in op.rows().into_iter().enumerate() {
        let mut row_sum = Complex64::new(0.0, 0.0);
        for (j, &entry) in row.iter().enumerate() {
            row_sum += entry * state[j];
        }
        acc += state[i].conj() * row_sum;
    }
    acc.re
}

/// A Monte Carlo estimate with its reproducibility contract: identical
/// `(seed, samples, worker_count)` yields an identical mean bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MCEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Deterministic substream for worker `stream` of a run seeded by `seed`.
pub fn seeded_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stream.to_le_bytes());
    key[16..24].copy_from_slice(&0x9e37_79b9_7f4a_7c15u64.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Runs `sample_fn` for `samples` draws partitioned deterministically
/// across `workers` substreams and reduced in fixed order, returning the
/// sample mean and the standard error of the mean.
pub fn mc_estimate<F>(samples: u64, seed: u64, workers: usize, sample_fn: F) -> MCEstimate
where
    F: Fn(&mut dyn RngCore) -> f64 + Sync,
{
    assert!(samples >= 1, "need at least one sample");
    assert!(workers >= 1, "need at least one worker");
    let workers_u = workers as u64;
    let counts: Vec<u64> = (0..workers_u)
        .map(|w| samples / workers_u + u64::from(w < samples % workers_u))
        .collect();

    let run_worker = |w: usize| -> (f64, f64) {
        let mut rng = seeded_stream(seed, w as u64);
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..counts[w] {
            let v = sample_fn(&mut rng);
            sum += v;
            sum_sq += v * v;
        }
        (sum, sum_sq)
    };

    let partials: Vec<(f64, f64)> = if workers == 1 {
        vec![run_worker(0)]
    } else {
        std::thread::scope(|scope| {
            let run_ref = &run_worker;
            let handles: Vec<_> = (0..workers)
                .map(|w| scope.spawn(move || run_ref(w)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };

    let (sum, sum_sq) = partials
        .iter()
        .fold((0.0, 0.0), |(a, b), &(s, q)| (a + s, b + q));
    let n = samples as f64;
    let mean = sum / n;
    let std_error = if samples > 1 {
        let variance = ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
        (variance / n).sqrt()
    } else {
        0.0
    };
    MCEstimate {
        mean,
        std_error,
        samples,
        seed,
    }
}

/// Monte Carlo estimate of the average success probability: independent
/// uniformly random pairs fed through the closed form.
pub fn mc_average_success(
    spec: EnsembleSpec,
    samples: u64,
    seed: u64,
    workers: usize,
) -> MCEstimate {
    mc_estimate(samples, seed, workers, |rng| {
        let a = haar_random_state(spec.d(), rng);
        let b = haar_random_state(spec.d(), rng);
        success_prob_pure(a.overlap_squared(&b), spec).value()
    })
}

/// Monte Carlo estimate of `E[|<psi1|psi2>|^{2m}]` over independent
/// uniformly random pairs in dimension `d`.
pub fn mc_mean_overlap_power(
    d: u32,
    m: u32,
    samples: u64,
    seed: u64,
    workers: usize,
) -> MCEstimate {
    mc_estimate(samples, seed, workers, |rng| {
        let a = haar_random_state(d, rng);
        let b = haar_random_state(d, rng);
        a.overlap_squared(&b).value().powi(m as i32)
    })
}

/// One minus the coherent failure integral
/// `(k+l)/pi * integral exp(-k|a1-b|^2 - l|a2-b|^2) d(Re b) d(Im b)`,
/// evaluated by tensor-grid trapezoid quadrature on a square of half-width
/// `half_width / sqrt(k+l)` per axis centered at the integrand's peak
/// `(k a1 + l a2)/(k+l)`.
///
/// The raw product integrand is evaluated pointwise (never separated
/// analytically), so this validates both the closed form and the
/// normalization constant of the failure projector.
pub fn coherent_failure_quadrature(
    alpha1: Complex64,
    alpha2: Complex64,
    k: u32,
    l: u32,
    half_width: f64,
    points_per_axis: u32,
) -> Result<f64> {
    assert!(k >= 1 && l >= 1, "copy counts must be positive");
    assert!(
        points_per_axis >= 16,
        "quadrature needs at least 16 points per axis"
    );
    if half_width <= 0.0 || half_width.is_nan() {
        return Err(Error::InvalidHalfWidth(half_width));
    }
    let kf = f64::from(k);
    let lf = f64::from(l);
    let total = kf + lf;
    let center = (alpha1 * kf + alpha2 * lf) / total;
    let hw = half_width / total.sqrt();
    let points = points_per_axis as usize;
    let h = 2.0 * hw / (points - 1) as f64;
    let edge_weight = |i: usize| if i == 0 || i == points - 1 { 0.5 } else { 1.0 };

    let mut integral = 0.0;
    for i in 0..points {
        let re = center.re - hw + i as f64 * h;
        let wi = edge_weight(i);
        for j in 0..points {
            let im = center.im - hw + j as f64 * h;
            let beta = Complex64::new(re, im);
            let exponent = -kf * (alpha1 - beta).norm_sqr() - lf * (alpha2 - beta).norm_sqr();
            integral += wi * edge_weight(j) * exponent.exp();
        }
    }
    integral *= h * h;
    Ok(1.0 - total / std::f64::consts::PI * integral)
}

/// `|<alpha|beta>|^2` from truncated number-basis expansions
/// `e^{-|a|^2/2} sum_{n<=cutoff} a^n/sqrt(n!) |n>`.
///
/// Rejects amplitudes with `|a| > sqrt(cutoff)/2`, where the truncated tail
/// would no longer be negligible.
pub fn fock_overlap_check(alpha: Complex64, beta: Complex64, cutoff: u32) -> Result<f64> {
    assert!(cutoff >= 1, "cutoff must be at least 1");
    let limit = (f64::from(cutoff)).sqrt() / 2.0;
    for amp in [alpha, beta] {
        let magnitude = amp.norm();
        if magnitude > limit {
            return Err(Error::FockTruncationUnsafe {
                magnitude,
                cutoff,
                limit,
            });
        }
    }
    // <alpha|beta> = e^{-(|a|^2+|b|^2)/2} sum_n (conj(a) b)^n / n!
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 1..=cutoff {
        term *= alpha.conj() * beta / f64::from(n);
        sum += term;
    }
    let envelope = (-(alpha.norm_sqr() + beta.norm_sqr()) / 2.0).exp();
    Ok((sum * envelope).norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn qubit(a: f64, b: f64) -> PureState {
        PureState::new(vec![Complex64::new(a, 0.0), Complex64::new(b, 0.0)]).unwrap()
    }

    #[test]
    fn pure_state_rejects_bad_norm() {
        assert!(PureState::new(vec![Complex64::new(0.5, 0.0)]).is_err());
        assert!(PureState::new(vec![]).is_err());
    }

    #[test]
    fn haar_dimension_one_is_fixed() {
        let mut rng = seeded_stream(7, 0);
        let s = haar_random_state(1, &mut rng);
        assert_eq!(s.amplitudes(), &[Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn haar_states_are_normalized_and_reproducible() {
        let mut rng1 = seeded_stream(99, 0);
        let mut rng2 = seeded_stream(99, 0);
        for d in [2u32, 3, 5] {
            let a = haar_random_state(d, &mut rng1);
            let b = haar_random_state(d, &mut rng2);
            assert_eq!(a.amplitudes(), b.amplitudes());
            let norm: f64 = a.amplitudes().iter().map(|z| z.norm_sqr()).sum();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn haar_basis_moments_are_uniform() {
        // invariance of the measure: each basis weight averages to 1/d
        let est = mc_estimate(50_000, 13, 1, |rng| {
            haar_random_state(2, rng).amplitudes()[0].norm_sqr()
        });
        assert!(
            (est.mean - 0.5).abs() <= 3.0 * est.std_error,
            "mean {} +- {}",
            est.mean,
            est.std_error
        );
    }

    #[test]
    fn permutation_sum_identical_states_is_one() {
        let mut rng = seeded_stream(3, 0);
        for (k, l) in [(1, 1), (2, 1), (3, 2)] {
            let psi = haar_random_state(3, &mut rng);
            let overlap = sym_overlap_permutation_sum(&psi, &psi, k, l).unwrap();
            assert_abs_diff_eq!(overlap, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn permutation_sum_orthogonal_single_copies() {
        let e0 = qubit(1.0, 0.0);
        let e1 = qubit(0.0, 1.0);
        let overlap = sym_overlap_permutation_sum(&e0, &e1, 1, 1).unwrap();
        assert_abs_diff_eq!(overlap, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn permutation_sum_matches_closed_form() {
        let mut rng = seeded_stream(17, 0);
        let spec = EnsembleSpec::new(2, 1, 2).unwrap();
        for _ in 0..20 {
            let a = haar_random_state(2, &mut rng);
            let b = haar_random_state(2, &mut rng);
            let brute = sym_overlap_permutation_sum(&a, &b, 2, 1).unwrap();
            let closed = 1.0 - success_prob_pure(a.overlap_squared(&b), spec).value();
            assert_abs_diff_eq!(brute, closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn permutation_sum_rejects_large_ensembles() {
        let e0 = qubit(1.0, 0.0);
        assert!(matches!(
            sym_overlap_permutation_sum(&e0, &e0, 5, 4),
            Err(Error::PermutationCapExceeded { got: 9, .. })
        ));
    }

    #[test]
    fn projector_traces_match_symmetric_dimensions() {
        for (d, n, expected) in [(2u32, 2u32, 3.0), (2, 3, 4.0), (3, 2, 6.0)] {
            let p = sym_projector_matrix(d, n).unwrap();
            let trace: Complex64 = p.diag().iter().sum();
            assert_abs_diff_eq!(trace.re, expected, epsilon = 1e-10);
            assert_abs_diff_eq!(trace.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn projector_is_idempotent_and_hermitian() {
        let p = sym_projector_matrix(2, 3).unwrap();
        let p2 = p.dot(&p);
        let mut max_idem = 0.0f64;
        let mut max_herm = 0.0f64;
        for i in 0..p.nrows() {
            for j in 0..p.ncols() {
                max_idem = max_idem.max((p2[[i, j]] - p[[i, j]]).norm());
                max_herm = max_herm.max((p[[i, j]] - p[[j, i]].conj()).norm());
            }
        }
        assert!(max_idem <= 1e-12, "idempotency residual {max_idem}");
        assert!(max_herm <= 1e-12, "hermiticity residual {max_herm}");
    }

    #[test]
    fn projector_rejects_large_spaces() {
        assert!(sym_projector_matrix(2, 11).is_err());
        assert!(sym_projector_matrix(33, 2).is_err());
    }

    #[test]
    fn matrix_and_permutation_oracles_agree() {
        let mut rng = seeded_stream(21, 0);
        let a = haar_random_state(2, &mut rng);
        let b = haar_random_state(2, &mut rng);
        let product = ProductState::comparator_input(&a, &b, 2, 1);
        let p = sym_projector_matrix(2, 3).unwrap();
        let via_matrix = expectation(&p, &product.tensor_vector());
        let via_perms = sym_overlap_permutation_sum(&a, &b, 2, 1).unwrap();
        assert_abs_diff_eq!(via_matrix, via_perms, epsilon = 1e-12);
    }

    #[test]
    fn no_error_condition_on_identical_copies() {
        let mut rng = seeded_stream(5, 0);
        let p = sym_projector_matrix(2, 3).unwrap();
        for _ in 0..20 {
            let psi = haar_random_state(2, &mut rng);
            let vec = ProductState::identical_copies(&psi, 3).tensor_vector();
            let leak = 1.0 - expectation(&p, &vec);
            assert!(leak.abs() <= 1e-12, "leak {leak}");
        }
    }

    #[test]
    fn mc_estimates_are_deterministic() {
        let spec = EnsembleSpec::new(1, 1, 2).unwrap();
        let first = mc_average_success(spec, 500, 11, 4);
        let second = mc_average_success(spec, 500, 11, 4);
        assert_eq!(first.mean.to_bits(), second.mean.to_bits());
        assert_eq!(first.std_error.to_bits(), second.std_error.to_bits());

        let single = mc_average_success(spec, 1, 11, 1);
        assert_eq!(single.std_error, 0.0);
        assert_eq!(single.samples, 1);
    }

    #[test]
    fn mc_mean_overlap_power_zeroth_moment_is_exact() {
        let est = mc_mean_overlap_power(2, 0, 100, 1, 2);
        assert_eq!(est.mean, 1.0);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn quadrature_matches_closed_form_anchors() {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);

        let same = coherent_failure_quadrature(one, one, 2, 3, 8.0, 201).unwrap();
        assert_abs_diff_eq!(same, 0.0, epsilon = 1e-8);

        let balanced = coherent_failure_quadrature(zero, one, 1, 1, 8.0, 201).unwrap();
        assert_abs_diff_eq!(balanced, 1.0 - (-0.5f64).exp(), epsilon = 1e-8);

        let skewed =
            coherent_failure_quadrature(zero, Complex64::new(1.0, 1.0), 2, 1, 8.0, 201).unwrap();
        assert_abs_diff_eq!(skewed, 1.0 - (-4.0f64 / 3.0).exp(), epsilon = 1e-8);
    }

    #[test]
    fn quadrature_rejects_bad_half_width() {
        let zero = Complex64::new(0.0, 0.0);
        assert!(coherent_failure_quadrature(zero, zero, 1, 1, 0.0, 64).is_err());
        assert!(coherent_failure_quadrature(zero, zero, 1, 1, -1.0, 64).is_err());
    }

    #[test]
    fn fock_overlap_matches_gaussian_law() {
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(fock_overlap_check(zero, zero, 4).unwrap(), 1.0);

        let one = Complex64::new(1.0, 0.0);
        assert_abs_diff_eq!(
            fock_overlap_check(zero, one, 40).unwrap(),
            (-1.0f64).exp(),
            epsilon = 1e-10
        );
        assert_abs_diff_eq!(
            fock_overlap_check(one, -one, 60).unwrap(),
            (-4.0f64).exp(),
            epsilon = 1e-10
        );
    }

    #[test]
    fn fock_overlap_rejects_unsafe_truncation() {
        let big = Complex64::new(4.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert!(matches!(
            fock_overlap_check(big, zero, 40),
            Err(Error::FockTruncationUnsafe { .. })
        ));
    }
}

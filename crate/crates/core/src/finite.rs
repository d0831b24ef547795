//! Closed-form comparison results for finite-dimensional ensembles.
//!
//! The optimal unambiguous comparator for `k` copies of one unknown pure
//! state and `l` copies of another is the projective pair built from the
//! completely symmetric subspace. Its success probability depends on the
//! states only through `x = |<psi1|psi2>|^2`:
//!
//! ```text
//! P(x, k, l) = 1 - sum_{m=0}^{min(k,l)} C(k,m) C(l,m) / C(k+l,k) * x^m
//! ```
//!
//! Everything here is evaluated with exact big-integer rationals (the
//! overlap enters as its exact dyadic value) and converted to floating
//! point once, at the end. This keeps copy counts up to the hundreds safe
//! from overflow and makes symmetry and difference identities exact.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{binom, sym_dim, SignedPolynomial};
use crate::error::{Error, Result};

/// Tolerance within which a computed probability may stray outside [0, 1]
/// from floating round-off before it is treated as a bug.
pub const PROB_CLAMP_TOL: f64 = 1e-14;

/// Copy counts and Hilbert-space dimension of one comparison instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnsembleSpec {
    k: u32,
    l: u32,
    d: u32,
}

impl EnsembleSpec {
    /// Requires `k >= 1`, `l >= 1`, `d >= 2`.
    pub fn new(k: u32, l: u32, d: u32) -> Result<Self> {
        if k < 1 || l < 1 {
            return Err(Error::InvalidCopyCounts { k, l });
        }
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        Ok(Self { k, l, d })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn total(&self) -> u32 {
        self.k + self.l
    }
}

/// The squared overlap `x = |<psi1|psi2>|^2`, confined to [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct OverlapSquared(f64);

impl OverlapSquared {
    /// Accepts values in [0, 1]; excursions within [`PROB_CLAMP_TOL`] are
    /// clamped, anything further out is rejected.
    pub fn new(x: f64) -> Result<Self> {
        if x.is_nan() || !(-PROB_CLAMP_TOL..=1.0 + PROB_CLAMP_TOL).contains(&x) {
            return Err(Error::OverlapOutOfRange(x));
        }
        Ok(Self(x.clamp(0.0, 1.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Uniform grid on [0, 1] including both endpoints.
    pub fn unit_grid(points: usize) -> impl Iterator<Item = OverlapSquared> {
        assert!(points >= 2, "grid needs at least two points");
        let last = (points - 1) as f64;
        (0..points).map(move |i| OverlapSquared(i as f64 / last))
    }
}

/// A probability, confined to [0, 1] with the same clamping policy as
/// [`OverlapSquared`]: round-off excursions within 1e-14 are clamped,
/// larger violations are errors.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || !(-PROB_CLAMP_TOL..=1.0 + PROB_CLAMP_TOL).contains(&p) {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        Ok(Self(p.clamp(0.0, 1.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Converts a big rational to the nearest `f64`, robust to numerators and
/// denominators far beyond the `f64` exponent range (where a naive
/// numerator/denominator conversion would produce `inf/inf`).
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let mut n = r.numer().abs().into_parts().1;
    let mut d = r.denom().abs().into_parts().1;
    // Scale so the integer quotient carries ~63 significant bits, then
    // undo the scaling in floating point.
    let shift = n.bits() as i64 - d.bits() as i64 - 63;
    if shift > 0 {
        d <<= shift as u64;
    } else {
        n <<= (-shift) as u64;
    }
    let q = (n / d).to_f64().expect("quotient fits in 64 bits");
    let magnitude = scale_by_pow2(q, shift);
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

/// `x * 2^exp` in steps small enough to avoid overflowing the scale factor.
fn scale_by_pow2(x: f64, exp: i64) -> f64 {
    let mut result = x;
    let mut e = exp;
    while e > 1000 {
        result *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        result *= 2f64.powi(-1000);
        e += 1000;
    }
    result * 2f64.powi(e as i32)
}

/// Exact coefficients of the failure polynomial in `x`: the coefficient of
/// `x^m` is `C(k,m) C(l,m) / C(k+l,k)`. The coefficients sum to 1.
pub fn failure_coeffs(k: u32, l: u32) -> Vec<BigRational> {
    let denom = BigInt::from(binom(u64::from(k) + u64::from(l), i64::from(k)));
    (0..=k.min(l))
        .map(|m| {
            let num = binom(u64::from(k), i64::from(m)) * binom(u64::from(l), i64::from(m));
            BigRational::new(BigInt::from(num), denom.clone())
        })
        .collect()
}

/// Numerator and denominator of the failure sum over the common
/// denominator `C(k+l,k) * q^deg`, with `x = p/q` at its exact dyadic
/// value (`q` a power of two). Exact but unreduced; one gcd at most is
/// spent per public result.
fn failure_parts(x: OverlapSquared, k: u32, l: u32) -> (BigUint, BigUint) {
    let xr = BigRational::from_float(x.value()).expect("overlap is finite");
    let p = xr.numer().magnitude().clone();
    let shift = xr
        .denom()
        .magnitude()
        .trailing_zeros()
        .expect("dyadic denominator is nonzero");
    let degree = u64::from(k.min(l));

    let mut numerator = BigUint::zero();
    let mut p_power = BigUint::one();
    for m in 0..=degree {
        let coeff = binom(u64::from(k), m as i64) * binom(u64::from(l), m as i64);
        numerator += (coeff * &p_power) << (shift * (degree - m));
        p_power *= &p;
    }
    let denominator = binom(u64::from(k) + u64::from(l), i64::from(k)) << (shift * degree);
    (numerator, denominator)
}

/// Failure (inconclusive-outcome) probability of the optimal comparator,
/// as an exact rational with `x` entering at its exact dyadic value.
pub fn failure_overlap(x: OverlapSquared, k: u32, l: u32) -> BigRational {
    let (numerator, denominator) = failure_parts(x, k, l);
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

fn success_value(x: OverlapSquared, k: u32, l: u32) -> f64 {
    let (numerator, denominator) = failure_parts(x, k, l);
    // failure <= 1 for x in [0, 1], so the difference stays nonnegative
    let success = BigRational::new_raw(
        BigInt::from(&denominator - &numerator),
        BigInt::from(denominator),
    );
    ratio_to_f64(&success)
}

/// Optimal probability of revealing a difference between two states with
/// squared overlap `x`, given `k` and `l` copies.
///
/// The dimension in `spec` does not enter the formula; it is accepted for
/// interface uniformity with [`avg_success`].
pub fn success_prob_pure(x: OverlapSquared, spec: EnsembleSpec) -> Probability {
    Probability::new(success_value(x, spec.k, spec.l))
        .expect("closed form stays within the unit interval")
}

/// Failure probability averaged over independent uniformly random pure
/// state pairs, as the exact dimension ratio
/// `dim_sym(d, k+l) / (dim_sym(d, k) * dim_sym(d, l))`.
pub fn avg_failure_dimension_ratio(spec: EnsembleSpec) -> BigRational {
    let num = sym_dim(spec.d, u64::from(spec.total())).value().clone();
    let den =
        sym_dim(spec.d, u64::from(spec.k)).value() * sym_dim(spec.d, u64::from(spec.l)).value();
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Average failure probability computed along the independent algebraic
/// route: termwise mean of the failure polynomial,
/// `sum_m C(k,m) C(l,m) / (C(k+l,k) C(m+d-1,d-1))`.
///
/// Closing this sum into the dimension ratio of
/// [`avg_failure_dimension_ratio`] is a binomial-convolution identity; the
/// two routes are kept separate so the identity can be checked exactly.
pub fn avg_failure_moment_sum(spec: EnsembleSpec) -> BigRational {
    let pair_denom = BigInt::from(binom(
        u64::from(spec.k) + u64::from(spec.l),
        i64::from(spec.k),
    ));
    (0..=spec.k.min(spec.l))
        .map(|m| {
            let num =
                binom(u64::from(spec.k), i64::from(m)) * binom(u64::from(spec.l), i64::from(m));
            let moment_denom = BigInt::from(sym_dim(spec.d, u64::from(m)).value().clone());
            BigRational::new(BigInt::from(num), &pair_denom * moment_denom)
        })
        .sum()
}

/// Average success probability over independent uniformly random pairs:
/// one minus the symmetric-subspace dimension ratio.
pub fn avg_success(spec: EnsembleSpec) -> Probability {
    let p = BigRational::one() - avg_failure_dimension_ratio(spec);
    Probability::new(ratio_to_f64(&p)).expect("dimension ratio lies in (0, 1]")
}

/// Gain from one additional copy of the first state:
/// `P(x, k+1, l) - P(x, k, l)`, together with the coefficient list of that
/// difference as a polynomial in `x`.
///
/// The polynomial is formed by exact subtraction of the two failure
/// polynomials, which automatically contains the extra highest-order term
/// that appears when `k < l`.
pub fn delta_extra_copy(x: OverlapSquared, spec: EnsembleSpec) -> (f64, SignedPolynomial) {
    let value = success_value(x, spec.k + 1, spec.l) - success_value(x, spec.k, spec.l);
    (value, delta_poly(spec.k, spec.l))
}

/// Coefficients of `P(x, k+1, l) - P(x, k, l)` as a polynomial in `x`.
pub fn delta_poly(k: u32, l: u32) -> SignedPolynomial {
    poly_difference(&failure_coeffs(k, l), &failure_coeffs(k + 1, l))
}

/// Gain from rebalancing a fixed total of `total` copies:
/// `P(x, k+1, total-k-1) - P(x, k, total-k)`.
///
/// Requires `1 <= k <= total - 2` so both splits are valid ensembles.
pub fn lambda_split(x: OverlapSquared, k: u32, total: u32) -> Result<f64> {
    check_split(k, total)?;
    Ok(success_value(x, k + 1, total - k - 1) - success_value(x, k, total - k))
}

/// Coefficient list of the rebalancing gain as a polynomial in `x`.
pub fn lambda_poly(k: u32, total: u32) -> Result<SignedPolynomial> {
    check_split(k, total)?;
    Ok(poly_difference(
        &failure_coeffs(k, total - k),
        &failure_coeffs(k + 1, total - k - 1),
    ))
}

fn check_split(k: u32, total: u32) -> Result<()> {
    if k < 1 || k + 2 > total {
        return Err(Error::InvalidSplit { k, n: total });
    }
    Ok(())
}

/// The success-maximizing number of copies of the first state when `total`
/// copies are available in all: `floor(total / 2)`.
pub fn optimal_split(total: u32) -> Result<u32> {
    if total < 2 {
        return Err(Error::InvalidTotal(total));
    }
    Ok(total / 2)
}

/// Success probability in the limit of one copy of the first state against
/// infinitely many of the second: `1 - x`.
///
/// The finite-`l` value is `(1 - x) * l / (l + 1)`, so convergence is
/// `O(1/l)`; [`success_prob_pure`] with large `l` approaches this limit.
pub fn limit_one_vs_infinity(x: OverlapSquared) -> Probability {
    Probability::new(1.0 - x.value()).expect("1 - x lies in [0, 1]")
}

/// Mean of `x^m = |<psi1|psi2>|^{2m}` over independent uniformly random
/// pure state pairs in dimension `d`: `1 / C(m+d-1, d-1)`.
pub fn mean_overlap_power(d: u32, m: u64) -> Probability {
    assert!(d >= 2, "dimension must be at least 2");
    let p = BigRational::new(BigInt::one(), BigInt::from(sym_dim(d, m).value().clone()));
    Probability::new(ratio_to_f64(&p)).expect("reciprocal dimension lies in (0, 1]")
}

fn poly_difference(a: &[BigRational], b: &[BigRational]) -> SignedPolynomial {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    let coeffs = (0..len)
        .map(|m| {
            let av = a.get(m).unwrap_or(&zero);
            let bv = b.get(m).unwrap_or(&zero);
            ratio_to_f64(&(av - bv))
        })
        .collect();
    SignedPolynomial::new(coeffs)
}

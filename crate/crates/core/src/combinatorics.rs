//! Exact integer combinatorics and polynomial sign certificates.
//!
//! Binomials and symmetric-subspace dimensions are kept in arbitrary
//! precision so that ratios of large binomials can be formed exactly and
//! converted to floating point only at the last step. The module also
//! provides [`SignedPolynomial`], carrying the certificate used by the
//! copy-count monotonicity arguments: a polynomial whose coefficients are
//! nonnegative up to some index and nonpositive afterwards, and which sums
//! to zero, is nonnegative on all of `[0, 1]`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Binomial coefficient C(n, r) in arbitrary precision.
///
/// Returns 0 when `r` is negative or exceeds `n`, so the function is total.
pub fn binom(n: u64, r: i64) -> BigUint {
    if r < 0 || r as u64 > n {
        return BigUint::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = BigUint::one();
    // acc stays integral at every step: after the i-th round it equals C(n, i+1).
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of the completely symmetric subspace of `n` systems of
/// dimension `d`: C(n + d - 1, d - 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDim(BigUint);

impl SymDim {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl std::fmt::Display for SymDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Symmetric-subspace dimension for `n` copies of a `d`-dimensional system.
///
/// Defined for any `d >= 1`, `n >= 0`; the result is always at least 1.
pub fn sym_dim(d: u32, n: u64) -> SymDim {
    assert!(d >= 1, "dimension must be at least 1");
    SymDim(binom(n + u64::from(d) - 1, i64::from(d) - 1))
}

/// Real polynomial `Q(x) = sum a_m x^m` with sign-pattern metadata.
///
/// The certificate of interest: if the coefficients are nonnegative up to
/// some index and nonpositive after it, and `Q(1) = 0`, then `Q(x) >= 0` on
/// `[0, 1]`. The checks here are numeric (tolerance-scaled), not symbolic.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedPolynomial {
    coefficients: Vec<f64>,
}

impl SignedPolynomial {
    /// Wraps a coefficient list; index `m` holds the coefficient of `x^m`.
    pub fn new(coefficients: Vec<f64>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "polynomial needs at least one coefficient"
        );
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c)
    }

    /// Largest coefficient magnitude, used to scale tolerances.
    fn scale(&self) -> f64 {
        let m = self
            .coefficients
            .iter()
            .fold(0.0f64, |a, &c| a.max(c.abs()));
        if m > 0.0 {
            m
        } else {
            1.0
        }
    }

    /// Index of the last nonnegative coefficient when the `+...+,-...-`
    /// pattern holds within `tol` (scaled by the largest |coefficient|), or
    /// `None` when the pattern is violated.
    pub fn sign_split_index(&self, tol: f64) -> Option<usize> {
        let t = tol * self.scale();
        // Maximal prefix of coefficients >= -t. If any later coefficient
        // exceeds +t, no split index can exist (see the suffix argument
        // in the certificate): the offending positive entry would have to
        // sit in the prefix, but the prefix cannot be extended past the
        // first coefficient below -t.
        let mut split = None;
        for (m, &a) in self.coefficients.iter().enumerate() {
            if a >= -t {
                split = Some(m);
            } else {
                break;
            }
        }
        let split = split?;
        if self.coefficients[split + 1..].iter().all(|&a| a <= t) {
            Some(split)
        } else {
            None
        }
    }

    /// True when the nonnegativity certificate applies: the coefficients
    /// follow the sign-split pattern and the polynomial vanishes at `x = 1`,
    /// both within `tol` after normalization by the largest |coefficient|.
    pub fn admits_nonneg_certificate(&self, tol: f64) -> bool {
        let sum: f64 = self.coefficients.iter().sum();
        sum.abs() <= tol * self.scale() && self.sign_split_index(tol).is_some()
    }

    /// Minimum of the polynomial over a uniform grid on `[0, 1]` including
    /// both endpoints. A certificate-style check, not a global optimizer.
    pub fn min_on_unit_grid(&self, grid_points: usize) -> f64 {
        assert!(grid_points >= 2, "grid needs at least two points");
        let last = (grid_points - 1) as f64;
        (0..grid_points)
            .map(|i| self.eval(i as f64 / last))
            .fold(f64::INFINITY, f64::min)
    }
}

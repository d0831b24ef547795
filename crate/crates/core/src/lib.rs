//! Unambiguous comparison of finite ensembles of quantum states.
//!
//! Given `k` copies of one unknown pure state and `l` copies of another, the
//! optimal measurement that can certify "these states differ" without ever
//! being wrong is the projection onto the complement of the completely
//! symmetric subspace. This crate computes the resulting success
//! probabilities in closed form, both for arbitrary qudit states and for
//! coherent states of a harmonic oscillator, and backs every closed form
//! with an independent brute-force oracle:
//!
//! - [`combinatorics`] — exact big-integer binomials, symmetric-subspace
//!   dimensions, and a sign-split nonnegativity certificate for polynomials.
//! - [`finite`] — closed-form success probabilities for qudit ensembles,
//!   Haar averages, copy-count monotonicity, and resource-split optimality.
//! - [`oracle`] — permutation-sum and dense-matrix evaluations of the
//!   symmetric projector, Haar Monte Carlo estimators, 2-D quadrature of the
//!   coherent failure integral, and truncated Fock-space overlaps.
//! - [`coherent`] — closed-form coherent-state comparison and an exact
//!   amplitude-level simulation of the optical comparator network
//!   (concentration cascades, final splitter, photodetection).
//! - [`validate`] — runnable invariant suites wiring the closed forms
//!   against the oracles, used by the CLI `validate` subcommand.
//!
//! All deterministic operations are pure functions. Monte Carlo estimators
//! are bit-reproducible given `(seed, samples, worker_count)`.

pub mod coherent;
pub mod combinatorics;
mod error;
pub mod finite;
pub mod oracle;
pub mod validate;

pub use error::{Error, Result};

//! Comparison of coherent-state ensembles and the optical network that
//! realizes it.
//!
//! Knowing that both inputs are coherent states raises the comparison
//! success probability to `1 - exp(-(kl/(k+l)) |a1 - a2|^2)`. The optimal
//! measurement is a passive network: each ensemble is concentrated by a
//! beam-splitter cascade into a single mode (`|a>^k -> |sqrt(k) a>` plus
//! vacua), a final splitter interferes the two concentrated modes, and a
//! photodetector watches the port that is dark whenever the inputs agree.
//!
//! Beam splitters map coherent products to coherent products, so the whole
//! network is simulated exactly at the amplitude level; no Fock expansion
//! is needed (the truncated Fock route lives in [`crate::oracle`] as an
//! independent check of the overlap law).
//!
//! Sign convention: a splitter maps `(a, b)` to
//! `(sqrt(T) a + sqrt(R) b, -sqrt(R) a + sqrt(T) b)`, putting the phase
//! flip on the reflected first input. Physical conventions differ here;
//! click probabilities are unaffected, only the sign of the reported
//! detector amplitude depends on it. With this choice the detector port of
//! the final splitter is the second output.

use std::cmp::Ordering;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Poisson};

use crate::error::{Error, Result};
use crate::finite::Probability;

const BS_UNITARITY_TOL: f64 = 1e-14;
const UNIFORM_INPUT_TOL: f64 = 1e-12;

/// Two coherent amplitudes with their copy counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentPair {
    alpha1: Complex64,
    alpha2: Complex64,
    k: u32,
    l: u32,
}

impl CoherentPair {
    pub fn new(alpha1: Complex64, alpha2: Complex64, k: u32, l: u32) -> Result<Self> {
        if k < 1 || l < 1 {
            return Err(Error::InvalidCopyCounts { k, l });
        }
        Ok(Self {
            alpha1,
            alpha2,
            k,
            l,
        })
    }

    pub fn alpha1(&self) -> Complex64 {
        self.alpha1
    }

    pub fn alpha2(&self) -> Complex64 {
        self.alpha2
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }
}

/// A lossless beam splitter with transmissivity `T` and reflectivity
/// `R = 1 - T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSplitter {
    t: f64,
    r: f64,
}

impl BeamSplitter {
    /// Builds the splitter from its transmissivity; the reflectivity is the
    /// exact complement, so `T + R = 1` holds by construction.
    pub fn new(transmissivity: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&transmissivity) || transmissivity.is_nan() {
            return Err(Error::InvalidTransmissivity(transmissivity));
        }
        Ok(Self {
            t: transmissivity,
            r: 1.0 - transmissivity,
        })
    }

    pub fn transmissivity(&self) -> f64 {
        self.t
    }

    pub fn reflectivity(&self) -> f64 {
        self.r
    }
}

/// One coherent amplitude per optical mode.
///
/// Valid precisely because beam splitters keep products of coherent states
/// unentangled: a list of amplitudes is a complete description.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeRegister {
    amplitudes: Vec<Complex64>,
}

impl ModeRegister {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() || amplitudes.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidRegister);
        }
        Ok(Self { amplitudes })
    }

    /// `count` modes all carrying the amplitude `alpha`.
    pub fn uniform(alpha: Complex64, count: u32) -> Result<Self> {
        if count == 0 || !alpha.is_finite() {
            return Err(Error::InvalidRegister);
        }
        Ok(Self {
            amplitudes: vec![alpha; count as usize],
        })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Total photon-number expectation, conserved by every splitter.
    pub fn total_energy(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// Result of monitoring one mode with an ideal photodetector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectionOutcome {
    pub clicked: bool,
    pub photon_count: u64,
}

/// Closed-form success probability for comparing `k` copies of `|a1>`
/// against `l` copies of `|a2>`: `1 - exp(-(kl/(k+l)) |a1-a2|^2)`.
pub fn success_prob_coherent(pair: &CoherentPair) -> Probability {
    let kf = f64::from(pair.k);
    let lf = f64::from(pair.l);
    let exponent = kf * lf / (kf + lf) * (pair.alpha1 - pair.alpha2).norm_sqr();
    Probability::new(1.0 - (-exponent).exp()).expect("exp(-x) lies in (0, 1] for x >= 0")
}

/// Click probability of an ideal detector on a coherent mode:
/// `1 - exp(-|amplitude|^2)`.
pub fn click_probability(amplitude: Complex64) -> Probability {
    Probability::new(1.0 - (-amplitude.norm_sqr()).exp())
        .expect("exp(-x) lies in (0, 1] for x >= 0")
}

/// Coherent amplitudes after a beam splitter:
/// `(a, b) -> (sqrt(T) a + sqrt(R) b, -sqrt(R) a + sqrt(T) b)`.
pub fn bs_transform(a: Complex64, b: Complex64, bs: BeamSplitter) -> (Complex64, Complex64) {
    debug_assert!((bs.t + bs.r - 1.0).abs() <= BS_UNITARITY_TOL);
    let t = bs.t.sqrt();
    let r = bs.r.sqrt();
    (a * t + b * r, -a * r + b * t)
}

/// The `count - 1` splitters of a concentration cascade, `T_j = j/(j+1)`.
/// A single copy needs no cascade.
pub fn cascade_transmissivities(count: u32) -> Vec<BeamSplitter> {
    assert!(count >= 1, "need at least one copy");
    (1..count)
        .map(|j| {
            BeamSplitter::new(f64::from(j) / f64::from(j + 1))
                .expect("cascade transmissivity lies in (0, 1)")
        })
        .collect()
}

/// Concentrates `count` identical coherent modes into the first mode:
/// splitter `j` merges the accumulated mode (carrying `sqrt(j) a`) with the
/// `(j+1)`-th fresh copy, leaving `sqrt(count) a` in mode 0 and vacuum
/// elsewhere. Rejects registers whose amplitudes differ beyond 1e-12.
pub fn concentrate(register: &ModeRegister) -> Result<ModeRegister> {
    let amplitudes = register.amplitudes();
    let spread = amplitudes
        .iter()
        .map(|a| (a - amplitudes[0]).norm())
        .fold(0.0f64, f64::max);
    if spread > UNIFORM_INPUT_TOL {
        return Err(Error::NonUniformRegister(spread));
    }

    let mut output = amplitudes.to_vec();
    let mut accumulated = output[0];
    for (step, bs) in cascade_transmissivities(register.len() as u32)
        .into_iter()
        .enumerate()
    {
        let fresh = output[step + 1];
        let (carry, leftover) = bs_transform(accumulated, fresh, bs);
        accumulated = carry;
        output[step + 1] = leftover;
    }
    output[0] = accumulated;
    ModeRegister::new(output)
}

/// The last splitter of the comparator, chosen so `k R_f = l T_f` and the
/// detector port is dark for identical inputs: `T_f = k/(k+l)`.
pub fn final_splitter(k: u32, l: u32) -> BeamSplitter {
    assert!(k >= 1 && l >= 1, "copy counts must be positive");
    BeamSplitter::new(f64::from(k) / (f64::from(k) + f64::from(l)))
        .expect("final transmissivity lies in (0, 1)")
}

/// Runs the full comparator network: concentrate each ensemble, interfere
/// the concentrated modes `(sqrt(k) a1, sqrt(l) a2)` on the final splitter,
/// and monitor the detector port.
///
/// Returns the detector-port amplitude `sqrt(kl/(k+l)) (a2 - a1)` (the
/// second splitter output under this crate's sign convention) and the
/// click probability `1 - exp(-|amplitude|^2)`. The pass-through port,
/// which is discarded, carries `(k a1 + l a2)/sqrt(k+l)`.
pub fn comparator_network(pair: &CoherentPair) -> (Complex64, Probability) {
    let first =
        concentrate(&ModeRegister::uniform(pair.alpha1, pair.k).expect("valid pair has k >= 1"))
            .expect("uniform register concentrates");
    let second =
        concentrate(&ModeRegister::uniform(pair.alpha2, pair.l).expect("valid pair has l >= 1"))
            .expect("uniform register concentrates");

    let (_pass_through, detector) = bs_transform(
        first.amplitudes()[0],
        second.amplitudes()[0],
        final_splitter(pair.k, pair.l),
    );
    (detector, click_probability(detector))
}

/// Samples an ideal number-resolving detector on a coherent mode: the
/// photon count is Poisson with mean `|amplitude|^2`, and a click is at
/// least one photon.
pub fn sample_detection<R: Rng + ?Sized>(
    detector_amplitude: Complex64,
    rng: &mut R,
) -> DetectionOutcome {
    assert!(detector_amplitude.is_finite(), "amplitude must be finite");
    let mean = detector_amplitude.norm_sqr();
    let photon_count = if mean > 0.0 {
        let poisson = Poisson::new(mean).expect("positive finite mean");
        poisson.sample(rng) as u64
    } else {
        0
    };
    DetectionOutcome {
        clicked: photon_count >= 1,
        photon_count,
    }
}

/// Compares the success of an `(m, n)` coherent ensemble against a
/// `(k, l)` one for the same pair of amplitudes: orders `mn/(m+n)` against
/// `kl/(k+l)` by exact integer cross-multiplication.
pub fn copy_tradeoff(m: u32, n: u32, k: u32, l: u32) -> Ordering {
    assert!(
        m >= 1 && n >= 1 && k >= 1 && l >= 1,
        "copy counts must be positive"
    );
    let lhs = u128::from(m) * u128::from(n) * (u128::from(k) + u128::from(l));
    let rhs = u128::from(k) * u128::from(l) * (u128::from(m) + u128::from(n));
    lhs.cmp(&rhs)
}

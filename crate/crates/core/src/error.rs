use thiserror::Error;

/// Errors reported by the comparison library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("copy counts must satisfy k >= 1 and l >= 1, got k={k}, l={l}")]
    InvalidCopyCounts { k: u32, l: u32 },

    #[error("Hilbert-space dimension must be >= 2, got {0}")]
    InvalidDimension(u32),

    #[error("overlap squared must lie in [0, 1], got {0}")]
    OverlapOutOfRange(f64),

    #[error("probability {0} lies outside [0, 1] beyond the clamping tolerance")]
    ProbabilityOutOfRange(f64),

    #[error("state vector has squared norm {0}, expected 1 within 1e-12")]
    NotNormalized(f64),

    #[error("state vector must have at least one amplitude")]
    EmptyState,

    #[error("permutation sum is limited to k + l <= {max}, got {got}")]
    PermutationCapExceeded { got: u32, max: u32 },

    #[error("projector matrix is limited to d^n <= {max}, got {got}")]
    MatrixCapExceeded { got: u64, max: u64 },

    #[error("split index must satisfy 1 <= k <= N - 2, got k={k} with N={n}")]
    InvalidSplit { k: u32, n: u32 },

    #[error("total copy count must be >= 2, got {0}")]
    InvalidTotal(u32),

    #[error("quadrature half-width must be positive, got {0}")]
    InvalidHalfWidth(f64),

    #[error("amplitude magnitude {magnitude} is unsafe for Fock cutoff {cutoff} (limit {limit})")]
    FockTruncationUnsafe {
        magnitude: f64,
        cutoff: u32,
        limit: f64,
    },

    #[error("mode register must contain at least one mode with finite amplitudes")]
    InvalidRegister,

    #[error("mode amplitudes differ by {0}, expected identical within 1e-12")]
    NonUniformRegister(f64),

    #[error("transmissivity must lie in [0, 1], got {0}")]
    InvalidTransmissivity(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

use num_complex::Complex64;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Log-gamma was requested at one of its poles (0, -1, -2, ...).
    #[error("gamma pole at z = {0}")]
    GammaPole(Complex64),

    /// A denominator parameter of a terminating series hits zero within the
    /// summed terms.
    #[error("series denominator parameter {param} reaches zero within {terms} terms")]
    SeriesDenominatorPole { param: Complex64, terms: usize },

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// Every a > 0 is admissible when gamma = 0, so there is no interval set
    /// to return; the caller handles that case.
    #[error("allowed-a intervals are undefined for gamma = 0")]
    UndefinedForZeroGamma,

    #[error("quadrature did not converge within {panels} panels (last refinement delta {last_delta:e})")]
    QuadratureDidNotConverge { panels: usize, last_delta: f64 },

    #[error("power series did not converge within {0} terms")]
    SeriesDidNotConverge(usize),

    /// The generating-series routines are restricted to |z| <= 0.9 where the
    /// underlying series converge geometrically.
    #[error("|z| = {0} exceeds the generating-series convergence guard 0.9")]
    ConvergenceGuard(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

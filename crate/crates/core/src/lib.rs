//! Oscillator models on the reflection-deformed algebra su(1,1)_gamma.
//!
//! The ordinary su(1,1) commutator [J+, J-] = -2 J0 can be deformed by a
//! parity operator R into [J+, J-] = -2 J0 - gamma R with R^2 = 1, R
//! anticommuting with J+-. For gamma = (2a-1)(2c-1) the positive discrete
//! series representation with lowest weight a > 0 survives the deformation,
//! and the triple
//!
//! ```text
//! q = (J+ + J-)/2,   p = i (J+ - J-)/2,   H = J0 - (c - 1/2)
//! ```
//!
//! obeys the Hamilton--Lie equations [H, q] = -i p and [H, p] = i q with the
//! equidistant spectrum n + a. The position wave functions of these models
//! are continuous dual Hahn polynomials dressed by the square root of the
//! gamma-quotient weight
//!
//! ```text
//! w(x) = |Gamma(a+ix) Gamma(c+ix) / Gamma(1/2+ix)|^2 .
//! ```
//!
//! At c = 1/2 the model reduces to the Meixner--Pollaczek oscillator, and
//! for c -> infinity to the paraboson oscillator (the canonical oscillator
//! when additionally a = 1/2).
//!
//! Module map:
//!
//! - [`specfun`]: complex log-gamma, |Gamma|^2, Pochhammer symbols,
//!   terminating hypergeometric sums.
//! - [`orthopoly`]: continuous dual Hahn, Meixner--Pollaczek and Laguerre
//!   polynomials, plus the contiguous difference relations as residuals.
//! - [`repalgebra`]: parameter logic and truncated matrix representations of
//!   R, J0, J+-, q, p, H, including the three-parameter (b-deformed) variant.
//! - [`wavefunctions`]: the weight w, wave functions by two independent
//!   routes, the Meixner--Pollaczek and paraboson families, momentum
//!   eigenvector coefficients.
//! - [`realization`]: the differential-reflection operator realization on
//!   polynomials in z and the closed-form generating sums.
//! - [`verification`]: quadrature engine and the identity/limit check suites
//!   producing structured reports.
//! - [`cli`]: tabulation, verification and spectrum commands behind the
//!   `su11g` binary.
//!
//! Each major capability has a runnable demo under `examples/`.

pub mod cli;
pub mod error;
pub mod orthopoly;
pub mod realization;
pub mod repalgebra;
pub mod specfun;
pub mod verification;
pub mod wavefunctions;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use repalgebra::ModelParams;

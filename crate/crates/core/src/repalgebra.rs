//! Parameter logic for su(1,1)_gamma and truncated matrix representations.
//!
//! The deformed algebra is generated by J0, J+, J- and a parity operator R
//! with R^2 = 1, [R, J0] = 0, {R, J+-} = 0, [J0, J+-] = +-J+- and
//! [J+, J-] = -2 J0 - gamma R. The lowest-weight representation with label
//! a > 0 exists whenever gamma = (2a-1)(2c-1) for some c > 0; its raising
//! and lowering coefficients split by parity of the level. A third
//! parameter b >= 0 generalizes the relation to
//! [J+, J-] = -2 J0 - gamma R - 4b J0 R with correspondingly shifted
//! even-branch coefficients.
//!
//! Matrices here act on span{|a,0>, ..., |a,N-1>}: the raising operator
//! maps the top basis vector out of the truncated space, so commutator
//! checks restrict to an interior block.

use num_complex::Complex64;
use serde::Serialize;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::specfun::ln_gamma_pos;

/// Parameter bundle (a, c, gamma, b) with gamma = (2a-1)(2c-1) derived.
///
/// b = 0 is the two-parameter model; b > 0 selects the three-parameter
/// variant whose wave functions are formal only.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ModelParams {
    pub a: f64,
    pub c: f64,
    pub gamma: f64,
    pub b: f64,
}

impl ModelParams {
    /// Two-parameter model: requires a > 0 and c > 0.
    pub fn new(a: f64, c: f64) -> Result<Self> {
        Self::with_b(a, c, 0.0)
    }

    /// Three-parameter variant: requires a > 0, c > 0 and b >= 0.
    pub fn with_b(a: f64, c: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidParams(format!("a = {a} must be finite and > 0")));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParams(format!("c = {c} must be finite and > 0")));
        }
        if !(b.is_finite() && b >= 0.0) {
            return Err(Error::InvalidParams(format!("b = {b} must be finite and >= 0")));
        }
        Ok(Self { a, c, gamma: (2.0 * a - 1.0) * (2.0 * c - 1.0), b })
    }

    /// True when gamma = 0, i.e. a = 1/2 or c = 1/2 (the undeformed path).
    pub fn is_undeformed(&self) -> bool {
        self.gamma == 0.0
    }

    /// B(a, c) / pi, the squared ground-state peak value.
    pub fn beta_over_pi(&self) -> f64 {
        (ln_gamma_pos(self.a) + ln_gamma_pos(self.c) - ln_gamma_pos(self.a + self.c)).exp()
            / std::f64::consts::PI
    }

    /// Whether B(a, c) <= pi; guaranteed for a, c >= 1/2. Reported as a
    /// flag, never enforced by the constructor. The boundary case B = pi
    /// (a = c = 1/2) counts as satisfied within rounding slack.
    pub fn beta_bound_satisfied(&self) -> bool {
        self.beta_over_pi() <= 1.0 + 1e-12
    }
}

/// The a > 0 values admissible as representation labels for a fixed
/// gamma != 0, as a union of open intervals (upper bound may be infinite).
///
/// Errors with [`Error::UndefinedForZeroGamma`] when gamma = 0, where every
/// a > 0 works and no interval set applies.
pub fn allowed_a_interval(gamma: f64) -> Result<Vec<(f64, f64)>> {
    if gamma == 0.0 {
        return Err(Error::UndefinedForZeroGamma);
    }
    let split = (1.0 - gamma) / 2.0;
    Ok(if gamma < 0.0 {
        vec![(0.0, 0.5), (split, f64::INFINITY)]
    } else if gamma < 1.0 {
        vec![(0.0, split), (0.5, f64::INFINITY)]
    } else {
        vec![(0.5, f64::INFINITY)]
    })
}

/// Symbolic tag of the operator a matrix was built from. Matrices obtained
/// by arithmetic keep the tag of their leading operand; the tag is
/// bookkeeping, not semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OperatorKind {
    R,
    J0,
    JPlus,
    JMinus,
    Q,
    P,
    H,
}

/// Dense N x N truncation of an algebra or observable operator.
///
/// Entries are complex; every kind except P is real-valued. R is diagonal
/// +-1, J0 and H are real diagonal, JPlus has nonzeros only at (n+1, n),
/// JMinus only at (n-1, n), Q and P only on the two off-diagonals.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub kind: OperatorKind,
    pub dim: usize,
    entries: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn zeros(kind: OperatorKind, dim: usize) -> Self {
        Self { kind, dim, entries: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    /// Real parts of all entries, row-major. Panics if any entry has a
    /// nonzero imaginary part (use only on kinds other than P).
    pub fn real_entries(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|e| {
                assert_eq!(e.im, 0.0, "matrix has complex entries");
                e.re
            })
            .collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> OperatorMatrix {
        let mut out = Self::zeros(self.kind, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    /// Largest entry modulus over the leading `interior` x `interior` block.
    pub fn max_abs_interior(&self, interior: usize) -> f64 {
        let mut max = 0.0f64;
        for i in 0..interior.min(self.dim) {
            for j in 0..interior.min(self.dim) {
                max = max.max(self.get(i, j).norm());
            }
        }
        max
    }
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (o, r) in out.entries.iter_mut().zip(&rhs.entries) {
            *o += r;
        }
        out
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (o, r) in out.entries.iter_mut().zip(&rhs.entries) {
            *o -= r;
        }
        out
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        let mut out = self.clone();
        for o in out.entries.iter_mut() {
            *o = -*o;
        }
        out
    }
}

impl Mul<Complex64> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: Complex64) -> OperatorMatrix {
        let mut out = self.clone();
        for o in out.entries.iter_mut() {
            *o *= rhs;
        }
        out
    }
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = OperatorMatrix::zeros(self.kind, n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Raising coefficient: J+ |a,n> = raise_coeff(n) |a,n+1>. The lowering
/// coefficient is the same sequence shifted, J- |a,n> = raise_coeff(n-1)
/// |a,n-1>, which makes transpose(J+) = J- exact by construction.
fn raise_coeff(n: usize, p: &ModelParams) -> f64 {
    let nf = n as f64;
    let arg = if n % 2 == 0 {
        (nf + 2.0 * p.a + 2.0 * p.b) * (nf + 2.0 * p.b + 2.0 * p.c)
    } else {
        (nf + 1.0) * (nf + 2.0 * p.a + 2.0 * p.c - 1.0)
    };
    assert!(arg > 0.0, "square-root argument must be positive for valid parameters");
    arg.sqrt()
}

/// Build the dense N x N truncation of one of the model operators.
///
/// H is J0 - (b + c - 1/2), which keeps the spectrum at n + a for every b
/// (the b > 0 variant keeps the same shift convention so that the limit
/// b -> 0 is seamless).
pub fn build_operator(kind: OperatorKind, params: &ModelParams, dim: usize) -> OperatorMatrix {
    assert!(dim >= 2, "need at least a 2 x 2 truncation");
    let mut m = OperatorMatrix::zeros(kind, dim);
    let re = |x: f64| Complex64::new(x, 0.0);
    match kind {
        OperatorKind::R => {
            for n in 0..dim {
                m.set(n, n, re(if n % 2 == 0 { 1.0 } else { -1.0 }));
            }
        }
        OperatorKind::J0 => {
            for n in 0..dim {
                m.set(n, n, re(n as f64 + params.a + params.b + params.c - 0.5));
            }
        }
        OperatorKind::H => {
            for n in 0..dim {
                m.set(n, n, re(n as f64 + params.a));
            }
        }
        OperatorKind::JPlus => {
            for n in 0..dim - 1 {
                m.set(n + 1, n, re(raise_coeff(n, params)));
            }
        }
        OperatorKind::JMinus => {
            for n in 1..dim {
                m.set(n - 1, n, re(raise_coeff(n - 1, params)));
            }
        }
        OperatorKind::Q => {
            for n in 0..dim - 1 {
                let half = re(0.5 * raise_coeff(n, params));
                m.set(n + 1, n, half);
                m.set(n, n + 1, half);
            }
        }
        OperatorKind::P => {
            for n in 0..dim - 1 {
                let half = 0.5 * raise_coeff(n, params);
                m.set(n + 1, n, Complex64::new(0.0, half));
                m.set(n, n + 1, Complex64::new(0.0, -half));
            }
        }
    }
    m
}

/// Max entry modulus of (AB - BA - expected) over the leading
/// `interior` x `interior` block; the excluded border rows and columns
/// carry the truncation artifacts.
pub fn commutator_residual(
    a: &OperatorMatrix,
    b: &OperatorMatrix,
    expected: &OperatorMatrix,
    interior: usize,
) -> Result<f64> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    if a.dim != expected.dim {
        return Err(Error::DimensionMismatch(a.dim, expected.dim));
    }
    let commutator = &(a * b) - &(b * a);
    Ok((&commutator - expected).max_abs_interior(interior))
}

/// Max entry modulus of (AB + BA - expected), same interior convention.
pub fn anticommutator_residual(
    a: &OperatorMatrix,
    b: &OperatorMatrix,
    expected: &OperatorMatrix,
    interior: usize,
) -> Result<f64> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    if a.dim != expected.dim {
        return Err(Error::DimensionMismatch(a.dim, expected.dim));
    }
    let anticommutator = &(a * b) + &(b * a);
    Ok((&anticommutator - expected).max_abs_interior(interior))
}

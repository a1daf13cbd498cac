//! Position and momentum wave functions of the deformed oscillator models.
//!
//! The stationary states come in two independently computable forms that
//! cross-validate each other:
//!
//! - the closed form: continuous dual Hahn polynomials (parameters
//!   (a, 0, c) for even levels, (a, 1, c) for odd levels) dressed by
//!   sqrt(w(x)) and a gamma-product normalization;
//! - the forward recurrence for the eigenvector coefficients A_n(x) of the
//!   position operator, climbing from A_0.
//!
//! The weight is w(x) = |Gamma(a+ix) Gamma(c+ix) / Gamma(1/2+ix)|^2; its
//! square root is always computed through log-gamma sums, since w itself
//! underflows near |x| ~ 225 in double precision while the wave functions
//! stay representable much further out.

use num_complex::Complex64;

use crate::repalgebra::ModelParams;
use crate::specfun::{ln_gamma_complex, ln_gamma_pos, ln_pochhammer_pos};

/// Families of wave functions the models produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveFamily {
    /// Deformed-model position wave functions psi_n^(a,c).
    Psi,
    /// Meixner--Pollaczek functions phi_n^(a) (the c = 1/2 reduction).
    PhiMp,
    /// Paraboson wave functions Psi_n^(a) (the c -> infinity limit).
    PsiParaboson,
}

/// One evaluated sample (family, level, position, value).
#[derive(Clone, Copy, Debug)]
pub struct WaveSample {
    pub family: WaveFamily,
    pub n: usize,
    pub x: f64,
    pub value: f64,
}

impl WaveSample {
    /// Evaluate a single sample. `Psi` uses the closed-form route; the
    /// paraboson family reads `x` as the scaled variable xi.
    pub fn evaluate(family: WaveFamily, n: usize, x: f64, params: &ModelParams) -> Self {
        let value = match family {
            WaveFamily::Psi => psi_closed(n, x, params),
            WaveFamily::PhiMp => phi_mp_fn(n, x, params.a),
            WaveFamily::PsiParaboson => psi_paraboson(n, x, params.a),
        };
        Self { family, n, x, value }
    }
}

fn ln_weight(x: f64, a: f64, c: f64) -> f64 {
    let lg = |s: f64| {
        ln_gamma_complex(Complex64::new(s, x))
            .expect("s > 0 keeps the argument off the poles")
            .re
    };
    2.0 * (lg(a) + lg(c) - lg(0.5))
}

/// The orthogonality weight w(x) = |Gamma(a+ix) Gamma(c+ix) / Gamma(1/2+ix)|^2.
///
/// Strictly positive, even in x; w(0) = Gamma(a)^2 Gamma(c)^2 / pi.
pub fn weight_w(x: f64, params: &ModelParams) -> f64 {
    assert_eq!(params.b, 0.0, "the weight applies to the two-parameter model");
    ln_weight(x, params.a, params.c).exp()
}

/// sqrt(w(x)) through the log route, usable far beyond the underflow point
/// of w itself.
pub fn sqrt_weight_w(x: f64, params: &ModelParams) -> f64 {
    assert_eq!(params.b, 0.0, "the weight applies to the two-parameter model");
    (0.5 * ln_weight(x, params.a, params.c)).exp()
}

/// Closed-form wave function psi_n^(a,c)(x).
///
/// ```text
/// psi_{2m}   = sqrt(w) (-1)^m S_m(x^2; a,0,c) / sqrt(G(m+a) G(m+c) G(m+a+c) m!)
/// psi_{2m+1} = sqrt(w) (-1)^m x S_m(x^2; a,1,c) / sqrt(G(m+a+1) G(m+c+1) G(m+a+c) m!)
/// ```
///
/// The Pochhammer prefactor of S_m and the gamma square roots are combined
/// in log space, so large m and large parameters (the c -> infinity ladder)
/// stay in range.
pub fn psi_closed(n: usize, x: f64, params: &ModelParams) -> f64 {
    psi_closed_with_scale(n, x, params).0
}

/// Closed-form value together with its magnitude scale: the largest dressed
/// term of the underlying hypergeometric sum. Route-agreement residuals are
/// measured against this scale, since the sum cancels at large |x|.
pub fn psi_closed_with_scale(n: usize, x: f64, params: &ModelParams) -> (f64, f64) {
    assert_eq!(params.b, 0.0, "the closed form applies to the two-parameter model");
    let (a, c) = (params.a, params.c);
    let m = n / 2;
    let mf = m as f64;
    let odd = n % 2 == 1;
    let b_shift = if odd { 1.0 } else { 0.0 };
    let (hyp, max_term) = crate::orthopoly::cdh_hyp_scaled(m, x * x, a, b_shift, c);
    // ln[(a+b)_m (a+c)_m] - ln sqrt(G(m+a+b) G(m+c+b) G(m+a+c) m!) + ln sqrt(w)
    let ln_pref = ln_pochhammer_pos(a + b_shift, m) + ln_pochhammer_pos(a + c, m)
        - 0.5
            * (ln_gamma_pos(mf + a + b_shift)
                + ln_gamma_pos(mf + c + b_shift)
                + ln_gamma_pos(mf + a + c)
                + ln_gamma_pos(mf + 1.0))
        + 0.5 * ln_weight(x, a, c);
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let x_factor = if odd { x } else { 1.0 };
    let dress = x_factor.abs() * ln_pref.exp();
    (sign * x_factor * hyp * ln_pref.exp(), dress * max_term)
}

/// Eigenvector coefficients A_0(x) ... A_nmax(x) of the position operator
/// at eigenvalue x.
#[derive(Clone, Debug)]
pub struct CoeffVector {
    pub x: f64,
    pub coeffs: Vec<f64>,
}

impl CoeffVector {
    pub fn nmax(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Forward solve of the position eigenvector recurrences:
///
/// ```text
/// x A_{2n}   = sqrt((n+a)(n+c)) A_{2n+1} + sqrt(n(n+a+c-1)) A_{2n-1}
/// x A_{2n+1} = sqrt((n+1)(n+a+c)) A_{2n+2} + sqrt((n+a)(n+c)) A_{2n}
/// ```
///
/// seeded with A_0 = 1/sqrt(Gamma(a) Gamma(c) Gamma(a+c)), then climbing by
/// alternating the two relations. sqrt(w(x)) A_n(x) equals the closed-form
/// psi_n(x); the two routes are mutual oracles.
pub fn coeff_recurrence(x: f64, nmax: usize, params: &ModelParams) -> CoeffVector {
    assert_eq!(params.b, 0.0, "the recurrence applies to the two-parameter model");
    assert!(nmax >= 1);
    let (a, c) = (params.a, params.c);
    let mut coeffs = vec![0.0; nmax + 1];
    coeffs[0] =
        (-0.5 * (ln_gamma_pos(a) + ln_gamma_pos(c) + ln_gamma_pos(a + c))).exp();
    coeffs[1] = x * coeffs[0] / (a * c).sqrt();
    for k in 2..=nmax {
        if k % 2 == 0 {
            // even index 2n with n = k/2
            let nf = (k / 2) as f64;
            coeffs[k] = (x * coeffs[k - 1] - ((nf - 1.0 + a) * (nf - 1.0 + c)).sqrt() * coeffs[k - 2])
                / (nf * (nf + a + c - 1.0)).sqrt();
        } else {
            // odd index 2n+1 with n = (k-1)/2
            let nf = ((k - 1) / 2) as f64;
            coeffs[k] = (x * coeffs[k - 1] - (nf * (nf + a + c - 1.0)).sqrt() * coeffs[k - 2])
                / ((nf + a) * (nf + c)).sqrt();
        }
    }
    CoeffVector { x, coeffs }
}

/// Normalized Meixner--Pollaczek function
/// phi_n^(a)(x) = 2^a sqrt(n!/(2 pi Gamma(n+2a))) |Gamma(a+ix)| P_n^(a)(x; pi/2).
pub fn phi_mp_fn(n: usize, x: f64, a: f64) -> f64 {
    assert!(a > 0.0);
    let nf = n as f64;
    let ln_pref = a * 2.0_f64.ln()
        + 0.5 * (ln_gamma_pos(nf + 1.0) - (2.0 * std::f64::consts::PI).ln() - ln_gamma_pos(nf + 2.0 * a))
        + ln_gamma_complex(Complex64::new(a, x)).expect("a > 0").re;
    crate::orthopoly::mp(&crate::orthopoly::MpQuery::new(n, x, a)) * ln_pref.exp()
}

/// Paraboson wave function Psi_n^(a)(xi).
///
/// ```text
/// Psi_{2m}   = (-1)^m sqrt(m!/Gamma(m+a))   |xi|^(a-1/2)    e^(-xi^2/2) L_m^(a-1)(xi^2)
/// Psi_{2m+1} = (-1)^m sqrt(m!/Gamma(m+a+1)) |xi|^(a-1/2) xi e^(-xi^2/2) L_m^(a)(xi^2)
/// ```
///
/// At a = 1/2 these are the canonical oscillator wave functions. For
/// a < 1/2 the |xi|^(a-1/2) cusp diverges at xi = 0.
pub fn psi_paraboson(n: usize, xi: f64, a: f64) -> f64 {
    assert!(a > 0.0);
    let m = n / 2;
    let mf = m as f64;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let envelope = xi.abs().powf(a - 0.5) * (-xi * xi / 2.0).exp();
    if n % 2 == 0 {
        let norm = (0.5 * (ln_gamma_pos(mf + 1.0) - ln_gamma_pos(mf + a))).exp();
        sign * norm * envelope * crate::orthopoly::laguerre(m, a - 1.0, xi * xi)
    } else {
        let norm = (0.5 * (ln_gamma_pos(mf + 1.0) - ln_gamma_pos(mf + a + 1.0))).exp();
        sign * norm * envelope * xi * crate::orthopoly::laguerre(m, a, xi * xi)
    }
}

/// Momentum eigenvector coefficient i^n psi_n^(a,c)(p).
pub fn momentum_coeff(n: usize, p: f64, params: &ModelParams) -> Complex64 {
    let i_pow = match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    i_pow * psi_closed(n, p, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repalgebra::{build_operator, OperatorKind};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn params(a: f64, c: f64) -> ModelParams {
        ModelParams::new(a, c).unwrap()
    }

    #[test]
    fn weight_at_origin() {
        assert_relative_eq!(weight_w(0.0, &params(1.0, 1.0)), 1.0 / PI, max_relative = 1e-13);
        assert_relative_eq!(weight_w(0.0, &params(0.5, 0.5)), PI, max_relative = 1e-13);
    }

    #[test]
    fn weight_is_even_exactly() {
        let p = params(0.8, 1.9);
        assert_eq!(weight_w(2.7, &p).to_bits(), weight_w(-2.7, &p).to_bits());
    }

    #[test]
    fn sqrt_weight_survives_beyond_w_underflow() {
        let p = params(0.8, 1.9);
        assert_eq!(weight_w(280.0, &p), 0.0); // w underflows near |x| ~ 225
        let s = sqrt_weight_w(280.0, &p);
        assert!(s > 0.0 && s.is_finite());
        // frozen log-scale oracle at (a, c) = (0.25, ...): 2 Re ln G(0.25+300i)
        // = -943.4918100742453; spot-check the log route against it
        let lg = ln_gamma_complex(Complex64::new(0.25, 300.0)).unwrap();
        assert_relative_eq!(2.0 * lg.re, -943.4918100742453, max_relative = 1e-13);
    }

    #[test]
    fn ground_state_value_is_beta_over_pi() {
        for (a, c) in [(1.0, 2.0), (0.6, 0.6), (2.0, 0.5), (0.5, 0.5)] {
            let p = params(a, c);
            let expected = p.beta_over_pi().sqrt();
            assert_relative_eq!(psi_closed(0, 0.0, &p), expected, max_relative = 1e-12);
        }
        // B(1/2, 1/2) = pi makes the peak exactly 1
        assert_relative_eq!(psi_closed(0, 0.0, &params(0.5, 0.5)), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn odd_levels_vanish_at_origin() {
        let p = params(0.8, 1.9);
        for n in [1, 3, 5, 11] {
            assert_eq!(psi_closed(n, 0.0, &p), 0.0);
        }
    }

    #[test]
    fn frozen_spot_values() {
        // arbitrary-precision oracle values frozen before the build
        assert_relative_eq!(
            psi_closed(7, 1.7, &params(0.8, 1.9)),
            0.12277234897929727,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            psi_closed(12, 0.45, &params(1.3, 0.6)),
            0.035236929931468592,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            psi_closed(5, -2.2, &params(2.0, 0.5)),
            0.29220415249590099,
            max_relative = 1e-12
        );
    }

    proptest! {
        #[test]
        fn psi_parity(n in 0usize..=14, x in 0.01f64..5.0, a in 0.4f64..2.5, c in 0.4f64..2.5) {
            let p = params(a, c);
            let plus = psi_closed(n, x, &p);
            let minus = psi_closed(n, -x, &p);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((minus - sign * plus).abs() <= 1e-12 * plus.abs().max(1.0));
        }
    }

    #[test]
    fn coefficient_seeds_match_hand_expansion() {
        let (a, c) = (0.8, 1.9);
        let p = params(a, c);
        let x = 1.37;
        let v = coeff_recurrence(x, 4, &p);
        let a0 = 1.0
            / (ln_gamma_pos(a).exp() * ln_gamma_pos(c).exp() * ln_gamma_pos(a + c).exp()).sqrt();
        assert_relative_eq!(v.coeffs[0], a0, max_relative = 1e-13);
        assert_relative_eq!(v.coeffs[1], x * a0 / (a * c).sqrt(), max_relative = 1e-13);
        assert_relative_eq!(
            v.coeffs[2],
            (x * v.coeffs[1] - (a * c).sqrt() * v.coeffs[0]) / (a + c).sqrt(),
            max_relative = 1e-13
        );
        // A_0 does not depend on x
        let v2 = coeff_recurrence(-2.0, 4, &p);
        assert_eq!(v.coeffs[0].to_bits(), v2.coeffs[0].to_bits());
    }

    #[test]
    fn odd_coefficients_vanish_at_origin() {
        let v = coeff_recurrence(0.0, 15, &params(1.1, 0.7));
        for k in (1..=15).step_by(2) {
            assert_eq!(v.coeffs[k], 0.0);
        }
    }

    #[test]
    fn recurrence_and_closed_form_agree() {
        // the mutual-oracle contract between the two evaluation routes;
        // residuals are relative to max(sup_k |psi_k|, dressed term scale)
        let mut rng = ChaCha8Rng::seed_from_u64(0x0AC5);
        for _ in 0..50 {
            let a = rng.gen_range(0.3f64..3.0);
            let c = rng.gen_range(0.3f64..3.0);
            let x = rng.gen_range(-6.0f64..6.0);
            let p = params(a, c);
            let nmax = 30;
            let v = coeff_recurrence(x, nmax, &p);
            let sw = sqrt_weight_w(x, &p);
            let closed: Vec<(f64, f64)> =
                (0..=nmax).map(|k| psi_closed_with_scale(k, x, &p)).collect();
            let sup = closed.iter().fold(0.0f64, |m, v| m.max(v.0.abs()));
            for k in 0..=nmax {
                let diff = (sw * v.coeffs[k] - closed[k].0).abs();
                let scale = sup.max(closed[k].1);
                assert!(
                    diff <= 1e-9 * scale,
                    "route mismatch at k={k}, a={a}, c={c}, x={x}: {diff:e} vs scale {scale:e}"
                );
            }
        }
    }

    #[test]
    fn recurrence_residuals_are_small() {
        let p = params(1.0, 2.0);
        let x = 1.3;
        let nmax = 21;
        let v = coeff_recurrence(x, nmax, &p);
        let (a, c) = (p.a, p.c);
        let scale = v.coeffs.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        for n in 0..=(nmax - 2) / 2 {
            let nf = n as f64;
            // even relation at index 2n
            let lhs = x * v.coeffs[2 * n];
            let mut rhs = ((nf + a) * (nf + c)).sqrt() * v.coeffs[2 * n + 1];
            if n > 0 {
                rhs += (nf * (nf + a + c - 1.0)).sqrt() * v.coeffs[2 * n - 1];
            }
            assert!((lhs - rhs).abs() <= 1e-10 * scale);
            // odd relation at index 2n+1
            let lhs = x * v.coeffs[2 * n + 1];
            let rhs = ((nf + 1.0) * (nf + a + c)).sqrt() * v.coeffs[2 * n + 2]
                + ((nf + a) * (nf + c)).sqrt() * v.coeffs[2 * n];
            assert!((lhs - rhs).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn position_matrix_reproduces_eigen_relation() {
        // x psi_n(x) = (Q psi(x))_n on the interior of the truncation
        let p = params(0.9, 1.6);
        let n = 18;
        let q = build_operator(OperatorKind::Q, &p, n);
        for x in [0.0, 0.8, -2.3] {
            let psi: Vec<f64> = (0..n).map(|k| psi_closed(k, x, &p)).collect();
            let scale = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            for row in 0..n - 1 {
                let mut acc = 0.0;
                for col in 0..n {
                    acc += q.get(row, col).re * psi[col];
                }
                assert!(
                    (x * psi[row] - acc).abs() <= 1e-10 * scale,
                    "eigen-residual too large at row {row}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn phi_ground_state_closed_form() {
        // phi_0^(1/2)(x) = 1/sqrt(cosh(pi x))
        for x in [0.0, 0.4, 1.1, -2.2] {
            assert_relative_eq!(
                phi_mp_fn(0, x, 0.5),
                1.0 / (PI * x).cosh().sqrt(),
                max_relative = 1e-12
            );
        }
        assert_eq!(phi_mp_fn(1, 0.0, 1.3), 0.0); // P_1 = 2x
    }

    #[test]
    fn psi_reduces_to_phi_at_c_half() {
        let p = params(1.0, 0.5);
        for n in 0..=10 {
            for x in [-3.1, -0.7, 0.0, 0.45, 2.6] {
                assert_abs_diff_eq!(
                    psi_closed(n, x, &p),
                    phi_mp_fn(n, x, 1.0),
                    epsilon = 1e-11
                );
            }
        }
    }

    #[test]
    fn paraboson_ground_state_and_cusp() {
        for xi in [0.3, 1.0, 2.4] {
            assert_relative_eq!(
                psi_paraboson(0, xi, 0.5),
                PI.powf(-0.25) * (-xi * xi / 2.0).exp(),
                max_relative = 1e-13
            );
        }
        assert_eq!(psi_paraboson(0, 0.0, 2.0), 0.0); // |xi|^(3/2) factor
    }

    #[test]
    fn paraboson_is_the_c_limit_of_psi() {
        // c^(1/4) psi_n(sqrt(c) xi) -> Psi_n(xi), even and odd levels
        let c = 1e6;
        for (n, a) in [(0usize, 1.0), (2, 0.7), (1, 1.0), (3, 0.7), (5, 2.0)] {
            let p = params(a, c);
            for xi in [0.3, 0.9, 1.7, 3.0] {
                let scaled = c.powf(0.25) * psi_closed(n, c.sqrt() * xi, &p);
                assert_abs_diff_eq!(scaled, psi_paraboson(n, xi, a), epsilon = 2e-5);
            }
        }
    }

    #[test]
    fn momentum_coefficients_twist_by_i() {
        let p = params(1.0, 2.0);
        let x = 0.9;
        assert_eq!(momentum_coeff(0, x, &p), Complex64::new(psi_closed(0, x, &p), 0.0));
        assert_eq!(momentum_coeff(2, x, &p), Complex64::new(-psi_closed(2, x, &p), 0.0));
        assert_eq!(momentum_coeff(1, x, &p).re, 0.0);
    }

    #[test]
    fn momentum_eigenvector_satisfies_p_recurrence() {
        // p B_n = (i/2)(J+_{n,n-1} B_{n-1} - J-_{n,n+1} B_{n+1})
        let p = params(1.0, 2.0);
        let pval = 1.3;
        let nmax = 20;
        let jp = build_operator(OperatorKind::JPlus, &p, nmax + 2);
        let jm = build_operator(OperatorKind::JMinus, &p, nmax + 2);
        let coeffs: Vec<Complex64> =
            (0..=nmax + 1).map(|n| momentum_coeff(n, pval, &p)).collect();
        let scale = coeffs.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        let half_i = Complex64::new(0.0, 0.5);
        for n in 1..=nmax - 1 {
            let rhs = half_i * (jp.get(n, n - 1) * coeffs[n - 1] - jm.get(n, n + 1) * coeffs[n + 1]);
            let resid = (pval * coeffs[n] - rhs).norm();
            assert!(resid <= 1e-10 * scale, "residual {resid:e} at n = {n}");
        }
    }

    #[test]
    fn wave_sample_dispatches_families() {
        let p = params(1.0, 0.5);
        let s = WaveSample::evaluate(WaveFamily::Psi, 2, 0.7, &p);
        assert_eq!(s.value, psi_closed(2, 0.7, &p));
        let s = WaveSample::evaluate(WaveFamily::PhiMp, 2, 0.7, &p);
        assert_eq!(s.value, phi_mp_fn(2, 0.7, 1.0));
        let s = WaveSample::evaluate(WaveFamily::PsiParaboson, 2, 0.7, &p);
        assert_eq!(s.value, psi_paraboson(2, 0.7, 1.0));
    }
}

//! The three polynomial families of the oscillator models.
//!
//! Continuous dual Hahn polynomials S_n(x^2; a, b, c) supply the deformed
//! wave functions, Meixner--Pollaczek polynomials P_n^(a)(x; pi/2) the
//! undeformed limit, and generalized Laguerre polynomials the paraboson
//! limit. The polynomials are evaluated by their terminating hypergeometric
//! sums (exact, n + 1 terms); three-term recurrences serve only as
//! independent oracles in the tests.

use num_complex::Complex64;

use crate::specfun::{
    hyp_terminating, hyp_terminating_scaled, pochhammer, real_part_checked, TermSeries,
};

/// Evaluation query for a continuous dual Hahn polynomial S_n(x^2; a, b, c).
///
/// `x2` is the squared spectral variable and may be negative, in which case
/// the hypergeometric parameters a +- sqrt(-x2) are real (the formal regime
/// of the three-parameter deformation).
#[derive(Clone, Copy, Debug)]
pub struct CdhQuery {
    pub n: usize,
    pub x2: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl CdhQuery {
    pub fn new(n: usize, x2: f64, a: f64, b: f64, c: f64) -> Self {
        debug_assert!(a > 0.0 && c > 0.0 && b >= 0.0, "need a, c > 0 and b >= 0");
        Self { n, x2, a, b, c }
    }
}

/// Evaluation query for a Meixner--Pollaczek polynomial P_n^(a)(x; pi/2).
#[derive(Clone, Copy, Debug)]
pub struct MpQuery {
    pub n: usize,
    pub x: f64,
    pub a: f64,
}

impl MpQuery {
    pub fn new(n: usize, x: f64, a: f64) -> Self {
        debug_assert!(a > 0.0, "need a > 0");
        Self { n, x, a }
    }
}

/// The bare terminating 3F2(-n, a+ix, a-ix; a+b, a+c; 1) factor of a
/// continuous dual Hahn polynomial, without the Pochhammer prefactor, plus
/// the largest term magnitude of the (heavily cancelling) sum.
///
/// Split out so that callers with large parameters can attach the prefactor
/// in log space.
pub(crate) fn cdh_hyp_scaled(n: usize, x2: f64, a: f64, b: f64, c: f64) -> (f64, f64) {
    let (p_plus, p_minus) = if x2 >= 0.0 {
        let x = x2.sqrt();
        (Complex64::new(a, x), Complex64::new(a, -x))
    } else {
        let r = (-x2).sqrt();
        (Complex64::new(a + r, 0.0), Complex64::new(a - r, 0.0))
    };
    let spec = TermSeries::new(
        n,
        vec![p_plus, p_minus],
        vec![Complex64::new(a + b, 0.0), Complex64::new(a + c, 0.0)],
        Complex64::new(1.0, 0.0),
    );
    let (sum, max_term) =
        hyp_terminating_scaled(&spec).expect("a+b, a+c > 0 cannot hit a pole");
    (real_part_checked(sum), max_term)
}

pub(crate) fn cdh_hyp(n: usize, x2: f64, a: f64, b: f64, c: f64) -> f64 {
    cdh_hyp_scaled(n, x2, a, b, c).0
}

/// Continuous dual Hahn polynomial S_n(x^2; a, b, c).
pub fn cdh(q: &CdhQuery) -> f64 {
    cdh_with_scale(q).0
}

/// S_n together with its magnitude scale: the Pochhammer prefactor times
/// the largest term of the hypergeometric sum. Residual tolerances are
/// relative to this scale because the sum cancels while the terms grow
/// like a squared gamma function.
pub fn cdh_with_scale(q: &CdhQuery) -> (f64, f64) {
    let pref = pochhammer(q.a + q.b, q.n) * pochhammer(q.a + q.c, q.n);
    let (hyp, max_term) = cdh_hyp_scaled(q.n, q.x2, q.a, q.b, q.c);
    (pref * hyp, pref.abs() * max_term)
}

/// Meixner--Pollaczek polynomial P_n^(a)(x; pi/2).
///
/// The i^n prefactor and the complex 2F1 combine to a real value; the
/// rounding residual in the imaginary part is asserted away.
pub fn mp(q: &MpQuery) -> f64 {
    let spec = TermSeries::new(
        q.n,
        vec![Complex64::new(q.a, q.x)],
        vec![Complex64::new(2.0 * q.a, 0.0)],
        Complex64::new(2.0, 0.0),
    );
    let f = hyp_terminating(&spec).expect("2a > 0 cannot hit a pole");
    let i_pow = match q.n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let factorial = pochhammer(1.0, q.n);
    pochhammer(2.0 * q.a, q.n) / factorial * real_part_checked(i_pow * f)
}

/// Generalized Laguerre polynomial L_n^(alpha)(t) by the three-term
/// recurrence in n, seeded with the degree-0 and degree-1 closed forms.
pub fn laguerre(n: usize, alpha: f64, t: f64) -> f64 {
    debug_assert!(alpha > -1.0);
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = alpha + 1.0 - t;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - t) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Residuals of the contiguous difference relations tying the b and b+1
/// parameter families:
///
/// ```text
/// r1 = (x^2 + b^2) S_n(x^2; a, b+1, c)
///        - (n+a+b)(n+b+c) S_n(x^2; a, b, c) + S_{n+1}(x^2; a, b, c)
/// r2 = S_n(x^2; a, b, c) - S_n(x^2; a, b+1, c)
///        + n (n+a+c-1) S_{n-1}(x^2; a, b+1, c)
/// ```
///
/// Both vanish identically in exact arithmetic.
pub fn cdh_diff_residuals(n: usize, x: f64, a: f64, b: f64, c: f64) -> (f64, f64) {
    let x2 = x * x;
    let nf = n as f64;
    let s_n_b = cdh(&CdhQuery::new(n, x2, a, b, c));
    let s_n_b1 = cdh(&CdhQuery::new(n, x2, a, b + 1.0, c));
    let s_np1_b = cdh(&CdhQuery::new(n + 1, x2, a, b, c));
    let r1 = (x2 + b * b) * s_n_b1 - (nf + a + b) * (nf + b + c) * s_n_b + s_np1_b;
    let r2 = if n == 0 {
        s_n_b - s_n_b1
    } else {
        let s_nm1_b1 = cdh(&CdhQuery::new(n - 1, x2, a, b + 1.0, c));
        s_n_b - s_n_b1 + nf * (nf + a + c - 1.0) * s_nm1_b1
    };
    (r1, r2)
}

/// The difference-relation residuals normalized by the magnitude scale of
/// each relation: the largest dressed series term among the polynomials
/// involved. S_n grows like a squared gamma function and its sum cancels,
/// so only this relative form is meaningful as a tolerance.
pub fn cdh_diff_relative_residuals(n: usize, x: f64, a: f64, b: f64, c: f64) -> (f64, f64) {
    let x2 = x * x;
    let nf = n as f64;
    let (_, sc_n_b) = cdh_with_scale(&CdhQuery::new(n, x2, a, b, c));
    let (_, sc_n_b1) = cdh_with_scale(&CdhQuery::new(n, x2, a, b + 1.0, c));
    let (_, sc_np1_b) = cdh_with_scale(&CdhQuery::new(n + 1, x2, a, b, c));
    let (r1, r2) = cdh_diff_residuals(n, x, a, b, c);
    let scale1 = ((x2 + b * b) * sc_n_b1)
        .max((nf + a + b) * (nf + b + c) * sc_n_b)
        .max(sc_np1_b);
    let scale2 = if n == 0 {
        sc_n_b.max(sc_n_b1)
    } else {
        let (_, sc_nm1_b1) = cdh_with_scale(&CdhQuery::new(n - 1, x2, a, b + 1.0, c));
        sc_n_b.max(sc_n_b1).max(nf * (nf + a + c - 1.0) * sc_nm1_b1)
    };
    (r1 / scale1.max(f64::MIN_POSITIVE), r2 / scale2.max(f64::MIN_POSITIVE))
}

//! Conical Legendre function P_{-1/2+it}(cosh r), the spherical function of
//! the hyperbolic plane.
//!
//! Two complementary evaluation paths:
//!
//! * the Mehler–Dirichlet integral
//!   `P = (1/pi) ∫_0^r cos(t u) / sqrt(sinh((r+u)/2) sinh((r-u)/2)) du`,
//!   integrated by tanh–sinh quadrature which absorbs the inverse-square-root
//!   endpoint singularity at u = r. Uniformly valid, but the node count grows
//!   with t*r.
//! * a descending hypergeometric expansion in sech^2(r) (with its conjugate
//!   companion term), which costs O(series terms) independent of r and takes
//!   over for large r where the integral path would need t*r/2pi oscillation
//!   periods. The two paths cross-check each other on an overlap region in
//!   the tests.

use super::gamma::log_gamma;
use super::SpecFunError;
use crate::quad::{tanh_sinh, EvalResult};
use num_complex::Complex64;
use std::f64::consts::PI;

const DEFAULT_ABS_TOL: f64 = 1e-13;

/// P_{-1/2+it}(cosh r) with the default tolerance. Even in t, equals 1 at
/// r = 0, and satisfies |P| <= 1 for all real t, r.
pub fn conical_p(t: f64, r: f64) -> Result<EvalResult, SpecFunError> {
    conical_p_tol(t, r, DEFAULT_ABS_TOL)
}

pub fn conical_p_tol(t: f64, r: f64, abs_tol: f64) -> Result<EvalResult, SpecFunError> {
    if r < 0.0 || !r.is_finite() || !t.is_finite() {
        return Err(SpecFunError::Domain(format!(
            "conical_p requires finite t and r >= 0, got t = {t}, r = {r}"
        )));
    }
    if r == 0.0 {
        return Ok(EvalResult::new(1.0, 0.0));
    }
    if r < 1e-6 {
        // 1 - (1/4 + t^2) r^2/4 with O(r^4) remainder, negligible here
        let c2 = 0.25 + t * t;
        return Ok(EvalResult::new(1.0 - c2 * r * r / 4.0, c2 * c2 * r.powi(4)));
    }
    let t = t.abs();
    if r >= 2.0 && t >= 0.05 {
        if let Ok(res) = descending_series(t, r) {
            if res.abs_err_estimate <= abs_tol {
                return Ok(res);
            }
        }
    }
    mehler_dirichlet(t, r, abs_tol)
}

fn mehler_dirichlet(t: f64, r: f64, abs_tol: f64) -> Result<EvalResult, SpecFunError> {
    // sqrt(2(cosh r - cosh u)) = 2 sqrt(sinh((r+u)/2) sinh((r-u)/2)), and the
    // product form stays accurate as u -> r where the difference cancels.
    let integrand =
        |u: f64, _da: f64, db: f64| (t * u).cos() / ((0.5 * (r + u)).sinh() * (0.5 * db).sinh()).sqrt();
    let out = tanh_sinh(&integrand, 0.0, r, abs_tol * PI * 0.5, 0.0, 12)?;
    Ok(EvalResult::new(
        out.value / PI,
        out.abs_err / PI + f64::EPSILON * out.resabs / PI,
    ))
}

/// Descending expansion about x = cosh r -> infinity:
///
/// ```text
/// P_nu(x) = G(nu) (2x)^nu F((1-nu)/2, -nu/2; 1/2-nu; x^-2) + (nu -> -nu-1)
/// G(nu)   = Gamma(nu+1/2) / (sqrt(pi) Gamma(nu+1))
/// ```
///
/// For nu = -1/2 + it the two terms are complex conjugates, so P is twice the
/// real part of the first. The series parameters grow like t, which amplifies
/// rounding; the returned error estimate accounts for that and the caller
/// falls back to the integral path when it is too large.
fn descending_series(t: f64, r: f64) -> Result<EvalResult, SpecFunError> {
    let it = Complex64::new(0.0, t);
    let lg = log_gamma(it)? - log_gamma(Complex64::new(0.5, t))?;
    // ln(2 cosh r) and sech^2 r without overflow for large r
    let ln_2x = r + (-2.0 * r).exp().ln_1p();
    let sech = 2.0 * (-r).exp() / (1.0 + (-2.0 * r).exp());
    let z = sech * sech;
    let nu = Complex64::new(-0.5, t);
    let pref = (lg - 0.5 * PI.ln() + nu * ln_2x).exp();

    let a = Complex64::new(0.75, -0.5 * t);
    let b = Complex64::new(0.25, -0.5 * t);
    let c = Complex64::new(1.0, -t);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut sum_abs = 1.0;
    let mut converged = false;
    let mut tail = 0.0;
    for k in 0..240 {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        sum_abs += term.norm();
        if term.norm() < 1e-17 * sum.norm().max(1e-30) {
            converged = true;
            tail = term.norm() * z / (1.0 - z);
            break;
        }
    }
    if !converged {
        return Err(SpecFunError::Convergence(
            "descending conical series did not converge".into(),
        ));
    }
    let value = 2.0 * (pref * sum).re;
    let err = 2.0 * pref.norm() * (tail + 4.0 * f64::EPSILON * sum_abs)
        + 4.0 * f64::EPSILON * value.abs();
    Ok(EvalResult::new(value, err))
}

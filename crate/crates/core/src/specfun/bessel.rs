//! Modified Bessel function K of purely imaginary order, from the cosine
//! integral representation
//!
//! ```text
//! K_{i tau}(x) = ∫_0^∞ exp(-x cosh u) cos(tau u) du,   x > 0
//! ```
//!
//! truncated where exp(-x cosh U) is below the requested tolerance, which
//! gives an explicit a-priori tail bound. Real-valued and even in tau.

use super::SpecFunError;
use crate::quad::{adaptive_gk, EvalResult};

pub(crate) const DEFAULT_ABS_TOL: f64 = 1e-12;
pub(crate) const DEFAULT_REL_TOL: f64 = 1e-10;

/// K_{i tau}(x) with an error estimate covering quadrature and truncation.
pub fn bessel_k_imag(tau: f64, x: f64) -> Result<EvalResult, SpecFunError> {
    bessel_k_imag_tol(tau, x, DEFAULT_ABS_TOL, DEFAULT_REL_TOL)
}

pub fn bessel_k_imag_tol(
    tau: f64,
    x: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<EvalResult, SpecFunError> {
    if x <= 0.0 || x.is_nan() {
        return Err(SpecFunError::Domain(format!(
            "bessel_k_imag requires x > 0, got {x}"
        )));
    }
    let tau = tau.abs(); // even in tau
    let tail_target = (abs_tol * 0.1).max(1e-300);
    // exp(-x cosh U) < tail_target
    let ratio = (1.0 / tail_target).ln() / x;
    let upper = if ratio > 1.0 { ratio.acosh() + 1.0 } else { 1.0 };
    // ∫_U^∞ exp(-x cosh u) du <= exp(-x cosh U) / (x sinh U)
    let tail_bound = (-x * upper.cosh()).exp() / (x * upper.sinh());

    let cells = (1.0 + tau * upper / 3.0).ceil() as usize;
    let out = adaptive_gk(
        &|u: f64| (-x * u.cosh()).exp() * (tau * u).cos(),
        0.0,
        upper,
        abs_tol * 0.5,
        rel_tol * 0.5,
        cells,
        cells * 8 + 400,
    )?;
    Ok(EvalResult::new(out.value, out.abs_err + tail_bound))
}

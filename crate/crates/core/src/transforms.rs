//! Forward and inverse spherical transforms on the hyperbolic plane (H2,
//! a Mehler–Fock pair) and three-dimensional hyperbolic space (H3, a sine
//! pair), plus the moment-generating-function route for H3, spectral
//! densities, and L^1/L^2 membership integrals.
//!
//! Conventions, fixed once for the whole crate:
//!
//! ```text
//! H2:  f(t) = 2 pi ∫_0^∞ g(r) P_{-1/2+it}(cosh r) sinh(r) dr
//!      g(r) = (1/2 pi) ∫_0^∞ f(t) P_{-1/2+it}(cosh r) t tanh(pi t) dt
//! H3:  f(t) = (4 pi / t) ∫_0^∞ g(r) sinh(r) sin(t r) dr
//!      g(r) sinh(r) = (1/2 pi^2) ∫_0^∞ t f(t) sin(t r) dt
//! ```

use crate::kernels::{profile_envelope, profile_eval, RadialProfile};
use crate::quad::{adaptive_gk, EvalResult, QuadError};
use crate::specfun::{conical_p_tol, SpecFunError};
use num_complex::Complex64;
use rayon::prelude::*;
use std::cell::Cell;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("quadrature did not converge: {0}")]
    Convergence(String),
    #[error("tail bound failed: {0}")]
    Tail(String),
    #[error("spectral tail not controlled: {0}")]
    SpectralTail(String),
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

impl From<QuadError> for TransformError {
    fn from(e: QuadError) -> Self {
        match e {
            QuadError::Convergence { .. } => TransformError::Convergence(e.to_string()),
            QuadError::NonFinite { .. } => TransformError::Domain(e.to_string()),
        }
    }
}

/// The two model spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    H2,
    H3,
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::H2 => 2,
            Space::H3 => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Space::H2 => "h2",
            Space::H3 => "h3",
        }
    }

    /// Volume weight w(r) of geodesic spherical coordinates:
    /// 2 pi sinh r in the plane, 4 pi sinh^2 r in the space.
    pub fn volume_weight(self, r: f64) -> f64 {
        match self {
            Space::H2 => 2.0 * PI * r.sinh(),
            Space::H3 => 4.0 * PI * r.sinh() * r.sinh(),
        }
    }

    /// Decaying bound on the spherical function, uniform in t:
    /// |phi_t(r)| <= (1+r) e^{-r/2} on H2 and r/sinh r on H3.
    fn spherical_bound(self, r: f64) -> f64 {
        match self {
            Space::H2 => ((1.0 + r) * (-0.5 * r).exp()).min(1.0),
            Space::H3 => {
                if r < 1e-8 {
                    1.0
                } else {
                    (r / r.sinh()).min(1.0)
                }
            }
        }
    }
}

impl std::str::FromStr for Space {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, TransformError> {
        match s.to_ascii_lowercase().as_str() {
            "h2" => Ok(Space::H2),
            "h3" => Ok(Space::H3),
            other => Err(TransformError::Domain(format!(
                "unknown space '{other}', expected h2 or h3"
            ))),
        }
    }
}

/// Radial integration cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialCutoff {
    /// Smallest R whose integrand tail bound drops below abs_tol / 10.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub r_max: RadialCutoff,
    /// Panel budget for the adaptive rule.
    pub max_refinements: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            r_max: RadialCutoff::Auto,
            max_refinements: 20_000,
        }
    }
}

impl QuadratureConfig {
    pub fn with_tols(abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }
}

/// Transform values sampled on a spectral grid.
#[derive(Debug, Clone)]
pub struct SpectralSamples {
    pub space: Space,
    pub t_grid: Vec<f64>,
    pub values: Vec<f64>,
    pub err: Vec<f64>,
    pub profile_descriptor: String,
    pub config_note: String,
}

impl SpectralSamples {
    pub fn new(
        space: Space,
        t_grid: Vec<f64>,
        values: Vec<f64>,
        err: Vec<f64>,
        profile_descriptor: String,
        config_note: String,
    ) -> Result<Self, TransformError> {
        if t_grid.len() != values.len() || t_grid.len() != err.len() {
            return Err(TransformError::Domain(
                "t_grid, values, err must have equal lengths".into(),
            ));
        }
        if t_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(TransformError::Domain("t_grid must be increasing".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(TransformError::Domain("non-finite spectral value".into()));
        }
        Ok(Self {
            space,
            t_grid,
            values,
            err,
            profile_descriptor,
            config_note,
        })
    }

    /// CSV "t,fhat,err" with a comment header recording provenance.
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# space={} profile={} {}\n",
            self.space.label(),
            self.profile_descriptor,
            self.config_note
        );
        out.push_str("t,fhat,err\n");
        for i in 0..self.t_grid.len() {
            out.push_str(&format!("{},{},{}\n", self.t_grid[i], self.values[i], self.err[i]));
        }
        out
    }
}

fn config_note(q: &QuadratureConfig, r_max: f64) -> String {
    format!(
        "abs_tol={} rel_tol={} r_max={} max_refinements={}",
        q.abs_tol, q.rel_tol, r_max, q.max_refinements
    )
}

/// Integrand magnitude bound used for the automatic cutoff.
fn tail_envelope(space: Space, profile: &RadialProfile, r: f64) -> f64 {
    space.volume_weight(r).abs() * profile_envelope(profile, r) * space.spherical_bound(r)
}

const R_CAP: f64 = 600.0;

/// Smallest R with (envelope at R) * (local tail length) below abs_tol / 10.
fn auto_r_max(
    space: Space,
    profile: &RadialProfile,
    abs_tol: f64,
) -> Result<f64, TransformError> {
    let target = (abs_tol / 10.0).max(1e-280);
    let tail_estimate = |r: f64| -> Option<f64> {
        let e0 = tail_envelope(space, profile, r);
        if e0 == 0.0 {
            return Some(0.0);
        }
        let delta = 0.5;
        let e1 = tail_envelope(space, profile, r + delta);
        if e1 <= 0.0 || e1.is_nan() {
            return Some(e0 * delta);
        }
        let rate = (e0 / e1).ln() / delta;
        if rate < 1e-3 {
            None // not yet decaying fast enough to bound the tail
        } else {
            Some(e0 * (1.0 / rate + delta))
        }
    };
    let mut r = 4.0;
    while r <= R_CAP {
        if let Some(tail) = tail_estimate(r) {
            if tail < target {
                // bisect back toward the smallest sufficient cutoff
                let mut lo = r / 2.0;
                let mut hi = r;
                for _ in 0..20 {
                    let mid = 0.5 * (lo + hi);
                    match tail_estimate(mid) {
                        Some(t) if t < target => hi = mid,
                        _ => lo = mid,
                    }
                }
                return Ok(hi);
            }
        }
        r *= 2.0;
    }
    Err(TransformError::Tail(format!(
        "no radial cutoff below {R_CAP} bounds the tail of {profile} on {} below {target:.3e} \
         (profile decays too slowly)",
        space.label()
    )))
}

fn resolve_r_max(
    space: Space,
    profile: &RadialProfile,
    q: &QuadratureConfig,
) -> Result<f64, TransformError> {
    if q.abs_tol <= 0.0 || q.abs_tol.is_nan() || q.rel_tol < 0.0 || q.rel_tol.is_nan() {
        return Err(TransformError::Domain(
            "tolerances must be positive".into(),
        ));
    }
    match q.r_max {
        RadialCutoff::Fixed(r) if r > 0.0 => Ok(r),
        RadialCutoff::Fixed(r) => Err(TransformError::Domain(format!(
            "r_max must be positive, got {r}"
        ))),
        RadialCutoff::Auto => auto_r_max(space, profile, q.abs_tol),
    }
}

/// Spherical transform of a radial profile at spectral parameter t.
///
/// Even in t by construction of both spherical functions. The error estimate
/// covers panel adaptivity, the rounding noise floor of the panel sums, the
/// radial tail, and (on H2) the inner conical-function evaluations.
pub fn forward(
    space: Space,
    profile: &RadialProfile,
    t: f64,
    q: &QuadratureConfig,
) -> Result<EvalResult, TransformError> {
    let r_max = resolve_r_max(space, profile, q)?;
    forward_with_r_max(space, profile, t, q, r_max)
}

fn forward_with_r_max(
    space: Space,
    profile: &RadialProfile,
    t: f64,
    q: &QuadratureConfig,
    r_max: f64,
) -> Result<EvalResult, TransformError> {
    let tail = {
        let e = tail_envelope(space, profile, r_max);
        // decay length is at most ~2 for every profile family at its cutoff
        2.0 * e
    };
    let cells = ((r_max * t.abs().max(0.5) / 3.0).ceil() as usize).clamp(1, 8192);
    let budget = q.max_refinements.max(cells + 64);

    match space {
        Space::H3 => {
            let integrand: Box<dyn Fn(f64) -> f64> = if t.abs() < 1e-12 {
                Box::new(move |r: f64| 4.0 * PI * profile_eval(profile, r) * r * r.sinh())
            } else {
                Box::new(move |r: f64| {
                    4.0 * PI / t * profile_eval(profile, r) * r.sinh() * (t * r).sin()
                })
            };
            let out = adaptive_gk(&integrand, 0.0, r_max, q.abs_tol, q.rel_tol, cells, budget)?;
            Ok(EvalResult::new(
                out.value,
                out.abs_err + tail + 4.0 * f64::EPSILON * out.resabs,
            ))
        }
        Space::H2 => {
            let inner_tol = (q.abs_tol * 1e-3).clamp(5e-16, 1e-13);
            let inner_err = Cell::new(0.0_f64);
            let inner_fail = Cell::new(false);
            let integrand = |r: f64| -> f64 {
                match conical_p_tol(t, r, inner_tol) {
                    Ok(p) => {
                        if p.abs_err_estimate > inner_err.get() {
                            inner_err.set(p.abs_err_estimate);
                        }
                        2.0 * PI * profile_eval(profile, r) * p.value * r.sinh()
                    }
                    Err(_) => {
                        inner_fail.set(true);
                        f64::NAN
                    }
                }
            };
            let out = adaptive_gk(&integrand, 0.0, r_max, q.abs_tol, q.rel_tol, cells, budget)
                .map_err(|e| {
                    if inner_fail.get() {
                        TransformError::Convergence(
                            "conical function evaluation failed inside the radial integral"
                                .to_string(),
                        )
                    } else {
                        e.into()
                    }
                })?;
            // Inner conical errors pollute the integral by at most
            // err_P * ∫ |g| w; the (1 + r_max) factor stands in for that
            // measure without computing it exactly.
            let pollution = inner_err.get() * (1.0 + out.resabs + r_max);
            Ok(EvalResult::new(
                out.value,
                out.abs_err + tail + pollution + 4.0 * f64::EPSILON * out.resabs,
            ))
        }
    }
}

/// Vectorized [`forward`] over a spectral grid; grid points are evaluated in
/// parallel and the result is deterministic regardless of scheduling.
pub fn forward_grid(
    space: Space,
    profile: &RadialProfile,
    t_grid: &[f64],
    q: &QuadratureConfig,
) -> Result<SpectralSamples, TransformError> {
    let r_max = resolve_r_max(space, profile, q)?;
    let evaluated: Result<Vec<EvalResult>, TransformError> = t_grid
        .par_iter()
        .map(|&t| forward_with_r_max(space, profile, t, q, r_max))
        .collect();
    let evaluated = evaluated?;
    SpectralSamples::new(
        space,
        t_grid.to_vec(),
        evaluated.iter().map(|e| e.value).collect(),
        evaluated.iter().map(|e| e.abs_err_estimate).collect(),
        profile.to_string(),
        config_note(q, r_max),
    )
}

/// Spectral density against which inverse transforms integrate:
/// t tanh(pi t) on H2, t^2 / (2 pi^2) on H3. Nonnegative with value 0 at t=0.
pub fn plancherel_density(space: Space, t: f64) -> f64 {
    match space {
        Space::H2 => t * (PI * t).tanh(),
        Space::H3 => t * t / (2.0 * PI * PI),
    }
}

/// Composite integration over a uniform grid: Boole's rule on runs of four
/// intervals, closed Newton-Cotes for the remainder, with a Simpson pass of
/// the same data as the error comparator.
fn composite_uniform(values: &[f64], h: f64) -> (f64, f64) {
    let n = values.len();
    assert!(n >= 2);
    let mut boole = 0.0;
    let mut i = 0;
    while i + 4 < n {
        boole += h * 2.0 / 45.0
            * (7.0 * values[i]
                + 32.0 * values[i + 1]
                + 12.0 * values[i + 2]
                + 32.0 * values[i + 3]
                + 7.0 * values[i + 4]);
        i += 4;
    }
    match n - 1 - i {
        0 => {}
        1 => boole += h * 0.5 * (values[i] + values[i + 1]),
        2 => boole += h / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]),
        3 => {
            boole += h * 3.0 / 8.0
                * (values[i] + 3.0 * values[i + 1] + 3.0 * values[i + 2] + values[i + 3])
        }
        _ => unreachable!(),
    }
    // Simpson over the same samples for comparison
    let mut simpson = 0.0;
    let mut j = 0;
    while j + 2 < n {
        simpson += h / 3.0 * (values[j] + 4.0 * values[j + 1] + values[j + 2]);
        j += 2;
    }
    if n - 1 - j == 1 {
        simpson += h * 0.5 * (values[n - 2] + values[n - 1]);
    }
    let resabs: f64 = values.iter().map(|v| v.abs()).sum::<f64>() * h;
    let err = (boole - simpson).abs() * 0.5 + 4.0 * f64::EPSILON * resabs;
    (boole, err)
}

fn grid_spacing(t_grid: &[f64]) -> Option<f64> {
    if t_grid.len() < 2 {
        return None;
    }
    let h = t_grid[1] - t_grid[0];
    for w in t_grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > 1e-9 * h.abs() {
            return None;
        }
    }
    Some(h)
}

/// Reconstructs g(r) from sampled transform values.
///
/// The samples must extend far enough that the spectral tail is below the
/// absolute tolerance; the check uses the last sample against the spectral
/// density. Uniform grids get a sixth-order composite rule; non-uniform
/// grids fall back to the trapezoid rule with a correspondingly larger error
/// estimate.
pub fn inverse(
    space: Space,
    samples: &SpectralSamples,
    r: f64,
    q: &QuadratureConfig,
) -> Result<EvalResult, TransformError> {
    if samples.space != space {
        return Err(TransformError::Domain(format!(
            "samples were taken on {}, inverse requested on {}",
            samples.space.label(),
            space.label()
        )));
    }
    let n = samples.t_grid.len();
    if n < 5 {
        return Err(TransformError::Domain(
            "need at least 5 spectral samples".into(),
        ));
    }
    let t_last = samples.t_grid[n - 1];
    // Last sample above its own noise signals an uncontrolled spectral tail;
    // a sample indistinguishable from zero contributes only through its
    // error estimate, which is propagated below.
    let v_last = (samples.values[n - 1].abs() - samples.err[n - 1]).max(0.0);
    let tail_indicator = v_last * plancherel_density(space, t_last) * t_last.max(1.0);
    if tail_indicator >= q.abs_tol {
        return Err(TransformError::SpectralTail(format!(
            "|fhat({t_last})| * density * t = {tail_indicator:.3e} >= abs_tol = {:.3e}; extend the grid",
            q.abs_tol
        )));
    }

    let mut integrand = Vec::with_capacity(n);
    let mut sample_err = 0.0;
    match space {
        Space::H3 => {
            let sinh_r = r.sinh();
            for i in 0..n {
                let t = samples.t_grid[i];
                let w = if r < 1e-8 {
                    t * t / (2.0 * PI * PI)
                } else {
                    t * (t * r).sin() / (2.0 * PI * PI * sinh_r)
                };
                integrand.push(samples.values[i] * w);
                sample_err += samples.err[i] * w.abs();
            }
        }
        Space::H2 => {
            let inner_tol = (q.abs_tol * 1e-3).clamp(5e-16, 1e-13);
            for i in 0..n {
                let t = samples.t_grid[i];
                let p = conical_p_tol(t, r, inner_tol)?;
                let w = p.value * plancherel_density(Space::H2, t) / (2.0 * PI);
                integrand.push(samples.values[i] * w);
                sample_err += samples.err[i] * w.abs()
                    + p.abs_err_estimate * samples.values[i].abs() / (2.0 * PI);
            }
        }
    }

    let (value, rule_err) = match grid_spacing(&samples.t_grid) {
        Some(h) => {
            let (v, e) = composite_uniform(&integrand, h);
            // the composite rule scales errors by h internally; sample errors
            // enter through the weighted sum
            (v, e + sample_err * h)
        }
        None => {
            let mut v = 0.0;
            let mut habs = 0.0_f64;
            for i in 0..n - 1 {
                let h = samples.t_grid[i + 1] - samples.t_grid[i];
                v += 0.5 * h * (integrand[i] + integrand[i + 1]);
                habs = habs.max(h);
            }
            // second-order rule: no sharper estimate available
            (v, habs * habs * 0.1 + sample_err * habs)
        }
    };
    Ok(EvalResult::new(value, rule_err + tail_indicator))
}

/// The H3 transform through the moment-generating function of the evenly
/// extended profile: f(t) = (pi / t) Im{ G(it + 1) - G(it - 1) }.
///
/// `mgf` returns `None` where it is undefined, which surfaces as a domain
/// error. For profiles with an analytic MGF this route has no quadrature at
/// all.
pub fn mgf_transform_h3<G>(mgf: G, t: f64) -> Result<f64, TransformError>
where
    G: Fn(Complex64) -> Option<Complex64>,
{
    if t <= 0.0 || t.is_nan() {
        return Err(TransformError::Domain(format!(
            "mgf route requires t > 0, got {t}"
        )));
    }
    let plus = mgf(Complex64::new(1.0, t))
        .ok_or_else(|| TransformError::Domain("MGF undefined at it + 1".into()))?;
    let minus = mgf(Complex64::new(-1.0, t))
        .ok_or_else(|| TransformError::Domain("MGF undefined at it - 1".into()))?;
    let value = PI / t * (plus - minus).im;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(TransformError::Domain(
            "MGF route produced a non-finite value".into(),
        ))
    }
}

/// Exponent for [`lp_norm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpExponent {
    L1,
    L2,
}

impl LpExponent {
    fn power(self) -> f64 {
        match self {
            LpExponent::L1 => 1.0,
            LpExponent::L2 => 2.0,
        }
    }
}

/// ∫ |g(r)|^p w(r) dr or `Divergent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LpNorm {
    Finite(f64),
    Divergent,
}

/// L^p membership integral of the profile against the volume weight.
///
/// Divergence is decided analytically for the named families (sech needs
/// a > 1/2 on H2 and a > 1 on H3 for L^2; a > 1 and a > 2 for L^1); custom
/// profiles are classified by whether their envelope admits a tail bound.
pub fn lp_norm(
    space: Space,
    profile: &RadialProfile,
    p: LpExponent,
    q: &QuadratureConfig,
) -> Result<LpNorm, TransformError> {
    let divergent = match (space, profile, p) {
        (_, RadialProfile::Gaussian { .. }, _) | (_, RadialProfile::Wishart { .. }, _) => false,
        (Space::H2, RadialProfile::Sech { a }, LpExponent::L2) => *a <= 0.5,
        (Space::H2, RadialProfile::Sech { a }, LpExponent::L1) => *a <= 1.0,
        (Space::H3, RadialProfile::Sech { a }, LpExponent::L2) => *a <= 1.0,
        (Space::H3, RadialProfile::Sech { a }, LpExponent::L1) => *a <= 2.0,
        (_, RadialProfile::Custom { .. }, _) => false, // decided by the tail search below
    };
    if divergent {
        return Ok(LpNorm::Divergent);
    }
    let pw = p.power();
    let envelope = |r: f64| space.volume_weight(r) * profile_envelope(profile, r).powf(pw);
    // same cutoff machinery as the forward transform, without the spherical
    // decay factor (there is none here)
    let target = (q.abs_tol / 10.0).max(1e-280);
    let mut r_max = None;
    let mut r = 4.0;
    while r <= R_CAP {
        let e0 = envelope(r);
        let e1 = envelope(r + 0.5);
        if e0 == 0.0 {
            r_max = Some(r);
            break;
        }
        if e1 > 0.0 {
            let rate = (e0 / e1).ln() / 0.5;
            if rate > 1e-3 && e0 * (1.0 / rate + 0.5) < target {
                r_max = Some(r);
                break;
            }
        }
        r *= 2.0;
    }
    let Some(r_max) = r_max else {
        return Ok(LpNorm::Divergent);
    };
    let out = adaptive_gk(
        &|r: f64| space.volume_weight(r) * profile_eval(profile, r).abs().powf(pw),
        0.0,
        r_max,
        q.abs_tol,
        q.rel_tol.max(1e-12),
        8,
        q.max_refinements,
    )?;
    Ok(LpNorm::Finite(out.value))
}

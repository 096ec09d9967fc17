//! Radial kernel profiles and everything known about them in closed form:
//! spherical transforms where a formula exists, moment-generating functions,
//! the large-lambda Gaussian asymptotic on the plane, and the
//! Herschel–Maxwell density family.

use crate::geometry::{distance, GeometryError, HPoint};
use crate::quad::EvalResult;
use crate::specfun::{bessel_k_imag, gamma_abs_sq, log_gamma, SpecFunError};
use crate::transforms::Space;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("invalid kernel parameter: {0}")]
    Parameter(String),
    #[error("cannot parse kernel descriptor '{0}': expected e.g. gaussian:lambda=1.0, sech:a=2, wishart:a=0.5")]
    Parse(String),
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// A radial kernel profile g(r), so that k(x, y) = g(d(x, y)).
#[derive(Clone)]
pub enum RadialProfile {
    /// g(r) = exp(-lambda r^2), lambda > 0
    Gaussian { lambda: f64 },
    /// g(r) = exp(-2a cosh r), a > 0
    Wishart { a: f64 },
    /// g(r) = cosh(r)^(-a), a > 0
    Sech { a: f64 },
    /// Arbitrary evaluator with a pointwise envelope |g(r)| <= envelope(r),
    /// needed for automatic integration cutoffs.
    Custom {
        descriptor: String,
        eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
        envelope: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    },
}

impl fmt::Debug for RadialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadialProfile({self})")
    }
}

impl RadialProfile {
    pub fn gaussian(lambda: f64) -> Result<Self, KernelError> {
        if lambda > 0.0 && lambda.is_finite() {
            Ok(RadialProfile::Gaussian { lambda })
        } else {
            Err(KernelError::Parameter(format!(
                "gaussian requires lambda > 0, got {lambda}"
            )))
        }
    }

    pub fn wishart(a: f64) -> Result<Self, KernelError> {
        if a > 0.0 && a.is_finite() {
            Ok(RadialProfile::Wishart { a })
        } else {
            Err(KernelError::Parameter(format!(
                "wishart requires a > 0, got {a}"
            )))
        }
    }

    pub fn sech(a: f64) -> Result<Self, KernelError> {
        if a > 0.0 && a.is_finite() {
            Ok(RadialProfile::Sech { a })
        } else {
            Err(KernelError::Parameter(format!(
                "sech requires a > 0, got {a}"
            )))
        }
    }
}

impl fmt::Display for RadialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadialProfile::Gaussian { lambda } => write!(f, "gaussian:lambda={lambda}"),
            RadialProfile::Wishart { a } => write!(f, "wishart:a={a}"),
            RadialProfile::Sech { a } => write!(f, "sech:a={a}"),
            RadialProfile::Custom { descriptor, .. } => write!(f, "custom:{descriptor}"),
        }
    }
}

impl FromStr for RadialProfile {
    type Err = KernelError;

    /// Grammar: `kind:param=value` with kind/param pairs
    /// `gaussian:lambda`, `sech:a`, `wishart:a`. Round-trips with `Display`.
    fn from_str(s: &str) -> Result<Self, KernelError> {
        let bad = || KernelError::Parse(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let (param, value) = rest.split_once('=').ok_or_else(bad)?;
        let value: f64 = value.trim().parse().map_err(|_| bad())?;
        match (kind.trim(), param.trim()) {
            ("gaussian", "lambda") => RadialProfile::gaussian(value),
            ("sech", "a") => RadialProfile::sech(value),
            ("wishart", "a") => RadialProfile::wishart(value),
            _ => Err(bad()),
        }
    }
}

/// g(r).
pub fn profile_eval(profile: &RadialProfile, r: f64) -> f64 {
    match profile {
        RadialProfile::Gaussian { lambda } => (-lambda * r * r).exp(),
        RadialProfile::Wishart { a } => (-2.0 * a * r.cosh()).exp(),
        RadialProfile::Sech { a } => {
            // cosh^(-a) via logs so large r cannot overflow before decay
            (-a * (r + (-2.0 * r).exp().ln_1p() - std::f64::consts::LN_2)).exp()
        }
        RadialProfile::Custom { eval, .. } => eval(r),
    }
}

/// Pointwise upper bound on |g(r)|, used for integration cutoffs.
pub fn profile_envelope(profile: &RadialProfile, r: f64) -> f64 {
    match profile {
        RadialProfile::Custom { envelope, .. } => envelope(r),
        _ => profile_eval(profile, r).abs(),
    }
}

/// k(x, y) = g(d(x, y)); symmetric, invariant under isometries.
pub fn kernel_eval(
    space: Space,
    profile: &RadialProfile,
    p: &HPoint,
    q: &HPoint,
) -> Result<f64, GeometryError> {
    if p.dim() != space.dim() {
        return Err(GeometryError::DimensionMismatch(p.dim(), space.dim()));
    }
    Ok(profile_eval(profile, distance(p, q)?))
}

/// The spherical transform in closed form, where one is known:
///
/// * Gaussian on H3: `(2 pi / t) sqrt(pi/lambda) exp((1-t^2)/4 lambda) sin(t / 2 lambda)`
/// * Wishart on H2:  `sqrt(4 pi / a) K_it(2a)`
/// * Sech on H2:     `2^(a-1) sqrt(pi)/Gamma(a) |Gamma((a - 1/2 + it)/2)|^2`
/// * Sech on H3, integer a: `4^n pi/(2n)! |Gamma(n + it/2)|^2` for a = 2n+1,
///   `4^n n pi/(2n)! |Gamma(n - 1/2 + it/2)|^2` for a = 2n
///
/// Returns `None` when no formula exists (notably Gaussian on H2 and
/// non-integer sech on H3). The error estimate covers the quadrature behind
/// the Bessel factor; the other forms carry only rounding error.
pub fn closed_form(space: Space, profile: &RadialProfile, t: f64) -> Option<EvalResult> {
    match (space, profile) {
        (Space::H3, RadialProfile::Gaussian { lambda }) => {
            let l = *lambda;
            let envelope = (PI / l).sqrt() * ((1.0 - t * t) / (4.0 * l)).exp();
            let x = t / (2.0 * l);
            // (2 pi / t) sin(t / 2 lambda), with its t -> 0 limit pi / lambda
            let sinc = if t.abs() < 1e-8 {
                (1.0 - x * x / 6.0) / l
            } else {
                2.0 * x.sin() / t
            };
            let value = PI * envelope * sinc;
            // relative rounding plus the phase-argument rounding of sin,
            // which stays envelope-scaled near the zeros
            let err = 8.0 * f64::EPSILON * value.abs()
                + 4.0 * f64::EPSILON * PI * envelope * x.abs() / t.abs().max(1e-8);
            Some(EvalResult::new(value, err))
        }
        (Space::H2, RadialProfile::Wishart { a }) => {
            let k = bessel_k_imag(t, 2.0 * a).ok()?;
            let c = (4.0 * PI / a).sqrt();
            Some(EvalResult::new(c * k.value, c * k.abs_err_estimate))
        }
        (Space::H2, RadialProfile::Sech { a }) => {
            let gamma_a = log_gamma(Complex64::new(*a, 0.0)).ok()?.re.exp();
            let m = gamma_abs_sq(Complex64::new((a - 0.5) / 2.0, t / 2.0)).ok()?;
            let value = 2.0_f64.powf(a - 1.0) * PI.sqrt() / gamma_a * m;
            Some(EvalResult::new(value, 1e-13 * value.abs()))
        }
        (Space::H3, RadialProfile::Sech { a }) => {
            let rounded = a.round();
            if (a - rounded).abs() > 1e-9 || rounded < 1.0 {
                return None;
            }
            let ai = rounded as u64;
            let fact = |m: u64| (1..=m).map(|k| k as f64).product::<f64>();
            if ai % 2 == 1 {
                let n = (ai - 1) / 2;
                if n == 0 && t == 0.0 {
                    return None; // |Gamma(it/2)|^2 pole
                }
                let m = gamma_abs_sq(Complex64::new(n as f64, t / 2.0)).ok()?;
                let value = 4.0_f64.powi(n as i32) * PI / fact(2 * n) * m;
                Some(EvalResult::new(value, 1e-13 * value.abs()))
            } else {
                let n = ai / 2;
                let m = gamma_abs_sq(Complex64::new(n as f64 - 0.5, t / 2.0)).ok()?;
                let value = 4.0_f64.powi(n as i32) * n as f64 * PI / fact(2 * n) * m;
                Some(EvalResult::new(value, 1e-13 * value.abs()))
            }
        }
        _ => None,
    }
}

/// Moment-generating function of the even extension of the Gaussian profile:
/// G(s) = sqrt(pi/lambda) exp(s^2 / 4 lambda), entire in s.
pub fn gaussian_mgf(lambda: f64, s: Complex64) -> Complex64 {
    (PI / lambda).sqrt() * (s * s / (4.0 * lambda)).exp()
}

/// G(i sigma) for the even extension of cosh(r)^(-a), integer a >= 1, from
/// the residue evaluation of the defining integral:
///
/// ```text
/// a = 2n+1:  pi sech(pi sigma/2)/(2n)!     * prod_{m=0}^{n-1} (sigma^2 + (2m+1)^2)
/// a = 2n:    pi sigma csch(pi sigma/2)/(2n-1)! * prod_{m=1}^{n-1} (sigma^2 + (2m)^2)
/// ```
///
/// Valid for Im(sigma) >= -1; real and positive for real sigma.
pub fn sech_mgf(a: u32, sigma: Complex64) -> Result<Complex64, KernelError> {
    if a == 0 {
        return Err(KernelError::Parameter(
            "sech_mgf requires a positive integer a".into(),
        ));
    }
    if sigma.im < -1.0 - 1e-12 {
        return Err(KernelError::Domain(format!(
            "sech_mgf requires Im(sigma) >= -1, got {}",
            sigma.im
        )));
    }
    let half_pi_sigma = sigma * (PI / 2.0);
    if a % 2 == 1 {
        let n = (a - 1) / 2;
        let mut prod = Complex64::new(PI, 0.0) / factorial(2 * n);
        for m in 0..n {
            let odd = (2 * m + 1) as f64;
            prod *= sigma * sigma + odd * odd;
        }
        Ok(prod / half_pi_sigma.cosh())
    } else {
        let n = a / 2;
        let mut prod = Complex64::new(PI, 0.0) / factorial(2 * n - 1);
        for m in 1..n {
            let even = (2 * m) as f64;
            prod *= sigma * sigma + even * even;
        }
        // sigma / sinh(pi sigma / 2) with its removable zero at sigma = 0
        let ratio = if sigma.norm() < 1e-4 {
            let x = half_pi_sigma;
            (Complex64::new(1.0, 0.0) - x * x / 6.0 + x * x * x * x * (7.0 / 360.0)) * (2.0 / PI)
        } else {
            sigma / half_pi_sigma.sinh()
        };
        Ok(prod * ratio)
    }
}

fn factorial(m: u32) -> f64 {
    (1..=m as u64).map(|k| k as f64).product()
}

/// Two-term large-lambda expansion of the Gaussian transform on H2:
/// `lambda^-1 / 2 - (t^2 - 13/12) lambda^-2 / 8`.
///
/// Positive for all t <= T once lambda >= T^2/4; for larger t the expression
/// goes negative and the caller decides what regime it is in.
pub fn gaussian_asymptotic_h2(lambda: f64, t: f64) -> f64 {
    0.5 / lambda - (t * t - 13.0 / 12.0) / (8.0 * lambda * lambda)
}

/// Z(lambda) = ∫_0^∞ exp(-lambda r^2) sinh(r) dr
///           = (1/2) sqrt(pi/lambda) exp(1/4 lambda) erf(1/(2 sqrt(lambda))).
pub fn z_lambda(lambda: f64) -> f64 {
    assert!(lambda > 0.0, "z_lambda requires lambda > 0");
    let s = 0.5 / lambda.sqrt();
    0.5 * (PI / lambda).sqrt() * (s * s).exp() * crate::specfun::erf(s)
}

/// Herschel–Maxwell distribution on n-dimensional hyperbolic space:
/// density proportional to cosh(r)^(-a), normalized against the volume form.
/// Well-defined for a > n - 1.
#[derive(Debug, Clone, Copy)]
pub struct HmDistribution {
    pub n: u32,
    pub a: f64,
    pub normalizer: f64,
}

impl HmDistribution {
    pub fn new(n: u32, a: f64) -> Result<Self, KernelError> {
        if n < 2 {
            return Err(KernelError::Parameter(format!(
                "dimension must be at least 2, got {n}"
            )));
        }
        if a.is_nan() || a <= (n - 1) as f64 {
            return Err(KernelError::Parameter(format!(
                "Herschel-Maxwell in dimension {n} requires a > {}, got {a}",
                n - 1
            )));
        }
        // Gamma((a+1)/2) / (pi^(n/2) Gamma((a+1-n)/2)); equals
        // (1/pi) Gamma((a+1)/2)/Gamma((a-1)/2) in the plane.
        let nf = n as f64;
        let lg_top = log_gamma(Complex64::new((a + 1.0) / 2.0, 0.0))
            .map_err(|e| KernelError::Parameter(e.to_string()))?;
        let lg_bot = log_gamma(Complex64::new((a + 1.0 - nf) / 2.0, 0.0))
            .map_err(|e| KernelError::Parameter(e.to_string()))?;
        let normalizer = ((lg_top - lg_bot).re - 0.5 * nf * PI.ln()).exp();
        Ok(Self { n, a, normalizer })
    }

    /// Density at geodesic distance r from the center, w.r.t. the volume form.
    pub fn density(&self, r: f64) -> f64 {
        self.normalizer * profile_eval(&RadialProfile::Sech { a: self.a }, r)
    }
}

/// Hyperbolic-plane Gaussian density at distance r, normalized against the
/// volume form; the normalizer is 1 / (2 pi Z(lambda)).
pub fn gauss_density_h2(lambda: f64, r: f64) -> f64 {
    assert!(lambda > 0.0, "gauss_density_h2 requires lambda > 0");
    (-lambda * r * r).exp() / (2.0 * PI * z_lambda(lambda))
}

/// Spherical Herschel–Maxwell kernel |cos d|^a as a function of c = cos d.
/// For even integer a this is the homogeneous polynomial kernel <w_x, w_y>^a
/// of the embedding unit vectors.
pub fn spherical_hm(a: f64, c: f64) -> f64 {
    debug_assert!(a >= 0.0 && (-1.0..=1.0).contains(&c));
    if a == 0.0 {
        1.0
    } else {
        c.abs().powf(a)
    }
}

//! Positive-definiteness certification by the sign of the spherical
//! transform.
//!
//! For a continuous radial profile in L^2 (or L^1) of the space, the kernel
//! g(d(x,y)) is positive-definite exactly when its spherical transform is
//! nonnegative and integrable against the spectral density. A scan can
//! refute positive-definiteness with a single robust negative value; it can
//! never prove it, so the affirmative verdict is deliberately the weaker
//! "spectrally nonnegative up to the scan bound", qualified by membership
//! and tail-integrability notes.

use crate::kernels::{closed_form, RadialProfile};
use crate::transforms::{
    forward_grid, lp_norm, plancherel_density, LpExponent, LpNorm, QuadratureConfig, Space,
    SpectralSamples, TransformError,
};
use rayon::prelude::*;
use std::fmt;

/// Outcome of a certification scan.
#[derive(Debug, Clone, PartialEq)]
pub enum PdVerdict {
    /// A spectral value robustly below zero: the kernel is not
    /// positive-definite, by the sign criterion.
    NonPd { witness_t: f64, value: f64, err: f64 },
    /// No robust negative value up to `t_max`. Not a proof of
    /// positive-definiteness; `tail_note` records the membership and
    /// tail-integrability evidence that backs the affirmative reading.
    SpectrallyNonnegative { t_max: f64, tail_note: String },
    Inconclusive { reason: String },
}

impl PdVerdict {
    /// Process exit code used by the command-line surface.
    pub fn exit_code(&self) -> i32 {
        match self {
            PdVerdict::SpectrallyNonnegative { .. } => 0,
            PdVerdict::NonPd { .. } => 2,
            PdVerdict::Inconclusive { .. } => 3,
        }
    }
}

impl fmt::Display for PdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdVerdict::NonPd {
                witness_t,
                value,
                err,
            } => write!(
                f,
                "status=non_pd;witness_t={witness_t};value={value};err={err}"
            ),
            PdVerdict::SpectrallyNonnegative { t_max, tail_note } => write!(
                f,
                "status=spectrally_nonnegative;t_max={t_max};tail_note={tail_note}"
            ),
            PdVerdict::Inconclusive { reason } => write!(f, "status=inconclusive;reason={reason}"),
        }
    }
}

/// Where the spectral values come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralRoute {
    /// The forward transform by radial quadrature; works for every profile.
    Quadrature,
    /// The closed forms of the kernels module; only for profiles that have
    /// one, but exact down to rounding, which lets witnesses far below the
    /// quadrature noise floor be certified.
    ClosedForm,
}

/// A value is a robust witness when it is negative by more than ten times
/// its own error estimate. Quadrature error estimates include the rounding
/// noise floor of the radial integral, so values drowned in cancellation
/// noise can never qualify.
fn robust_negative(value: f64, err: f64) -> bool {
    value < -(10.0 * err + 1e-250)
}

fn spectral_eval(
    space: Space,
    profile: &RadialProfile,
    t: f64,
    q: &QuadratureConfig,
    route: SpectralRoute,
) -> Result<(f64, f64), TransformError> {
    match route {
        SpectralRoute::Quadrature => {
            let v = crate::transforms::forward(space, profile, t, q)?;
            Ok((v.value, v.abs_err_estimate))
        }
        SpectralRoute::ClosedForm => closed_form(space, profile, t)
            .map(|e| (e.value, e.abs_err_estimate))
            .ok_or_else(|| {
                TransformError::Domain(format!(
                    "no closed form for {profile} on {}",
                    space.label()
                ))
            }),
    }
}

/// Certifies or refutes positive-definiteness of the kernel g(d(x,y)) by
/// scanning the sign of its spherical transform on [0, t_max].
///
/// The scan uses a uniform grid with bisection refinement near sign changes.
/// Membership (L^2, else L^1) is checked first; with neither, the sign
/// criterion does not apply and the verdict is inconclusive.
pub fn certify(
    space: Space,
    profile: &RadialProfile,
    t_max: f64,
    q: &QuadratureConfig,
) -> PdVerdict {
    certify_with(space, profile, t_max, q, SpectralRoute::Quadrature)
}

pub fn certify_with(
    space: Space,
    profile: &RadialProfile,
    t_max: f64,
    q: &QuadratureConfig,
    route: SpectralRoute,
) -> PdVerdict {
    if t_max <= 0.0 || t_max.is_nan() {
        return PdVerdict::Inconclusive {
            reason: format!("t_max must be positive, got {t_max}"),
        };
    }
    // Membership gate: the sign criterion needs f in L2 (almost-everywhere
    // nonnegativity suffices) or L1 (pointwise).
    let membership = match lp_norm(space, profile, LpExponent::L2, q) {
        Ok(LpNorm::Finite(v)) => format!("L2 membership: |g|_2^2 = {v:.6e}"),
        Ok(LpNorm::Divergent) => match lp_norm(space, profile, LpExponent::L1, q) {
            Ok(LpNorm::Finite(v)) => format!("L1 membership (not L2): |g|_1 = {v:.6e}"),
            Ok(LpNorm::Divergent) => {
                return PdVerdict::Inconclusive {
                    reason: format!(
                        "{profile} on {} is neither square- nor absolutely integrable; \
                         the spectral sign criterion does not apply",
                        space.label()
                    ),
                }
            }
            Err(e) => {
                return PdVerdict::Inconclusive {
                    reason: format!("L1 membership check failed: {e}"),
                }
            }
        },
        Err(e) => {
            return PdVerdict::Inconclusive {
                reason: format!("L2 membership check failed: {e}"),
            }
        }
    };

    const GRID: usize = 201;
    let t_grid: Vec<f64> = (0..GRID)
        .map(|i| t_max * i as f64 / (GRID - 1) as f64)
        .collect();
    let scan: Vec<(f64, f64, f64)> = match route {
        SpectralRoute::Quadrature => match forward_grid(space, profile, &t_grid, q) {
            Ok(s) => t_grid
                .iter()
                .zip(s.values.iter().zip(s.err.iter()))
                .map(|(&t, (&v, &e))| (t, v, e))
                .collect(),
            Err(e) => {
                return PdVerdict::Inconclusive {
                    reason: format!("spectral scan failed: {e}"),
                }
            }
        },
        SpectralRoute::ClosedForm => {
            let evaluated: Vec<Option<(f64, f64, f64)>> = t_grid
                .par_iter()
                .map(|&t| {
                    spectral_eval(space, profile, t, q, route)
                        .ok()
                        .map(|(v, e)| (t, v, e))
                })
                .collect();
            let mut scan = Vec::with_capacity(GRID);
            for cell in evaluated {
                match cell {
                    Some(c) => scan.push(c),
                    None => {
                        return PdVerdict::Inconclusive {
                            reason: format!(
                                "closed-form route unavailable for {profile} on {}",
                                space.label()
                            ),
                        }
                    }
                }
            }
            scan
        }
    };

    // Direct robust witness on the grid.
    for &(t, v, e) in &scan {
        if robust_negative(v, e) {
            return PdVerdict::NonPd {
                witness_t: t,
                value: v,
                err: e,
            };
        }
    }

    // Bisection refinement near sign changes: flips are isolated simple
    // zeros, so narrowing the bracket quickly exposes a robust value.
    for w in scan.windows(2) {
        let (t0, v0, _) = w[0];
        let (t1, v1, _) = w[1];
        if v0.signum() == v1.signum() {
            continue;
        }
        let lo_sign = v0.signum();
        let (mut lo, mut hi) = (t0, t1);
        for _ in 0..40 {
            let mid = 0.5 * (lo + hi);
            match spectral_eval(space, profile, mid, q, route) {
                Ok((v, e)) => {
                    if robust_negative(v, e) {
                        return PdVerdict::NonPd {
                            witness_t: mid,
                            value: v,
                            err: e,
                        };
                    }
                    if v.signum() == lo_sign {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                Err(_) => break,
            }
            if hi - lo < 1e-12 * t_max {
                break;
            }
        }
    }

    // No robust negative anywhere: report up to the last t where the scan
    // still resolves sign above its own noise.
    let resolved_t_max = scan
        .iter()
        .rev()
        .find(|&&(_, v, e)| v.abs() > 10.0 * e)
        .map(|&(t, _, _)| t);
    let Some(resolved_t_max) = resolved_t_max else {
        return PdVerdict::Inconclusive {
            reason: "every scanned value is below its own noise estimate".into(),
        };
    };
    let samples = SpectralSamples::new(
        space,
        scan.iter().map(|c| c.0).collect(),
        scan.iter().map(|c| c.1).collect(),
        scan.iter().map(|c| c.2).collect(),
        profile.to_string(),
        String::new(),
    );
    let tail_note = match samples.as_ref().map(tail_integrability) {
        Ok(TailFit::Integrable { estimate }) => {
            format!("{membership}; spectral tail integrable, ∫|fhat| density ≈ {estimate:.6e}")
        }
        Ok(TailFit::Undetermined) => {
            format!("{membership}; spectral tail decay not established by the scan")
        }
        Err(_) => membership,
    };
    PdVerdict::SpectrallyNonnegative {
        t_max: resolved_t_max,
        tail_note,
    }
}

/// Sign map of a one-parameter profile family over a (lambda, t) grid.
#[derive(Debug, Clone)]
pub struct SignMap {
    pub lambda_grid: Vec<f64>,
    pub t_grid: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    pub signs: Vec<Vec<i8>>,
    /// Per-cell evaluation failures, as "(lambda, t): reason".
    pub notes: Vec<String>,
}

impl SignMap {
    pub fn sign_char(s: i8) -> char {
        match s.cmp(&0) {
            std::cmp::Ordering::Greater => '+',
            std::cmp::Ordering::Less => '-',
            std::cmp::Ordering::Equal => '0',
        }
    }

    /// CSV "lambda,t,value,sign".
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,t,value,sign\n");
        for (i, &lambda) in self.lambda_grid.iter().enumerate() {
            for (j, &t) in self.t_grid.iter().enumerate() {
                out.push_str(&format!(
                    "{lambda},{t},{},{}\n",
                    self.values[i][j],
                    Self::sign_char(self.signs[i][j])
                ));
            }
        }
        out
    }

    /// Signs of one lambda row.
    pub fn row_signs(&self, i: usize) -> &[i8] {
        &self.signs[i]
    }
}

/// Evaluates the transform of `family(lambda)` over the grid and thresholds
/// each value into +, -, or 0.
///
/// The sign threshold per row is `max(10 abs_tol, 1e-10 scale, 10 cell_err)`
/// with `scale` the row's first-grid-point magnitude (|fhat(lambda, 0)| when
/// the grid starts at zero): a cell counts as signed only when it clears
/// both the requested tolerance and its own error estimate. Cells are
/// evaluated concurrently; failures become sign 0 with a logged reason.
pub fn sign_map<F>(
    space: Space,
    family: F,
    lambda_grid: &[f64],
    t_grid: &[f64],
    q: &QuadratureConfig,
) -> SignMap
where
    F: Fn(f64) -> RadialProfile + Sync,
{
    let rows: Vec<(Vec<f64>, Vec<i8>, Vec<String>)> = lambda_grid
        .par_iter()
        .map(|&lambda| {
            let profile = family(lambda);
            let cells: Vec<Result<(f64, f64), String>> = t_grid
                .par_iter()
                .map(|&t| {
                    crate::transforms::forward(space, &profile, t, q)
                        .map(|e| (e.value, e.abs_err_estimate))
                        .map_err(|e| e.to_string())
                })
                .collect();
            let scale = cells
                .first()
                .and_then(|c| c.as_ref().ok().map(|&(v, _)| v.abs()))
                .unwrap_or(0.0);
            let mut values = Vec::with_capacity(t_grid.len());
            let mut signs = Vec::with_capacity(t_grid.len());
            let mut notes = Vec::new();
            for (j, cell) in cells.into_iter().enumerate() {
                match cell {
                    Ok((v, e)) => {
                        let eps_sign = (10.0 * q.abs_tol).max(1e-10 * scale).max(10.0 * e);
                        values.push(v);
                        signs.push(if v > eps_sign {
                            1
                        } else if v < -eps_sign {
                            -1
                        } else {
                            0
                        });
                    }
                    Err(reason) => {
                        values.push(f64::NAN);
                        signs.push(0);
                        notes.push(format!("({lambda}, {}): {reason}", t_grid[j]));
                    }
                }
            }
            (values, signs, notes)
        })
        .collect();

    let mut values = Vec::with_capacity(rows.len());
    let mut signs = Vec::with_capacity(rows.len());
    let mut notes = Vec::new();
    for (v, s, n) in rows {
        values.push(v);
        signs.push(s);
        notes.extend(n);
    }
    SignMap {
        lambda_grid: lambda_grid.to_vec(),
        t_grid: t_grid.to_vec(),
        values,
        signs,
        notes,
    }
}

/// Maximum relative deviation between the Gaussian transform on H2 and its
/// two-term large-lambda expansion, over t in [0, t_cap].
///
/// The expansion describes the radial integral without the angular volume
/// factor, so the transform is divided by 2 pi before comparing.
pub fn asymptotic_deviation(
    lambda: f64,
    t_cap: f64,
    q: &QuadratureConfig,
) -> Result<f64, TransformError> {
    let profile = RadialProfile::Gaussian { lambda };
    let n = 61;
    let t_grid: Vec<f64> = (0..n).map(|i| t_cap * i as f64 / (n - 1) as f64).collect();
    let samples = forward_grid(Space::H2, &profile, &t_grid, q)?;
    let mut worst: f64 = 0.0;
    for (i, &t) in t_grid.iter().enumerate() {
        let asym = crate::kernels::gaussian_asymptotic_h2(lambda, t);
        let dev = (samples.values[i] / (2.0 * std::f64::consts::PI) - asym).abs() / asym.abs();
        worst = worst.max(dev);
    }
    Ok(worst)
}

/// Spectral tail classification from samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailFit {
    /// A decaying exponential (in t or t^2) fits the tail; `estimate` is
    /// a coarse value of ∫ |fhat(t)| density(t) dt including the fitted
    /// extension beyond the last sample.
    Integrable { estimate: f64 },
    Undetermined,
}

/// Fits log|fhat| against t and t^2 over the signal-bearing tail of the
/// samples and reports whichever decay model fits, if any does.
pub fn tail_integrability(samples: &SpectralSamples) -> TailFit {
    let n = samples.t_grid.len();
    if n < 10 {
        return TailFit::Undetermined;
    }
    // Use the trailing half of the samples that still carry signal.
    let start = n / 2;
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for i in start..n {
        let v = samples.values[i].abs();
        if v > 1e-280 && v > 4.0 * samples.err[i] {
            pts.push((samples.t_grid[i], v.ln()));
        }
    }
    if pts.len() < 6 {
        return TailFit::Undetermined;
    }

    // least squares y = c - b * x for x = t and x = t^2
    let fit = |xs: &[f64], ys: &[f64]| -> (f64, f64, f64) {
        let n = xs.len() as f64;
        let sx: f64 = xs.iter().sum();
        let sy: f64 = ys.iter().sum();
        let sxx: f64 = xs.iter().map(|x| x * x).sum();
        let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
        let denom = n * sxx - sx * sx;
        if denom.abs() < 1e-300 {
            return (0.0, 0.0, f64::INFINITY);
        }
        let slope = (n * sxy - sx * sy) / denom;
        let intercept = (sy - slope * sx) / n;
        let ss: f64 = xs
            .iter()
            .zip(ys)
            .map(|(x, y)| {
                let r = y - (intercept + slope * x);
                r * r
            })
            .sum();
        (intercept, -slope, ss)
    };
    let ts: Vec<f64> = pts.iter().map(|p| p.0).collect();
    let t2s: Vec<f64> = pts.iter().map(|p| p.0 * p.0).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let (c1, b1, ss1) = fit(&ts, &ys);
    let (c2, b2, ss2) = fit(&t2s, &ys);
    let var: f64 = {
        let mean = ys.iter().sum::<f64>() / ys.len() as f64;
        ys.iter().map(|y| (y - mean) * (y - mean)).sum()
    };

    let (c, b, ss, quadratic) = if ss2 < ss1 { (c2, b2, ss2, true) } else { (c1, b1, ss1, false) };
    let r2 = if var > 0.0 { 1.0 - ss / var } else { 0.0 };
    let t_last = *ts.last().unwrap();
    let span = t_last - ts[0];
    let decayed = if quadratic {
        b * (t_last * t_last - ts[0] * ts[0])
    } else {
        b * span
    };
    if b <= 0.0 || r2 < 0.95 || decayed < 2.0 {
        return TailFit::Undetermined;
    }

    // ∫ |fhat| density over the sampled range by trapezoid, plus the fitted
    // tail beyond t_last.
    let mut num = 0.0;
    for i in 0..n - 1 {
        let f0 = samples.values[i].abs() * plancherel_density(samples.space, samples.t_grid[i]);
        let f1 =
            samples.values[i + 1].abs() * plancherel_density(samples.space, samples.t_grid[i + 1]);
        num += 0.5 * (samples.t_grid[i + 1] - samples.t_grid[i]) * (f0 + f1);
    }
    let tail = if quadratic {
        let v_last = (c - b * t_last * t_last).exp();
        v_last * plancherel_density(samples.space, t_last) / (2.0 * b * t_last).max(1e-10)
    } else {
        let v_last = (c - b * t_last).exp();
        v_last * plancherel_density(samples.space, t_last) / b
    };
    TailFit::Integrable {
        estimate: num + tail,
    }
}

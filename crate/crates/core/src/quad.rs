//! Shared quadrature engine.
//!
//! Two rules cover every integral in this crate:
//!
//! * [`adaptive_gk`] — globally adaptive Gauss–Kronrod (7,15) panels, the
//!   workhorse for smooth and oscillatory integrands on finite intervals.
//! * [`tanh_sinh`] — double-exponential rule for integrands with inverse
//!   power endpoint singularities (the Mehler–Dirichlet integral).
//!
//! Both report a `resabs` value (sum of |weight * f|) so callers can tell
//! when a small result is dominated by floating-point cancellation noise.

use thiserror::Error;

/// Value of a numeric evaluation together with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err_estimate: f64,
}

impl EvalResult {
    pub fn new(value: f64, abs_err_estimate: f64) -> Self {
        Self {
            value,
            abs_err_estimate,
        }
    }
}

#[derive(Debug, Error)]
pub enum QuadError {
    #[error("quadrature did not converge: error estimate {err:.3e} > tolerance {tol:.3e} ({panels} panels)")]
    Convergence { err: f64, tol: f64, panels: usize },
    #[error("integrand returned a non-finite value at x = {x:e}")]
    NonFinite { x: f64 },
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOutcome {
    pub value: f64,
    /// Estimated absolute error, including a floating-point noise floor.
    pub abs_err: f64,
    /// Integral of |f|, as seen by the rule. `eps * resabs` is the
    /// cancellation noise floor of `value`.
    pub resabs: f64,
    pub panels: usize,
}

// Gauss-Kronrod (7,15) abscissae and weights on [-1,1] (QUADPACK dqk15).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// Neumaier compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    resabs: f64,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel, QuadError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64, QuadError> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadError::NonFinite { x })
        }
    };

    let fc = eval(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = 0.0;
    let mut resabs = fc.abs() * WGK[7];
    let mut fv = [0.0_f64; 15];
    fv[7] = fc;

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            // XGK[1], XGK[3], XGK[5] are the Gauss points; XGK[7] = 0.
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    gauss += fc * WG[3];

    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let value = kronrod * half;
    resabs *= half.abs();
    resasc *= half.abs();

    // QUADPACK error rescaling.
    let mut err = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) && floor > err {
        err = floor;
    }

    Ok(Panel {
        a,
        b,
        value,
        err,
        resabs,
    })
}

/// Globally adaptive Gauss–Kronrod integration of `f` over `[a, b]`.
///
/// `initial_cells` pre-splits the interval; pass roughly one cell per
/// oscillation period so the error estimates on the first pass are honest.
pub fn adaptive_gk<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    initial_cells: usize,
    max_panels: usize,
) -> Result<QuadOutcome, QuadError> {
    if a == b {
        return Ok(QuadOutcome {
            value: 0.0,
            abs_err: 0.0,
            resabs: 0.0,
            panels: 0,
        });
    }

    // Max-heap ordered by (err, then leftmost interval first), so the
    // refinement order is deterministic.
    struct ByErr(Panel);
    impl PartialEq for ByErr {
        fn eq(&self, other: &Self) -> bool {
            self.0.err == other.0.err && self.0.a == other.0.a
        }
    }
    impl Eq for ByErr {}
    impl Ord for ByErr {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.0
                .err
                .total_cmp(&other.0.err)
                .then(other.0.a.total_cmp(&self.0.a))
        }
    }
    impl PartialOrd for ByErr {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }

    let cells = initial_cells.clamp(1, max_panels.max(1));
    let mut heap = std::collections::BinaryHeap::with_capacity(cells + 64);
    let step = (b - a) / cells as f64;
    let mut run_value = 0.0;
    let mut run_err = 0.0;
    let mut run_resabs = 0.0;
    for i in 0..cells {
        let lo = a + step * i as f64;
        let hi = if i + 1 == cells { b } else { a + step * (i + 1) as f64 };
        let p = gk15(f, lo, hi)?;
        run_value += p.value;
        run_err += p.err;
        run_resabs += p.resabs;
        heap.push(ByErr(p));
    }

    let tolerance = |value: f64| abs_tol.max(rel_tol * value.abs());

    loop {
        // The per-panel QUADPACK floor sums to ~50 eps resabs no matter how
        // far we refine; panels sitting at their floor contribute up to one
        // extra floor's worth while being worked off, hence the factor 2.
        let noise = 100.0 * f64::EPSILON * run_resabs;
        if run_err <= tolerance(run_value).max(noise) || heap.len() >= max_panels {
            break;
        }
        let ByErr(worst) = heap.pop().expect("heap non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            heap.push(ByErr(worst));
            break; // interval exhausted at machine resolution
        }
        let left = gk15(f, worst.a, mid)?;
        let right = gk15(f, mid, worst.b)?;
        run_value += left.value + right.value - worst.value;
        run_err += left.err + right.err - worst.err;
        run_resabs += left.resabs + right.resabs - worst.resabs;
        heap.push(ByErr(left));
        heap.push(ByErr(right));
    }

    let mut panels: Vec<Panel> = heap.into_iter().map(|w| w.0).collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut value = Accumulator::default();
    let mut err = Accumulator::default();
    let mut resabs = Accumulator::default();
    for p in &panels {
        value.add(p.value);
        err.add(p.err);
        resabs.add(p.resabs);
    }
    let value = value.total();
    let resabs = resabs.total();
    let abs_err = err.total().max(f64::EPSILON * resabs);
    let tol = tolerance(value).max(100.0 * f64::EPSILON * resabs);
    if abs_err > tol && abs_err > 10.0 * tol {
        return Err(QuadError::Convergence {
            err: abs_err,
            tol,
            panels: panels.len(),
        });
    }
    Ok(QuadOutcome {
        value,
        abs_err,
        resabs,
        panels: panels.len(),
    })
}

/// Tanh–sinh (double-exponential) integration of `f` over `(a, b)`.
///
/// The integrand is called as `f(x, x - a, b - x)` where the two offsets are
/// computed without cancellation, so integrands singular at either endpoint
/// can be evaluated stably arbitrarily close to it.
pub fn tanh_sinh<F: Fn(f64, f64, f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_level: u32,
) -> Result<QuadOutcome, QuadError> {
    if a == b {
        return Ok(QuadOutcome {
            value: 0.0,
            abs_err: 0.0,
            resabs: 0.0,
            panels: 0,
        });
    }
    let half = 0.5 * (b - a);
    // Past |y| = 6 the node offsets underflow; the transformed integrand is
    // far below any representable contribution before that.
    const Y_MAX: f64 = 6.0;
    const PI_2: f64 = std::f64::consts::FRAC_PI_2;

    // Evaluates the transformed integrand at y and -y; returns weighted sum.
    let node_pair = |y: f64| -> Result<(f64, f64), QuadError> {
        let u = PI_2 * y.sinh();
        let w = PI_2 * y.cosh() / (u.cosh() * u.cosh());
        // 1 - tanh(u) = 2 / (exp(2u) + 1), stable for u >= 0
        let delta = 2.0 / ((2.0 * u).exp() + 1.0); // distance of node to +1
        let x_hi = b - half * delta; // node on the b side
        let x_lo = a + half * delta; // mirrored node on the a side
        let da_hi = x_hi - a;
        let db_lo = b - x_lo;
        let f_hi = f(x_hi, da_hi, half * delta);
        let f_lo = f(x_lo, half * delta, db_lo);
        if !f_hi.is_finite() {
            return Err(QuadError::NonFinite { x: x_hi });
        }
        if !f_lo.is_finite() {
            return Err(QuadError::NonFinite { x: x_lo });
        }
        Ok((w * (f_hi + f_lo), w.abs() * (f_hi.abs() + f_lo.abs())))
    };

    let mid = a + half;
    let f0 = f(mid, mid - a, b - mid);
    if !f0.is_finite() {
        return Err(QuadError::NonFinite { x: mid });
    }
    let mut sum = PI_2 * f0; // level-0 center node, h = 1
    let mut sum_abs = (PI_2 * f0).abs();
    let mut h = 1.0;
    {
        let mut j = 1;
        loop {
            let y = j as f64;
            if y > Y_MAX {
                break;
            }
            let (s, sa) = node_pair(y)?;
            sum += s;
            sum_abs += sa;
            if sa < f64::EPSILON * sum_abs && j > 2 {
                break;
            }
            j += 1;
        }
    }
    let mut value = sum * h * half;
    let mut prev_diff = f64::INFINITY;
    let mut err = f64::INFINITY;

    for _level in 1..=max_level {
        h *= 0.5;
        // New nodes at odd multiples of the refined step.
        let mut j = 1;
        loop {
            let y = j as f64 * h;
            if y > Y_MAX {
                break;
            }
            let (s, sa) = node_pair(y)?;
            sum += s;
            sum_abs += sa;
            if sa < f64::EPSILON * sum_abs && (j as f64 * h) > 3.0 {
                break;
            }
            j += 2;
        }
        let new_value = sum * h * half;
        let diff = (new_value - value).abs();
        value = new_value;
        let noise = f64::EPSILON * sum_abs * h * half.abs();
        err = if prev_diff.is_finite() && prev_diff > 0.0 && diff < prev_diff {
            (diff * diff / prev_diff).max(noise)
        } else {
            diff.max(noise)
        };
        prev_diff = diff;
        if err <= abs_tol.max(rel_tol * value.abs()) {
            return Ok(QuadOutcome {
                value,
                abs_err: err,
                resabs: sum_abs * h * half.abs(),
                panels: 0,
            });
        }
    }
    let tol = abs_tol.max(rel_tol * value.abs());
    if err <= 10.0 * tol {
        return Ok(QuadOutcome {
            value,
            abs_err: err,
            resabs: sum_abs * h * half.abs(),
            panels: 0,
        });
    }
    Err(QuadError::Convergence {
        err,
        tol,
        panels: 0,
    })
}

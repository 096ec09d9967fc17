//! Criterion-free positive-definiteness oracle: Gram matrices on sampled
//! configurations, a cyclic Jacobi eigensolver for their smallest
//! eigenvalue, randomized witness search, and the exact circulant spectrum
//! for Gaussian kernels on equally spaced circle points.
//!
//! A negative Gram eigenvalue exhibits coefficients violating the defining
//! quadratic-form inequality, so it refutes positive-definiteness outright.
//! The converse never holds: finitely many configurations cannot prove it.

use crate::geometry::{circle_angles, circle_distance, sample_ball, GeometryError, PointSet};
use crate::kernels::{kernel_eval, profile_eval, RadialProfile};
use crate::transforms::Space;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GramError {
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {defect:.3e}")]
    Symmetry { i: usize, j: usize, defect: f64 },
    #[error("Jacobi sweep limit reached before convergence (off-diagonal norm {off:.3e})")]
    Convergence { off: f64 },
    #[error("matrix is empty")]
    Empty,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Principal submatrix on the given (distinct) indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix {
        let mut m = SymMatrix::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    fn check_symmetry(&self) -> Result<(), GramError> {
        let scale = self
            .data
            .iter()
            .fold(0.0_f64, |acc, v| acc.max(v.abs()))
            .max(1.0);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let defect = (self.get(i, j) - self.get(j, i)).abs();
                if defect > 1e-12 * scale {
                    return Err(GramError::Symmetry { i, j, defect });
                }
            }
        }
        Ok(())
    }
}

/// Gram matrix `G[i][j] = k(p_i, p_j)` of the kernel on a configuration.
pub fn gram(
    points: &PointSet,
    space: Space,
    profile: &RadialProfile,
) -> Result<SymMatrix, GramError> {
    if points.points.is_empty() {
        return Err(GramError::Empty);
    }
    let n = points.points.len();
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = kernel_eval(space, profile, &points.points[i], &points.points[j])?;
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    Ok(m)
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// unsorted. Foolproof at the dense sizes used here (n <= 512).
pub fn sym_eigenvalues(m: &SymMatrix) -> Result<Vec<f64>, GramError> {
    m.check_symmetry()?;
    let n = m.n;
    if n == 0 {
        return Err(GramError::Empty);
    }
    if n == 1 {
        return Ok(vec![m.get(0, 0)]);
    }
    let mut a = m.data.clone();
    let at = |a: &Vec<f64>, i: usize, j: usize| a[i * n + j];

    let fro: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let off = |a: &Vec<f64>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += at(a, i, j) * at(a, i, j);
                }
            }
        }
        s.sqrt()
    };

    let threshold = 1e-14 * fro.max(f64::MIN_POSITIVE);
    for _sweep in 0..60 {
        if off(&a) <= threshold {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = at(&a, p, q);
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = at(&a, p, p);
                let aqq = at(&a, q, q);
                // rotation angle from the standard two-by-two reduction
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = at(&a, k, p);
                    let akq = at(&a, k, q);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = at(&a, p, k);
                    let aqk = at(&a, q, k);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let final_off = off(&a);
    if final_off > 1e-10 * fro.max(f64::MIN_POSITIVE) {
        return Err(GramError::Convergence { off: final_off });
    }
    Ok((0..n).map(|i| at(&a, i, i)).collect())
}

/// Smallest eigenvalue of a symmetric matrix, within ~1e-10 of the spectral
/// radius in absolute terms.
pub fn min_eig_sym(m: &SymMatrix) -> Result<f64, GramError> {
    Ok(sym_eigenvalues(m)?
        .into_iter()
        .fold(f64::INFINITY, f64::min))
}

/// Result of a randomized non-positive-definiteness witness search.
#[derive(Debug, Clone)]
pub struct GramReport {
    pub n_points: usize,
    pub trials: usize,
    /// Most negative minimum eigenvalue over all trials.
    pub min_eig: f64,
    /// Configuration achieving `min_eig`; re-evaluating it reproduces the
    /// reported value.
    pub best_config: PointSet,
    pub kernel_descriptor: String,
    pub seed: u64,
}

impl GramReport {
    /// CSV summary; with `dump_matrix`, appends the Gram matrix of the best
    /// configuration as "i,j,value" rows.
    pub fn to_csv(&self, space: Space, profile: &RadialProfile, dump_matrix: bool) -> String {
        let mut out = format!(
            "# kernel={} space={} seed={} radius_bound={}\n",
            self.kernel_descriptor,
            space.label(),
            self.seed,
            self.best_config.radius_bound
        );
        out.push_str("n_points,trials,min_eig,best_seed\n");
        out.push_str(&format!(
            "{},{},{},{}\n",
            self.n_points, self.trials, self.min_eig, self.best_config.seed
        ));
        if dump_matrix {
            if let Ok(m) = gram(&self.best_config, space, profile) {
                out.push_str("i,j,value\n");
                for i in 0..m.n() {
                    for j in 0..m.n() {
                        out.push_str(&format!("{i},{j},{}\n", m.get(i, j)));
                    }
                }
            }
        }
        out
    }
}

fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_add((trial as u64).wrapping_mul(0x9E3779B97F4A7C15))
}

/// Searches seeded random ball configurations for a negative Gram
/// eigenvalue. Deterministic per seed; trials run concurrently and the
/// reduction to the most negative eigenvalue is order-independent.
pub fn witness_search(
    space: Space,
    profile: &RadialProfile,
    n: usize,
    trials: usize,
    radius: f64,
    seed: u64,
) -> Result<GramReport, GramError> {
    if n < 2 || trials < 1 {
        return Err(GramError::Empty);
    }
    let evaluated: Result<Vec<(usize, f64)>, GramError> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let config = sample_ball(space.dim(), radius, n, trial_seed(seed, trial))?;
            let g = gram(&config, space, profile)?;
            Ok((trial, min_eig_sym(&g)?))
        })
        .collect();
    let evaluated = evaluated?;
    let &(best_trial, min_eig) = evaluated
        .iter()
        .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("at least one trial");
    let best_config = sample_ball(space.dim(), radius, n, trial_seed(seed, best_trial))?;
    Ok(GramReport {
        n_points: n,
        trials,
        min_eig,
        best_config,
        kernel_descriptor: profile.to_string(),
        seed,
    })
}

/// Exact spectrum of the Gaussian-kernel Gram matrix on N equally spaced
/// circle points.
///
/// The matrix is circulant, so its eigenvalues are the real discrete Fourier
/// coefficients of the first row, computed here as direct cosine sums. The
/// kernel is positive-definite on these points exactly when all coefficients
/// are nonnegative.
pub fn circle_gaussian_spectrum(lambda: f64, n: usize) -> Vec<f64> {
    assert!(lambda > 0.0 && n >= 2);
    let angles = circle_angles(n);
    let first_row: Vec<f64> = angles
        .iter()
        .map(|&a| {
            let d = circle_distance(0.0, a);
            (-lambda * d * d).exp()
        })
        .collect();
    (0..n)
        .map(|k| {
            let mut s = 0.0;
            for (j, &c) in first_row.iter().enumerate() {
                s += c * (2.0 * std::f64::consts::PI * (j * k % n) as f64 / n as f64).cos();
            }
            s
        })
        .collect()
}

/// Dense Gram matrix of the circle Gaussian kernel, for cross-checking the
/// circulant spectrum against the Jacobi eigensolver.
pub fn circle_gaussian_gram(lambda: f64, n: usize) -> SymMatrix {
    let angles = circle_angles(n);
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let d = circle_distance(angles[i], angles[j]);
            m.set(i, j, (-lambda * d * d).exp());
        }
    }
    m
}

/// Gram matrix whose diagonal is g(0) * n; convenience for thresholds
/// expressed relative to the trace.
pub fn gram_trace(space: Space, profile: &RadialProfile, n: usize) -> f64 {
    let _ = space;
    profile_eval(profile, 0.0) * n as f64
}

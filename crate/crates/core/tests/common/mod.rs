#![allow(dead_code)]

//! Independent oracles for the acceptance and invariant suites.
//!
//! Everything here deliberately avoids the code paths it is used to check:
//! log-Gamma comes from a zeta-series Taylor expansion with recurrence and
//! duplication (no Lanczos), and the minimum eigenvalue comes from inertia
//! bisection (no Jacobi rotations).

use hyperbolic_kernels::gram::SymMatrix;
use num_complex::Complex64;

pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// zeta(k) - 1 for k >= 2, by direct summation plus an Euler–Maclaurin tail.
fn zeta_minus_one(k: u32) -> f64 {
    let n_cut = 400.0_f64;
    let mut s = 0.0;
    let mut n = 2.0;
    while n < n_cut {
        s += n.powi(-(k as i32));
        n += 1.0;
    }
    let kf = k as f64;
    // sum_{n >= N} n^-k ~ N^(1-k)/(k-1) + N^-k/2 + k N^(-k-1)/12 - ...
    s += n_cut.powf(1.0 - kf) / (kf - 1.0) + 0.5 * n_cut.powf(-kf)
        + kf * n_cut.powf(-kf - 1.0) / 12.0
        - kf * (kf + 1.0) * (kf + 2.0) * n_cut.powf(-kf - 3.0) / 720.0;
    s
}

/// Taylor series log Gamma(1 + w) = -ln(1+w) + w(1 - gamma)
/// + sum_{k>=2} (-1)^k (zeta(k)-1) w^k / k, radius of convergence 2.
fn log_gamma_taylor(w: Complex64) -> Complex64 {
    let mut sum = -(Complex64::new(1.0, 0.0) + w).ln() + w * (1.0 - EULER_GAMMA);
    let mut wk = w; // w^k as it runs
    for k in 2..260u32 {
        wk *= w;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = wk * (sign * zeta_minus_one(k) / k as f64);
        sum += term;
        if term.norm() < 1e-18 * sum.norm().max(1e-10) {
            break;
        }
    }
    sum
}

/// Oracle log Gamma for Re(z) > 0: Legendre duplication halves the imaginary
/// part until the Taylor disc is reachable, then the recurrence walks the
/// real part into [0.8, 2.2].
pub fn oracle_log_gamma(z: Complex64) -> Complex64 {
    assert!(z.re > 0.0, "oracle only covers the right half plane");
    if z.im.abs() > 1.2 {
        // Gamma(z) = 2^(z-1) pi^(-1/2) Gamma(z/2) Gamma((z+1)/2)
        return (z - 1.0) * std::f64::consts::LN_2
            - 0.5 * std::f64::consts::PI.ln()
            + oracle_log_gamma(z / 2.0)
            + oracle_log_gamma((z + 1.0) / 2.0);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut z = z;
    while z.re > 2.2 {
        z -= 1.0;
        acc += z.ln();
    }
    while z.re < 0.8 {
        acc -= z.ln();
        z += 1.0;
    }
    acc + log_gamma_taylor(z - 1.0)
}

/// Number of negative pivots of A - x I under symmetric Gaussian
/// elimination; `None` when a pivot vanishes (caller nudges x).
fn negative_inertia(a: &SymMatrix, x: f64) -> Option<usize> {
    let n = a.n();
    let mut b = vec![0.0_f64; n * n];
    for i in 0..n {
        for j in 0..n {
            b[i * n + j] = a.get(i, j) - if i == j { x } else { 0.0 };
        }
    }
    let mut negatives = 0;
    for k in 0..n {
        let pivot = b[k * n + k];
        if pivot.abs() < 1e-280 {
            return None;
        }
        if pivot < 0.0 {
            negatives += 1;
        }
        for i in (k + 1)..n {
            let f = b[i * n + k] / pivot;
            for j in k..n {
                b[i * n + j] -= f * b[k * n + j];
            }
        }
    }
    Some(negatives)
}

/// Smallest eigenvalue by bisection on the inertia count — the
/// characteristic-polynomial route, independent of any rotation method.
pub fn oracle_min_eig(a: &SymMatrix, tol: f64) -> f64 {
    let n = a.n();
    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut radius = 0.0;
        for j in 0..n {
            if i != j {
                radius += a.get(i, j).abs();
            }
        }
        lo = lo.min(a.get(i, i) - radius);
        hi = hi.max(a.get(i, i) + radius);
    }
    let scale = hi.abs().max(lo.abs()).max(1.0);
    let mut lo = lo - 1e-12 * scale;
    let mut hi = hi + 1e-12 * scale;
    while hi - lo > tol {
        let mut mid = 0.5 * (lo + hi);
        let count = match negative_inertia(a, mid) {
            Some(c) => c,
            None => {
                mid += 1e-13 * scale;
                negative_inertia(a, mid).unwrap_or(0)
            }
        };
        // count(x) = number of eigenvalues below x
        if count >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Seeded random symmetric matrix with entries in [-1, 1].
pub fn random_symmetric(n: usize, seed: u64) -> SymMatrix {
    let mut rng = hyperbolic_kernels::geometry::SplitMix64::new(seed);
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = 2.0 * rng.next_f64() - 1.0;
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    m
}

/// One pass/fail line per acceptance criterion.
pub fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "[acceptance] {} — {criterion}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

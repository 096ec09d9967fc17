//! Forward transform on a dense spectral grid, then inversion back to the
//! radial profile — the reconstruction matches e^{-r^2} to within the
//! quadrature budget.
//!
//! Run with `cargo run --release --example roundtrip`.

use hyperbolic_kernels::kernels::RadialProfile;
use hyperbolic_kernels::transforms::{forward_grid, inverse, QuadratureConfig, Space};

fn main() {
    let profile = RadialProfile::gaussian(1.0).unwrap();
    let q = QuadratureConfig::with_tols(1e-13, 1e-11);
    let n = 2801;
    let t_grid: Vec<f64> = (0..n).map(|i| 14.0 * i as f64 / (n - 1) as f64).collect();
    let samples = forward_grid(Space::H3, &profile, &t_grid, &q).expect("forward grid");
    println!("{} spectral samples on [0, 14] for {}", n, profile);
    println!("{:>5} {:>22} {:>22} {:>10}", "r", "reconstructed", "exact", "rel err");
    for &r in &[0.1, 0.5, 1.0, 1.5, 2.0, 3.0] {
        let back = inverse(Space::H3, &samples, r, &q).expect("inverse");
        let exact = (-r * r).exp();
        println!(
            "{r:>5.2} {:>22.15e} {exact:>22.15e} {:>10.2e}",
            back.value,
            (back.value - exact).abs() / exact
        );
    }
}

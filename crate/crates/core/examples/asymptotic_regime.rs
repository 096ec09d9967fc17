//! Large-lambda behavior of the Gaussian transform on the hyperbolic plane:
//! the radial integral approaches lambda^-1/2 - (t^2 - 13/12) lambda^-2/8,
//! which is positive for all t <= T once lambda >= T^2/4 — the transform
//! cannot go negative at small t for sharp kernels.
//!
//! Run with `cargo run --release --example asymptotic_regime`.

use hyperbolic_kernels::certifier::asymptotic_deviation;
use hyperbolic_kernels::kernels::{gaussian_asymptotic_h2, RadialProfile};
use hyperbolic_kernels::transforms::{forward, QuadratureConfig, Space};
use std::f64::consts::PI;

fn main() {
    let q = QuadratureConfig::default();
    let lambda = 50.0;
    let profile = RadialProfile::gaussian(lambda).unwrap();
    println!("lambda = {lambda}: radial integral (transform / 2 pi) vs two-term expansion");
    println!("{:>5} {:>20} {:>20} {:>10}", "t", "quadrature / 2 pi", "expansion", "rel dev");
    for i in 0..=6 {
        let t = 0.5 * i as f64;
        let quad = forward(Space::H2, &profile, t, &q).unwrap().value / (2.0 * PI);
        let asym = gaussian_asymptotic_h2(lambda, t);
        println!(
            "{t:>5.2} {quad:>20.12e} {asym:>20.12e} {:>10.2e}",
            (quad - asym).abs() / asym.abs()
        );
    }
    println!("\nworst relative deviation over t in [0, 3]:");
    for &lambda in &[50.0, 100.0, 200.0, 400.0] {
        let dev = asymptotic_deviation(lambda, 3.0, &q).unwrap();
        println!("  lambda = {lambda:>5}: {dev:.3e}");
    }
}

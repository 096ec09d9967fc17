//! The two Gaussian-like density families on the hyperbolic plane: the
//! Herschel–Maxwell density proportional to cosh(r)^-a and the squared-
//! exponential density with its error-function normalizer. Both integrate
//! to one against the volume form; the table compares their shapes.
//!
//! Run with `cargo run --release --example densities`.

use hyperbolic_kernels::kernels::{gauss_density_h2, HmDistribution};
use hyperbolic_kernels::quad::adaptive_gk;
use std::f64::consts::PI;

fn main() {
    let hm = HmDistribution::new(2, 4.0).unwrap();
    let lambda = 1.66;
    println!("Herschel-Maxwell (n=2, a=4) vs squared-exponential (lambda=1.66)");
    println!("{:>5} {:>18} {:>18}", "r", "hm", "gauss");
    for i in 0..=16 {
        let r = 0.25 * i as f64;
        println!("{r:>5.2} {:>18.12} {:>18.12}", hm.density(r), gauss_density_h2(lambda, r));
    }
    let total_hm = adaptive_gk(
        &|r: f64| hm.density(r) * 2.0 * PI * r.sinh(),
        0.0,
        40.0,
        1e-12,
        1e-12,
        8,
        4000,
    )
    .unwrap()
    .value;
    let total_gauss = adaptive_gk(
        &|r: f64| gauss_density_h2(lambda, r) * 2.0 * PI * r.sinh(),
        0.0,
        12.0,
        1e-12,
        1e-12,
        8,
        4000,
    )
    .unwrap()
    .value;
    println!("\nintegrals over the plane: hm = {total_hm:.15}, gauss = {total_gauss:.15}");
    let hm3 = HmDistribution::new(3, 4.0).unwrap();
    println!("three-dimensional normalizer (n=3, a=4): {:.15} = 3/(4 pi)", hm3.normalizer);
}

//! Criterion-free cross-check: Gram matrices of sampled ball configurations.
//! A positive-definite kernel must keep every Gram matrix PSD; a negative
//! eigenvalue refutes positive-definiteness without any transform at all.
//!
//! Random search is one-sided — for the Gaussian on H3 the spectral
//! certificate refutes positive-definiteness, while finite random
//! configurations may or may not exhibit a negative eigenvalue.
//!
//! Run with `cargo run --release --example gram_witness`.

use hyperbolic_kernels::gram::{gram_trace, witness_search};
use hyperbolic_kernels::kernels::RadialProfile;
use hyperbolic_kernels::transforms::Space;

fn main() {
    let cases = [
        (Space::H2, RadialProfile::sech(2.0).unwrap(), 100, 20, 5.0),
        (Space::H2, RadialProfile::sech(1.0).unwrap(), 100, 20, 5.0),
        (Space::H3, RadialProfile::sech(3.0).unwrap(), 64, 20, 4.0),
        (Space::H3, RadialProfile::gaussian(1.0).unwrap(), 128, 30, 4.0),
        (Space::H2, RadialProfile::gaussian(0.3).unwrap(), 128, 30, 5.0),
    ];
    for (space, profile, n, trials, radius) in &cases {
        let report = witness_search(*space, profile, *n, *trials, *radius, 2024).unwrap();
        let trace = gram_trace(*space, profile, *n);
        let verdict = if report.min_eig < -1e-8 * trace {
            "negative eigenvalue: NOT positive-definite"
        } else {
            "all sampled Gram matrices PSD (no conclusion beyond the samples)"
        };
        println!(
            "{:<22} on {}: n={n} trials={trials} R={radius}  min eig = {:>13.6e}  -> {verdict}",
            profile.to_string(),
            space.label(),
            report.min_eig
        );
    }
}

//! Positive-definiteness verdicts for the three kernel families on both
//! spaces: the Gaussian fails everywhere (a robust negative spectral value
//! is exhibited), the hyperbolic secant passes its scan, and the Wishart
//! kernel fails through the Bessel sign change.
//!
//! Run with `cargo run --release --example certify_kernels`.

use hyperbolic_kernels::certifier::certify;
use hyperbolic_kernels::kernels::RadialProfile;
use hyperbolic_kernels::transforms::{QuadratureConfig, Space};

fn main() {
    let q = QuadratureConfig::default();
    let cases = [
        (Space::H3, RadialProfile::gaussian(1.0).unwrap(), 15.0),
        (Space::H3, RadialProfile::gaussian(0.25).unwrap(), 5.0),
        (Space::H2, RadialProfile::sech(0.6).unwrap(), 30.0),
        (Space::H2, RadialProfile::sech(2.0).unwrap(), 30.0),
        (Space::H3, RadialProfile::sech(3.0).unwrap(), 30.0),
        (Space::H2, RadialProfile::wishart(0.5).unwrap(), 30.0),
        // neither square- nor absolutely integrable: the criterion cannot run
        (Space::H2, RadialProfile::sech(0.5).unwrap(), 10.0),
    ];
    for (space, profile, t_max) in &cases {
        let verdict = certify(*space, profile, *t_max, &q);
        println!("{:<22} on {}:  {verdict}", profile.to_string(), space.label());
    }
}

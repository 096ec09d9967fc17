//! Spherical transforms by quadrature against every family with a known
//! closed form: sech and Wishart on the hyperbolic plane, Gaussian and
//! integer-parameter sech on three-dimensional hyperbolic space.
//!
//! Run with `cargo run --release --example closed_form_check`.

use hyperbolic_kernels::kernels::{closed_form, RadialProfile};
use hyperbolic_kernels::transforms::{forward, QuadratureConfig, Space};

fn main() {
    let q = QuadratureConfig::default();
    let cases = [
        (Space::H2, RadialProfile::sech(2.0).unwrap()),
        (Space::H2, RadialProfile::wishart(0.5).unwrap()),
        (Space::H3, RadialProfile::gaussian(0.5).unwrap()),
        (Space::H3, RadialProfile::sech(3.0).unwrap()),
    ];
    for (space, profile) in &cases {
        println!("{} on {}", profile, space.label());
        println!("{:>6} {:>24} {:>24} {:>12}", "t", "quadrature", "closed form", "rel err");
        for i in 1..=8 {
            let t = i as f64;
            let quad = forward(*space, profile, t, &q).expect("transform converges");
            let formula = closed_form(*space, profile, t).expect("closed form exists");
            let rel = (quad.value - formula.value).abs() / formula.value.abs().max(1e-300);
            println!(
                "{t:>6.2} {:>24.16e} {:>24.16e} {rel:>12.2e}",
                quad.value, formula.value
            );
        }
        println!();
    }
}

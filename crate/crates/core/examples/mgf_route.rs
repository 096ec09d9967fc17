//! The moment-generating-function route to the H3 transform:
//! f(t) = (pi/t) Im{G(it+1) - G(it-1)} with G the MGF of the even extension
//! of the profile. For the Gaussian and integer-parameter sech profiles the
//! MGF is analytic, giving a third evaluation route (besides quadrature and
//! the Gamma closed forms) that all have to agree.
//!
//! Run with `cargo run --release --example mgf_route`.

use hyperbolic_kernels::kernels::{closed_form, gaussian_mgf, sech_mgf, RadialProfile};
use hyperbolic_kernels::transforms::{forward, mgf_transform_h3, QuadratureConfig, Space};
use num_complex::Complex64;

fn main() {
    let q = QuadratureConfig::default();
    let lambda = 1.0;
    let gaussian = RadialProfile::gaussian(lambda).unwrap();
    println!("gaussian lambda=1 on h3");
    println!("{:>5} {:>22} {:>22} {:>22}", "t", "mgf route", "closed form", "quadrature");
    for &t in &[0.5, 1.0, 2.0, 4.0, 7.0] {
        let via_mgf = mgf_transform_h3(|s| Some(gaussian_mgf(lambda, s)), t).unwrap();
        let formula = closed_form(Space::H3, &gaussian, t).unwrap().value;
        let quad = forward(Space::H3, &gaussian, t, &q).unwrap().value;
        println!("{t:>5.2} {via_mgf:>22.15e} {formula:>22.15e} {quad:>22.15e}");
    }

    let sech3 = RadialProfile::sech(3.0).unwrap();
    println!("\nsech a=3 on h3 (G(s) = sech MGF at sigma = -i s)");
    println!("{:>5} {:>22} {:>22} {:>22}", "t", "mgf route", "closed form", "quadrature");
    for &t in &[0.5, 1.0, 2.0, 4.0, 7.0] {
        let via_mgf =
            mgf_transform_h3(|s| sech_mgf(3, s * Complex64::new(0.0, -1.0)).ok(), t).unwrap();
        let formula = closed_form(Space::H3, &sech3, t).unwrap().value;
        let quad = forward(Space::H3, &sech3, t, &q).unwrap().value;
        println!("{t:>5.2} {via_mgf:>22.15e} {formula:>22.15e} {quad:>22.15e}");
    }
}

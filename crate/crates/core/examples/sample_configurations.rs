//! Hyperboloid-model geometry: seeded volume-uniform ball sampling,
//! geodesic distances, and Lobachevsky coordinates with the hyperbolic
//! Pythagorean identity cosh d = cosh u cosh v.
//!
//! Run with `cargo run --release --example sample_configurations`.

use hyperbolic_kernels::geometry::{distance, lobachevsky_point, sample_ball, HPoint};

fn main() {
    let ps = sample_ball(2, 2.0, 5, 42).unwrap();
    println!("five volume-uniform samples in the radius-2 ball (seed 42):");
    print!("{}", ps.to_csv());

    let origin = HPoint::origin(2).unwrap();
    let mean_cosh: f64 = {
        let big = sample_ball(2, 2.0, 100_000, 7).unwrap();
        big.points
            .iter()
            .map(|p| distance(&origin, p).unwrap().cosh())
            .sum::<f64>()
            / 100_000.0
    };
    println!(
        "\nempirical E[cosh r] over 1e5 samples: {mean_cosh:.5} (analytic (cosh 2 + 1)/2 = {:.5})",
        (2.0_f64.cosh() + 1.0) / 2.0
    );

    println!("\nLobachevsky coordinates: cosh d(o, p) = cosh u cosh v");
    for &(u, v) in &[(1.0, 0.0), (1.0, 1.0), (0.5, -1.5)] {
        let p = lobachevsky_point(u, v);
        let d = distance(&origin, &p).unwrap();
        println!(
            "  (u, v) = ({u:>4.1}, {v:>4.1}): d = {d:.12}, arcosh(cosh u cosh v) = {:.12}",
            (u.cosh() * v.cosh()).acosh()
        );
    }
}

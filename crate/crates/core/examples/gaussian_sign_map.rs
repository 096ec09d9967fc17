//! Sign map of the Gaussian transform on the hyperbolic plane over a
//! (lambda, t) grid, rendered as rows of +/-/0 — the positive band near
//! t = 0 followed by alternating bands as t grows.
//!
//! Run with `cargo run --release --example gaussian_sign_map`.

use hyperbolic_kernels::certifier::{sign_map, SignMap};
use hyperbolic_kernels::kernels::RadialProfile;
use hyperbolic_kernels::transforms::{QuadratureConfig, Space};

fn main() {
    let lambda_grid: Vec<f64> = (3..=20).map(|i| 0.1 * i as f64).collect();
    let t_grid: Vec<f64> = (0..=70).map(|i| 0.2 * i as f64).collect();
    let q = QuadratureConfig::default();
    let map = sign_map(
        Space::H2,
        |lambda| RadialProfile::Gaussian { lambda },
        &lambda_grid,
        &t_grid,
        &q,
    );
    println!("sign of the transform, rows lambda = 0.3..2.0, columns t = 0..14");
    for (i, &lambda) in map.lambda_grid.iter().enumerate() {
        let row: String = map.row_signs(i).iter().map(|&s| SignMap::sign_char(s)).collect();
        println!("lambda={lambda:>4.1}  {row}");
    }
    for note in &map.notes {
        println!("cell failure: {note}");
    }
    println!("\nCSV head:\n{}", map.to_csv().lines().take(4).collect::<Vec<_>>().join("\n"));
}

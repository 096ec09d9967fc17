//! Spherical transforms of radial kernels on hyperbolic spaces, with
//! positive-definiteness certification by the sign of the transform.
//!
//! A radial kernel `k(x, y) = g(d(x, y))` on the hyperbolic plane or
//! three-dimensional hyperbolic space is positive-definite exactly when its
//! spherical transform is nonnegative and integrable against the spectral
//! density. This crate computes those transforms by adaptive quadrature
//! ([`transforms`]), compares them against the closed forms known for the
//! Gaussian, Wishart, and hyperbolic secant families ([`kernels`]), scans the
//! transform sign to certify or refute positive-definiteness ([`certifier`]),
//! and double-checks every verdict with a criterion-free Gram-matrix
//! eigenvalue oracle on sampled point configurations ([`gram`]).
//!
//! The crate is a library first: see `examples/` for one runnable program per
//! capability, and the thin `hypk` binary for CSV-emitting subcommands.

pub mod certifier;
pub mod cli;
pub mod geometry;
pub mod gram;
pub mod kernels;
pub mod quad;
pub mod specfun;
pub mod transforms;

pub use quad::EvalResult;

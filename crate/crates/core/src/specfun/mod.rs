//! Self-contained special-function kernel.
//!
//! Everything downstream reduces to four primitives: the complex log-Gamma
//! function, the error function, the modified Bessel function K with purely
//! imaginary order, and the conical Legendre function P_{-1/2+it}(cosh r).
//! The Gamma product identities of [`gamma_pair_product`] provide an exact
//! second route used by the test suite as a cross-check oracle.

mod bessel;
mod conical;
mod erf;
mod gamma;

pub use bessel::bessel_k_imag;
pub use conical::{conical_p, conical_p_tol};
pub use erf::erf;
pub use gamma::{gamma_abs_sq, gamma_pair_product, log_gamma};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecFunError {
    #[error("log-gamma pole: {z:?} is a nonpositive integer")]
    Pole { z: num_complex::Complex64 },
    #[error("gamma product is singular at z = {z:?}")]
    Singularity { z: num_complex::Complex64 },
    #[error("evaluation did not meet the requested tolerance: {0}")]
    Convergence(String),
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
}

impl From<crate::quad::QuadError> for SpecFunError {
    fn from(e: crate::quad::QuadError) -> Self {
        SpecFunError::Convergence(e.to_string())
    }
}

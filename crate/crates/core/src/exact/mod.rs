//! Exact arithmetic: reduced nonnegative rationals extended with ∞, and
//! Gaussian rationals (exact complex numbers with rational components).
//!
//! Everything here is arbitrary precision; there is no overflow mode and no
//! floating point anywhere.

mod gaussian;
mod rational;

pub use gaussian::GaussianRational;
pub use rational::ExtendedRational;

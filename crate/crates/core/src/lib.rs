//! Arbitrary-precision tools for Diophantine approximation.

// Linked for its `use-system-libs` feature: MPFR and GMP come from the system.
use gmp_mpfr_sys as _;

pub mod arith;
pub mod arith_funcs;
pub mod bernoulli;
pub mod contfrac;
pub mod dioph_sums;
pub mod equidist;
pub mod error;
pub mod golden;
pub mod products;
pub mod verify;

pub use arith::{HPFloat, Real};
pub use error::{Error, Result};

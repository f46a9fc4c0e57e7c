//! Exact construction and verification of duality relations between the
//! solution bases of generalized hypergeometric equations (theta mode) and
//! basic hypergeometric q-difference equations (q-shift mode), and the
//! corresponding bases of their dual equations.
//!
//! Everything is computed over `Q`: parameters are rationals, operator
//! coefficients are rational functions in `z`, solutions are truncated power
//! series times a symbolic power of `z`.

pub mod algebra;
pub mod error;
pub mod hypergeometric;
pub mod par;
pub mod q_hypergeometric;
pub mod reference;
pub mod report;
pub mod sampling;
pub mod skew;

pub use error::{Error, Result};
pub use par::Execution;

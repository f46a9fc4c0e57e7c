//! Operator algebra for `theta` and `sigma_q`: operators, duals, pairing
//! matrices, pairings on tagged series and Wronskians.

pub mod matrix;
pub mod operator;
pub mod pairing;
pub mod tagged;

pub use matrix::{matrix_invert, series_det, RatFuncMatrix};
pub use operator::{apply_qshift, apply_theta, dual_operator, q_dual_operator, Mode, SkewOperator};
pub use pairing::{
    duality_grid, iterates, omega_pairing, omega_q_pairing, pairing_matrix, psi_matrix, psi_q_matrix, wronskian_matrix,
    Wronskian,
};
pub use tagged::{Offset, TaggedSeries};

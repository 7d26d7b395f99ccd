//! Statistic-preserving maps between paths, polyominoes and parking functions.

mod domino;
mod ehh;
mod polyomino_maps;

pub use domino::{
    ndinv, ndinv_of_path, phi, pld_recursive_step, pld_recursive_step_via_maps, two_shuffle_to_two_car, Domino,
    DominoSequence,
};
pub use ehh::{ehh_forward, ehh_inverse, shuffle_recursion_step, two_car_params, ShuffleStep, StepSummary};
pub use polyomino_maps::{catalan_params, eta, eta_inverse, psi, psi_inverse};

use crate::lattice::LatticeError;

#[derive(Debug, thiserror::Error)]
pub enum BijectionError {
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

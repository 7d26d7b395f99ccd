//! Modified Macdonald polynomials at exact points: partition invariants, plethystic evaluation,
//! changes of basis, Hall pairings and the scalar products appearing in the identities checked by
//! the verification suites.

mod alphabet;
pub mod basis;
mod evaluators;
mod htilde;
mod pairing;
mod partition;

pub use alphabet::{newton, pleth_eh, EhKind, MonomialAlphabet};
pub use basis::{Basis, SymFun};
pub use evaluators::{invariants_at, Evaluator, SfEngine};
pub use htilde::{htilde_at, htilde_at_alphabet, htilde_coefficient, htilde_symbolic, HtildeAt, DEFAULT_DEGREE_CAP};
pub use pairing::{ehh_in_h, hall_pair, jacobi_trudi, pair, PairTarget};
pub use partition::{m_poly, Cell, Invariants, Partition, PointInvariants};

use crate::qt::Pole;

#[derive(Debug, thiserror::Error)]
pub enum MacError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degree {degree} exceeds the cap {cap}")]
    Capacity { degree: u32, cap: u32 },
    #[error(transparent)]
    Pole(#[from] Pole),
}

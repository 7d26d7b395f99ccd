//! Exact q,t arithmetic: polynomials, q-analogues, grid identity testing and the
//! two-car parking function recursion.

mod grid;
mod poly;
mod qanalog;
mod rational;
pub mod recursion;

pub use grid::{
    compare_on_grid, compare_on_grid_with, degree_bound_for_size, poly_equal_by_grid, q_primes, t_primes, EvalPoint, GridComparison,
    GridWitness, PointOutcome, Pole,
};
pub use poly::{Exp, QtPoly};
pub use qanalog::{q_binomial, q_factorial, q_int};
pub use rational::QtRational;
pub use recursion::{reconcile_recursion, BaseCase, Pf2Recursion, ReconciliationReport, RSemantics, RecursionVariant};

#[derive(Debug, thiserror::Error)]
pub enum QtError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    NotExact(String),
    #[error("no feasible grid for degree bound {degree_bound}")]
    InfeasibleGrid { degree_bound: u32 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("enumeration failed: {0}")]
    Enumeration(String),
}

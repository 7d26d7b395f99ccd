//! Exact combinatorics of decorated Dyck paths, parallelogram polyominoes and two-car parking
//! functions, with q,t-enumerators, the bijections between these families, and exact checks of
//! modified Macdonald polynomial identities.

pub mod bijections;
pub mod enumerate;
pub mod lattice;
pub mod macdonald;
pub mod qt;
pub mod verify;

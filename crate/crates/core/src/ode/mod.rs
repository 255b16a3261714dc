//! Second-order linear ODEs: singular points, indicial equations,
//! Churchill invariants and Frobenius solutions.

pub mod frobenius;
pub mod indicial;
pub mod linear;

pub use frobenius::{frobenius_from_pq, frobenius_solve, verify_solution, FrobeniusSolution};
pub use indicial::{
    churchill_invariants, indicial_at_infinity, indicial_at_point, indicial_finite_simple_root,
    ChurchillInvariants, Delta, IndicialData, IndicialRoots, TraceValue,
};
pub use linear::{LinearODE2, Location};

//! Variational equations along the invariant plane `r = p_r = 0`.

pub mod fundamental;
pub mod hvar;
pub mod params;
pub mod plane;
pub mod weierstrass;

pub use fundamental::{fundamental_matrix, time_domain_basis, FundamentalMatrix, SolutionBlock, TimeDomainBasis};
pub use hvar::{hvar_rhs, Form, HigherVariationRHS, Xi};
pub use params::{HamiltonianParams, RationalParams};
pub use plane::{
    build_invariant_plane, build_time_ve, build_ve1_x, build_ve1_z, weight_radicand, InvariantPlaneRelation,
    TimeVE,
};
pub use weierstrass::{plane_solution_series, reduce_cubic, weierstrass_series, CubicReduction, WeierstrassSeries};

//! Independent numerical ground truth for the closed forms.

pub mod angular;
pub mod assembly;
pub mod checks;
pub mod integrals;
pub mod quadrature;
pub mod residual;

pub use angular::{discretize_angular_j, nearest_distance, AngularDiscretization};
pub use assembly::{
    assemble_1d, assemble_2d, assemble_radial, assemble_radial_nd, solve_generalized,
    GeneralizedEigenproblem, PlaneSector, GUARD_BAND,
};
pub use checks::{line_state, run_checks, CheckKind, CheckResult, VerifyConfig};
pub use integrals::integral_commutator_residual;
pub use quadrature::{make_quadrature, make_scaled_quadrature, InnerProductWeight, QuadratureRule};
pub use residual::{residual_report, ResidualReport};

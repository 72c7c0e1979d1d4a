//! Exactly solvable oscillators on the Darboux III space, with and without
//! Dunkl reflections and a constant magnetic field.
//!
//! - [`spectra`]: closed-form energies and level enumeration.
//! - [`eigenfunctions`]: normalized eigenstates built from Hermite, Laguerre
//!   and Jacobi polynomials.
//! - [`operators`]: pointwise Dunkl derivatives, angular operators and
//!   Hamiltonians for residual checks.
//! - [`oracle`]: basis-expansion eigensolvers, quadrature and verification
//!   suites that cross-check everything above.
//!
//! ```
//! use dunkl_darboux::{spectrum_darboux_nd, ModelParams};
//!
//! let params = ModelParams::new(2).with_lambda(0.02);
//! let e0 = spectrum_darboux_nd(&params, 0);
//! assert!((e0 - 0.980199980003999).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eigenfunctions;
pub mod error;
pub mod jet;
pub mod model;
pub mod operators;
pub mod oracle;
pub mod specfun;
pub mod spectra;

pub use eigenfunctions::{
    build_angular, build_darboux_1d, build_dunkl_1d, build_dunkl_darboux_1d, build_product_nd,
    build_radial_2d, inner_product, AngularEigenfunction, Eigenstate, PlanarEigenstate,
    WavefunctionSpec,
};
pub use error::{Error, Result};
pub use jet::{ComplexJet, Jet};
pub use model::{AngularIndex, Branch, Model, ModelParams, Parity, QuantumNumbers, Sector};
pub use operators::{LineModel, PlaneModel};
pub use spectra::{
    enumerate_levels, level_energy, metric_factor, scalar_curvature, sigma_eigenvalue,
    solve_energy_implicit, spectrum_darboux_nd, spectrum_dunkl_1d, spectrum_dunkl_darboux_nd,
    spectrum_dunkl_nd, spectrum_landau_darboux_2d, spectrum_landau_dunkl_2d,
    spectrum_landau_dunkl_darboux_2d, LevelRecord,
};

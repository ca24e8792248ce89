//! Finite-difference oracle for the partner Hamiltonians.

mod sampled;
mod sweep;
mod tridiagonal;
mod verify;

pub use sampled::{quadrature, simpson, SampledFunction};
pub use sweep::{sweep_numeric_levels, SweepJob};
pub use tridiagonal::{
    discretize, lowest_eigenpairs, lowest_eigenvalues, operator_residual, Eigenpair,
    TridiagonalOperator,
};
pub use verify::{
    annihilation_residual, default_grid, grid_for, increment_ratios, intertwine_residual,
    intertwine_residual_with, oracle_domain, richardson, verify_partner_spectra,
    zero_mode_norm_growth, IntertwiningCheck, LevelCheck, PairingCheck, Report, Tolerances,
    VerifyOptions, NORM_GROWTH_STEP, NORM_GROWTH_U_MIN,
};

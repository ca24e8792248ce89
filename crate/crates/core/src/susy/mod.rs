//! Supersymmetric factorization L± = ∓∂ᵤ + W, H₁ = L⁺L⁻, H₂ = L⁻L⁺, and the
//! closed forms of the solvable cases.

mod eigenfunction;
pub mod jacobi;
mod potentials;
mod problem;
mod spectrum;
mod spinor;
mod zero_mode;

pub use eigenfunction::{Component, Eigenfunction, VariableMap};
pub use jacobi::{jacobi, jacobi_derivative, jacobi_derivative_scaled, jacobi_scaled};
pub use potentials::{
    partner_potentials, shape_invariance_residual, shape_invariance_residual_for, PartnerPotentials,
};
pub use problem::{analytic_problem, AnalyticProblem};
pub use spectrum::{spectrum, Spectrum};
pub use spinor::{spinor_assembly, spinor_at};
pub use zero_mode::{
    degenerate_lambdas, finite_flux_no_go, ln_zero_mode, zero_mode, zero_mode_admissible,
    zero_mode_derivative, NoGoVerdict, ZeroModeStatus, ZeroModeVerdict,
};

use crate::error::Result;
use crate::model::{AngularMomentum, FieldCase};

/// Closed-form descriptor of g₁,ₙ or g₂,ₙ₋₁ for a field case.
pub fn eigenfunction(
    case: &FieldCase,
    lambda: AngularMomentum,
    n: usize,
    component: Component,
) -> Result<Eigenfunction> {
    let problem = analytic_problem(case, lambda)?;
    let gauge = crate::fields::GaugeFunction::new(case.clone())?;
    let verdict = zero_mode_admissible(&gauge, lambda);
    if !verdict.is_admissible() {
        return Err(crate::Error::NoBoundStates(format!(
            "case {} at λ = {lambda} has no admissible zero mode",
            case.label()
        )));
    }
    problem.eigenfunction(n, component)
}

/// Unnormalized closed-form value of g₁,ₙ or g₂,ₙ₋₁ at u.
pub fn eigenfunction_value(
    case: &FieldCase,
    lambda: AngularMomentum,
    n: usize,
    component: Component,
    u: f64,
) -> Result<f64> {
    eigenfunction(case, lambda, n, component)?.value(u)
}

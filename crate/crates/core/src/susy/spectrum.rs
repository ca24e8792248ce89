//! Exact bound-state spectra.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::GaugeFunction;
use crate::model::{AngularMomentum, FieldCase, SpectrumEntry, UnitSystem};

use super::problem::{analytic_problem, AnalyticProblem};
use super::zero_mode::zero_mode_admissible;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub problem: AnalyticProblem,
    /// Strictly bound levels n = 0, 1, ….
    pub levels: Vec<SpectrumEntry>,
    /// The level sitting exactly on the continuum edge, if any. Not bound.
    pub threshold: Option<SpectrumEntry>,
    pub continuum_threshold: f64,
}

impl Spectrum {
    pub fn epsilons(&self) -> Vec<f64> {
        self.levels.iter().map(|e| e.epsilon).collect()
    }
}

/// Closed-form levels with Dirac energies ±√εₙ/R attached.
pub fn spectrum(case: &FieldCase, lambda: AngularMomentum, radius: f64) -> Result<Spectrum> {
    let units = UnitSystem::new(radius)?;
    let problem = analytic_problem(case, lambda)?;
    let gauge = GaugeFunction::new(case.clone())?;
    let verdict = zero_mode_admissible(&gauge, lambda);
    if !verdict.is_admissible() {
        return Err(Error::NoBoundStates(format!(
            "case {} at λ = {lambda}: zero mode is {} (origin exponent {}, decay rate {})",
            case.label(),
            verdict.status,
            verdict.origin_exponent,
            verdict.decay_rate
        )));
    }
    let degeneracy = problem.degeneracy();
    let count = problem.bound_level_count();
    let levels = (0..count)
        .map(|n| SpectrumEntry::new(n, problem.epsilon(n), &units, false, degeneracy.clone()))
        .collect();
    let threshold = problem.is_threshold(count).then(|| {
        SpectrumEntry::new(
            count,
            problem.continuum_threshold(),
            &units,
            true,
            degeneracy.clone(),
        )
    });
    Ok(Spectrum {
        problem,
        levels,
        threshold,
        continuum_threshold: problem.continuum_threshold(),
    })
}

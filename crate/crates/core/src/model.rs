//! Domain types shared by every other module.
//!
//! All quantities are dimensionless with ħ = c = 1. The carrier charge
//! q = −e is folded into the gauge function so that the constant-field case
//! reads α(u) = A0·coth u with A0 > 0. The hyperboloid radius R only enters
//! when partner eigenvalues ε are converted into Dirac energies ±√ε/R.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::TabulatedGauge;
use crate::susy::{self, ZeroModeVerdict};

/// Total angular momentum eigenvalue λ of J_z (in units of ħ).
///
/// Stored as 2λ so half-odd values compare exactly. A relaxed real value may
/// be supplied for exploratory runs; it overrides `two_lambda` and marks the
/// result as non-physical.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularMomentum {
    two_lambda: i64,
    relaxed_value: Option<f64>,
}

impl AngularMomentum {
    /// Strict constructor: `two_lambda` must be odd.
    pub fn half_odd(two_lambda: i64) -> Result<Self> {
        if two_lambda % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "2λ = {two_lambda} is even; λ must be half-odd (use relaxed mode for other values)"
            )));
        }
        Ok(Self {
            two_lambda,
            relaxed_value: None,
        })
    }

    pub fn relaxed(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "λ = {value} is not finite"
            )));
        }
        Ok(Self {
            two_lambda: (2.0 * value).round() as i64,
            relaxed_value: Some(value),
        })
    }

    /// Parses "7/2", "-1/2", "3.5" (strict) or any real / fraction (relaxed).
    pub fn parse(text: &str, relaxed: bool) -> Result<Self> {
        let text = text.trim();
        let value = parse_fraction(text)?;
        if relaxed {
            return Self::relaxed(value);
        }
        let doubled = 2.0 * value;
        if doubled.fract() != 0.0 || doubled.abs() > i64::MAX as f64 / 4.0 {
            return Err(Error::InvalidParameter(format!(
                "λ = {text} is not a half-odd number (use --relaxed for other values)"
            )));
        }
        Self::half_odd(doubled as i64)
    }

    pub fn value(&self) -> f64 {
        self.relaxed_value.unwrap_or(self.two_lambda as f64 / 2.0)
    }

    /// 2λ for strict values, `None` in relaxed mode.
    pub fn two_lambda(&self) -> Option<i64> {
        match self.relaxed_value {
            Some(_) => None,
            None => Some(self.two_lambda),
        }
    }

    pub fn is_physical(&self) -> bool {
        self.relaxed_value.is_none()
    }
}

impl fmt::Display for AngularMomentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.relaxed_value {
            Some(v) => write!(f, "{v} (relaxed)"),
            None => write!(f, "{}/2", self.two_lambda),
        }
    }
}

fn parse_fraction(text: &str) -> Result<f64> {
    let bad = || Error::Parse(format!("cannot parse '{text}' as a number or fraction"));
    match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            Ok(num / den)
        }
        None => text.parse::<f64>().map_err(|_| bad()),
    }
    .and_then(|v| if v.is_finite() { Ok(v) } else { Err(bad()) })
}

/// The solvable vector-potential families plus user-tabulated gauges.
///
/// The parameter names follow the gauge functions
///
/// - `ConstantField`: α = A0·coth u
/// - `Eckart`: α = λ′/sinh u − C1·coth u + D1/C1
/// - `PoschlTeller`: α = λ′/sinh u + C2·tanh u + D2/C2
/// - `GeneralizedPoschlTeller`: α = λ′/sinh u + C3·tanh u + D3·sech u
#[derive(Debug, Clone, PartialEq)]
pub enum FieldCase {
    ConstantField { a0: f64 },
    Eckart { lambda_prime: f64, c1: f64, d1: f64 },
    PoschlTeller { lambda_prime: f64, c2: f64, d2: f64 },
    GeneralizedPoschlTeller { lambda_prime: f64, c3: f64, d3: f64 },
    Tabulated(Arc<TabulatedGauge>),
}

impl FieldCase {
    pub fn label(&self) -> &'static str {
        match self {
            FieldCase::ConstantField { .. } => "i",
            FieldCase::Eckart { .. } => "ii",
            FieldCase::PoschlTeller { .. } => "iii",
            FieldCase::GeneralizedPoschlTeller { .. } => "iv",
            FieldCase::Tabulated(_) => "tabulated",
        }
    }

    /// Rejects NaN/infinite parameters and the division-by-zero points
    /// C1 = 0, C2 = 0.
    pub fn check_parameters(&self) -> Result<()> {
        let finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} = {v} is not finite"
                )))
            }
        };
        match *self {
            FieldCase::ConstantField { a0 } => finite("A0", a0),
            FieldCase::Eckart {
                lambda_prime,
                c1,
                d1,
            } => {
                finite("λ′", lambda_prime)?;
                finite("C1", c1)?;
                finite("D1", d1)?;
                if c1 == 0.0 {
                    return Err(Error::InvalidParameter("C1 must be nonzero".into()));
                }
                Ok(())
            }
            FieldCase::PoschlTeller {
                lambda_prime,
                c2,
                d2,
            } => {
                finite("λ′", lambda_prime)?;
                finite("C2", c2)?;
                finite("D2", d2)?;
                if c2 == 0.0 {
                    return Err(Error::InvalidParameter("C2 must be nonzero".into()));
                }
                Ok(())
            }
            FieldCase::GeneralizedPoschlTeller {
                lambda_prime,
                c3,
                d3,
            } => {
                finite("λ′", lambda_prime)?;
                finite("C3", c3)?;
                finite("D3", d3)
            }
            FieldCase::Tabulated(_) => Ok(()),
        }
    }
}

/// Hyperboloid radius and the conversion from ε to Dirac energies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitSystem {
    radius: f64,
}

/// ħ·v_F in eV·m for v_F = c/300.
pub const HBAR_VF_EV_M: f64 = 6.582_119_569e-16 * (299_792_458.0 / 300.0);

impl UnitSystem {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "radius R = {radius} must be finite and positive"
            )));
        }
        Ok(Self { radius })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// ℰ₊ = √ε / R, in units of 1/R-lengths.
    pub fn dirac_energy(&self, epsilon: f64) -> f64 {
        epsilon.max(0.0).sqrt() / self.radius
    }

    /// Physical energy in eV when R is given in metres.
    pub fn energy_ev(&self, epsilon: f64) -> f64 {
        HBAR_VF_EV_M * self.dirac_energy(epsilon)
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self { radius: 1.0 }
    }
}

/// Uniform grid u_min, u_min + h, …, u_max with u_min > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialGrid {
    u_min: f64,
    u_max: f64,
    n_points: usize,
}

impl RadialGrid {
    pub const MIN_POINTS: usize = 16;

    pub fn new(u_min: f64, u_max: f64, n_points: usize) -> Result<Self> {
        if !(u_min.is_finite() && u_max.is_finite()) {
            return Err(Error::InvalidGrid("grid bounds must be finite".into()));
        }
        if u_min <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "u_min = {u_min} must be > 0 (u = 0 is a coordinate singularity)"
            )));
        }
        if u_max <= u_min {
            return Err(Error::InvalidGrid(format!(
                "u_max = {u_max} must exceed u_min = {u_min}"
            )));
        }
        if n_points < Self::MIN_POINTS {
            return Err(Error::InvalidGrid(format!(
                "n_points = {n_points} is below the minimum of {}",
                Self::MIN_POINTS
            )));
        }
        Ok(Self {
            u_min,
            u_max,
            n_points,
        })
    }

    /// Cell-centred grid u_i = (i + ½)·step. Mirroring it through u = 0 gives
    /// a uniform whole-line mesh with the same step.
    pub fn staggered(step: f64, n_points: usize) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "step = {step} must be positive"
            )));
        }
        Self::new(
            0.5 * step,
            0.5 * step + (n_points.max(1) - 1) as f64 * step,
            n_points,
        )
    }

    /// Staggered grid whose last point is `u_max`.
    pub fn staggered_to(u_max: f64, n_points: usize) -> Result<Self> {
        Self::staggered(u_max / (n_points as f64 - 0.5), n_points)
    }

    pub fn u_min(&self) -> f64 {
        self.u_min
    }

    pub fn u_max(&self) -> f64 {
        self.u_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn step(&self) -> f64 {
        (self.u_max - self.u_min) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.u_max
        } else {
            self.u_min + i as f64 * self.step()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |i| self.point(i))
    }

    pub fn is_staggered(&self) -> bool {
        (self.u_min - 0.5 * self.step()).abs() <= 1e-9 * self.step()
    }

    /// Same interval with half the step. Staggered grids stay staggered,
    /// which moves u_max outward by a quarter of the old step.
    pub fn refined(&self) -> Self {
        if self.is_staggered() {
            Self::staggered(0.5 * self.step(), 2 * self.n_points).expect("refining a valid grid")
        } else {
            Self::new(self.u_min, self.u_max, 2 * self.n_points - 1).expect("refining a valid grid")
        }
    }
}

/// Where a radial operator lives.
///
/// `HalfLine` is (u_min, u_max) with Dirichlet walls. `WholeLine` mirrors a
/// staggered grid through the origin, evaluating even potentials at |u|; it
/// is the natural domain for superpotentials that are regular at u = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    HalfLine,
    WholeLine,
}

impl Domain {
    /// Mesh points covered by `grid` on this domain.
    pub fn points(&self, grid: &RadialGrid) -> Result<Vec<f64>> {
        match self {
            Domain::HalfLine => Ok(grid.points().collect()),
            Domain::WholeLine => {
                if !grid.is_staggered() {
                    return Err(Error::InvalidGrid(
                        "whole-line domain needs a staggered grid (u_min = step/2)".into(),
                    ));
                }
                let half: Vec<f64> = grid.points().collect();
                Ok(half
                    .iter()
                    .rev()
                    .map(|u| -u)
                    .chain(half.iter().copied())
                    .collect())
            }
        }
    }
}

/// Which angular momenta share a level.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Degeneracy {
    /// Every half-odd λ with 2λ ≥ `min_two_lambda` (an infinite set).
    InfiniteFrom { min_two_lambda: i64 },
    /// The level exists for this single λ only.
    Single { lambda: f64 },
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::InfiniteFrom { min_two_lambda } => {
                write!(f, "infinite: half-odd lambda >= {min_two_lambda}/2")
            }
            Degeneracy::Single { lambda } => write!(f, "single: lambda = {lambda}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub n: usize,
    pub epsilon: f64,
    pub dirac_energy_plus: f64,
    pub dirac_energy_minus: f64,
    pub is_threshold: bool,
    pub degeneracy: Degeneracy,
}

impl SpectrumEntry {
    pub fn new(
        n: usize,
        epsilon: f64,
        units: &UnitSystem,
        is_threshold: bool,
        degeneracy: Degeneracy,
    ) -> Self {
        let epsilon = epsilon.max(0.0);
        let e = units.dirac_energy(epsilon);
        Self {
            n,
            epsilon,
            dirac_energy_plus: e,
            // avoid a signed zero in output
            dirac_energy_minus: if e == 0.0 { 0.0 } else { -e },
            is_threshold,
            degeneracy,
        }
    }
}

/// Outcome of [`validate_case`]. Never an error for merely non-physical
/// input; those are flagged here.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub case: &'static str,
    pub lambda: f64,
    pub lambda_is_physical: bool,
    pub analytic_available: bool,
    pub analytic_note: Option<String>,
    pub zero_mode: ZeroModeVerdict,
    pub bound_states: bool,
    pub bound_level_count: usize,
}

impl ValidationReport {
    pub fn zero_mode_admissible(&self) -> bool {
        self.zero_mode.is_admissible()
    }
}

/// Checks analytic solvability, zero-mode admissibility and bound-state
/// existence for a field case at angular momentum `lambda`.
pub fn validate_case(case: &FieldCase, lambda: AngularMomentum) -> Result<ValidationReport> {
    case.check_parameters()?;
    let gauge = crate::fields::GaugeFunction::new(case.clone())?;
    let zero_mode = susy::zero_mode_admissible(&gauge, lambda);
    let analytic = susy::analytic_problem(case, lambda);
    let (analytic_available, analytic_note) = match &analytic {
        Ok(_) => (true, None),
        Err(e) => (false, Some(e.to_string())),
    };
    let bound_level_count = match &analytic {
        Ok(problem) if zero_mode.is_admissible() => problem.bound_level_count(),
        _ => 0,
    };
    Ok(ValidationReport {
        case: case.label(),
        lambda: lambda.value(),
        lambda_is_physical: lambda.is_physical(),
        analytic_available,
        analytic_note,
        bound_states: zero_mode.is_admissible(),
        zero_mode,
        bound_level_count,
    })
}

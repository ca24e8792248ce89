//! Checks the closed-form results against the finite-difference oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{GaugeFunction, Superpotential};
use crate::model::{AngularMomentum, Domain, FieldCase, RadialGrid};
use crate::susy::{self, AnalyticProblem, Component, PartnerPotentials};

use super::sampled::{simpson, SampledFunction};
use super::tridiagonal::{discretize, lowest_eigenvalues, TridiagonalOperator};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Relative eigenvalue tolerance for ordinary levels.
    pub relative: f64,
    /// Absolute tolerance for the zero mode ε₀ = 0.
    pub ground_absolute: f64,
    /// Relative tolerance for levels within `near_threshold_window` of the
    /// continuum edge.
    pub near_threshold_relative: f64,
    pub near_threshold_window: f64,
    /// Relative tolerance for ε₁,ₙ = ε₂,ₙ₋₁.
    pub pairing_relative: f64,
    pub intertwining: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            relative: 1e-3,
            ground_absolute: 1e-4,
            near_threshold_relative: 1e-2,
            near_threshold_window: 1e-2,
            pairing_relative: 1e-3,
            intertwining: 1e-6,
        }
    }
}

/// Default verification mesh: u ∈ [10⁻³, 30] with 8000 points.
pub fn default_grid() -> RadialGrid {
    RadialGrid::new(1e-3, 30.0, 8000).expect("valid default grid")
}

/// Domain the oracle uses for a case: the whole line when the reduced
/// superpotential is regular at u = 0, the half line otherwise.
pub fn oracle_domain(case: &FieldCase, lambda: AngularMomentum) -> Domain {
    match susy::analytic_problem(case, lambda) {
        Ok(p) => p.natural_domain(),
        Err(_) => Domain::HalfLine,
    }
}

/// `grid` adapted to `domain`: whole-line runs need a staggered mesh, which
/// is rebuilt with the same u_max and point count.
pub fn grid_for(grid: &RadialGrid, domain: Domain) -> Result<RadialGrid> {
    match domain {
        Domain::WholeLine if !grid.is_staggered() => {
            RadialGrid::staggered_to(grid.u_max(), grid.n_points())
        }
        _ => Ok(*grid),
    }
}

fn operators(
    potentials: &PartnerPotentials,
    grid: &RadialGrid,
    domain: Domain,
) -> Result<(TridiagonalOperator, TridiagonalOperator)> {
    Ok((
        discretize(|u| potentials.v1(u), grid, domain)?,
        discretize(|u| potentials.v2(u), grid, domain)?,
    ))
}

/// (4·ε(h/2) − ε(h))/3, cancelling the O(h²) stencil error.
pub fn richardson(coarse: f64, fine: f64) -> f64 {
    (4.0 * fine - coarse) / 3.0
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelCheck {
    pub n: usize,
    pub expected: f64,
    pub numeric_raw: f64,
    pub numeric: f64,
    pub deviation: f64,
    pub tolerance: f64,
    /// "absolute" for ε₀, "relative" otherwise.
    pub measure: &'static str,
    pub near_threshold: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairingCheck {
    pub n: usize,
    pub epsilon_1: f64,
    pub epsilon_2: f64,
    pub relative_defect: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntertwiningCheck {
    pub n: usize,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub case: &'static str,
    pub lambda: f64,
    pub domain: Domain,
    pub grid: RadialGrid,
    pub analytic_family: Option<&'static str>,
    pub continuum_threshold: f64,
    pub tolerances: Tolerances,
    /// Lowest eigenvalues of H₁ and H₂ on the coarse grid.
    pub h1_raw: Vec<f64>,
    pub h2_raw: Vec<f64>,
    /// Richardson-extrapolated eigenvalues of H₁ and H₂.
    pub h1: Vec<f64>,
    pub h2: Vec<f64>,
    pub levels: Vec<LevelCheck>,
    pub pairing: Vec<PairingCheck>,
    /// Eigenvalues of H₂ found below ε₁,₁ (must be zero).
    pub h2_levels_below_first_excited: usize,
    pub intertwining: Vec<IntertwiningCheck>,
    pub max_relative_deviation: f64,
    pub max_pairing_defect: f64,
    pub pass: bool,
}

/// Options beyond the mesh and level count.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub tolerances: Tolerances,
    /// Replaces the closed-form levels as the reference (negative controls).
    pub expected: Option<Vec<f64>>,
    /// Skip the closed-form intertwining checks.
    pub skip_intertwining: bool,
}

/// Discretizes H₁ and H₂, extracts `k` levels of each, and checks the
/// pairing ε₁,ₙ = ε₂,ₙ₋₁ and, where a closed form exists, εₙ itself.
pub fn verify_partner_spectra(
    case: &FieldCase,
    lambda: AngularMomentum,
    grid: &RadialGrid,
    k: usize,
    options: &VerifyOptions,
) -> Result<Report> {
    let tol = options.tolerances;
    let gauge = GaugeFunction::new(case.clone())?;
    let verdict = susy::zero_mode_admissible(&gauge, lambda);
    if !verdict.is_admissible() {
        return Err(Error::NoBoundStates(format!(
            "case {} at λ = {lambda}: zero mode {}; Dirichlet results would be \
             boundary-condition artefacts",
            case.label(),
            verdict.status
        )));
    }
    let superpotential = Superpotential::new(gauge, lambda);
    let potentials = susy::partner_potentials(&superpotential);
    let problem = susy::analytic_problem(case, lambda).ok();
    let domain = oracle_domain(case, lambda);
    let grid = grid_for(grid, domain)?;
    let fine = grid.refined();

    let (h1c, h2c) = operators(&potentials, &grid, domain)?;
    let (h1f, h2f) = operators(&potentials, &fine, domain)?;
    let h1_raw = lowest_eigenvalues(&h1c, k)?;
    let h2_raw = lowest_eigenvalues(&h2c, k)?;
    let h1: Vec<f64> = h1_raw
        .iter()
        .zip(lowest_eigenvalues(&h1f, k)?)
        .map(|(&c, f)| richardson(c, f))
        .collect();
    let h2: Vec<f64> = h2_raw
        .iter()
        .zip(lowest_eigenvalues(&h2f, k)?)
        .map(|(&c, f)| richardson(c, f))
        .collect();

    let threshold = potentials.asymptotic_value();
    let near = |e: f64| threshold > 0.0 && (threshold - e) / threshold < tol.near_threshold_window;

    let reference: Vec<f64> = match (&options.expected, &problem) {
        (Some(values), _) => values.clone(),
        (None, Some(p)) => (0..p.bound_level_count()).map(|n| p.epsilon(n)).collect(),
        (None, None) => Vec::new(),
    };
    let levels: Vec<LevelCheck> = reference
        .iter()
        .enumerate()
        .take(k)
        .map(|(n, &expected)| {
            let numeric = h1[n];
            let near_threshold = near(expected);
            let (deviation, tolerance, measure) = if n == 0 && expected == 0.0 {
                (numeric.abs(), tol.ground_absolute, "absolute")
            } else {
                let t = if near_threshold {
                    tol.near_threshold_relative
                } else {
                    tol.relative
                };
                (
                    (numeric - expected).abs() / expected.abs().max(f64::MIN_POSITIVE),
                    t,
                    "relative",
                )
            };
            LevelCheck {
                n,
                expected,
                numeric_raw: h1_raw[n],
                numeric,
                deviation,
                tolerance,
                measure,
                near_threshold,
                pass: deviation <= tolerance,
            }
        })
        .collect();

    // pair only levels that are bound in the oracle
    let bound = h1.iter().filter(|&&e| e < threshold).count().min(k);
    let pairing: Vec<PairingCheck> = (1..bound)
        .map(|n| {
            let (e1, e2) = (h1[n], h2[n - 1]);
            let defect = (e1 - e2).abs() / e1.abs();
            let tolerance = tol.pairing_relative;
            PairingCheck {
                n,
                epsilon_1: e1,
                epsilon_2: e2,
                relative_defect: defect,
                tolerance,
                pass: defect <= tolerance,
            }
        })
        .collect();
    let h2_levels_below_first_excited = if bound > 1 {
        h2c.sturm_count(h1_raw[1] * (1.0 - tol.pairing_relative))
    } else {
        0
    };

    let intertwining = match (&problem, options.skip_intertwining) {
        (Some(p), false) => (1..p.bound_level_count())
            .map(|n| {
                let residual = intertwine_residual_for(p, n, &grid, None)?;
                Ok(IntertwiningCheck {
                    n,
                    residual,
                    tolerance: tol.intertwining,
                    pass: residual <= tol.intertwining,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        _ => Vec::new(),
    };

    let max_relative_deviation = levels
        .iter()
        .filter(|l| l.measure == "relative")
        .fold(0.0f64, |m, l| m.max(l.deviation));
    let max_pairing_defect = pairing.iter().fold(0.0f64, |m, p| m.max(p.relative_defect));
    let pass = levels.iter().all(|l| l.pass)
        && pairing.iter().all(|p| p.pass)
        && h2_levels_below_first_excited == 0
        && intertwining.iter().all(|c| c.pass);
    Ok(Report {
        case: case.label(),
        lambda: lambda.value(),
        domain,
        grid,
        analytic_family: problem.as_ref().map(|p| p.name()),
        continuum_threshold: threshold,
        tolerances: tol,
        h1_raw,
        h2_raw,
        h1,
        h2,
        levels,
        pairing,
        h2_levels_below_first_excited,
        intertwining,
        max_relative_deviation,
        max_pairing_defect,
        pass,
    })
}

/// ‖L⁻ĝ₁,ₙ − √εₙ·ĝ₂,ₙ₋₁‖ / ‖ĝ₂,ₙ₋₁‖ with both closed forms normalized on
/// the mesh and exact derivatives.
pub fn intertwine_residual(
    case: &FieldCase,
    lambda: AngularMomentum,
    n: usize,
    grid: &RadialGrid,
) -> Result<f64> {
    intertwine_residual_with(case, lambda, n, grid, None)
}

/// As [`intertwine_residual`], optionally with a substitute εₙ.
pub fn intertwine_residual_with(
    case: &FieldCase,
    lambda: AngularMomentum,
    n: usize,
    grid: &RadialGrid,
    epsilon: Option<f64>,
) -> Result<f64> {
    // the closed forms must exist and be admissible
    susy::eigenfunction(case, lambda, n, Component::G2)?;
    let problem = susy::analytic_problem(case, lambda)?;
    let grid = grid_for(grid, problem.natural_domain())?;
    intertwine_residual_for(&problem, n, &grid, epsilon)
}

fn intertwine_residual_for(
    problem: &AnalyticProblem,
    n: usize,
    grid: &RadialGrid,
    epsilon: Option<f64>,
) -> Result<f64> {
    let g1 = problem.eigenfunction(n, Component::G1)?;
    let g2 = problem.eigenfunction(n, Component::G2)?;
    let domain = problem.natural_domain();
    let points = domain.points(grid)?;
    let h = grid.step();
    let lg1 = points
        .iter()
        .map(|&u| Ok(g1.derivative(u)? + problem.superpotential(u) * g1.value(u)?))
        .collect::<Result<Vec<_>>>()?;
    let v1 = points
        .iter()
        .map(|&u| g1.value(u))
        .collect::<Result<Vec<_>>>()?;
    let v2 = points
        .iter()
        .map(|&u| g2.value(u))
        .collect::<Result<Vec<_>>>()?;
    let norm = |v: &[f64]| simpson(&v.iter().map(|x| x * x).collect::<Vec<_>>(), h).sqrt();
    let (n1, n2) = (norm(&v1), norm(&v2));
    let root = epsilon
        .unwrap_or_else(|| problem.epsilon(n))
        .max(0.0)
        .sqrt();
    let diff: Vec<f64> = lg1
        .iter()
        .zip(&v2)
        .map(|(l, g)| l / n1 - root * g / n2)
        .collect();
    Ok(norm(&diff))
}

/// ‖L⁻g‖∞ over `points` for the zero mode of a gauge, relative to max |g|.
pub fn annihilation_residual(
    gauge: &GaugeFunction,
    lambda: AngularMomentum,
    points: &[f64],
) -> Result<f64> {
    let w = Superpotential::new(gauge.clone(), lambda);
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &u in points {
        let g = susy::zero_mode(gauge, lambda, u)?;
        let dg = susy::zero_mode_derivative(gauge, lambda, u)?;
        worst = worst.max((dg + w.value(u)? * g).abs());
        scale = scale.max(g.abs());
    }
    Ok(if scale > 0.0 { worst / scale } else { worst })
}

/// Mesh step for [`zero_mode_norm_growth`].
pub const NORM_GROWTH_STEP: f64 = 1e-2;
/// Lower integration limit for [`zero_mode_norm_growth`].
pub const NORM_GROWTH_U_MIN: f64 = 1e-3;

/// Partial norms ∫_{u_min}^{U} g₁,₀² du for each U in `u_ends` (ascending).
pub fn zero_mode_norm_growth(
    gauge: &GaugeFunction,
    lambda: AngularMomentum,
    u_ends: &[f64],
) -> Result<Vec<f64>> {
    let mut total = 0.0;
    let mut start = NORM_GROWTH_U_MIN;
    let mut out = Vec::with_capacity(u_ends.len());
    for &end in u_ends {
        if !(end > start) {
            return Err(Error::InvalidParameter(format!(
                "u_ends must be increasing and above {NORM_GROWTH_U_MIN}; got {end} after {start}"
            )));
        }
        let intervals = (((end - start) / NORM_GROWTH_STEP).ceil() as usize).max(16);
        let intervals = intervals + intervals % 2;
        let grid = RadialGrid::new(start, end, intervals + 1)?;
        let g = SampledFunction::try_from_fn(grid, Domain::HalfLine, |u| {
            Ok(susy::zero_mode(gauge, lambda, u)?.powi(2))
        })?;
        total += g.integral();
        out.push(total);
        start = end;
    }
    Ok(out)
}

/// Ratios (N₃ − N₂)/(U₃ − U₂) ÷ (N₂ − N₁)/(U₂ − U₁) of successive
/// per-unit-length increments; ≈ 1 for linear growth.
pub fn increment_ratios(u_ends: &[f64], norms: &[f64]) -> Vec<f64> {
    let rates: Vec<f64> = u_ends
        .windows(2)
        .zip(norms.windows(2))
        .map(|(u, n)| (n[1] - n[0]) / (u[1] - u[0]))
        .collect();
    rates.windows(2).map(|r| r[1] / r[0]).collect()
}

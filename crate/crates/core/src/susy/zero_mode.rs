//! The zero-energy state g₁,₀ = tanh^λ(u/2)·exp(−∫α du) and its admissibility.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::GaugeFunction;
use crate::math::ln_tanh_half;
use crate::model::{AngularMomentum, FieldCase};

/// Slack on "origin exponent ≥ 0" and "decay rate > 0".
const EXPONENT_EPS: f64 = 1e-12;

/// ln g₁,₀(u), up to an additive constant.
pub fn ln_zero_mode(gauge: &GaugeFunction, lambda: AngularMomentum, u: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::DomainError { u });
    }
    Ok(lambda.value() * ln_tanh_half(u) - gauge.alpha_antiderivative(u)?)
}

/// g₁,₀(u) with the free normalization fixed by the gauge antiderivative.
pub fn zero_mode(gauge: &GaugeFunction, lambda: AngularMomentum, u: f64) -> Result<f64> {
    Ok(ln_zero_mode(gauge, lambda, u)?.exp())
}

/// d g₁,₀/du = (λ/sinh u − α)·g₁,₀.
pub fn zero_mode_derivative(gauge: &GaugeFunction, lambda: AngularMomentum, u: f64) -> Result<f64> {
    Ok((lambda.value() / u.sinh() - gauge.alpha(u)?) * zero_mode(gauge, lambda, u)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroModeStatus {
    Admissible,
    FailsAtOrigin,
    FailsAtInfinity,
}

impl std::fmt::Display for ZeroModeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ZeroModeStatus::Admissible => "admissible",
            ZeroModeStatus::FailsAtOrigin => "not square-integrable at the origin",
            ZeroModeStatus::FailsAtInfinity => "not decaying at infinity",
        })
    }
}

/// Leading behaviour g ~ u^p at the origin and g ~ e^{−κu} at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroModeVerdict {
    pub status: ZeroModeStatus,
    pub origin_exponent: f64,
    pub decay_rate: f64,
}

impl ZeroModeVerdict {
    pub fn is_admissible(&self) -> bool {
        self.status == ZeroModeStatus::Admissible
    }
}

/// Classifies g₁,₀ from its exponents. Failure at the origin is reported
/// first when both ends fail.
pub fn zero_mode_admissible(gauge: &GaugeFunction, lambda: AngularMomentum) -> ZeroModeVerdict {
    let origin_exponent = lambda.value() - gauge.pole_flux();
    let decay_rate = gauge.asymptotic_alpha();
    let status = if origin_exponent < -EXPONENT_EPS {
        ZeroModeStatus::FailsAtOrigin
    } else if decay_rate <= EXPONENT_EPS {
        ZeroModeStatus::FailsAtInfinity
    } else {
        ZeroModeStatus::Admissible
    };
    ZeroModeVerdict {
        status,
        origin_exponent,
        decay_rate,
    }
}

/// Half-odd λ with |2λ| ≤ `two_lambda_max` whose zero mode is admissible.
///
/// For the constant field this is a finite window onto an infinite set.
pub fn degenerate_lambdas(case: &FieldCase, two_lambda_max: i64) -> Result<Vec<AngularMomentum>> {
    let gauge = GaugeFunction::new(case.clone())?;
    let bound = two_lambda_max.abs();
    let first = if bound % 2 == 0 { -bound + 1 } else { -bound };
    Ok((first..=bound)
        .step_by(2)
        .filter_map(|t| AngularMomentum::half_odd(t).ok())
        .filter(|l| zero_mode_admissible(&gauge, *l).is_admissible())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoGoVerdict {
    /// Exponent of tanh(u/2) in g₁,₀ outside the field's support.
    pub tail_exponent: f64,
    /// Always false: g₁,₀ tends to a nonzero constant at infinity.
    pub normalizable: bool,
}

/// Outside a compactly supported field α = Φ/sinh u, so
/// g₁,₀ ∝ tanh^{λ−Φ}(u/2), which tends to a constant for every λ and Φ.
pub fn finite_flux_no_go(total_flux_quanta: f64, lambda: AngularMomentum) -> NoGoVerdict {
    NoGoVerdict {
        tail_exponent: lambda.value() - total_flux_quanta,
        normalizable: false,
    }
}

//! Gauge functions α(u), magnetic fields b(u), flux and superpotentials.
//!
//! With the dimensionless conventions of [`crate::model`]:
//!
//! - b(u) = (α(u)·sinh u)′ / sinh u
//! - f(u) = α(u)·sinh u, the circulation of A around the latitude circle in
//!   flux quanta
//! - W(u) = −λ/sinh u + α(u)
//!
//! Two flux notions are kept apart. The circulation f(u) includes any flux
//! string a singular gauge hides at the pole; the surface integral
//! ∫₀ᵘ b·sinh u′ du′ does not. Their difference is the pole strength
//! lim_{u→0⁺} f(u).

mod tabulated;

pub use tabulated::{TabulatedGauge, CSV_HEADER as TABULATED_CSV_HEADER};

use crate::error::{Error, Result};
use crate::math::{self, coth, csch, sech};
use crate::model::{AngularMomentum, FieldCase};

fn check_u(u: f64) -> Result<()> {
    if u > 0.0 && u.is_finite() {
        Ok(())
    } else {
        Err(Error::DomainError { u })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaugeFunction {
    case: FieldCase,
}

impl GaugeFunction {
    pub fn new(case: FieldCase) -> Result<Self> {
        case.check_parameters()?;
        Ok(Self { case })
    }

    pub fn case(&self) -> &FieldCase {
        &self.case
    }

    pub fn alpha(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        Ok(match self.case {
            FieldCase::ConstantField { a0 } => a0 * coth(u),
            FieldCase::Eckart {
                lambda_prime,
                c1,
                d1,
            } => lambda_prime * csch(u) - c1 * coth(u) + d1 / c1,
            FieldCase::PoschlTeller {
                lambda_prime,
                c2,
                d2,
            } => lambda_prime * csch(u) + c2 * u.tanh() + d2 / c2,
            FieldCase::GeneralizedPoschlTeller {
                lambda_prime,
                c3,
                d3,
            } => lambda_prime * csch(u) + c3 * u.tanh() + d3 * sech(u),
            FieldCase::Tabulated(ref t) => t.alpha(u),
        })
    }

    pub fn alpha_derivative(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        let cc = coth(u) * csch(u);
        Ok(match self.case {
            FieldCase::ConstantField { a0 } => -a0 * csch(u).powi(2),
            FieldCase::Eckart {
                lambda_prime, c1, ..
            } => -lambda_prime * cc + c1 * csch(u).powi(2),
            FieldCase::PoschlTeller {
                lambda_prime, c2, ..
            } => -lambda_prime * cc + c2 * sech(u).powi(2),
            FieldCase::GeneralizedPoschlTeller {
                lambda_prime,
                c3,
                d3,
            } => -lambda_prime * cc + c3 * sech(u).powi(2) - d3 * sech(u) * u.tanh(),
            FieldCase::Tabulated(ref t) => t.alpha_derivative(u),
        })
    }

    /// b(u) in the closed form of each family.
    pub fn magnetic_field(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        Ok(match self.case {
            FieldCase::ConstantField { a0 } => a0,
            FieldCase::Eckart { c1, d1, .. } => -c1 + d1 / c1 * coth(u),
            FieldCase::PoschlTeller { c2, d2, .. } => {
                c2 * (1.0 + sech(u).powi(2)) + d2 / c2 * coth(u)
            }
            FieldCase::GeneralizedPoschlTeller { c3, d3, .. } => {
                c3 * (1.0 + sech(u).powi(2)) + d3 * sech(u).powi(2) * csch(u)
            }
            FieldCase::Tabulated(ref t) => {
                if u < t.u_first() || u > t.u_last() {
                    0.0
                } else {
                    t.alpha_derivative(u) + t.alpha(u) * coth(u)
                }
            }
        })
    }

    /// f(u) = α(u)·sinh u.
    pub fn flux_in_quanta(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        Ok(match self.case {
            FieldCase::ConstantField { a0 } => a0 * u.cosh(),
            FieldCase::Eckart {
                lambda_prime,
                c1,
                d1,
            } => lambda_prime - c1 * u.cosh() + d1 / c1 * u.sinh(),
            FieldCase::PoschlTeller {
                lambda_prime,
                c2,
                d2,
            } => lambda_prime + c2 * u.sinh() * u.tanh() + d2 / c2 * u.sinh(),
            FieldCase::GeneralizedPoschlTeller {
                lambda_prime,
                c3,
                d3,
            } => lambda_prime + c3 * u.sinh() * u.tanh() + d3 * u.tanh(),
            FieldCase::Tabulated(ref t) => t.alpha(u) * u.sinh(),
        })
    }

    /// lim_{u→0⁺} f(u): the flux string carried by the gauge at the pole.
    /// Equal to the residue of α's 1/u pole.
    pub fn pole_flux(&self) -> f64 {
        match self.case {
            FieldCase::ConstantField { a0 } => a0,
            FieldCase::Eckart {
                lambda_prime, c1, ..
            } => lambda_prime - c1,
            FieldCase::PoschlTeller { lambda_prime, .. }
            | FieldCase::GeneralizedPoschlTeller { lambda_prime, .. } => lambda_prime,
            FieldCase::Tabulated(ref t) => t.flux_first(),
        }
    }

    /// ∫₀ᵘ b(u′)·sinh u′ du′, the flux genuinely crossing the cap.
    pub fn flux_surface(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        let half = 0.5 * u;
        let cosh_m1 = 2.0 * half.sinh().powi(2);
        Ok(match self.case {
            FieldCase::ConstantField { a0 } => a0 * cosh_m1,
            FieldCase::Eckart { c1, d1, .. } => -c1 * cosh_m1 + d1 / c1 * u.sinh(),
            FieldCase::PoschlTeller { c2, d2, .. } => c2 * u.sinh() * u.tanh() + d2 / c2 * u.sinh(),
            FieldCase::GeneralizedPoschlTeller { c3, d3, .. } => {
                c3 * u.sinh() * u.tanh() + d3 * u.tanh()
            }
            FieldCase::Tabulated(ref t) => {
                let clamped = u.clamp(t.u_first(), t.u_last());
                if clamped <= 0.0 {
                    0.0
                } else {
                    t.alpha(clamped) * clamped.sinh() - t.flux_first()
                }
            }
        })
    }

    /// lim_{u→∞} α(u); the zero mode decays like e^{−κu} with this κ.
    pub fn asymptotic_alpha(&self) -> f64 {
        match self.case {
            FieldCase::ConstantField { a0 } => a0,
            FieldCase::Eckart { c1, d1, .. } => d1 / c1 - c1,
            FieldCase::PoschlTeller { c2, d2, .. } => c2 + d2 / c2,
            FieldCase::GeneralizedPoschlTeller { c3, .. } => c3,
            FieldCase::Tabulated(_) => 0.0,
        }
    }

    /// An antiderivative of α. Closed cases use exact primitives; tabulated
    /// gauges are integrated from the reference point u = 1.
    pub fn alpha_antiderivative(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        Ok(match self.case {
            FieldCase::ConstantField { a0 } => a0 * math::ln_sinh(u),
            FieldCase::Eckart {
                lambda_prime,
                c1,
                d1,
            } => lambda_prime * math::ln_tanh_half(u) - c1 * math::ln_sinh(u) + d1 / c1 * u,
            FieldCase::PoschlTeller {
                lambda_prime,
                c2,
                d2,
            } => lambda_prime * math::ln_tanh_half(u) + c2 * math::ln_cosh(u) + d2 / c2 * u,
            FieldCase::GeneralizedPoschlTeller {
                lambda_prime,
                c3,
                d3,
            } => {
                lambda_prime * math::ln_tanh_half(u)
                    + c3 * math::ln_cosh(u)
                    + d3 * math::gudermannian(u)
            }
            FieldCase::Tabulated(ref t) => {
                t.antiderivative(u) - t.antiderivative(ZERO_MODE_REFERENCE_U)
            }
        })
    }
}

/// Reference point for integrating tabulated gauges; only changes the free
/// normalization of the zero mode.
pub const ZERO_MODE_REFERENCE_U: f64 = 1.0;

/// W(u) = −λ/sinh u + α(u).
#[derive(Debug, Clone, PartialEq)]
pub struct Superpotential {
    pub gauge: GaugeFunction,
    pub lambda: AngularMomentum,
}

impl Superpotential {
    pub fn new(gauge: GaugeFunction, lambda: AngularMomentum) -> Self {
        Self { gauge, lambda }
    }

    pub fn value(&self, u: f64) -> Result<f64> {
        Ok(-self.lambda.value() * csch(u) + self.gauge.alpha(u)?)
    }

    pub fn derivative(&self, u: f64) -> Result<f64> {
        Ok(self.lambda.value() * coth(u) * csch(u) + self.gauge.alpha_derivative(u)?)
    }

    /// lim_{u→∞} W(u)².
    pub fn asymptotic_square(&self) -> f64 {
        self.gauge.asymptotic_alpha().powi(2)
    }
}

pub fn alpha(gauge: &GaugeFunction, u: f64) -> Result<f64> {
    gauge.alpha(u)
}

pub fn magnetic_field(gauge: &GaugeFunction, u: f64) -> Result<f64> {
    gauge.magnetic_field(u)
}

pub fn flux_in_quanta(gauge: &GaugeFunction, u: f64) -> Result<f64> {
    gauge.flux_in_quanta(u)
}

pub fn flux_surface(gauge: &GaugeFunction, u: f64) -> Result<f64> {
    gauge.flux_surface(u)
}

pub fn superpotential(gauge: &GaugeFunction, lambda: AngularMomentum, u: f64) -> Result<f64> {
    Superpotential::new(gauge.clone(), lambda).value(u)
}

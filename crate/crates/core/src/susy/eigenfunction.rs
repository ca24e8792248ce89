//! Closed-form eigenfunctions as prefactor × Jacobi polynomial.
//!
//! g(u) = sign · e^{p·L₁(u) + q·L₂(u)} · P_d^{(a,b)}(w(u)), where L₁, L₂ are
//! the logarithms of the two linear factors of the variable map:
//!
//! | map    | w(u)   | L₁          | L₂          |
//! |--------|--------|-------------|-------------|
//! | Cosh   | cosh u | ln(w − 1)   | ln(w + 1)   |
//! | Coth   | coth u | ln(w − 1)   | ln(w + 1)   |
//! | Tanh   | tanh u | ln(1 − w)   | ln(1 + w)   |
//!
//! Everything is evaluated in log form so that large exponents and large
//! polynomial values do not overflow before they cancel.

use std::f64::consts::LN_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::math::{coth, ln_cosh, ln_sinh, softplus};
use crate::model::{Domain, RadialGrid};
use crate::numeric::SampledFunction;

use super::jacobi::{jacobi_derivative_scaled, jacobi_scaled};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    G1,
    G2,
}

impl Component {
    pub fn label(&self) -> &'static str {
        match self {
            Component::G1 => "g1",
            Component::G2 => "g2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableMap {
    Cosh,
    Coth,
    Tanh,
}

/// L₁, L₂, their u-derivatives, and ln|w′|.
struct LogFactors {
    l1: f64,
    l2: f64,
    dl1: f64,
    dl2: f64,
    w: f64,
    ln_abs_dw: f64,
    dw_sign: f64,
}

impl VariableMap {
    pub fn w(&self, u: f64) -> f64 {
        match self {
            VariableMap::Cosh => u.cosh(),
            VariableMap::Coth => coth(u),
            VariableMap::Tanh => u.tanh(),
        }
    }

    fn factors(&self, u: f64) -> Result<LogFactors> {
        match self {
            VariableMap::Cosh | VariableMap::Coth if !(u > 0.0) => Err(Error::DomainError { u }),
            VariableMap::Cosh => {
                let h = 0.5 * u;
                Ok(LogFactors {
                    l1: LN_2 + 2.0 * ln_sinh(h),
                    l2: LN_2 + 2.0 * ln_cosh(h),
                    dl1: coth(h),
                    dl2: h.tanh(),
                    w: u.cosh(),
                    ln_abs_dw: ln_sinh(u),
                    dw_sign: 1.0,
                })
            }
            VariableMap::Coth => {
                let e = (2.0 * u).exp_m1();
                Ok(LogFactors {
                    l1: LN_2 - e.ln(),
                    l2: LN_2 + 2.0 * u - e.ln(),
                    dl1: -(1.0 + coth(u)),
                    dl2: -2.0 / e,
                    w: coth(u),
                    ln_abs_dw: -2.0 * ln_sinh(u),
                    dw_sign: -1.0,
                })
            }
            VariableMap::Tanh => {
                let t = u.tanh();
                Ok(LogFactors {
                    l1: LN_2 - softplus(2.0 * u),
                    l2: LN_2 - softplus(-2.0 * u),
                    dl1: -(1.0 + t),
                    dl2: 1.0 - t,
                    w: t,
                    ln_abs_dw: -2.0 * ln_cosh(u),
                    dw_sign: 1.0,
                })
            }
        }
    }
}

/// Descriptor of one closed-form eigenfunction (unnormalized).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenfunction {
    pub component: Component,
    /// Index n of the level this function belongs to.
    pub level: usize,
    /// Jacobi degree: n for g₁,ₙ and n − 1 for g₂,ₙ₋₁.
    pub degree: usize,
    pub a: f64,
    pub b: f64,
    /// Exponent of the first linear factor.
    pub p: f64,
    /// Exponent of the second linear factor.
    pub q: f64,
    pub map: VariableMap,
    pub sign: f64,
}

/// e^{x} · m computed without forming e^{x} alone.
fn scaled(x: f64, m: f64) -> f64 {
    if m == 0.0 {
        0.0
    } else {
        m.signum() * (x + m.abs().ln()).exp()
    }
}

impl Eigenfunction {
    pub fn value(&self, u: f64) -> Result<f64> {
        let f = self.map.factors(u)?;
        let (poly, s) = jacobi_scaled(self.degree, self.a, self.b, f.w)?;
        Ok(self.sign * scaled(self.p * f.l1 + self.q * f.l2 + s, poly))
    }

    /// Exact u-derivative.
    pub fn derivative(&self, u: f64) -> Result<f64> {
        let f = self.map.factors(u)?;
        let (poly, s) = jacobi_scaled(self.degree, self.a, self.b, f.w)?;
        let (dpoly, ds) = jacobi_derivative_scaled(self.degree, self.a, self.b, f.w)?;
        let e = self.p * f.l1 + self.q * f.l2;
        let prefactor_part = scaled(e + s, poly * (self.p * f.dl1 + self.q * f.dl2));
        let poly_part = f.dw_sign * scaled(e + ds + f.ln_abs_dw, dpoly);
        Ok(self.sign * (prefactor_part + poly_part))
    }

    /// Samples on the mesh of `grid` over `domain`.
    pub fn sample(&self, grid: &RadialGrid, domain: Domain) -> Result<SampledFunction> {
        let values = domain
            .points(grid)?
            .into_iter()
            .map(|u| self.value(u))
            .collect::<Result<Vec<_>>>()?;
        SampledFunction::new(*grid, domain, values)
    }

    /// Samples divided by √(∫ g² du) over the mesh.
    pub fn normalized(&self, grid: &RadialGrid, domain: Domain) -> Result<SampledFunction> {
        self.sample(grid, domain)?.normalized()
    }
}

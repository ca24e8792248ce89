//! The exactly solvable reductions of the radial problem.
//!
//! | family        | W(u)                 | εₙ                                   | decay of g₁,ₙ        |
//! |---------------|----------------------|--------------------------------------|----------------------|
//! | Landau        | A0·coth u − λ·csch u | A0² − (A0 − n)²                      | A0 − n               |
//! | Eckart        | D1/C1 − C1·coth u    | C1² − k² − D1²/k² + D1²/C1², k=C1+n  | D1/k − k             |
//! | Pöschl–Teller | C2·tanh u            | C2² − (C2 − n)²                      | C2 − n               |
//!
//! Level n is bound while its decay rate at infinity is positive; a level
//! whose rate is exactly zero sits on the continuum threshold.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::math::{coth, csch, sech};
use crate::model::{AngularMomentum, Degeneracy, Domain, FieldCase};

use super::eigenfunction::{Component, Eigenfunction, VariableMap};

/// Tolerance for "λ equals λ′" and "decay rate is exactly zero".
const PARAM_EPS: f64 = 1e-12;

/// Levels are never enumerated past this index.
const MAX_LEVELS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum AnalyticProblem {
    Landau { a0: f64, lambda: f64 },
    Eckart { c1: f64, d1: f64, lambda: f64 },
    PoschlTeller { c2: f64, lambda: f64 },
}

/// Reduces a field case to its closed-form family, if it has one at this λ.
pub fn analytic_problem(case: &FieldCase, lambda: AngularMomentum) -> Result<AnalyticProblem> {
    case.check_parameters()?;
    let l = lambda.value();
    let same_lambda = |lambda_prime: f64| (l - lambda_prime).abs() <= PARAM_EPS * l.abs().max(1.0);
    match *case {
        FieldCase::ConstantField { a0 } => Ok(AnalyticProblem::Landau { a0, lambda: l }),
        FieldCase::Eckart {
            lambda_prime,
            c1,
            d1,
        } => {
            if !same_lambda(lambda_prime) {
                return Err(Error::AnalyticUnavailable(format!(
                    "Eckart case is solvable only for λ = λ′ = {lambda_prime}, got λ = {l}"
                )));
            }
            Ok(AnalyticProblem::Eckart { c1, d1, lambda: l })
        }
        FieldCase::PoschlTeller {
            lambda_prime,
            c2,
            d2,
        }
        | FieldCase::GeneralizedPoschlTeller {
            lambda_prime,
            c3: c2,
            d3: d2,
        } => {
            if d2 != 0.0 {
                return Err(Error::AnalyticUnavailable(format!(
                    "case {} has a closed form only for D = 0 (got {d2})",
                    case.label()
                )));
            }
            if !same_lambda(lambda_prime) {
                return Err(Error::AnalyticUnavailable(format!(
                    "case {} is solvable only for λ = λ′ = {lambda_prime}, got λ = {l}",
                    case.label()
                )));
            }
            Ok(AnalyticProblem::PoschlTeller { c2, lambda: l })
        }
        FieldCase::Tabulated(_) => Err(Error::AnalyticUnavailable(
            "tabulated gauges have no closed form".into(),
        )),
    }
}

impl AnalyticProblem {
    pub fn name(&self) -> &'static str {
        match self {
            AnalyticProblem::Landau { .. } => "landau",
            AnalyticProblem::Eckart { .. } => "eckart",
            AnalyticProblem::PoschlTeller { .. } => "poschl_teller",
        }
    }

    /// Domain on which the closed-form eigenfunctions form one spectrum.
    ///
    /// The Pöschl–Teller reduction is regular at u = 0 and its closed forms
    /// alternate in parity, so they are eigenfunctions of the even whole-line
    /// problem; the other two have a repulsive csch² wall at the origin.
    pub fn natural_domain(&self) -> Domain {
        match self {
            AnalyticProblem::PoschlTeller { .. } => Domain::WholeLine,
            _ => Domain::HalfLine,
        }
    }

    pub fn lambda(&self) -> f64 {
        match *self {
            AnalyticProblem::Landau { lambda, .. }
            | AnalyticProblem::Eckart { lambda, .. }
            | AnalyticProblem::PoschlTeller { lambda, .. } => lambda,
        }
    }

    pub fn superpotential(&self, u: f64) -> f64 {
        match *self {
            AnalyticProblem::Landau { a0, lambda } => a0 * coth(u) - lambda * csch(u),
            AnalyticProblem::Eckart { c1, d1, .. } => d1 / c1 - c1 * coth(u),
            AnalyticProblem::PoschlTeller { c2, .. } => c2 * u.tanh(),
        }
    }

    pub fn superpotential_derivative(&self, u: f64) -> f64 {
        match *self {
            AnalyticProblem::Landau { a0, lambda } => {
                -a0 * csch(u).powi(2) + lambda * coth(u) * csch(u)
            }
            AnalyticProblem::Eckart { c1, .. } => c1 * csch(u).powi(2),
            AnalyticProblem::PoschlTeller { c2, .. } => c2 * sech(u).powi(2),
        }
    }

    /// V₁ in the closed form of each family.
    pub fn v1(&self, u: f64) -> f64 {
        match *self {
            AnalyticProblem::Landau { a0, lambda } => {
                a0 * a0 + (a0 * a0 + lambda * lambda + a0) * csch(u).powi(2)
                    - lambda * (2.0 * a0 + 1.0) * coth(u) * csch(u)
            }
            AnalyticProblem::Eckart { c1, d1, .. } => {
                d1 * d1 / (c1 * c1) + c1 * c1 + c1 * (c1 - 1.0) * csch(u).powi(2)
                    - 2.0 * d1 * coth(u)
            }
            AnalyticProblem::PoschlTeller { c2, .. } => c2 * c2 - c2 * (c2 + 1.0) * sech(u).powi(2),
        }
    }

    /// V₂ in the closed form of each family.
    pub fn v2(&self, u: f64) -> f64 {
        match *self {
            AnalyticProblem::Landau { a0, lambda } => {
                a0 * a0 + (a0 * a0 + lambda * lambda - a0) * csch(u).powi(2)
                    - lambda * (2.0 * a0 - 1.0) * coth(u) * csch(u)
            }
            AnalyticProblem::Eckart { c1, d1, .. } => {
                d1 * d1 / (c1 * c1) + c1 * c1 + c1 * (c1 + 1.0) * csch(u).powi(2)
                    - 2.0 * d1 * coth(u)
            }
            AnalyticProblem::PoschlTeller { c2, .. } => c2 * c2 - c2 * (c2 - 1.0) * sech(u).powi(2),
        }
    }

    /// lim_{u→∞} W², the bottom of the continuum.
    pub fn continuum_threshold(&self) -> f64 {
        match *self {
            AnalyticProblem::Landau { a0, .. } => a0 * a0,
            AnalyticProblem::Eckart { c1, d1, .. } => (d1 / c1 - c1).powi(2),
            AnalyticProblem::PoschlTeller { c2, .. } => c2 * c2,
        }
    }

    /// εₙ from the closed-form formula (n = 0 gives 0).
    pub fn epsilon(&self, n: usize) -> f64 {
        let nf = n as f64;
        match *self {
            AnalyticProblem::Landau { a0, .. } => a0 * a0 - (a0 - nf).powi(2),
            AnalyticProblem::Eckart { c1, d1, .. } => {
                let k = c1 + nf;
                c1 * c1 - k * k - d1 * d1 / (k * k) + d1 * d1 / (c1 * c1)
            }
            AnalyticProblem::PoschlTeller { c2, .. } => c2 * c2 - (c2 - nf).powi(2),
        }
    }

    /// Exponential decay rate of g₁,ₙ at infinity.
    pub fn decay_rate(&self, n: usize) -> f64 {
        let nf = n as f64;
        match *self {
            AnalyticProblem::Landau { a0, .. } => a0 - nf,
            AnalyticProblem::Eckart { c1, d1, .. } => {
                let k = c1 + nf;
                d1 / k - k
            }
            AnalyticProblem::PoschlTeller { c2, .. } => c2 - nf,
        }
    }

    fn rate_scale(&self) -> f64 {
        match *self {
            AnalyticProblem::Landau { a0, .. } => a0.abs().max(1.0),
            AnalyticProblem::Eckart { c1, d1, .. } => (d1 / c1).abs().max(c1.abs()).max(1.0),
            AnalyticProblem::PoschlTeller { c2, .. } => c2.abs().max(1.0),
        }
    }

    pub fn is_bound(&self, n: usize) -> bool {
        let positive_k = match *self {
            AnalyticProblem::Eckart { c1, .. } => c1 + n as f64 > 0.0,
            _ => true,
        };
        positive_k && self.decay_rate(n) > PARAM_EPS * self.rate_scale()
    }

    pub fn is_threshold(&self, n: usize) -> bool {
        self.decay_rate(n).abs() <= PARAM_EPS * self.rate_scale()
    }

    /// Number of strictly bound levels n = 0, 1, …, assuming the zero mode
    /// is admissible.
    pub fn bound_level_count(&self) -> usize {
        (0..MAX_LEVELS).take_while(|&n| self.is_bound(n)).count()
    }

    pub fn degeneracy(&self) -> Degeneracy {
        match *self {
            AnalyticProblem::Landau { a0, .. } => {
                // smallest odd integer ≥ 2·A0
                let mut t = (2.0 * a0).ceil() as i64;
                if t % 2 == 0 {
                    t += 1;
                }
                Degeneracy::InfiniteFrom { min_two_lambda: t }
            }
            _ => Degeneracy::Single {
                lambda: self.lambda(),
            },
        }
    }

    /// Closed-form g₁,ₙ (component G1) or its partner g₂,ₙ₋₁ (component G2).
    pub fn eigenfunction(&self, n: usize, component: Component) -> Result<Eigenfunction> {
        let count = self.bound_level_count();
        if n >= count {
            return Err(Error::IndexError {
                n,
                reason: format!("only {count} bound levels"),
            });
        }
        if component == Component::G2 && n == 0 {
            return Err(Error::IndexError {
                n,
                reason: "the zero mode has no partner state (g₂ ≡ 0)".into(),
            });
        }
        let nf = n as f64;
        Ok(match (*self, component) {
            (AnalyticProblem::Landau { a0, lambda }, Component::G1) => {
                let (sm, sp) = (lambda - a0, lambda + a0);
                Eigenfunction {
                    component,
                    level: n,
                    degree: n,
                    a: sm - 0.5,
                    b: -sp - 0.5,
                    p: sm / 2.0,
                    q: -sp / 2.0,
                    map: VariableMap::Cosh,
                    sign: 1.0,
                }
            }
            (AnalyticProblem::Landau { a0, lambda }, Component::G2) => {
                let (sm, sp) = (lambda - a0, lambda + a0);
                Eigenfunction {
                    component,
                    level: n,
                    degree: n - 1,
                    a: sm + 0.5,
                    b: -sp + 0.5,
                    p: (sm + 1.0) / 2.0,
                    q: -(sp - 1.0) / 2.0,
                    map: VariableMap::Cosh,
                    sign: -1.0,
                }
            }
            (AnalyticProblem::Eckart { c1, d1, .. }, _) => {
                let k = c1 + nf;
                let (s_plus, s_minus) = (d1 / k - k, -d1 / k - k);
                Eigenfunction {
                    component,
                    level: n,
                    degree: if component == Component::G1 { n } else { n - 1 },
                    a: s_plus,
                    b: s_minus,
                    p: s_plus / 2.0,
                    q: s_minus / 2.0,
                    map: VariableMap::Coth,
                    sign: 1.0,
                }
            }
            (AnalyticProblem::PoschlTeller { c2, .. }, _) => {
                let s = c2 - nf;
                Eigenfunction {
                    component,
                    level: n,
                    degree: if component == Component::G1 { n } else { n - 1 },
                    a: s,
                    b: s,
                    p: s / 2.0,
                    q: s / 2.0,
                    map: VariableMap::Tanh,
                    sign: 1.0,
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn landau() -> AnalyticProblem {
        AnalyticProblem::Landau {
            a0: 5.0,
            lambda: 7.0,
        }
    }

    fn eckart() -> AnalyticProblem {
        AnalyticProblem::Eckart {
            c1: 3.0,
            d1: 54.0,
            lambda: 3.5,
        }
    }

    fn pt() -> AnalyticProblem {
        AnalyticProblem::PoschlTeller {
            c2: 5.0,
            lambda: 0.5,
        }
    }

    #[test]
    fn level_counts_and_thresholds() {
        assert_eq!(landau().bound_level_count(), 5);
        assert!(landau().is_threshold(5));
        assert_eq!(eckart().bound_level_count(), 5);
        assert!(!eckart().is_threshold(5));
        assert_eq!(pt().bound_level_count(), 5);
        assert!(pt().is_threshold(5));
        let half = AnalyticProblem::Landau {
            a0: 2.5,
            lambda: 3.5,
        };
        assert_eq!(half.bound_level_count(), 3);
        assert!(!half.is_threshold(3));
    }

    #[test]
    fn closed_form_potentials_match_w_squared_minus_w_prime() {
        for p in [landau(), eckart(), pt()] {
            for u in [0.05, 0.4, 1.0, 3.3, 9.0] {
                let w = p.superpotential(u);
                let dw = p.superpotential_derivative(u);
                let scale = (w * w).abs().max(dw.abs()).max(1.0);
                assert!(
                    (p.v1(u) - (w * w - dw)).abs() < 1e-11 * scale,
                    "{} u={u}",
                    p.name()
                );
                assert!(
                    (p.v2(u) - (w * w + dw)).abs() < 1e-11 * scale,
                    "{} u={u}",
                    p.name()
                );
            }
        }
    }

    #[test]
    fn threshold_is_limit_of_v() {
        for p in [landau(), eckart(), pt()] {
            assert!((p.v1(40.0) - p.continuum_threshold()).abs() < 1e-9);
            assert!((p.v2(40.0) - p.continuum_threshold()).abs() < 1e-9);
        }
    }

    #[test]
    fn degeneracy_of_landau_levels() {
        assert_eq!(
            landau().degeneracy(),
            Degeneracy::InfiniteFrom { min_two_lambda: 11 }
        );
        let p = AnalyticProblem::Landau {
            a0: 5.5,
            lambda: 5.5,
        };
        assert_eq!(
            p.degeneracy(),
            Degeneracy::InfiniteFrom { min_two_lambda: 11 }
        );
    }

    #[test]
    fn eigenfunction_index_errors() {
        assert!(matches!(
            landau().eigenfunction(5, Component::G1),
            Err(Error::IndexError { n: 5, .. })
        ));
        for p in [landau(), eckart(), pt()] {
            assert!(matches!(
                p.eigenfunction(0, Component::G2),
                Err(Error::IndexError { n: 0, .. })
            ));
        }
    }

    #[test]
    fn reduction_rules() {
        let l = AngularMomentum::half_odd(7).unwrap();
        let iv = FieldCase::GeneralizedPoschlTeller {
            lambda_prime: 3.5,
            c3: 2.0,
            d3: 0.0,
        };
        assert_eq!(
            analytic_problem(&iv, l).unwrap(),
            AnalyticProblem::PoschlTeller {
                c2: 2.0,
                lambda: 3.5
            }
        );
        let iv_bad = FieldCase::GeneralizedPoschlTeller {
            lambda_prime: 3.5,
            c3: 2.0,
            d3: 0.1,
        };
        assert!(matches!(
            analytic_problem(&iv_bad, l),
            Err(Error::AnalyticUnavailable(_))
        ));
        let iii = FieldCase::PoschlTeller {
            lambda_prime: 0.5,
            c2: 2.0,
            d2: 0.0,
        };
        assert!(matches!(
            analytic_problem(&iii, l),
            Err(Error::AnalyticUnavailable(_))
        ));
    }
}

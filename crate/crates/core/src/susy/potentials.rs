//! Partner potentials V₁,₂ = W² ∓ W′.

use crate::error::{Error, Result};
use crate::fields::Superpotential;
use crate::model::{AngularMomentum, FieldCase};

use super::problem::{analytic_problem, AnalyticProblem};

#[derive(Debug, Clone)]
enum Source {
    Closed(AnalyticProblem),
    General(Superpotential),
}

/// V₁ and V₂ evaluators. Closed forms are used whenever the case reduces to
/// a solvable family; otherwise W² ∓ W′ with the analytic W′.
#[derive(Debug, Clone)]
pub struct PartnerPotentials {
    source: Source,
    asymptotic_value: f64,
}

impl PartnerPotentials {
    pub fn from_problem(problem: AnalyticProblem) -> Self {
        Self {
            asymptotic_value: problem.continuum_threshold(),
            source: Source::Closed(problem),
        }
    }

    pub fn is_closed_form(&self) -> bool {
        matches!(self.source, Source::Closed(_))
    }

    /// lim_{u→∞} W², the continuum threshold.
    pub fn asymptotic_value(&self) -> f64 {
        self.asymptotic_value
    }

    pub fn v1(&self, u: f64) -> Result<f64> {
        self.eval(u, -1.0)
    }

    pub fn v2(&self, u: f64) -> Result<f64> {
        self.eval(u, 1.0)
    }

    fn eval(&self, u: f64, sign: f64) -> Result<f64> {
        if !(u > 0.0 && u.is_finite()) {
            return Err(Error::DomainError { u });
        }
        match &self.source {
            Source::Closed(p) => Ok(if sign < 0.0 { p.v1(u) } else { p.v2(u) }),
            Source::General(w) => Ok(w.value(u)?.powi(2) + sign * w.derivative(u)?),
        }
    }
}

pub fn partner_potentials(w: &Superpotential) -> PartnerPotentials {
    match analytic_problem(w.gauge.case(), w.lambda) {
        Ok(problem) => PartnerPotentials::from_problem(problem),
        Err(_) => PartnerPotentials {
            asymptotic_value: w.asymptotic_square(),
            source: Source::General(w.clone()),
        },
    }
}

/// Defect V₂(u; A0 + 1) − V₁(u; A0) − (2A0 + 1) of the constant-field family.
pub fn shape_invariance_residual_for(
    case: &FieldCase,
    lambda: AngularMomentum,
    u: f64,
) -> Result<f64> {
    match *case {
        FieldCase::ConstantField { a0 } => shape_invariance_residual(a0, lambda, u),
        _ => Err(Error::UnsupportedCase(format!(
            "shape invariance in A0 is defined for case i only, not case {}",
            case.label()
        ))),
    }
}

pub fn shape_invariance_residual(a0: f64, lambda: AngularMomentum, u: f64) -> Result<f64> {
    if !(u > 0.0 && u.is_finite()) {
        return Err(Error::DomainError { u });
    }
    let l = lambda.value();
    let lower = AnalyticProblem::Landau { a0, lambda: l };
    let upper = AnalyticProblem::Landau {
        a0: a0 + 1.0,
        lambda: l,
    };
    Ok(upper.v2(u) - lower.v1(u) - (2.0 * a0 + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::GaugeFunction;
    use proptest::prelude::*;

    fn w(case: FieldCase, lambda: f64) -> Superpotential {
        Superpotential::new(
            GaugeFunction::new(case).unwrap(),
            AngularMomentum::relaxed(lambda).unwrap(),
        )
    }

    #[test]
    fn examples() {
        let landau = partner_potentials(&w(FieldCase::ConstantField { a0: 5.0 }, 7.0));
        assert!(landau.is_closed_form());
        assert_eq!(landau.asymptotic_value(), 25.0);
        assert!((landau.v1(30.0).unwrap() - 25.0).abs() < 1e-9);
        let pt = partner_potentials(&w(
            FieldCase::PoschlTeller {
                lambda_prime: 0.5,
                c2: 5.0,
                d2: 0.0,
            },
            0.5,
        ));
        assert!((pt.v1(1e-9).unwrap() - (-5.0)).abs() < 1e-9);
    }

    #[test]
    fn closed_and_general_forms_agree() {
        let cases = [
            (FieldCase::ConstantField { a0: 5.0 }, 7.0),
            (
                FieldCase::Eckart {
                    lambda_prime: 3.5,
                    c1: 3.0,
                    d1: 54.0,
                },
                3.5,
            ),
            (
                FieldCase::PoschlTeller {
                    lambda_prime: 1.5,
                    c2: 5.0,
                    d2: 0.0,
                },
                1.5,
            ),
        ];
        for (case, l) in cases {
            let sp = w(case, l);
            let closed = partner_potentials(&sp);
            for u in [0.1, 0.7, 2.0, 6.0] {
                let general = sp.value(u).unwrap().powi(2) - sp.derivative(u).unwrap();
                let scale = general.abs().max(1.0);
                assert!((closed.v1(u).unwrap() - general).abs() < 1e-10 * scale);
                assert!(
                    (closed.v2(u).unwrap()
                        - closed.v1(u).unwrap()
                        - 2.0 * sp.derivative(u).unwrap())
                    .abs()
                        < 1e-10 * scale
                );
            }
        }
    }

    #[test]
    fn general_path_for_unsolvable_lambda() {
        let sp = w(
            FieldCase::Eckart {
                lambda_prime: 3.5,
                c1: 3.0,
                d1: 54.0,
            },
            4.5,
        );
        let v = partner_potentials(&sp);
        assert!(!v.is_closed_form());
        assert_eq!(v.asymptotic_value(), 225.0);
        assert!(v.v1(0.0).is_err());
    }

    #[test]
    fn shape_invariance_examples() {
        let l7 = AngularMomentum::relaxed(7.0).unwrap();
        assert!(shape_invariance_residual(5.0, l7, 1.0).unwrap().abs() <= 1e-10);
        assert!(shape_invariance_residual(5.0, l7, 3.0).unwrap().abs() <= 1e-10);
        let l = AngularMomentum::half_odd(7).unwrap();
        assert!(shape_invariance_residual(2.5, l, 0.5).unwrap().abs() <= 1e-10);
        let eckart = FieldCase::Eckart {
            lambda_prime: 3.5,
            c1: 3.0,
            d1: 54.0,
        };
        assert!(matches!(
            shape_invariance_residual_for(&eckart, l, 1.0),
            Err(Error::UnsupportedCase(_))
        ));
    }

    proptest! {
        #[test]
        fn shape_invariance_holds(a0 in 0.0f64..10.0, lambda in 0.0f64..15.0, u in 0.2f64..10.0) {
            let l = AngularMomentum::relaxed(lambda).unwrap();
            prop_assert!(shape_invariance_residual(a0, l, u).unwrap().abs() <= 1e-10);
        }
    }
}

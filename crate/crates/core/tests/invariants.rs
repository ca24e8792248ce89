use proptest::prelude::*;

use hyperlandau::fields::GaugeFunction;
use hyperlandau::susy::{self, jacobi, shape_invariance_residual, zero_mode_admissible, Component};
use hyperlandau::{AngularMomentum, FieldCase};

fn half_odd() -> impl Strategy<Value = AngularMomentum> {
    (-20i64..20).prop_map(|k| AngularMomentum::half_odd(2 * k + 1).unwrap())
}

/// Generalized binomial C(n + a, n).
fn binomial(n: usize, a: f64) -> f64 {
    (1..=n).map(|k| (a + k as f64) / k as f64).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dirac_levels_are_particle_hole_symmetric(a0 in 0.2f64..12.0, extra in 0i64..10) {
        let two = 2 * (a0.ceil() as i64 + extra) + 1;
        let l = AngularMomentum::half_odd(two).unwrap();
        let s = susy::spectrum(&FieldCase::ConstantField { a0 }, l, 1.0).unwrap();
        prop_assert!(!s.levels.is_empty());
        for e in &s.levels {
            prop_assert_eq!(e.dirac_energy_plus, -e.dirac_energy_minus);
            prop_assert!(e.epsilon < s.continuum_threshold);
        }
        for w in s.levels.windows(2) {
            prop_assert!(w[1].epsilon > w[0].epsilon);
        }
    }

    #[test]
    fn shape_invariance(a0 in 0.1f64..10.0, l in half_odd(), u in 0.05f64..10.0) {
        prop_assert!(shape_invariance_residual(a0, l, u).unwrap() <= 1e-10);
    }

    #[test]
    fn landau_admissibility_rule(a0 in -5.0f64..10.0, l in half_odd()) {
        let g = GaugeFunction::new(FieldCase::ConstantField { a0 }).unwrap();
        let want = a0 > 0.0 && l.value() - a0 >= 0.0;
        prop_assert_eq!(zero_mode_admissible(&g, l).is_admissible(), want);
    }

    #[test]
    fn poschl_teller_admissibility_rule(c2 in -4.0f64..8.0, lp in half_odd(), l in half_odd()) {
        let case = FieldCase::PoschlTeller { lambda_prime: lp.value(), c2, d2: 0.0 };
        let g = GaugeFunction::new(case).unwrap();
        let want = c2 > 0.0 && l.value() >= lp.value();
        prop_assert_eq!(zero_mode_admissible(&g, l).is_admissible(), want);
    }

    #[test]
    fn jacobi_at_one(n in 0usize..12, a in -0.99f64..8.0, b in -0.99f64..8.0) {
        let v = jacobi(n, a, b, 1.0).unwrap();
        let want = binomial(n, a);
        prop_assert!((v - want).abs() <= 1e-9 * want.abs().max(1.0), "{} vs {}", v, want);
    }

    #[test]
    fn jacobi_at_one_far_outside_classical_range(n in 0usize..6, a in 0.0f64..4.0) {
        // the constant-field ground tower uses b = −λ − A0 − ½
        let b = -12.5;
        let v = jacobi(n, a, b, 1.0).unwrap();
        let want = binomial(n, a);
        prop_assert!((v - want).abs() <= 1e-10 * want.abs().max(1.0));
    }

    #[test]
    fn jacobi_reflection(n in 0usize..12, a in -3.0f64..5.0, b in -3.0f64..5.0, w in -3.0f64..3.0) {
        let lhs = jacobi(n, a, b, -w).unwrap();
        let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * jacobi(n, b, a, w).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0));
    }

    #[test]
    fn magnetic_field_from_circulation(
        a0 in 0.5f64..8.0,
        c in 1.0f64..6.0,
        d in 0.0f64..3.0,
        u in 0.1f64..6.0,
    ) {
        let lp = 3.5;
        let cases = [
            FieldCase::ConstantField { a0 },
            FieldCase::Eckart { lambda_prime: lp, c1: c, d1: c * c + 1.0 + d },
            FieldCase::PoschlTeller { lambda_prime: lp, c2: c, d2: d },
            FieldCase::GeneralizedPoschlTeller { lambda_prime: lp, c3: c, d3: d },
        ];
        for case in cases {
            let g = GaugeFunction::new(case).unwrap();
            let h = 1e-4;
            let f = |x: f64| g.flux_in_quanta(x).unwrap();
            let d = (-f(u + 2.0 * h) + 8.0 * f(u + h) - 8.0 * f(u - h) + f(u - 2.0 * h)) / (12.0 * h);
            let b = g.magnetic_field(u).unwrap();
            prop_assert!((d / u.sinh() - b).abs() <= 1e-6 * b.abs().max(1.0));
        }
    }

    #[test]
    fn lowering_operator_maps_g1_onto_positive_g2(n in 1usize..5, u in 0.2f64..6.0) {
        // L⁻g₁,ₙ = √εₙ g₂,ₙ₋₁ pointwise, with the sign convention of the closed forms
        for case in [
            FieldCase::ConstantField { a0: 5.0 },
            FieldCase::Eckart { lambda_prime: 7.0, c1: 3.0, d1: 54.0 },
            FieldCase::PoschlTeller { lambda_prime: 7.0, c2: 5.0, d2: 0.0 },
        ] {
            let l = AngularMomentum::relaxed(7.0).unwrap();
            let p = susy::analytic_problem(&case, l).unwrap();
            let g1 = p.eigenfunction(n, Component::G1).unwrap();
            let g2 = p.eigenfunction(n, Component::G2).unwrap();
            let lowered = g1.derivative(u).unwrap() + p.superpotential(u) * g1.value(u).unwrap();
            let ratio = lowered / g2.value(u).unwrap();
            prop_assert!(ratio > 0.0, "{:?} n={} u={}", case, n, u);
        }
    }
}

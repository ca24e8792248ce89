//! Acceptance gate. Prints one line per criterion and exits non-zero if
//! any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use hyperlandau::fields::GaugeFunction;
use hyperlandau::numeric::{
    annihilation_residual, increment_ratios, intertwine_residual, verify_partner_spectra,
    zero_mode_norm_growth, Report, VerifyOptions,
};
use hyperlandau::susy::{self, degenerate_lambdas, shape_invariance_residual};
use hyperlandau::{AngularMomentum, FieldCase, RadialGrid, TabulatedGauge};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn relaxed(l: f64) -> AngularMomentum {
    AngularMomentum::relaxed(l).unwrap()
}

fn landau() -> FieldCase {
    FieldCase::ConstantField { a0: 5.0 }
}

fn eckart() -> FieldCase {
    FieldCase::Eckart {
        lambda_prime: 7.0,
        c1: 3.0,
        d1: 54.0,
    }
}

fn poschl_teller() -> FieldCase {
    FieldCase::PoschlTeller {
        lambda_prime: 7.0,
        c2: 5.0,
        d2: 0.0,
    }
}

fn analytic_cases() -> [(&'static str, FieldCase); 3] {
    [("i", landau()), ("ii", eckart()), ("iii", poschl_teller())]
}

fn grid() -> RadialGrid {
    RadialGrid::new(1e-3, 30.0, 8000).unwrap()
}

fn timed_report(case: &FieldCase, k: usize) -> (Report, Duration) {
    let start = Instant::now();
    let report =
        verify_partner_spectra(case, relaxed(7.0), &grid(), k, &VerifyOptions::default()).unwrap();
    (report, start.elapsed())
}

fn analytic_epsilons(case: &FieldCase) -> Vec<f64> {
    susy::spectrum(case, relaxed(7.0), 1.0).unwrap().epsilons()
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(x, y)| (x - y).abs() <= tol * y.abs().max(1.0))
}

fn levels_within(report: &Report, rel: f64, rel_last: f64) -> (bool, f64) {
    let mut worst = 0.0f64;
    let mut ok = true;
    let last = report.levels.len() - 1;
    for l in &report.levels {
        let dev = if l.n == 0 {
            (l.numeric - l.expected).abs()
        } else {
            (l.numeric - l.expected).abs() / l.expected.abs()
        };
        let tol = match l.n {
            0 => 1e-4,
            n if n == last => rel_last,
            _ => rel,
        };
        ok &= dev <= tol;
        worst = worst.max(dev);
    }
    (ok, worst)
}

fn criterion_1() -> Outcome {
    let eps = analytic_epsilons(&landau());
    let analytic_ok = close(&eps, &[0.0, 9.0, 16.0, 21.0, 24.0], 1e-12);
    let (report, t) = timed_report(&landau(), 5);
    let (levels_ok, worst) = levels_within(&report, 1e-3, 1e-3);
    let fast = t <= Duration::from_secs(10);
    outcome(
        analytic_ok && levels_ok && fast,
        format!(
            "analytic {eps:?}, worst deviation {worst:.2e}, {:.2} s",
            t.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let eps = analytic_epsilons(&eckart());
    let want = [0.0, 134.75, 191.36, 216.0, 224.4898];
    let analytic_ok = eps.len() == 5
        && eps
            .iter()
            .zip(want)
            .all(|(x, w)| (x - w).abs() <= 1e-4 * w.max(1.0));
    let excited = (1..)
        .take_while(|n| (3.0 + *n as f64).powi(2) < 54.0)
        .count();
    let (report, t) = timed_report(&eckart(), 5);
    let (levels_ok, worst) = levels_within(&report, 1e-3, 1e-2);
    let fast = t <= Duration::from_secs(20);
    outcome(
        analytic_ok && excited == 4 && eps.len() - 1 == excited && levels_ok && fast,
        format!(
            "analytic {eps:?}, {excited} excited, worst deviation {worst:.2e}, {:.2} s",
            t.as_secs_f64()
        ),
    )
}

fn criterion_3() -> Outcome {
    let eps = analytic_epsilons(&poschl_teller());
    let analytic_ok = close(&eps, &[0.0, 9.0, 16.0, 21.0, 24.0], 1e-12);
    let (report, _) = timed_report(&poschl_teller(), 5);
    let (levels_ok, worst) = levels_within(&report, 1e-3, 1e-3);
    outcome(
        analytic_ok && levels_ok,
        format!("analytic {eps:?}, worst deviation {worst:.2e}"),
    )
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, case) in analytic_cases() {
        let (report, _) = timed_report(&case, 5);
        let worst = report
            .pairing
            .iter()
            .map(|p| p.relative_defect)
            .fold(0.0f64, f64::max);
        let pairs_ok = report.pairing.len() >= 3 && worst <= 1e-3;
        let first_excited = report.h1[1];
        let none_below = report.h2_levels_below_first_excited == 0
            && report.h2.iter().all(|e| *e >= first_excited * (1.0 - 1e-3));
        ok &= pairs_ok && none_below;
        notes.push(format!("{name}: defect {worst:.1e}"));
    }
    outcome(ok, notes.join(", "))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut checked = 0;
    for (_, case) in analytic_cases() {
        let count = susy::spectrum(&case, relaxed(7.0), 1.0)
            .unwrap()
            .levels
            .len();
        for n in 1..count {
            let r = intertwine_residual(&case, relaxed(7.0), n, &grid()).unwrap();
            ok &= r <= 1e-6;
            worst = worst.max(r);
            checked += 1;
        }
    }
    outcome(
        ok && checked == 12,
        format!("{checked} levels, worst residual {worst:.2e}"),
    )
}

fn criterion_6() -> Outcome {
    let points: Vec<f64> = (0..=1990).map(|i| 0.05 + i as f64 * 0.01).collect();
    let configs = [
        (landau(), 7.0),
        (landau(), 5.5),
        (FieldCase::ConstantField { a0: 0.4 }, 0.5),
        (eckart(), 7.0),
        (eckart(), 4.5),
        (poschl_teller(), 7.0),
        (
            FieldCase::PoschlTeller {
                lambda_prime: 3.5,
                c2: 2.0,
                d2: 1.0,
            },
            3.5,
        ),
        (
            FieldCase::GeneralizedPoschlTeller {
                lambda_prime: 2.5,
                c3: 3.0,
                d3: 0.5,
            },
            2.5,
        ),
    ];
    let mut ok = true;
    let mut worst = 0.0f64;
    for (case, l) in configs {
        let gauge = GaugeFunction::new(case).unwrap();
        assert!(susy::zero_mode_admissible(&gauge, relaxed(l)).is_admissible());
        let r = annihilation_residual(&gauge, relaxed(l), &points).unwrap();
        ok &= r <= 1e-8;
        worst = worst.max(r);
    }
    outcome(ok, format!("8 configurations, worst residual {worst:.2e}"))
}

fn criterion_7() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 100,
        failure_persistence: None,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        ..Config::default()
    });
    let worst = std::cell::Cell::new(0.0f64);
    let strategy = (0.1f64..10.0, 1i64..40, 0.05f64..10.0);
    let result = runner.run(&strategy, |(a0, k, u)| {
        let lambda = AngularMomentum::half_odd(2 * k + 1).unwrap();
        let r = shape_invariance_residual(a0, lambda, u).unwrap();
        worst.set(worst.get().max(r));
        prop_assert!(r <= 1e-10, "a0={a0} λ={} u={u}: {r}", lambda.value());
        Ok(())
    });
    outcome(
        result.is_ok(),
        format!("100 samples, worst defect {:.2e}", worst.get()),
    )
}

/// α = A0·tanh(u/2) inside u0 (uniform field A0), flux 3 outside.
fn compact_field() -> GaugeFunction {
    let flux = 3.0;
    let a0 = 1.0;
    let u0 = (1.0f64 + flux / a0).acosh();
    let u: Vec<f64> = (1..=4000).map(|i| i as f64 * 2.5e-3).collect();
    let table = TabulatedGauge::from_fn(u, |x| {
        if x <= u0 {
            a0 * (0.5 * x).tanh()
        } else {
            flux / x.sinh()
        }
    })
    .unwrap();
    GaugeFunction::new(FieldCase::Tabulated(Arc::new(table))).unwrap()
}

fn criterion_8() -> Outcome {
    let gauge = compact_field();
    let lambda = AngularMomentum::half_odd(7).unwrap();
    let total = gauge.flux_in_quanta(9.9).unwrap();
    let verdict = susy::finite_flux_no_go(total, lambda);
    let ends = [20.0, 40.0, 80.0];
    let norms = zero_mode_norm_growth(&gauge, lambda, &ends).unwrap();
    let ratios = increment_ratios(&ends, &norms);
    let ok = (total - 3.0).abs() < 1e-6
        && !verdict.normalizable
        && (verdict.tail_exponent - 0.5).abs() < 1e-6
        && norms.windows(2).all(|w| w[1] > w[0])
        && ratios.iter().all(|r| (r - 1.0).abs() <= 0.05);
    outcome(
        ok,
        format!("flux {total:.6}, norms {norms:.3?}, increment ratios {ratios:.4?}"),
    )
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    for window in [13, 21, 25, 41, 101] {
        let got: Vec<i64> = degenerate_lambdas(&landau(), window)
            .unwrap()
            .iter()
            .map(|l| l.two_lambda().unwrap())
            .collect();
        let want: Vec<i64> = (11..=window).step_by(2).collect();
        ok &= got == want;
    }
    outcome(ok, "windows 2λ ≤ 13, 21, 25, 41, 101 all start at 11/2")
}

fn criterion_10() -> Outcome {
    let cases = [
        landau(),
        eckart(),
        poschl_teller(),
        FieldCase::PoschlTeller {
            lambda_prime: 7.0,
            c2: 5.0,
            d2: 2.0,
        },
        FieldCase::GeneralizedPoschlTeller {
            lambda_prime: 7.0,
            c3: 5.0,
            d3: 1.0,
        },
    ];
    let mut worst = 0.0f64;
    for case in cases {
        let g = GaugeFunction::new(case).unwrap();
        for i in 0..=99 {
            let u = 0.1 + i as f64 * 0.1;
            let h = 1e-4 * u.max(1.0);
            let f = |x: f64| g.flux_in_quanta(x).unwrap();
            let d =
                (-f(u + 2.0 * h) + 8.0 * f(u + h) - 8.0 * f(u - h) + f(u - 2.0 * h)) / (12.0 * h);
            let numeric = d / u.sinh();
            let exact = g.magnetic_field(u).unwrap();
            worst = worst.max((numeric - exact).abs() / exact.abs().max(1e-12));
        }
    }
    outcome(
        worst <= 1e-6,
        format!("5 field cases, worst relative defect {worst:.2e}"),
    )
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("Landau spectrum and oracle", criterion_1),
        ("Eckart spectrum and oracle", criterion_2),
        ("Pöschl-Teller spectrum and oracle", criterion_3),
        ("partner pairing", criterion_4),
        ("intertwining", criterion_5),
        ("zero-mode annihilation", criterion_6),
        ("shape invariance", criterion_7),
        ("finite-flux zero mode not normalizable", criterion_8),
        ("degeneracy window", criterion_9),
        ("field consistency", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let mark = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark}: {name} ({})", i + 1, o.detail);
        failures += usize::from(!o.pass);
    }
    println!("acceptance: {}/10 passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

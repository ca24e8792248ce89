//! The six subcommands.

use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Error;
use crate::fields::{GaugeFunction, TabulatedGauge};
use crate::model::{validate_case, AngularMomentum, FieldCase, RadialGrid};
use crate::numeric::{self, simpson, Tolerances, VerifyOptions};
use crate::susy::{self, Component};

use super::args::{
    CaseArgs, CaseName, EigenfunctionArgs, FieldArgs, GridArgs, SpectrumArgs, SweepArgs,
    VerifyArgs, ZeroModeArgs,
};
use super::output::{Cell, Document, Table};
use super::Failure;

const DEFAULT_LAMBDA: &str = "1/2";

/// A field case, angular momentum and radius resolved from the flags.
pub struct Resolved {
    pub case: FieldCase,
    pub lambda: AngularMomentum,
    pub radius: f64,
    pub config: Value,
}

fn parse_real(text: &str, flag: &str) -> Result<f64, Failure> {
    AngularMomentum::parse(text, true)
        .map(|l| l.value())
        .map_err(|_| Failure::Usage(format!("--{flag}: cannot parse '{text}' as a number")))
}

fn require(value: Option<f64>, flag: &str, case: &str) -> Result<f64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("case {case} requires --{flag}")))
}

/// Builds the case for angular momentum `lambda`; λ′ defaults to λ.
pub fn resolve_case_at(args: &CaseArgs, lambda: AngularMomentum) -> Result<Resolved, Failure> {
    let label = match args.case {
        CaseName::I => "i",
        CaseName::Ii => "ii",
        CaseName::Iii => "iii",
        CaseName::Iv => "iv",
        CaseName::Tabulated => "tabulated",
    };
    let given: [(&str, bool); 9] = [
        ("A0", args.a0.is_some()),
        ("C1", args.c1.is_some()),
        ("D1", args.d1.is_some()),
        ("C2", args.c2.is_some()),
        ("D2", args.d2.is_some()),
        ("C3", args.c3.is_some()),
        ("D3", args.d3.is_some()),
        ("lambda-prime", args.lambda_prime.is_some()),
        ("table", args.table.is_some()),
    ];
    let allowed: &[&str] = match args.case {
        CaseName::I => &["A0"],
        CaseName::Ii => &["C1", "D1", "lambda-prime"],
        CaseName::Iii => &["C2", "D2", "lambda-prime"],
        CaseName::Iv => &["C3", "D3", "lambda-prime"],
        CaseName::Tabulated => &["table"],
    };
    if let Some((flag, _)) = given.iter().find(|(f, set)| *set && !allowed.contains(f)) {
        return Err(Failure::Usage(format!(
            "--{flag} does not apply to case {label}"
        )));
    }
    let lambda_prime = match &args.lambda_prime {
        Some(text) => parse_real(text, "lambda-prime")?,
        None => lambda.value(),
    };
    let mut parameters = serde_json::Map::new();
    let case = match args.case {
        CaseName::I => {
            let a0 = require(args.a0, "A0", label)?;
            parameters.insert("A0".into(), json!(a0));
            FieldCase::ConstantField { a0 }
        }
        CaseName::Ii => {
            let (c1, d1) = (
                require(args.c1, "C1", label)?,
                require(args.d1, "D1", label)?,
            );
            parameters.insert("C1".into(), json!(c1));
            parameters.insert("D1".into(), json!(d1));
            parameters.insert("lambda_prime".into(), json!(lambda_prime));
            FieldCase::Eckart {
                lambda_prime,
                c1,
                d1,
            }
        }
        CaseName::Iii => {
            let c2 = require(args.c2, "C2", label)?;
            let d2 = args.d2.unwrap_or(0.0);
            parameters.insert("C2".into(), json!(c2));
            parameters.insert("D2".into(), json!(d2));
            parameters.insert("lambda_prime".into(), json!(lambda_prime));
            FieldCase::PoschlTeller {
                lambda_prime,
                c2,
                d2,
            }
        }
        CaseName::Iv => {
            let c3 = require(args.c3, "C3", label)?;
            let d3 = args.d3.unwrap_or(0.0);
            parameters.insert("C3".into(), json!(c3));
            parameters.insert("D3".into(), json!(d3));
            parameters.insert("lambda_prime".into(), json!(lambda_prime));
            FieldCase::GeneralizedPoschlTeller {
                lambda_prime,
                c3,
                d3,
            }
        }
        CaseName::Tabulated => {
            let path = args
                .table
                .as_ref()
                .ok_or_else(|| Failure::Usage("case tabulated requires --table".into()))?;
            let table = TabulatedGauge::from_csv_path(path)?;
            parameters.insert("table".into(), json!(path.display().to_string()));
            parameters.insert("table_points".into(), json!(table.samples().0.len()));
            FieldCase::Tabulated(Arc::new(table))
        }
    };
    case.check_parameters()?;
    let config = json!({
        "case": label,
        "parameters": Value::Object(parameters),
        "lambda": lambda_text(lambda),
        "relaxed": args.relaxed,
        "R": args.radius,
    });
    Ok(Resolved {
        case,
        lambda,
        radius: args.radius,
        config,
    })
}

fn lambda_text(lambda: AngularMomentum) -> String {
    match lambda.two_lambda() {
        Some(t) => format!("{t}/2"),
        None => format!("{}", lambda.value()),
    }
}

fn parse_lambda(args: &CaseArgs) -> Result<AngularMomentum, Failure> {
    let text = args.lambda.as_deref().unwrap_or(DEFAULT_LAMBDA);
    AngularMomentum::parse(text, args.relaxed).map_err(|e| Failure::Usage(format!("--lambda: {e}")))
}

pub fn resolve_case(args: &CaseArgs) -> Result<Resolved, Failure> {
    resolve_case_at(args, parse_lambda(args)?)
}

fn with(config: &Value, extra: Value) -> Value {
    let mut c = config.clone();
    if let (Value::Object(a), Value::Object(b)) = (&mut c, extra) {
        a.extend(b);
    }
    c
}

fn grid_from(args: &GridArgs, defaults: (f64, f64, usize)) -> Result<RadialGrid, Failure> {
    Ok(RadialGrid::new(
        args.u_min.unwrap_or(defaults.0),
        args.u_max.unwrap_or(defaults.1),
        args.points.unwrap_or(defaults.2),
    )?)
}

fn grid_json(grid: &RadialGrid) -> Value {
    json!({"u_min": grid.u_min(), "u_max": grid.u_max(), "points": grid.n_points()})
}

pub fn spectrum(args: &SpectrumArgs) -> Result<Document, Failure> {
    let r = resolve_case(&args.case)?;
    let s = susy::spectrum(&r.case, r.lambda, r.radius)?;
    let mut table = Table::new(&["n", "epsilon", "E_plus", "E_minus", "is_threshold"]);
    let threshold = if args.include_threshold {
        s.threshold.iter().collect()
    } else {
        Vec::new()
    };
    for e in s.levels.iter().chain(threshold) {
        table.push(vec![
            e.n.into(),
            e.epsilon.into(),
            e.dirac_energy_plus.into(),
            e.dirac_energy_minus.into(),
            e.is_threshold.into(),
        ]);
    }
    let config = with(
        &r.config,
        json!({"include_threshold": args.include_threshold}),
    );
    let mut doc = Document::new("spectrum", config, table);
    doc.meta.push(("family", json!(s.problem.name())));
    doc.meta
        .push(("continuum_threshold", json!(s.continuum_threshold)));
    doc.meta
        .push(("degeneracy", json!(s.problem.degeneracy().to_string())));
    Ok(doc)
}

pub fn eigenfunction(args: &EigenfunctionArgs) -> Result<Document, Failure> {
    let r = resolve_case(&args.case)?;
    if args.samples < RadialGrid::MIN_POINTS {
        return Err(Failure::Usage(format!(
            "--samples must be at least {}",
            RadialGrid::MIN_POINTS
        )));
    }
    let grid = RadialGrid::new(args.u_max / args.samples as f64, args.u_max, args.samples)?;
    let points: Vec<f64> = grid.points().collect();
    let g1f = susy::eigenfunction(&r.case, r.lambda, args.n, Component::G1)?;
    let mut g1 = points
        .iter()
        .map(|&u| g1f.value(u))
        .collect::<crate::Result<Vec<_>>>()?;
    let mut g2 = if args.n == 0 {
        vec![0.0; points.len()]
    } else {
        let g2f = susy::eigenfunction(&r.case, r.lambda, args.n, Component::G2)?;
        points
            .iter()
            .map(|&u| g2f.value(u))
            .collect::<crate::Result<Vec<_>>>()?
    };
    if args.normalize {
        // g₂ = L⁻g₁/√ε carries the same weight as g₁
        let parts = if args.n == 0 { 1.0 } else { 2.0 };
        for g in [&mut g1, &mut g2] {
            let norm2 = simpson(&g.iter().map(|v| v * v).collect::<Vec<_>>(), grid.step());
            if norm2 > 0.0 {
                let s = (parts * norm2).sqrt();
                g.iter_mut().for_each(|v| *v /= s);
            }
        }
    }
    let mut table = Table::new(&["u", "g1", "g2", "psi1_abs2_plus_psi2_abs2"]);
    for ((&u, &a), &b) in points.iter().zip(&g1).zip(&g2) {
        let [f1, f2] = susy::spinor_at(a, b, r.lambda, u, 0.0)?;
        table.push(vec![
            u.into(),
            a.into(),
            b.into(),
            (f1.norm_sqr() + f2.norm_sqr()).into(),
        ]);
    }
    let config = with(
        &r.config,
        json!({"n": args.n, "samples": args.samples, "u_max": args.u_max, "normalize": args.normalize}),
    );
    let mut doc = Document::new("eigenfunction", config, table);
    doc.meta
        .push(("g1", serde_json::to_value(g1f).unwrap_or(Value::Null)));
    Ok(doc)
}

pub fn field(args: &FieldArgs) -> Result<Document, Failure> {
    let r = resolve_case(&args.case)?;
    let gauge = GaugeFunction::new(r.case.clone())?;
    let grid = grid_from(&args.grid, (0.01, 10.0, 200))?;
    let mut table = Table::new(&["u", "alpha", "b", "flux_circulation", "flux_surface"]);
    for u in grid.points() {
        table.push(vec![
            u.into(),
            gauge.alpha(u)?.into(),
            gauge.magnetic_field(u)?.into(),
            gauge.flux_in_quanta(u)?.into(),
            gauge.flux_surface(u)?.into(),
        ]);
    }
    let config = with(&r.config, json!({"grid": grid_json(&grid)}));
    let mut doc = Document::new("field", config, table);
    doc.meta.push(("pole_flux", json!(gauge.pole_flux())));
    Ok(doc)
}

pub fn zero_mode(args: &ZeroModeArgs) -> Result<Document, Failure> {
    let r = resolve_case(&args.case)?;
    let gauge = GaugeFunction::new(r.case.clone())?;
    let grid = grid_from(&args.grid, (0.01, 20.0, 400))?;
    let verdict = susy::zero_mode_admissible(&gauge, r.lambda);
    let mut table = Table::new(&["u", "g", "ln_g"]);
    for u in grid.points() {
        let ln_g = susy::ln_zero_mode(&gauge, r.lambda, u)?;
        table.push(vec![u.into(), ln_g.exp().into(), ln_g.into()]);
    }
    let config = with(&r.config, json!({"grid": grid_json(&grid)}));
    let mut doc = Document::new("zero-mode", config, table);
    doc.meta.push((
        "zero_mode",
        serde_json::to_value(verdict).unwrap_or(Value::Null),
    ));
    if let FieldCase::Tabulated(t) = &r.case {
        let no_go = susy::finite_flux_no_go(t.flux_last(), r.lambda);
        doc.meta.push((
            "finite_flux",
            serde_json::to_value(no_go).unwrap_or(Value::Null),
        ));
    }
    Ok(doc)
}

pub fn verify(args: &VerifyArgs) -> Result<(Document, bool), Failure> {
    let r = resolve_case(&args.case)?;
    let default = numeric::default_grid();
    let grid = grid_from(
        &args.grid,
        (default.u_min(), default.u_max(), default.n_points()),
    )?;
    let d = Tolerances::default();
    let tolerances = Tolerances {
        relative: args.rel_tol.unwrap_or(d.relative),
        ground_absolute: args.ground_tol.unwrap_or(d.ground_absolute),
        near_threshold_relative: args.near_threshold_tol.unwrap_or(d.near_threshold_relative),
        near_threshold_window: d.near_threshold_window,
        pairing_relative: args.pairing_tol.unwrap_or(d.pairing_relative),
        intertwining: args.intertwining_tol.unwrap_or(d.intertwining),
    };
    let k = match (args.k, &args.expect) {
        (Some(k), _) => k,
        (None, Some(e)) => e.len().max(2),
        (None, None) => susy::analytic_problem(&r.case, r.lambda)
            .map(|p| p.bound_level_count())
            .unwrap_or(5)
            .max(2),
    };
    let options = VerifyOptions {
        tolerances,
        expected: args.expect.clone(),
        skip_intertwining: false,
    };
    let report = numeric::verify_partner_spectra(&r.case, r.lambda, &grid, k, &options)?;
    let mut table = Table::new(&[
        "check",
        "n",
        "expected",
        "numeric",
        "deviation",
        "tolerance",
        "pass",
    ]);
    for l in &report.levels {
        table.push(vec![
            "level".into(),
            l.n.into(),
            l.expected.into(),
            l.numeric.into(),
            l.deviation.into(),
            l.tolerance.into(),
            l.pass.into(),
        ]);
    }
    for p in &report.pairing {
        table.push(vec![
            "pairing".into(),
            p.n.into(),
            p.epsilon_2.into(),
            p.epsilon_1.into(),
            p.relative_defect.into(),
            p.tolerance.into(),
            p.pass.into(),
        ]);
    }
    for c in &report.intertwining {
        table.push(vec![
            "intertwining".into(),
            c.n.into(),
            Cell::Empty,
            Cell::Empty,
            c.residual.into(),
            c.tolerance.into(),
            c.pass.into(),
        ]);
    }
    let config = with(
        &r.config,
        json!({
            "grid": grid_json(&grid),
            "k": k,
            "expect": args.expect,
            "tolerances": tolerances,
        }),
    );
    let mut doc = Document::new("verify", config, table);
    doc.meta.push(("pass", json!(report.pass)));
    doc.meta.push((
        "max_relative_deviation",
        json!(report.max_relative_deviation),
    ));
    doc.meta
        .push(("max_pairing_defect", json!(report.max_pairing_defect)));
    doc.meta.push((
        "h2_levels_below_first_excited",
        json!(report.h2_levels_below_first_excited),
    ));
    doc.json_body = Some(serde_json::to_value(&report).unwrap_or(Value::Null));
    Ok((doc, report.pass))
}

pub fn sweep(args: &SweepArgs) -> Result<Document, Failure> {
    // validates the flags once even when the window turns out empty
    let probe = resolve_case(&args.case)?;
    let candidates: Vec<AngularMomentum> = if args.case.lambda.is_some() {
        vec![probe.lambda]
    } else {
        (args.two_lambda_min..=args.two_lambda_max)
            .filter(|t| t.rem_euclid(2) == 1)
            .map(AngularMomentum::half_odd)
            .collect::<crate::Result<_>>()?
    };
    let rows: Vec<Result<Option<Vec<Cell>>, Failure>> = candidates
        .par_iter()
        .map(|&lambda| {
            let r = resolve_case_at(&args.case, lambda)?;
            let report = validate_case(&r.case, lambda)?;
            if !report.zero_mode_admissible() {
                return Ok(None);
            }
            Ok(Some(vec![
                lambda.two_lambda().map_or(Cell::Empty, Cell::from),
                lambda.value().into(),
                report.analytic_available.into(),
                report.bound_level_count.into(),
            ]))
        })
        .collect();
    let mut table = Table::new(&["two_lambda", "lambda", "analytic", "level_count"]);
    for row in rows {
        if let Some(cells) = row? {
            table.push(cells);
        }
    }
    let mut config = probe.config.clone();
    if let Value::Object(m) = &mut config {
        if args.case.lambda.is_none() {
            m.remove("lambda");
        }
    }
    let config = with(
        &config,
        json!({
            "two_lambda_min": args.two_lambda_min,
            "two_lambda_max": args.two_lambda_max,
            "single": args.case.lambda.is_some(),
        }),
    );
    Ok(Document::new("sweep", config, table))
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Io(_) => Failure::Usage(e.to_string()),
            other => Failure::Rejected(other),
        }
    }
}

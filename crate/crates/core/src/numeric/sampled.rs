//! Functions sampled on a radial mesh, with composite Simpson quadrature.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Domain, RadialGrid};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledFunction {
    grid: RadialGrid,
    domain: Domain,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(grid: RadialGrid, domain: Domain, values: Vec<f64>) -> Result<Self> {
        let expected = domain.points(&grid)?.len();
        if values.len() != expected {
            return Err(Error::InvalidGrid(format!(
                "{} samples for a mesh of {expected} points",
                values.len()
            )));
        }
        Ok(Self {
            grid,
            domain,
            values,
        })
    }

    pub fn from_fn(grid: RadialGrid, domain: Domain, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = domain.points(&grid)?.into_iter().map(f).collect();
        Self::new(grid, domain, values)
    }

    pub fn try_from_fn(
        grid: RadialGrid,
        domain: Domain,
        f: impl Fn(f64) -> Result<f64>,
    ) -> Result<Self> {
        let values = domain
            .points(&grid)?
            .into_iter()
            .map(f)
            .collect::<Result<Vec<_>>>()?;
        Self::new(grid, domain, values)
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn points(&self) -> Vec<f64> {
        self.domain
            .points(&self.grid)
            .expect("validated at construction")
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            grid: self.grid,
            domain: self.domain,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pointwise combination with another function on the same mesh.
    pub fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.grid != other.grid || self.domain != other.domain {
            return Err(Error::InvalidGrid(
                "functions live on different meshes".into(),
            ));
        }
        Ok(Self {
            grid: self.grid,
            domain: self.domain,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn integral(&self) -> f64 {
        simpson(&self.values, self.grid.step())
    }

    /// √(∫ g² du).
    pub fn l2_norm(&self) -> f64 {
        simpson_with(&self.values, self.grid.step(), |v| v * v).sqrt()
    }

    pub fn inner(&self, other: &Self) -> Result<f64> {
        Ok(self.zip_with(other, |a, b| a * b)?.integral())
    }

    /// Scaled so that ∫ g² du = 1.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.l2_norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "cannot normalize a function with norm {norm}"
            )));
        }
        Ok(self.map(|v| v / norm))
    }

    /// Linear interpolation between mesh points.
    pub fn interpolate(&self, u: f64) -> Result<f64> {
        let points = self.points();
        let (first, last) = (points[0], points[points.len() - 1]);
        if !(u >= first && u <= last) {
            return Err(Error::DomainError { u });
        }
        let h = self.grid.step();
        let i = (((u - first) / h).floor() as usize).min(points.len() - 2);
        let t = ((u - points[i]) / (points[i + 1] - points[i])).clamp(0.0, 1.0);
        Ok(self.values[i] * (1.0 - t) + self.values[i + 1] * t)
    }
}

/// Composite Simpson over uniformly spaced samples. An odd number of
/// intervals closes with Simpson's 3/8 rule on the last three; two samples
/// fall back to the trapezoid rule.
pub fn simpson(values: &[f64], h: f64) -> f64 {
    simpson_with(values, h, |v| v)
}

fn simpson_with(values: &[f64], h: f64, f: impl Fn(f64) -> f64) -> f64 {
    let n = values.len();
    match n {
        0 | 1 => return 0.0,
        2 => return 0.5 * h * (f(values[0]) + f(values[1])),
        3 => return h / 3.0 * (f(values[0]) + 4.0 * f(values[1]) + f(values[2])),
        _ => {}
    }
    let intervals = n - 1;
    let even_end = if intervals.is_multiple_of(2) {
        n
    } else {
        n - 3
    };
    let mut acc = f(values[0]) + f(values[even_end - 1]);
    for (i, &v) in values[1..even_end - 1].iter().enumerate() {
        acc += if i % 2 == 0 { 4.0 } else { 2.0 } * f(v);
    }
    let mut total = h / 3.0 * acc;
    if even_end < n {
        let t = &values[n - 4..];
        total += 3.0 * h / 8.0 * (f(t[0]) + 3.0 * f(t[1]) + 3.0 * f(t[2]) + f(t[3]));
    }
    total
}

/// ∫ f du over the mesh of `f`.
pub fn quadrature(f: &SampledFunction) -> f64 {
    f.integral()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constants_and_sine() {
        let grid = RadialGrid::new(1e-9, 1.0 + 1e-9, 101).unwrap();
        let one = SampledFunction::from_fn(grid, Domain::HalfLine, |_| 1.0).unwrap();
        assert!((quadrature(&one) - 1.0).abs() < 1e-12);
        let grid = RadialGrid::new(1e-12, PI, 1001).unwrap();
        let s = SampledFunction::from_fn(grid, Domain::HalfLine, f64::sin).unwrap();
        assert!((quadrature(&s) - 2.0).abs() < 1e-8);
    }

    #[test]
    fn odd_interval_count_stays_fourth_order() {
        for n in [100, 101, 200, 201] {
            let grid = RadialGrid::new(0.5, 2.5, n).unwrap();
            let f = SampledFunction::from_fn(grid, Domain::HalfLine, f64::exp).unwrap();
            let exact = 2.5f64.exp() - 0.5f64.exp();
            assert!((quadrature(&f) - exact).abs() < 1e-7, "n={n}");
        }
        assert_eq!(simpson(&[2.0, 4.0], 0.5), 1.5);
    }

    #[test]
    fn cubic_is_exact() {
        let grid = RadialGrid::new(1.0, 2.0, 20).unwrap();
        let f = SampledFunction::from_fn(grid, Domain::HalfLine, |u| u * u * u).unwrap();
        assert!((quadrature(&f) - 3.75).abs() < 1e-13);
    }

    #[test]
    fn whole_line_mesh_and_normalization() {
        let grid = RadialGrid::staggered_to(10.0, 400).unwrap();
        let g = SampledFunction::from_fn(grid, Domain::WholeLine, |u| (-u * u).exp()).unwrap();
        assert_eq!(g.values().len(), 800);
        let norm2 = g.l2_norm().powi(2);
        assert!((norm2 - (PI / 2.0).sqrt()).abs() < 1e-10);
        assert!((g.normalized().unwrap().l2_norm() - 1.0).abs() < 1e-14);
        assert!((g.interpolate(0.0).unwrap() - (-grid.u_min().powi(2)).exp()).abs() < 1e-12);
        assert!(g.interpolate(11.0).is_err());
    }

    #[test]
    fn length_mismatch_rejected() {
        let grid = RadialGrid::new(0.1, 1.0, 16).unwrap();
        assert!(SampledFunction::new(grid, Domain::HalfLine, vec![0.0; 15]).is_err());
    }
}

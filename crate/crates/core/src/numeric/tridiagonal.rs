//! −d²/du² + V(u) as a symmetric tridiagonal matrix, with Sturm-sequence
//! bisection for eigenvalues and inverse iteration for eigenvectors.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Domain, RadialGrid};

use super::sampled::SampledFunction;

#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
    grid: RadialGrid,
    domain: Domain,
}

/// Second-order stencil with Dirichlet walls one step beyond each end of
/// the mesh. On `WholeLine`, V is evaluated at |u|.
pub fn discretize(
    v: impl Fn(f64) -> Result<f64>,
    grid: &RadialGrid,
    domain: Domain,
) -> Result<TridiagonalOperator> {
    let h = grid.step();
    let inv_h2 = 1.0 / (h * h);
    let points = domain.points(grid)?;
    let mut diagonal = Vec::with_capacity(points.len());
    for (index, &u) in points.iter().enumerate() {
        let value = v(u.abs()).map_err(|_| Error::SingularPotential { index, u })?;
        if !value.is_finite() {
            return Err(Error::SingularPotential { index, u });
        }
        diagonal.push(2.0 * inv_h2 + value);
    }
    let off_diagonal = vec![-inv_h2; points.len() - 1];
    Ok(TridiagonalOperator {
        diagonal,
        off_diagonal,
        grid: *grid,
        domain,
    })
}

impl TridiagonalOperator {
    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 {
                self.off_diagonal[i - 1].abs()
            } else {
                0.0
            } + if i + 1 < n {
                self.off_diagonal[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diagonal[i] - r);
            hi = hi.max(self.diagonal[i] + r);
        }
        (lo, hi)
    }

    /// max |entry| row sum, an upper bound on ‖T‖₂.
    pub fn norm(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let tiny = f64::MIN_POSITIVE / f64::EPSILON;
        let mut count = 0;
        let mut q = self.diagonal[0] - x;
        for i in 0..self.dim() {
            if i > 0 {
                let e = self.off_diagonal[i - 1];
                q = self.diagonal[i] - x - e * e / q;
            }
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The j-th smallest eigenvalue (0-based) by bisection to full precision.
    pub fn eigenvalue(&self, j: usize) -> f64 {
        let (mut lo, mut hi) = self.gershgorin();
        let pad = f64::EPSILON * self.norm().max(1.0);
        lo -= pad;
        hi += pad;
        for _ in 0..2100 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// (T − σ) x = b by Gaussian elimination with partial pivoting.
    fn shifted_solve(&self, sigma: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let tiny = f64::EPSILON * self.norm().max(1.0);
        // row i holds (a, b, c) for columns i, i+1, i+2 after pivoting
        let mut d: Vec<f64> = self.diagonal.iter().map(|v| v - sigma).collect();
        let mut upper: Vec<f64> = self.off_diagonal.clone();
        let mut upper2 = vec![0.0; n.saturating_sub(2)];
        let mut lower: Vec<f64> = self.off_diagonal.clone();
        let mut b = rhs.to_vec();
        for i in 0..n.saturating_sub(1) {
            if lower[i].abs() > d[i].abs() {
                // swap rows i and i+1
                std::mem::swap(&mut d[i], &mut lower[i]);
                std::mem::swap(&mut d[i + 1], &mut upper[i]);
                if i + 1 < n - 1 {
                    upper2[i] = upper[i + 1];
                    upper[i + 1] = 0.0;
                }
                b.swap(i, i + 1);
            }
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let m = lower[i] / d[i];
            d[i + 1] -= m * upper[i];
            if i + 1 < n - 1 {
                upper[i + 1] -= m * upper2[i];
            }
            b[i + 1] -= m * b[i];
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = tiny;
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            if i + 1 < n {
                s -= upper[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= upper2[i] * x[i + 2];
            }
            x[i] = s / d[i];
        }
        x
    }

    /// ‖T x − λ x‖₂ for a vector of unit Euclidean norm.
    fn residual(&self, lambda: f64, x: &[f64]) -> f64 {
        self.apply(x)
            .iter()
            .zip(x)
            .map(|(tx, xi)| (tx - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diagonal[i] * x[i];
                if i > 0 {
                    s += self.off_diagonal[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.off_diagonal[i] * x[i + 1];
                }
                s
            })
            .collect()
    }
}

fn unit(mut x: Vec<f64>) -> Option<Vec<f64>> {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return None;
    }
    x.iter_mut().for_each(|v| *v /= norm);
    Some(x)
}

/// The k smallest eigenvalues in increasing order.
pub fn lowest_eigenvalues(t: &TridiagonalOperator, k: usize) -> Result<Vec<f64>> {
    if k > t.dim() {
        return Err(Error::InvalidParameter(format!(
            "requested {k} eigenvalues of a {}×{} operator",
            t.dim(),
            t.dim()
        )));
    }
    Ok((0..k).map(|j| t.eigenvalue(j)).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenpair {
    pub value: f64,
    /// Normalized so that ∫ g² du = 1, first significant sample positive.
    pub vector: SampledFunction,
}

const INVERSE_ITERATION_STEPS: usize = 4;
const INVERSE_ITERATION_RETRIES: usize = 5;

/// The k lowest eigenpairs. Values come from bisection, vectors from
/// inverse iteration with deterministic start vectors.
pub fn lowest_eigenpairs(t: &TridiagonalOperator, k: usize) -> Result<Vec<Eigenpair>> {
    let values = lowest_eigenvalues(t, k)?;
    let n = t.dim();
    let tol = 1e-8 * t.norm().max(1.0);
    let mut found: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut pairs = Vec::with_capacity(k);
    for (j, &value) in values.iter().enumerate() {
        let mut accepted = None;
        for attempt in 0..INVERSE_ITERATION_RETRIES {
            let shift = value + attempt as f64 * 1e3 * f64::EPSILON * t.norm().max(1.0);
            let mut x: Vec<f64> = (0..n)
                .map(|i| 1.0 + ((i * 7919 + j * 104_729 + attempt * 31) % 1013) as f64 / 1013.0)
                .collect();
            for _ in 0..INVERSE_ITERATION_STEPS {
                let Some(y) = unit(t.shifted_solve(shift, &x)) else {
                    break;
                };
                x = y;
                // keep clear of neighbouring eigenvectors with close values
                for prev in &found {
                    let dot: f64 = prev.iter().zip(&x).map(|(a, b)| a * b).sum();
                    x.iter_mut().zip(prev).for_each(|(v, p)| *v -= dot * p);
                }
                match unit(x.clone()) {
                    Some(y) => x = y,
                    None => break,
                }
            }
            if x.iter().all(|v| v.is_finite()) && t.residual(value, &x) <= tol {
                accepted = Some(x);
                break;
            }
        }
        let x = accepted.ok_or(Error::EigenvectorFailure { index: j })?;
        let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let first = x
            .iter()
            .find(|v| v.abs() > 1e-8 * scale)
            .copied()
            .unwrap_or(1.0);
        let sign = first.signum();
        let signed: Vec<f64> = x.iter().map(|v| v * sign).collect();
        let vector = SampledFunction::new(t.grid, t.domain, signed.clone())?.normalized()?;
        found.push(signed);
        pairs.push(Eigenpair { value, vector });
    }
    Ok(pairs)
}

/// ‖(T − ε) g‖₂ / ‖g‖₂ over interior rows, for g sampled on T's mesh.
pub fn operator_residual(
    t: &TridiagonalOperator,
    epsilon: f64,
    g: &SampledFunction,
) -> Result<f64> {
    if g.grid() != t.grid() || g.domain() != t.domain() {
        return Err(Error::InvalidGrid(
            "function and operator meshes differ".into(),
        ));
    }
    let x = g.values();
    let tx = t.apply(x);
    let n = x.len();
    let num: f64 = (1..n - 1).map(|i| (tx[i] - epsilon * x[i]).powi(2)).sum();
    let den: f64 = (1..n - 1).map(|i| x[i] * x[i]).sum();
    Ok((num / den).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn box_operator(c: f64, n: usize) -> TridiagonalOperator {
        // mesh points are interior; walls sit at 0 and π
        let h = PI / (n + 1) as f64;
        let grid = RadialGrid::new(h, PI - h, n).unwrap();
        discretize(|_| Ok(c), &grid, Domain::HalfLine).unwrap()
    }

    #[test]
    fn particle_in_a_box() {
        let t = box_operator(0.0, 2000);
        let e = lowest_eigenvalues(&t, 3).unwrap();
        for (k, v) in e.iter().enumerate() {
            let exact = ((k + 1) * (k + 1)) as f64;
            assert!((v - exact).abs() < 1e-4 * exact, "{v} vs {exact}");
        }
        let shifted = lowest_eigenvalues(&box_operator(3.5, 2000), 3).unwrap();
        for (a, b) in e.iter().zip(&shifted) {
            assert!((b - a - 3.5).abs() < 1e-9);
        }
        assert!(lowest_eigenvalues(&t, 0).unwrap().is_empty());
    }

    #[test]
    fn discrete_box_values_are_exact_to_rounding() {
        // eigenvalues of the stencil are (4/h²)·sin²(kh/2)
        let n = 500;
        let t = box_operator(0.0, n);
        let h = PI / (n + 1) as f64;
        for k in 1..=5 {
            let exact = 4.0 / (h * h) * (k as f64 * h / 2.0).sin().powi(2);
            assert!((t.eigenvalue(k - 1) - exact).abs() < 1e-11 * t.norm());
        }
    }

    #[test]
    fn eigenvectors_are_normalized_signed_sines() {
        let t = box_operator(0.0, 1000);
        let pairs = lowest_eigenpairs(&t, 3).unwrap();
        for (k, p) in pairs.iter().enumerate() {
            let v = &p.vector;
            assert!((v.l2_norm() - 1.0).abs() < 1e-12);
            assert!(v.values()[0] > 0.0);
            let m = (k + 1) as f64;
            let exact = SampledFunction::from_fn(*t.grid(), Domain::HalfLine, |u| {
                (m * u).sin() * (2.0 / PI).sqrt()
            })
            .unwrap();
            let diff = v.zip_with(&exact, |a, b| a - b).unwrap().l2_norm();
            assert!(diff < 1e-3, "k={k} diff={diff}");
        }
        let r = operator_residual(&t, pairs[1].value, &pairs[1].vector).unwrap();
        assert!(r < 1e-6);
    }

    #[test]
    fn singular_potential_reports_index() {
        let grid = RadialGrid::new(0.1, 1.0, 20).unwrap();
        let err = discretize(
            |u| Ok(if u > 0.5 { f64::INFINITY } else { 0.0 }),
            &grid,
            Domain::HalfLine,
        )
        .unwrap_err();
        assert!(matches!(err, Error::SingularPotential { index: 9, .. }));
    }

    #[test]
    fn harmonic_oscillator_on_whole_line() {
        let grid = RadialGrid::staggered_to(12.0, 1200).unwrap();
        let t = discretize(|u| Ok(u * u), &grid, Domain::WholeLine).unwrap();
        let pairs = lowest_eigenpairs(&t, 4).unwrap();
        for (k, p) in pairs.iter().enumerate() {
            let exact = (2 * k + 1) as f64;
            assert!((p.value - exact).abs() < 1e-3, "{} vs {exact}", p.value);
        }
        // odd states vanish at the mirror plane
        let v = pairs[1].vector.values();
        let mid = v.len() / 2;
        assert!((v[mid - 1] + v[mid]).abs() < 1e-10);
    }

    #[test]
    fn deterministic() {
        let t = box_operator(1.0, 300);
        assert_eq!(
            lowest_eigenpairs(&t, 3).unwrap(),
            lowest_eigenpairs(&t, 3).unwrap()
        );
    }
}

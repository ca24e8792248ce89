//! Reassembly of the surface spinor from the radial pair (g₁, g₂).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::AngularMomentum;
use crate::numeric::SampledFunction;

/// Ψ(u, φ) from the radial values g₁(u), g₂(u).
///
/// (ψ₁, ψ₂) = (g₁, i·g₂)/√sinh u, rotated by exp(−i(u/2)σ_y), with phases
/// e^{i(λ∓½)φ} on the upper and lower components.
pub fn spinor_at(
    g1: f64,
    g2: f64,
    lambda: AngularMomentum,
    u: f64,
    phi: f64,
) -> Result<[Complex64; 2]> {
    if !(u > 0.0 && u.is_finite()) {
        return Err(Error::DomainError { u });
    }
    let measure = u.sinh().sqrt().recip();
    let psi1 = Complex64::new(g1 * measure, 0.0);
    let psi2 = Complex64::new(0.0, g2 * measure);
    let (s, c) = (0.5 * u).sin_cos();
    let f1 = psi1 * c - psi2 * s;
    let f2 = psi1 * s + psi2 * c;
    let l = lambda.value();
    Ok([
        f1 * Complex64::from_polar(1.0, (l - 0.5) * phi),
        f2 * Complex64::from_polar(1.0, (l + 0.5) * phi),
    ])
}

/// As [`spinor_at`], interpolating sampled g₁ and g₂ at u.
pub fn spinor_assembly(
    g1: &SampledFunction,
    g2: &SampledFunction,
    lambda: AngularMomentum,
    u: f64,
    phi: f64,
) -> Result<[Complex64; 2]> {
    spinor_at(g1.interpolate(u)?, g2.interpolate(u)?, lambda, u, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Domain, RadialGrid};

    #[test]
    fn ground_state_only_rotates() {
        let l = AngularMomentum::half_odd(7).unwrap();
        let u = 0.8;
        let [f1, f2] = spinor_at(2.0, 0.0, l, u, 0.0).unwrap();
        let psi1 = 2.0 / u.sinh().sqrt();
        assert!((f1 - Complex64::new((0.5 * u).cos() * psi1, 0.0)).norm() < 1e-15);
        assert!((f2 - Complex64::new((0.5 * u).sin() * psi1, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn zero_input_gives_zero() {
        let l = AngularMomentum::half_odd(1).unwrap();
        let [a, b] = spinor_at(0.0, 0.0, l, 1.0, 0.3).unwrap();
        assert_eq!(a.norm(), 0.0);
        assert_eq!(b.norm(), 0.0);
        assert!(spinor_at(1.0, 1.0, l, 0.0, 0.0).is_err());
    }

    #[test]
    fn full_turn_is_single_valued_for_half_odd_lambda() {
        // λ ∓ ½ is an integer, so φ → φ + 2π leaves both components unchanged
        let u = 1.1;
        for t in [-3, 1, 7] {
            let l = AngularMomentum::half_odd(t).unwrap();
            let a = spinor_at(0.7, -0.4, l, u, 0.9).unwrap();
            let b = spinor_at(0.7, -0.4, l, u, 0.9 + 2.0 * std::f64::consts::PI).unwrap();
            assert!((a[0] - b[0]).norm() < 1e-12 && (a[1] - b[1]).norm() < 1e-12);
        }
        // integer λ (relaxed) flips the sign
        let l = AngularMomentum::relaxed(7.0).unwrap();
        let a = spinor_at(0.7, -0.4, l, u, 0.9).unwrap();
        let b = spinor_at(0.7, -0.4, l, u, 0.9 + 2.0 * std::f64::consts::PI).unwrap();
        assert!((a[0] + b[0]).norm() < 1e-12 && (a[1] + b[1]).norm() < 1e-12);
    }

    #[test]
    fn density_is_rotation_invariant() {
        let l = AngularMomentum::half_odd(3).unwrap();
        let (g1, g2, u) = (0.3, 0.9, 2.2);
        let [a, b] = spinor_at(g1, g2, l, u, 1.7).unwrap();
        let density = a.norm_sqr() + b.norm_sqr();
        assert!((density - (g1 * g1 + g2 * g2) / u.sinh()).abs() < 1e-14);
    }

    #[test]
    fn sampled_variant_interpolates() {
        let grid = RadialGrid::new(0.5, 2.5, 201).unwrap();
        let g1 = SampledFunction::from_fn(grid, Domain::HalfLine, |u| u * u).unwrap();
        let g2 = SampledFunction::from_fn(grid, Domain::HalfLine, |_| 0.0).unwrap();
        let l = AngularMomentum::half_odd(1).unwrap();
        let got = spinor_assembly(&g1, &g2, l, 1.0, 0.0).unwrap();
        let want = spinor_at(1.0, 0.0, l, 1.0, 0.0).unwrap();
        assert!((got[0] - want[0]).norm() < 1e-12);
    }
}

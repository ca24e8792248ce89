//! Jacobi polynomials P_n^{(a,b)} for arbitrary real a, b.
//!
//! The family is defined by the three-term recurrence in n, so parameters
//! outside the classical range a, b > −1 are accepted as formal polynomial
//! parameters.

use crate::error::{Error, Result};

pub fn jacobi(n: usize, a: f64, b: f64, w: f64) -> Result<f64> {
    let (m, ln_scale) = jacobi_scaled(n, a, b, w)?;
    Ok(if ln_scale == 0.0 {
        m
    } else {
        m * ln_scale.exp()
    })
}

/// P_n^{(a,b)}(w) as (m, s) with P = m·eˢ, so large |w| cannot overflow.
pub fn jacobi_scaled(n: usize, a: f64, b: f64, w: f64) -> Result<(f64, f64)> {
    const RESCALE_ABOVE: f64 = 1e150;
    let p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (w - 1.0);
    match n {
        0 => return Ok((1.0, 0.0)),
        1 => return Ok((p1, 0.0)),
        _ => {}
    }
    let mut ln_scale = 0.0;
    let (mut prev, mut cur) = (1.0, p1);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let denom = 2.0 * k * (k + a + b) * (s - 2.0);
        if denom == 0.0 {
            return Err(Error::DegenerateParameters {
                n: k as usize,
                a,
                b,
            });
        }
        let next = ((s - 1.0) * (s * (s - 2.0) * w + a * a - b * b) * cur
            - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * prev)
            / denom;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_ABOVE {
            prev /= RESCALE_ABOVE;
            cur /= RESCALE_ABOVE;
            ln_scale += RESCALE_ABOVE.ln();
        }
    }
    Ok((cur, ln_scale))
}

/// d/dw P_n^{(a,b)} in the scaled form of [`jacobi_scaled`].
pub fn jacobi_derivative_scaled(n: usize, a: f64, b: f64, w: f64) -> Result<(f64, f64)> {
    if n == 0 {
        return Ok((0.0, 0.0));
    }
    let (m, s) = jacobi_scaled(n - 1, a + 1.0, b + 1.0, w)?;
    Ok((0.5 * (n as f64 + a + b + 1.0) * m, s))
}

/// d/dw P_n^{(a,b)}(w) = (n + a + b + 1)/2 · P_{n−1}^{(a+1,b+1)}(w).
pub fn jacobi_derivative(n: usize, a: f64, b: f64, w: f64) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    Ok(0.5 * (n as f64 + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Generalized binomial coefficient C(z, k).
    fn binom(z: f64, k: usize) -> f64 {
        (0..k).fold(1.0, |acc, j| acc * (z - j as f64) / (j as f64 + 1.0))
    }

    /// Explicit finite sum, independent of the recurrence.
    fn jacobi_sum(n: usize, a: f64, b: f64, x: f64) -> f64 {
        let nf = n as f64;
        (0..=n)
            .map(|s| {
                binom(nf + a, n - s)
                    * binom(nf + b, s)
                    * ((x - 1.0) / 2.0).powi(s as i32)
                    * ((x + 1.0) / 2.0).powi((n - s) as i32)
            })
            .sum()
    }

    #[test]
    fn low_degrees() {
        assert_eq!(jacobi(0, 3.3, -7.1, 12.0).unwrap(), 1.0);
        let (a, b, w) = (0.7, -2.4, 0.3);
        let p1 = jacobi(1, a, b, w).unwrap();
        assert!((p1 - ((a + 1.0) + (a + b + 2.0) * (w - 1.0) / 2.0)).abs() < 1e-15);
    }

    #[test]
    fn degree_three_against_sum() {
        // P_3^{(2,1)}(0.5) = −1/16 from the finite sum
        let expected = jacobi_sum(3, 2.0, 1.0, 0.5);
        assert!((expected - (-0.0625)).abs() < 1e-14);
        assert!((jacobi(3, 2.0, 1.0, 0.5).unwrap() - expected).abs() < 1e-13);
    }

    #[test]
    fn legendre_special_case() {
        // P_2^{(0,0)} = (3x² − 1)/2
        for x in [-1.0, -0.3, 0.0, 0.8, 2.0] {
            let p = jacobi(2, 0.0, 0.0, x).unwrap();
            assert!((p - (3.0 * x * x - 1.0) / 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn degenerate_denominator_is_reported() {
        // k + a + b = 0 at k = 2
        assert!(matches!(
            jacobi(2, -1.0, -1.0, 0.3),
            Err(Error::DegenerateParameters { n: 2, .. })
        ));
        assert!(jacobi(1, -1.0, -1.0, 0.3).is_ok());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(jacobi_derivative(0, 1.0, 2.0, 0.4).unwrap(), 0.0);
        let (a, b) = (1.5, -3.25);
        assert!((jacobi_derivative(1, a, b, 7.0).unwrap() - (a + b + 2.0) / 2.0).abs() < 1e-15);
        let h = 1e-4;
        let fd = (jacobi(2, 1.0, 1.0, 0.3 + h).unwrap() - jacobi(2, 1.0, 1.0, 0.3 - h).unwrap())
            / (2.0 * h);
        assert!((jacobi_derivative(2, 1.0, 1.0, 0.3).unwrap() - fd).abs() < 1e-8);
    }

    #[test]
    fn scaled_form_survives_huge_arguments() {
        let w = 1e100;
        let (m, s) = jacobi_scaled(4, 1.5, -12.5, w).unwrap();
        assert!(m.is_finite() && s > 0.0);
        // leading coefficient of P_4^{(a,b)} is C(2n + a + b, n)/2ⁿ
        let lead = (0..4).fold(1.0, |acc, j| {
            acc * (8.0 + 1.5 - 12.5 - j as f64) / (j as f64 + 1.0)
        }) / 16.0;
        let got = m.ln() + s;
        assert!((got - (lead.abs().ln() + 4.0 * w.ln())).abs() < 1e-12 * got.abs());
        let (dm, ds) = jacobi_derivative_scaled(1, 2.0, 3.0, 7.0).unwrap();
        assert_eq!((dm, ds), (3.5, 0.0));
    }

    proptest! {
        #[test]
        fn recurrence_matches_sum_formula(
            n in 0usize..7,
            a in -14.0f64..6.0,
            b in -14.0f64..6.0,
            x in -3.0f64..8.0,
        ) {
            if let Ok(p) = jacobi(n, a, b, x) {
                let q = jacobi_sum(n, a, b, x);
                let scale = (0..=n).map(|s| {
                    (binom(n as f64 + a, n - s) * binom(n as f64 + b, s)).abs()
                        * ((x - 1.0) / 2.0).abs().powi(s as i32)
                        * ((x + 1.0) / 2.0).abs().powi((n - s) as i32)
                }).sum::<f64>().max(1.0);
                prop_assert!((p - q).abs() <= 1e-9 * scale, "{} vs {}", p, q);
            }
        }

        #[test]
        fn derivative_matches_finite_difference(
            n in 1usize..6,
            a in -6.0f64..4.0,
            b in -6.0f64..4.0,
            x in -1.5f64..3.0,
        ) {
            let h = 1e-5;
            if let (Ok(d), Ok(p), Ok(m)) = (
                jacobi_derivative(n, a, b, x),
                jacobi(n, a, b, x + h),
                jacobi(n, a, b, x - h),
            ) {
                let fd = (p - m) / (2.0 * h);
                prop_assert!((d - fd).abs() <= 1e-5 * d.abs().max(1.0) * 10f64.powi(n as i32));
            }
        }
    }
}

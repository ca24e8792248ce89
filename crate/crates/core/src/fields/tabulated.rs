//! User-supplied gauge functions α(u) given as samples.
//!
//! Between samples α is a monotone (Fritsch–Carlson) cubic Hermite
//! interpolant. Outside the table there is no field: the flux f = α·sinh u
//! is held at its boundary value, so α = f/sinh u there.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::math;

#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedGauge {
    u: Vec<f64>,
    alpha: Vec<f64>,
    slopes: Vec<f64>,
    /// ∫ α du from u[0] to u[k].
    cumulative: Vec<f64>,
}

pub const CSV_HEADER: &str = "u,alpha";

impl TabulatedGauge {
    pub fn new(u: Vec<f64>, alpha: Vec<f64>) -> Result<Self> {
        if u.len() != alpha.len() {
            return Err(Error::InvalidParameter(format!(
                "tabulated gauge has {} u samples but {} alpha samples",
                u.len(),
                alpha.len()
            )));
        }
        if u.len() < 2 {
            return Err(Error::InvalidParameter(
                "tabulated gauge needs at least two samples".into(),
            ));
        }
        if u.iter().chain(alpha.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "tabulated gauge contains non-finite values".into(),
            ));
        }
        if u[0] < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tabulated gauge starts at u = {} < 0",
                u[0]
            )));
        }
        if u.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter(
                "tabulated u values must be strictly increasing".into(),
            ));
        }
        let slopes = monotone_slopes(&u, &alpha);
        let mut cumulative = Vec::with_capacity(u.len());
        cumulative.push(0.0);
        for k in 0..u.len() - 1 {
            let h = u[k + 1] - u[k];
            let seg =
                h * (alpha[k] + alpha[k + 1]) / 2.0 + h * h * (slopes[k] - slopes[k + 1]) / 12.0;
            cumulative.push(cumulative[k] + seg);
        }
        Ok(Self {
            u,
            alpha,
            slopes,
            cumulative,
        })
    }

    /// Parses the two-column `u,alpha` format. Blank lines are skipped.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, header)) if header.replace(' ', "") == CSV_HEADER => {}
            Some((_, header)) => {
                return Err(Error::Parse(format!(
                    "expected header '{CSV_HEADER}', found '{header}'"
                )))
            }
            None => return Err(Error::Parse("empty gauge table".into())),
        }
        let mut u = Vec::new();
        let mut alpha = Vec::new();
        for (lineno, line) in lines {
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            if cols.len() != 2 {
                return Err(Error::Parse(format!(
                    "line {}: expected 2 columns, found {}",
                    lineno + 1,
                    cols.len()
                )));
            }
            let parse = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {}: bad number '{s}'", lineno + 1)))
            };
            u.push(parse(cols[0])?);
            alpha.push(parse(cols[1])?);
        }
        Self::new(u, alpha)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_csv_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for (u, a) in self.u.iter().zip(&self.alpha) {
            let _ = writeln!(out, "{u},{a}");
        }
        out
    }

    /// Samples α on `u` from any closed-form evaluator.
    pub fn from_fn(u: Vec<f64>, alpha: impl Fn(f64) -> f64) -> Result<Self> {
        let values = u.iter().map(|&x| alpha(x)).collect();
        Self::new(u, values)
    }

    pub fn u_first(&self) -> f64 {
        self.u[0]
    }

    pub fn u_last(&self) -> f64 {
        *self.u.last().unwrap()
    }

    pub fn samples(&self) -> (&[f64], &[f64]) {
        (&self.u, &self.alpha)
    }

    /// Flux held below the first sample (the pole strength of α at u = 0).
    pub fn flux_first(&self) -> f64 {
        self.alpha[0] * self.u[0].sinh()
    }

    /// Flux held beyond the last sample (total flux in quanta).
    pub fn flux_last(&self) -> f64 {
        self.alpha[self.alpha.len() - 1] * self.u_last().sinh()
    }

    fn segment(&self, u: f64) -> usize {
        match self.u.binary_search_by(|x| x.partial_cmp(&u).unwrap()) {
            Ok(k) => k.min(self.u.len() - 2),
            Err(k) => k.saturating_sub(1).min(self.u.len() - 2),
        }
    }

    pub fn alpha(&self, u: f64) -> f64 {
        if u < self.u_first() {
            return self.flux_first() / u.sinh();
        }
        if u > self.u_last() {
            return self.flux_last() / u.sinh();
        }
        let k = self.segment(u);
        let h = self.u[k + 1] - self.u[k];
        let t = (u - self.u[k]) / h;
        let (t2, t3) = (t * t, t * t * t);
        self.alpha[k] * (2.0 * t3 - 3.0 * t2 + 1.0)
            + self.alpha[k + 1] * (-2.0 * t3 + 3.0 * t2)
            + h * self.slopes[k] * (t3 - 2.0 * t2 + t)
            + h * self.slopes[k + 1] * (t3 - t2)
    }

    pub fn alpha_derivative(&self, u: f64) -> f64 {
        if u < self.u_first() {
            return -self.flux_first() * u.cosh() / u.sinh().powi(2);
        }
        if u > self.u_last() {
            return -self.flux_last() * u.cosh() / u.sinh().powi(2);
        }
        let k = self.segment(u);
        let h = self.u[k + 1] - self.u[k];
        let t = (u - self.u[k]) / h;
        let t2 = t * t;
        (self.alpha[k] * (6.0 * t2 - 6.0 * t) + self.alpha[k + 1] * (-6.0 * t2 + 6.0 * t)) / h
            + self.slopes[k] * (3.0 * t2 - 4.0 * t + 1.0)
            + self.slopes[k + 1] * (3.0 * t2 - 2.0 * t)
    }

    /// ∫ α du from u[0] to `u` (exact for the interpolant and the
    /// flux-preserving extension).
    pub fn antiderivative(&self, u: f64) -> f64 {
        if u < self.u_first() {
            let f = self.flux_first();
            if f == 0.0 {
                return 0.0;
            }
            return f * (math::ln_tanh_half(u) - math::ln_tanh_half(self.u_first()));
        }
        if u > self.u_last() {
            let f = self.flux_last();
            let tail = if f == 0.0 {
                0.0
            } else {
                f * (math::ln_tanh_half(u) - math::ln_tanh_half(self.u_last()))
            };
            return self.cumulative[self.u.len() - 1] + tail;
        }
        let k = self.segment(u);
        let h = self.u[k + 1] - self.u[k];
        let t = (u - self.u[k]) / h;
        let (t2, t3, t4) = (t * t, t * t * t, t * t * t * t);
        self.cumulative[k]
            + h * (self.alpha[k] * (t - t3 + 0.5 * t4)
                + self.alpha[k + 1] * (t3 - 0.5 * t4)
                + h * self.slopes[k] * (0.5 * t2 - 2.0 * t3 / 3.0 + 0.25 * t4)
                + h * self.slopes[k + 1] * (0.25 * t4 - t3 / 3.0))
    }
}

/// Fritsch–Carlson slopes with the non-centred three-point end rule.
fn monotone_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|k| (y[k + 1] - y[k]) / h[k]).collect();
    if n == 2 {
        return vec![delta[0], delta[0]];
    }
    let mut d = vec![0.0; n];
    for k in 1..n - 1 {
        if delta[k - 1] * delta[k] <= 0.0 {
            d[k] = 0.0;
        } else {
            let w1 = 2.0 * h[k] + h[k - 1];
            let w2 = h[k] + 2.0 * h[k - 1];
            d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
        }
    }
    d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}

fn end_slope(h0: f64, h1: f64, m0: f64, m1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if d.signum() != m0.signum() || m0 == 0.0 {
        0.0
    } else if m0.signum() != m1.signum() && d.abs() > 3.0 * m0.abs() {
        3.0 * m0
    } else {
        d
    }
}

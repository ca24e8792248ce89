//! Overflow- and cancellation-safe hyperbolic helpers.

use std::f64::consts::LN_2;

/// ln sinh u for u > 0.
pub fn ln_sinh(u: f64) -> f64 {
    if u > 20.0 {
        u - LN_2 + (-(-2.0 * u).exp()).ln_1p()
    } else {
        u.sinh().ln()
    }
}

/// ln cosh u for any real u.
pub fn ln_cosh(u: f64) -> f64 {
    let a = u.abs();
    a - LN_2 + (-2.0 * a).exp().ln_1p()
}

/// ln tanh(u/2) for u > 0.
pub fn ln_tanh_half(u: f64) -> f64 {
    -(2.0 / u.exp_m1()).ln_1p()
}

/// ln(1 + eˣ) without overflow.
pub fn softplus(x: f64) -> f64 {
    x.max(0.0) + (-x.abs()).exp().ln_1p()
}

/// Gudermannian gd(u) = ∫₀ᵘ sech t dt.
pub fn gudermannian(u: f64) -> f64 {
    u.sinh().atan()
}

pub fn coth(u: f64) -> f64 {
    1.0 / u.tanh()
}

pub fn csch(u: f64) -> f64 {
    1.0 / u.sinh()
}

pub fn sech(u: f64) -> f64 {
    1.0 / u.cosh()
}

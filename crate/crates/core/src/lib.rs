//! Bound states, zero modes and magnetic flux for massless Dirac-Weyl
//! carriers on the two-sheeted hyperboloid under rotationally symmetric
//! perpendicular magnetic fields.
//!
//! The radial problem factorizes as H₁ = L⁺L⁻, H₂ = L⁻L⁺ with
//! L± = ∓∂ᵤ + W(u). Four gauge families have closed-form spectra
//! ([`susy`]); every closed form can be cross-checked against the
//! finite-difference engine in [`numeric`].

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod fields;
pub mod math;
pub mod model;
pub mod numeric;
pub mod susy;

pub use error::{Error, Result};
pub use fields::{GaugeFunction, Superpotential, TabulatedGauge};
pub use model::{
    validate_case, AngularMomentum, Degeneracy, Domain, FieldCase, RadialGrid, SpectrumEntry,
    UnitSystem, ValidationReport,
};

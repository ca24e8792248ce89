//! C ABI for the hyperlandau solver.
//!
//! Objects cross the boundary as opaque handles created by `hl_*_new` and
//! released by the matching `hl_*_free`. Every fallible call returns an
//! [`HlStatus`]; on failure [`hl_last_error_message`] describes the cause.
//! Results are written through caller-provided out-pointers.
//!
//! # Safety
//!
//! Every handle argument must be null or a live pointer obtained from this
//! library, and every out-pointer must be null or valid for writes. Null
//! is reported as `HL_STATUS_NULL_POINTER` rather than dereferenced.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use hyperlandau::numeric::{self, VerifyOptions};
use hyperlandau::susy::{self, Component};
use hyperlandau::{
    AngularMomentum, Error, FieldCase, GaugeFunction, RadialGrid, SpectrumEntry, TabulatedGauge,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    DomainError = 3,
    UnsupportedCase = 4,
    NoBoundStates = 5,
    AnalyticUnavailable = 6,
    DegenerateParameters = 7,
    IndexError = 8,
    SingularPotential = 9,
    EigenvectorFailure = 10,
    InvalidGrid = 11,
    ParseError = 12,
    IoError = 13,
    Panic = 14,
}

/// Field families. Parameters p1, p2 are (A0, unused), (C1, D1), (C2, D2)
/// and (C3, D3) respectively.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlCase {
    ConstantField = 0,
    Eckart = 1,
    PoschlTeller = 2,
    GeneralizedPoschlTeller = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlComponent {
    G1 = 0,
    G2 = 1,
}

/// One spectrum row.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HlLevel {
    pub n: usize,
    pub epsilon: f64,
    pub energy_plus: f64,
    pub energy_minus: f64,
    pub is_threshold: bool,
}

/// A field case at a fixed angular momentum.
pub struct HlProblem {
    case: FieldCase,
    gauge: GaugeFunction,
    lambda: AngularMomentum,
}

/// Bound levels of a problem.
pub struct HlSpectrum {
    levels: Vec<HlLevel>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let clean = message.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).unwrap_or_default());
}

fn status_of(error: &Error) -> HlStatus {
    match error {
        Error::InvalidParameter(_) => HlStatus::InvalidParameter,
        Error::DomainError { .. } => HlStatus::DomainError,
        Error::UnsupportedCase(_) => HlStatus::UnsupportedCase,
        Error::NoBoundStates(_) => HlStatus::NoBoundStates,
        Error::AnalyticUnavailable(_) => HlStatus::AnalyticUnavailable,
        Error::DegenerateParameters { .. } => HlStatus::DegenerateParameters,
        Error::IndexError { .. } => HlStatus::IndexError,
        Error::SingularPotential { .. } => HlStatus::SingularPotential,
        Error::EigenvectorFailure { .. } => HlStatus::EigenvectorFailure,
        Error::InvalidGrid(_) => HlStatus::InvalidGrid,
        Error::Parse(_) => HlStatus::ParseError,
        Error::Io(_) => HlStatus::IoError,
    }
}

enum Fail {
    Null,
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> HlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            HlStatus::Ok
        }
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument");
            HlStatus::NullPointer
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            HlStatus::Panic
        }
    }
}

fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    // SAFETY: caller guarantees `out` points to writable storage for T
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn problem_ref<'a>(p: *const HlProblem) -> Result<&'a HlProblem, Fail> {
    // SAFETY: upheld by the caller of the public entry point
    unsafe { p.as_ref() }.ok_or(Fail::Null)
}

fn lambda_of(lambda: f64, relaxed: bool) -> Result<AngularMomentum, Error> {
    if relaxed {
        return AngularMomentum::relaxed(lambda);
    }
    let doubled = 2.0 * lambda;
    if doubled.fract() != 0.0 || !doubled.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "λ = {lambda} is not half-odd; pass relaxed = true for other values"
        )));
    }
    AngularMomentum::half_odd(doubled as i64)
}

fn boxed(case: FieldCase, lambda: AngularMomentum) -> Result<*mut HlProblem, Error> {
    let gauge = GaugeFunction::new(case.clone())?;
    Ok(Box::into_raw(Box::new(HlProblem {
        case,
        gauge,
        lambda,
    })))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next hl_* call on the same thread.
#[no_mangle]
pub extern "C" fn hl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a problem for a closed field family. `lambda_prime` is ignored
/// for the constant field. Unless `relaxed`, 2λ must be an odd integer.
#[no_mangle]
pub extern "C" fn hl_problem_new(
    case: HlCase,
    p1: f64,
    p2: f64,
    lambda_prime: f64,
    lambda: f64,
    relaxed: bool,
    out: *mut *mut HlProblem,
) -> HlStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null);
        }
        let case = match case {
            HlCase::ConstantField => FieldCase::ConstantField { a0: p1 },
            HlCase::Eckart => FieldCase::Eckart {
                lambda_prime,
                c1: p1,
                d1: p2,
            },
            HlCase::PoschlTeller => FieldCase::PoschlTeller {
                lambda_prime,
                c2: p1,
                d2: p2,
            },
            HlCase::GeneralizedPoschlTeller => FieldCase::GeneralizedPoschlTeller {
                lambda_prime,
                c3: p1,
                d3: p2,
            },
        };
        write(out, boxed(case, lambda_of(lambda, relaxed)?)?)
    })
}

/// Creates a problem from `len` samples of α(u) at increasing u > 0.
///
/// # Safety
/// `u` and `alpha` must each point to `len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn hl_problem_new_tabulated(
    u: *const f64,
    alpha: *const f64,
    len: usize,
    lambda: f64,
    relaxed: bool,
    out: *mut *mut HlProblem,
) -> HlStatus {
    guard(|| {
        if u.is_null() || alpha.is_null() || out.is_null() {
            return Err(Fail::Null);
        }
        // SAFETY: guaranteed by the caller
        let (u, alpha) = unsafe {
            (
                std::slice::from_raw_parts(u, len).to_vec(),
                std::slice::from_raw_parts(alpha, len).to_vec(),
            )
        };
        let table = TabulatedGauge::new(u, alpha)?;
        write(
            out,
            boxed(
                FieldCase::Tabulated(Arc::new(table)),
                lambda_of(lambda, relaxed)?,
            )?,
        )
    })
}

/// Releases a problem. Null is ignored.
///
/// # Safety
/// `problem` must come from hl_problem_new* and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hl_problem_free(problem: *mut HlProblem) {
    if !problem.is_null() {
        // SAFETY: ownership returns from the caller
        drop(unsafe { Box::from_raw(problem) });
    }
}

fn level(e: &SpectrumEntry) -> HlLevel {
    HlLevel {
        n: e.n,
        epsilon: e.epsilon,
        energy_plus: e.dirac_energy_plus,
        energy_minus: e.dirac_energy_minus,
        is_threshold: e.is_threshold,
    }
}

/// Closed-form bound levels for radius `radius`.
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_spectrum(
    problem: *const HlProblem,
    radius: f64,
    out: *mut *mut HlSpectrum,
) -> HlStatus {
    guard(|| {
        let p = unsafe { problem_ref(problem) }?;
        if out.is_null() {
            return Err(Fail::Null);
        }
        let s = susy::spectrum(&p.case, p.lambda, radius)?;
        let levels = s.levels.iter().map(level).collect();
        write(out, Box::into_raw(Box::new(HlSpectrum { levels })))
    })
}

/// Number of bound levels; 0 for a null handle.
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_spectrum_len(spectrum: *const HlSpectrum) -> usize {
    // SAFETY: non-null handles come from hl_spectrum
    unsafe { spectrum.as_ref() }.map_or(0, |s| s.levels.len())
}

/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_spectrum_get(
    spectrum: *const HlSpectrum,
    index: usize,
    out: *mut HlLevel,
) -> HlStatus {
    guard(|| {
        // SAFETY: non-null handles come from hl_spectrum
        let s = unsafe { spectrum.as_ref() }.ok_or(Fail::Null)?;
        let l = s.levels.get(index).ok_or_else(|| Error::IndexError {
            n: index,
            reason: format!("spectrum has {} levels", s.levels.len()),
        })?;
        write(out, *l)
    })
}

/// Releases a spectrum. Null is ignored.
///
/// # Safety
/// `spectrum` must come from hl_spectrum and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hl_spectrum_free(spectrum: *mut HlSpectrum) {
    if !spectrum.is_null() {
        // SAFETY: ownership returns from the caller
        drop(unsafe { Box::from_raw(spectrum) });
    }
}

unsafe fn field_eval(
    problem: *const HlProblem,
    out: *mut f64,
    f: impl FnOnce(&GaugeFunction) -> hyperlandau::Result<f64>,
) -> HlStatus {
    guard(|| {
        let p = unsafe { problem_ref(problem) }?;
        let v = f(&p.gauge)?;
        write(out, v)
    })
}

/// α(u) = qRA/(cħ).
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_alpha(problem: *const HlProblem, u: f64, out: *mut f64) -> HlStatus {
    unsafe { field_eval(problem, out, |g| g.alpha(u)) }
}

/// b(u) = (α sinh u)′/sinh u.
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_magnetic_field(
    problem: *const HlProblem,
    u: f64,
    out: *mut f64,
) -> HlStatus {
    unsafe { field_eval(problem, out, |g| g.magnetic_field(u)) }
}

/// Circulation α·sinh u in flux quanta.
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_flux(problem: *const HlProblem, u: f64, out: *mut f64) -> HlStatus {
    unsafe { field_eval(problem, out, |g| g.flux_in_quanta(u)) }
}

/// Flux through the cap [0, u], excluding any pole string.
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_flux_surface(
    problem: *const HlProblem,
    u: f64,
    out: *mut f64,
) -> HlStatus {
    unsafe { field_eval(problem, out, |g| g.flux_surface(u)) }
}

/// Unnormalized closed-form g₁,ₙ(u) or g₂,ₙ₋₁(u).
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_eigenfunction(
    problem: *const HlProblem,
    n: usize,
    component: HlComponent,
    u: f64,
    out: *mut f64,
) -> HlStatus {
    guard(|| {
        let p = unsafe { problem_ref(problem) }?;
        let c = match component {
            HlComponent::G1 => Component::G1,
            HlComponent::G2 => Component::G2,
        };
        let v = susy::eigenfunction_value(&p.case, p.lambda, n, c, u)?;
        write(out, v)
    })
}

/// Zero-energy state tanh^λ(u/2)·exp(−∫α), normalization free.
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_zero_mode(
    problem: *const HlProblem,
    u: f64,
    out: *mut f64,
) -> HlStatus {
    guard(|| {
        let p = unsafe { problem_ref(problem) }?;
        let v = susy::zero_mode(&p.gauge, p.lambda, u)?;
        write(out, v)
    })
}

/// Whether the zero-energy state is normalizable.
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_zero_mode_admissible(
    problem: *const HlProblem,
    out: *mut bool,
) -> HlStatus {
    guard(|| {
        let p = unsafe { problem_ref(problem) }?;
        write(
            out,
            susy::zero_mode_admissible(&p.gauge, p.lambda).is_admissible(),
        )
    })
}

/// Jacobi polynomial P_n^{(a,b)}(w) for arbitrary real a, b.
#[no_mangle]
pub extern "C" fn hl_jacobi(n: usize, a: f64, b: f64, w: f64, out: *mut f64) -> HlStatus {
    guard(|| {
        let v = susy::jacobi(n, a, b, w)?;
        write(out, v)
    })
}

/// Runs the finite-difference check on [u_min, u_max] with `points` mesh
/// points and `k` levels per partner. `out_pass` receives the verdict and
/// `out_max_deviation` the largest relative level deviation (may be null).
///
/// # Safety
/// Pointer arguments follow the crate-level contract.
#[no_mangle]
pub unsafe extern "C" fn hl_verify(
    problem: *const HlProblem,
    u_min: f64,
    u_max: f64,
    points: usize,
    k: usize,
    out_pass: *mut bool,
    out_max_deviation: *mut f64,
) -> HlStatus {
    guard(|| {
        let p = unsafe { problem_ref(problem) }?;
        if out_pass.is_null() {
            return Err(Fail::Null);
        }
        let grid = RadialGrid::new(u_min, u_max, points)?;
        let report = numeric::verify_partner_spectra(
            &p.case,
            p.lambda,
            &grid,
            k,
            &VerifyOptions::default(),
        )?;
        if !out_max_deviation.is_null() {
            write(out_max_deviation, report.max_relative_deviation)?;
        }
        write(out_pass, report.pass)
    })
}

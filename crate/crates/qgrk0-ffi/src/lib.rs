//! C interface: opaque handles, status codes, JSON-string outputs.
//!
//! Every function that can fail returns a [`QgrStatus`]; on failure a
//! human-readable message is stored per thread and can be fetched with
//! [`qgr_last_error_message`]. Strings returned through out-parameters are
//! owned by the caller and must be released with [`qgr_string_free`];
//! handles with their matching `_free` function. The generated header lives
//! in `include/qgrk0.h`.

use libc::c_char;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use qgrk0::degree::DegreeData;
use qgrk0::poly::LaurentPoly;
use qgrk0::realize::{ModuleDescription, ModuleDescriptionJson, RealizeError};
use qgrk0::roots::Sign;
use qgrk0::{cli, k0, realize, roots, selftest};
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QgrStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Unparseable text input (polynomial or module JSON).
    InvalidInput = 2,
    /// Mathematically invalid request (bad degree data, non-positive class).
    DomainError = 3,
    /// A certification or internal consistency check failed.
    CertificationError = 4,
}

/// Validated degree data handle.
pub struct QgrDegrees(DegreeData);

/// Sparse integer Laurent polynomial handle.
pub struct QgrPoly(LaurentPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn string_out(s: String, out: *mut *mut c_char) -> QgrStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            QgrStatus::Ok
        }
        Err(_) => {
            set_error("output contained a NUL byte".to_string());
            QgrStatus::CertificationError
        }
    }
}

fn json_out<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> QgrStatus {
    string_out(serde_json::to_string(value).expect("serialization"), out)
}

unsafe fn degrees_ref<'a>(handle: *const QgrDegrees) -> Option<&'a DegreeData> {
    handle.as_ref().map(|h| &h.0)
}

unsafe fn poly_ref<'a>(handle: *const QgrPoly) -> Option<&'a LaurentPoly> {
    handle.as_ref().map(|h| &h.0)
}

/// Most recent error message on this thread, or null. Free the result with
/// `qgr_string_free`.
#[no_mangle]
pub extern "C" fn qgr_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Release a string returned by this library.
#[no_mangle]
pub extern "C" fn qgr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Validate generator degrees. On success stores a fresh handle in `out`.
#[no_mangle]
pub extern "C" fn qgr_degrees_new(
    values: *const i64,
    len: usize,
    out: *mut *mut QgrDegrees,
) -> QgrStatus {
    if values.is_null() || out.is_null() {
        return QgrStatus::NullArgument;
    }
    let slice = unsafe { std::slice::from_raw_parts(values, len) };
    match qgrk0::validate_degrees(slice) {
        Ok(dd) => {
            unsafe { *out = Box::into_raw(Box::new(QgrDegrees(dd))) };
            QgrStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            QgrStatus::DomainError
        }
    }
}

#[no_mangle]
pub extern "C" fn qgr_degrees_free(handle: *mut QgrDegrees) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Parse the sparse `exp:coeff,...` text form.
#[no_mangle]
pub extern "C" fn qgr_poly_parse(text: *const c_char, out: *mut *mut QgrPoly) -> QgrStatus {
    if text.is_null() || out.is_null() {
        return QgrStatus::NullArgument;
    }
    let text = match unsafe { CStr::from_ptr(text) }.to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("polynomial text is not valid UTF-8".to_string());
            return QgrStatus::InvalidInput;
        }
    };
    match LaurentPoly::parse(text) {
        Ok(p) => {
            unsafe { *out = Box::into_raw(Box::new(QgrPoly(p))) };
            QgrStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            QgrStatus::InvalidInput
        }
    }
}

#[no_mangle]
pub extern "C" fn qgr_poly_free(handle: *mut QgrPoly) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Canonical sparse text of a polynomial handle.
#[no_mangle]
pub extern "C" fn qgr_poly_text(handle: *const QgrPoly, out: *mut *mut c_char) -> QgrStatus {
    let (Some(p), false) = (unsafe { poly_ref(handle) }, out.is_null()) else {
        return QgrStatus::NullArgument;
    };
    string_out(p.to_text(), out)
}

/// Hilbert coefficients `a_0..a_n` as a JSON array (numbers, or decimal
/// strings beyond 64 bits).
#[no_mangle]
pub extern "C" fn qgr_hilbert_json(
    degrees: *const QgrDegrees,
    n: usize,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), false) = (unsafe { degrees_ref(degrees) }, out.is_null()) else {
        return QgrStatus::NullArgument;
    };
    let coeffs = qgrk0::hilbert::hilbert_coeffs(dd, n);
    json_out(&qgrk0::jsonint::wrap_vec(&coeffs), out)
}

/// Exact sign of `p` at the ordering root: -1, 0, or +1 through `out_sign`.
#[no_mangle]
pub extern "C" fn qgr_sign_at_theta(
    degrees: *const QgrDegrees,
    poly: *const QgrPoly,
    out_sign: *mut i32,
) -> QgrStatus {
    let (Some(dd), Some(p), false) = (
        unsafe { degrees_ref(degrees) },
        unsafe { poly_ref(poly) },
        out_sign.is_null(),
    ) else {
        return QgrStatus::NullArgument;
    };
    let sign = match roots::sign_at_theta(p, dd) {
        Sign::Negative => -1,
        Sign::Zero => 0,
        Sign::Positive => 1,
    };
    unsafe { *out_sign = sign };
    QgrStatus::Ok
}

/// Smallest positive real root of the defining polynomial, pinned to 1e-15.
#[no_mangle]
pub extern "C" fn qgr_theta(degrees: *const QgrDegrees, out: *mut f64) -> QgrStatus {
    let (Some(dd), false) = (unsafe { degrees_ref(degrees) }, out.is_null()) else {
        return QgrStatus::NullArgument;
    };
    let width = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(15));
    unsafe { *out = roots::isolate_theta(dd, &width).midpoint_f64() };
    QgrStatus::Ok
}

/// Canonical class form as JSON: `{degrees, rep, cone}`.
#[no_mangle]
pub extern "C" fn qgr_k0_reduce_json(
    degrees: *const QgrDegrees,
    poly: *const QgrPoly,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), Some(p), false) = (
        unsafe { degrees_ref(degrees) },
        unsafe { poly_ref(poly) },
        out.is_null(),
    ) else {
        return QgrStatus::NullArgument;
    };
    json_out(&k0::reduce(p, dd).to_json(), out)
}

/// Degree-shift action on a class, as JSON.
#[no_mangle]
pub extern "C" fn qgr_k0_shift_json(
    degrees: *const QgrDegrees,
    poly: *const QgrPoly,
    shift: i64,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), Some(p), false) = (
        unsafe { degrees_ref(degrees) },
        unsafe { poly_ref(poly) },
        out.is_null(),
    ) else {
        return QgrStatus::NullArgument;
    };
    json_out(&k0::reduce(p, dd).shift(shift).to_json(), out)
}

/// 1 when the class of `p` is zero (torsion q-polynomial), else 0.
#[no_mangle]
pub extern "C" fn qgr_classify_torsion(
    degrees: *const QgrDegrees,
    poly: *const QgrPoly,
    out: *mut i32,
) -> QgrStatus {
    let (Some(dd), Some(p), false) = (
        unsafe { degrees_ref(degrees) },
        unsafe { poly_ref(poly) },
        out.is_null(),
    ) else {
        return QgrStatus::NullArgument;
    };
    unsafe { *out = i32::from(k0::classify_torsion(p, dd)) };
    QgrStatus::Ok
}

/// Realize a positive class: `{degrees, poly, description, q, verification}`.
#[no_mangle]
pub extern "C" fn qgr_realize_json(
    degrees: *const QgrDegrees,
    poly: *const QgrPoly,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), Some(p), false) = (
        unsafe { degrees_ref(degrees) },
        unsafe { poly_ref(poly) },
        out.is_null(),
    ) else {
        return QgrStatus::NullArgument;
    };
    match realize::realize(p, dd) {
        Ok(description) => {
            let q = realize::q_of_module(&description, dd);
            let verification = realize::verify_realization(p, &description, dd);
            #[derive(serde::Serialize)]
            struct Out {
                description: ModuleDescriptionJson,
                q: String,
                verification: realize::VerificationReport,
            }
            json_out(
                &Out { description: description.to_json(), q: q.to_text(), verification },
                out,
            )
        }
        Err(e @ RealizeError::NotPositive(_)) => {
            set_error(e.to_string());
            QgrStatus::DomainError
        }
        Err(e) => {
            set_error(e.to_string());
            QgrStatus::CertificationError
        }
    }
}

/// Verify a `(polynomial, module description JSON)` pair; returns the
/// verification report as JSON.
#[no_mangle]
pub extern "C" fn qgr_verify_json(
    degrees: *const QgrDegrees,
    poly: *const QgrPoly,
    module_json: *const c_char,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), Some(p), false, false) = (
        unsafe { degrees_ref(degrees) },
        unsafe { poly_ref(poly) },
        module_json.is_null(),
        out.is_null(),
    ) else {
        return QgrStatus::NullArgument;
    };
    let text = match unsafe { CStr::from_ptr(module_json) }.to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("module JSON is not valid UTF-8".to_string());
            return QgrStatus::InvalidInput;
        }
    };
    let parsed: ModuleDescriptionJson = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => {
            set_error(format!("invalid module JSON: {e}"));
            return QgrStatus::InvalidInput;
        }
    };
    let module = match ModuleDescription::from_json(&parsed) {
        Ok(m) => m,
        Err(e) => {
            set_error(format!("invalid module description: {e}"));
            return QgrStatus::InvalidInput;
        }
    };
    json_out(&realize::verify_realization(p, &module, dd), out)
}

/// Degree-data summary: defining polynomial, factorization, ordering root.
#[no_mangle]
pub extern "C" fn qgr_analyze_json(
    degrees: *const QgrDegrees,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), false) = (unsafe { degrees_ref(degrees) }, out.is_null()) else {
        return QgrStatus::NullArgument;
    };
    match cli::analyze_report(dd, &roots::default_isolation_width()) {
        Ok(report) => json_out(&report, out),
        Err(e) => {
            set_error(e.to_string());
            QgrStatus::CertificationError
        }
    }
}

/// Numeric roots, max-modulus certification, and factorization as JSON.
/// Pass `tolerance <= 0` for the degree-dependent default.
#[no_mangle]
pub extern "C" fn qgr_roots_json(
    degrees: *const QgrDegrees,
    tolerance: f64,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), false) = (unsafe { degrees_ref(degrees) }, out.is_null()) else {
        return QgrStatus::NullArgument;
    };
    let tolerance = if tolerance > 0.0 {
        tolerance
    } else {
        roots::default_modulus_tolerance(dd.pairing_degree())
    };
    match cli::roots_report(dd, &roots::default_isolation_width(), tolerance) {
        Ok(report) => json_out(&report, out),
        Err(e) => {
            set_error(e.to_string());
            QgrStatus::CertificationError
        }
    }
}

/// Graph certification report as JSON. Pass `tolerance <= 0` for 1e-12.
#[no_mangle]
pub extern "C" fn qgr_graph_json(
    degrees: *const QgrDegrees,
    tolerance: f64,
    out: *mut *mut c_char,
) -> QgrStatus {
    let (Some(dd), false) = (unsafe { degrees_ref(degrees) }, out.is_null()) else {
        return QgrStatus::NullArgument;
    };
    let tolerance = if tolerance > 0.0 { tolerance } else { 1e-12 };
    match cli::graph_report(dd, tolerance) {
        Ok(report) => json_out(&report, out),
        Err(e) => {
            set_error(e.to_string());
            QgrStatus::CertificationError
        }
    }
}

/// DOT text for the expanded quiver followed by the second graph.
#[no_mangle]
pub extern "C" fn qgr_graph_dot(degrees: *const QgrDegrees, out: *mut *mut c_char) -> QgrStatus {
    let (Some(dd), false) = (unsafe { degrees_ref(degrees) }, out.is_null()) else {
        return QgrStatus::NullArgument;
    };
    let (quiver, second) = qgrk0::qgraph::build_graphs(dd);
    string_out(format!("{}{}", quiver.to_dot(), second.to_dot()), out)
}

/// Run the built-in example suite; returns the number of failed items.
#[no_mangle]
pub extern "C" fn qgr_selftest() -> i32 {
    selftest::run_selftest().iter().filter(|i| !i.passed).count() as i32
}

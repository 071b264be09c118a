//! C ABI over `yagita`.
//!
//! Every function returns a [`YagitaStatus`]; on failure the message is
//! available from [`yagita_last_error`] on the same thread. Strings handed
//! out must be released with [`yagita_string_free`], polynomials with
//! [`yagita_poly_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use yagita::config::Caps;
use yagita::invariant::{gl_value, psi, theorem_value, verify_lower, verify_upper, RingDescriptor};
use yagita::{Error, FpPoly, Prime};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YagitaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Precondition = 3,
    Parse = 4,
    CapExceeded = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque polynomial over F_p.
pub struct YagitaPoly {
    inner: FpPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> YagitaStatus {
    match e {
        Error::Precondition(_) => YagitaStatus::Precondition,
        Error::Parse(_) => YagitaStatus::Parse,
        Error::CapExceeded { .. } => YagitaStatus::CapExceeded,
        Error::InvalidArgument(_) | Error::NotPrime(_) | Error::PrimeTooLarge { .. } | Error::Unsupported(_) => {
            YagitaStatus::InvalidArgument
        }
        _ => YagitaStatus::Internal,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> YagitaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => YagitaStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            YagitaStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            YagitaStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail::Lib(Error::Parse(format!("{what} is not UTF-8"))))
}

unsafe fn write<T>(out: *mut T, v: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    out.write(v);
    Ok(())
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

unsafe fn ring_arg(p: u64, ring: *const c_char) -> Result<RingDescriptor, Fail> {
    let caps = Caps::from_env()?;
    let p = Prime::with_bound(p, caps.prime)?;
    Ok(RingDescriptor::parse(p, str_arg(ring, "ring")?)?)
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn yagita_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn yagita_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Largest power of `p` that is at most `num / den`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_psi(num: u64, den: u64, p: u64, out: *mut u64) -> YagitaStatus {
    guard(|| {
        let v = psi(num, den, Prime::new(p)?)?;
        write(out, v, "out")
    })
}

/// Closed-form invariant of `Sp(2n, O)`; `ring` is `Z`, `Zzeta`, `real` or `custom:L`.
///
/// # Safety
/// `ring` must be a NUL-terminated string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_theorem_value(p: u64, n: u64, ring: *const c_char, out: *mut u64) -> YagitaStatus {
    guard(|| {
        let rd = ring_arg(p, ring)?;
        write(out, theorem_value(n, &rd)?, "out")
    })
}

/// `GL(N, O)` value; `advisory` is set when `N < p - 1`.
///
/// # Safety
/// `ring` must be a NUL-terminated string; `out` and `advisory` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_gl_value(
    p: u64,
    big_n: u64,
    ring: *const c_char,
    out: *mut u64,
    advisory: *mut bool,
) -> YagitaStatus {
    guard(|| {
        let rd = ring_arg(p, ring)?;
        let g = gl_value(big_n, &rd)?;
        write(out, g.value, "out")?;
        write(advisory, g.advisory, "advisory")
    })
}

/// Parses `c0 + c1*x + ...` over F_p into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_poly_parse(p: u64, text: *const c_char, out: *mut *mut YagitaPoly) -> YagitaStatus {
    guard(|| {
        let f = FpPoly::parse(Prime::new(p)?, str_arg(text, "text")?)?;
        write(out, Box::into_raw(Box::new(YagitaPoly { inner: f })), "out")
    })
}

/// Releases a polynomial handle. NULL is ignored.
///
/// # Safety
/// `poly` must come from [`yagita_poly_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn yagita_poly_free(poly: *mut YagitaPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

unsafe fn poly_arg<'a>(poly: *const YagitaPoly) -> Result<&'a FpPoly, Fail> {
    poly.as_ref().map(|p| &p.inner).ok_or(Fail::Null("poly"))
}

/// gcd of the exponents carrying nonzero coefficients.
///
/// # Safety
/// `poly` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_poly_support_gcd(poly: *const YagitaPoly, out: *mut u64) -> YagitaStatus {
    guard(|| {
        let g = poly_arg(poly)?.support_gcd()?;
        write(out, g, "out")
    })
}

/// Text form of the polynomial; free with [`yagita_string_free`].
///
/// # Safety
/// `poly` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_poly_to_string(poly: *const YagitaPoly, out: *mut *mut c_char) -> YagitaStatus {
    guard(|| {
        let s = poly_arg(poly)?.to_string();
        write(out, to_c(s), "out")
    })
}

/// Period-shape verdict as JSON; free with [`yagita_string_free`].
///
/// # Safety
/// `poly` must be a live handle, `json_out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_poly_check_period_form(
    poly: *const YagitaPoly,
    json_out: *mut *mut c_char,
) -> YagitaStatus {
    guard(|| {
        let v = poly_arg(poly)?.check_period_form()?;
        write(json_out, to_c(v.to_json()), "json_out")
    })
}

unsafe fn verify(
    upper: bool,
    p: u64,
    n: u64,
    ring: *const c_char,
    json_out: *mut *mut c_char,
    passed: *mut bool,
) -> YagitaStatus {
    guard(|| {
        let rd = ring_arg(p, ring)?;
        let caps = Caps::from_env()?;
        let report = if upper { verify_upper(n, &rd, &caps)? } else { verify_lower(n, &rd, &caps)? };
        if !passed.is_null() {
            passed.write(report.passed());
        }
        write(json_out, to_c(report.to_json()), "json_out")
    })
}

/// Upper-bound report as JSON (schema 1); `passed` may be NULL.
///
/// # Safety
/// `ring` must be a NUL-terminated string, `json_out` valid for writes,
/// `passed` NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yagita_verify_upper(
    p: u64,
    n: u64,
    ring: *const c_char,
    json_out: *mut *mut c_char,
    passed: *mut bool,
) -> YagitaStatus {
    verify(true, p, n, ring, json_out, passed)
}

/// Lower-bound report as JSON (schema 1); `passed` may be NULL.
///
/// # Safety
/// Same as [`yagita_verify_upper`].
#[no_mangle]
pub unsafe extern "C" fn yagita_verify_lower(
    p: u64,
    n: u64,
    ring: *const c_char,
    json_out: *mut *mut c_char,
    passed: *mut bool,
) -> YagitaStatus {
    verify(false, p, n, ring, json_out, passed)
}

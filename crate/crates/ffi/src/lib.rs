//! C ABI for the `pperm` library.
//!
//! Polynomials cross the boundary as opaque `PpPoly` handles whose
//! coefficients are read back as exact decimal strings. Every fallible call
//! returns a `PpStatus`; on failure `pp_last_error` describes the cause for
//! the calling thread. Strings returned by the library are released with
//! `pp_string_free`, handles with `pp_poly_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pperm::cli::{default_ehr_method, default_volume_method};
use pperm::ehrhart::{ehr, EhrMethod};
use pperm::exactmath::Polynomial;
use pperm::faces::{f_vector, h_poly, HMethod};
use pperm::polytope::{count_pp, vertices, PPSpec};
use pperm::volume::{nvol, nvol_poly_big_n, nvol_poly_n, VolumeMethod};
use pperm::Error;

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PpStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A parameter was malformed or not valid UTF-8.
    InvalidArgument = 2,
    /// The request is outside the range an engine supports.
    OutOfRange = 3,
    /// Independent engines produced different answers.
    Disagreement = 4,
    /// A caller-provided buffer is too small.
    BufferTooSmall = 5,
    /// An internal consistency check failed or the library panicked.
    Internal = 6,
}

/// Opaque exact polynomial with rational coefficients.
pub struct PpPoly {
    poly: Polynomial,
    var: &'static str,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: PpStatus, message: impl Into<String>) -> PpStatus {
    set_error(message.into());
    status
}

fn status_of(err: &Error) -> PpStatus {
    match err {
        Error::OutOfRange(_) => PpStatus::OutOfRange,
        Error::Disagreement(_) => PpStatus::Disagreement,
        Error::Internal(_) => PpStatus::Internal,
        _ => PpStatus::InvalidArgument,
    }
}

/// Runs `body`, turning library errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), PpStatus>) -> PpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PpStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(PpStatus::Internal, "the library panicked"),
    }
}

fn lib<T>(r: pperm::Result<T>) -> Result<T, PpStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn spec(m: usize, n: usize) -> Result<PPSpec, PpStatus> {
    lib(PPSpec::new(m, n))
}

/// Reads an optional method name; null selects the default.
unsafe fn method_name<'a>(name: *const c_char) -> Result<Option<&'a str>, PpStatus> {
    if name.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(name)
        .to_str()
        .map(Some)
        .map_err(|_| fail(PpStatus::InvalidArgument, "method name is not valid UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), PpStatus> {
    if out.is_null() {
        return Err(fail(PpStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), PpStatus> {
    let text =
        CString::new(text).map_err(|_| fail(PpStatus::Internal, "string contains a NUL byte"))?;
    write_out(out, text.into_raw())
}

unsafe fn write_poly(
    out: *mut *mut PpPoly,
    poly: Polynomial,
    var: &'static str,
) -> Result<(), PpStatus> {
    write_out(out, Box::into_raw(Box::new(PpPoly { poly, var })))
}

unsafe fn poly_ref<'a>(p: *const PpPoly) -> Result<&'a PpPoly, PpStatus> {
    p.as_ref()
        .ok_or_else(|| fail(PpStatus::NullPointer, "polynomial handle is null"))
}

/// Ehrhart polynomial of `P(m, n)` in `t`. `method` names an engine
/// (e.g. "interpolate", "draconian"); null picks the default for the size.
///
/// # Safety
/// `method` is null or a NUL-terminated string; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_ehrhart(
    m: usize,
    n: usize,
    method: *const c_char,
    out: *mut *mut PpPoly,
) -> PpStatus {
    guard(|| {
        let chosen = match method_name(method)? {
            Some(name) => lib(EhrMethod::parse(name))?,
            None => lib(default_ehr_method(m, n))?,
        };
        let poly = lib(ehr(m, n, chosen, 1))?;
        write_poly(out, poly, "t")
    })
}

/// h-polynomial of `P(m, n)` in `t` from the face census.
///
/// # Safety
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_h_poly(m: usize, n: usize, out: *mut *mut PpPoly) -> PpStatus {
    guard(|| {
        spec(m, n)?;
        let poly = lib(h_poly(m, n, HMethod::FromF))?;
        write_poly(out, poly, "t")
    })
}

/// Normalized volume of `P(m, ·)` as a polynomial, valid for `n >= m - 1`.
/// With `shifted` false the variable is `n`; otherwise it is `N = n - m + 1`.
///
/// # Safety
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_volume_poly(
    m: usize,
    shifted: bool,
    out: *mut *mut PpPoly,
) -> PpStatus {
    guard(|| {
        if m == 0 {
            return Err(fail(PpStatus::InvalidArgument, "m must be positive"));
        }
        if shifted {
            write_poly(out, nvol_poly_big_n(m), "N")
        } else {
            write_poly(out, nvol_poly_n(m), "n")
        }
    })
}

/// Degree of the polynomial, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `p` is null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pp_poly_degree(p: *const PpPoly) -> i64 {
    match p.as_ref().and_then(|p| p.poly.degree()) {
        Some(d) => d as i64,
        None => -1,
    }
}

/// Coefficient of `x^i` as an exact string such as "7/2".
///
/// # Safety
/// `p` is a handle returned by this library; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_poly_coeff(
    p: *const PpPoly,
    i: usize,
    out: *mut *mut c_char,
) -> PpStatus {
    guard(|| {
        let p = poly_ref(p)?;
        write_string(out, p.poly.coeff(i).to_string())
    })
}

/// JSON object with the coefficient strings (lowest degree first), the
/// variable name and a rendered form.
///
/// # Safety
/// `p` is a handle returned by this library; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_poly_to_json(p: *const PpPoly, out: *mut *mut c_char) -> PpStatus {
    guard(|| {
        let p = poly_ref(p)?;
        let value = serde_json::json!({
            "coefficients": p.poly,
            "variable": p.var,
            "polynomial": p.poly.render(p.var),
        });
        write_string(out, value.to_string())
    })
}

/// Releases a polynomial handle. Null is ignored.
///
/// # Safety
/// `p` is null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pp_poly_free(p: *mut PpPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Normalized volume `v(m, n)` as a decimal string. `method` names an
/// engine (e.g. "recursive", "oracle"); null picks the default.
///
/// # Safety
/// `method` is null or a NUL-terminated string; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_volume(
    m: usize,
    n: usize,
    method: *const c_char,
    out: *mut *mut c_char,
) -> PpStatus {
    guard(|| {
        spec(m, n)?;
        let chosen = match method_name(method)? {
            Some(name) => lib(VolumeMethod::parse(name))?,
            None => default_volume_method(m, n),
        };
        let value = lib(nvol(m, n, chosen, 1))?;
        write_string(out, value.to_string())
    })
}

/// Number of lattice points in the dilate `t P(m, n)`.
///
/// # Safety
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_count_points(
    m: usize,
    n: usize,
    t: u64,
    workers: usize,
    out: *mut u64,
) -> PpStatus {
    guard(|| {
        let s = spec(m, n)?;
        write_out(out, count_pp(s, t, workers.max(1)))
    })
}

/// Number of vertices of `P(m, n)`.
///
/// # Safety
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_vertex_count(m: usize, n: usize, out: *mut u64) -> PpStatus {
    guard(|| {
        let s = spec(m, n)?;
        write_out(out, vertices(s).len() as u64)
    })
}

/// Writes `f_0, ..., f_m` into `buf`. `written` receives `m + 1` even when
/// the buffer is too small, so callers can size a retry.
///
/// # Safety
/// `buf` points to `len` writable values (or is null when `len` is 0);
/// `written` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pp_f_vector(
    m: usize,
    n: usize,
    buf: *mut u64,
    len: usize,
    written: *mut usize,
) -> PpStatus {
    guard(|| {
        spec(m, n)?;
        let f = f_vector(m, n);
        write_out(written, f.len())?;
        if len < f.len() {
            return Err(fail(
                PpStatus::BufferTooSmall,
                format!("the f-vector needs {} entries", f.len()),
            ));
        }
        if buf.is_null() {
            return Err(fail(PpStatus::NullPointer, "buffer is null"));
        }
        ptr::copy_nonoverlapping(f.as_ptr(), buf, f.len());
        Ok(())
    })
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn pp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

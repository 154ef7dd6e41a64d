//! C ABI over `cherednik`.
//!
//! Functions return a [`ChStatus`]; results come back through out-pointers.
//! Strings returned by the library are JSON and must be released with
//! [`ch_string_free`]. The message of the last failure on the calling thread
//! is available from [`ch_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cherednik::group::GroupSpec;
use cherednik::jack::{jack_by_intertwiners, jack_by_solve, Composition};
use cherednik::pbw::{check_pbw, rca_forms};
use cherednik::poly::{check_relations, PolyRep};
use cherednik::reptheory::{catalan_series, coxeter_number, exponents_and_freeness, gordon_report, ParamPoint};
use cherednik::scalar::Params;
use cherednik::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    NonGeneric = 5,
    Unsupported = 6,
    /// A check ran and found a counterexample; the JSON report is still returned.
    CheckFailed = 7,
    Internal = 8,
    Panic = 9,
}

/// Opaque handle: a group together with a parameter point.
pub struct ChContext {
    rep: PolyRep,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ChStatus {
    match e {
        Error::Parse(_) => ChStatus::Parse,
        Error::Domain(_) | Error::Pole { .. } => ChStatus::Domain,
        Error::NonGeneric { .. } | Error::SingularIntertwiner(_) => ChStatus::NonGeneric,
        Error::Unsupported(_) => ChStatus::Unsupported,
        Error::Internal(_) => ChStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<ChStatus, (ChStatus, String)>) -> ChStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("panic inside cherednik");
            ChStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (ChStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (ChStatus, String) {
    (ChStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (ChStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (ChStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn write_json(out: *mut *mut c_char, v: &serde_json::Value) -> Result<(), (ChStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let s = CString::new(v.to_string()).map_err(|e| (ChStatus::Internal, e.to_string()))?;
    *out = s.into_raw();
    Ok(())
}

fn spec(r: u32, p: u32, n: usize) -> Result<GroupSpec, (ChStatus, String)> {
    GroupSpec::new(r, p, n).map_err(lib_err)
}

/// Creates a context with symbolic parameters.
///
/// # Safety
/// `out` must be a valid pointer; the handle is released with [`ch_context_free`].
#[no_mangle]
pub unsafe extern "C" fn ch_context_new(r: u32, p: u32, n: usize, out: *mut *mut ChContext) -> ChStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let rep = PolyRep::new(Params::generic(spec(r, p, n)?));
        *out = Box::into_raw(Box::new(ChContext { rep }));
        Ok(ChStatus::Ok)
    })
}

/// Creates a context at κ = 1, c_s = (h+1)/h.
///
/// # Safety
/// As for [`ch_context_new`].
#[no_mangle]
pub unsafe extern "C" fn ch_context_new_gordon(r: u32, p: u32, n: usize, out: *mut *mut ChContext) -> ChStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let sp = spec(r, p, n)?;
        let pt = ParamPoint::gordon(&sp).map_err(lib_err)?;
        let rep = PolyRep::new(Params::special(sp, pt).map_err(lib_err)?);
        *out = Box::into_raw(Box::new(ChContext { rep }));
        Ok(ChStatus::Ok)
    })
}

/// # Safety
/// `ctx` must come from a constructor above and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ch_context_free(ctx: *mut ChContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// The eigenvector `f_μ` as JSON; `mu` is a comma-separated composition.
/// `method` 0 solves the triangular system, 1 uses the intertwiner recursion.
///
/// # Safety
/// `ctx`, `mu` and `out` must be valid; `mu` is NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn ch_jack_json(ctx: *const ChContext, mu: *const c_char, method: u32, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let ctx = ctx.as_ref().ok_or_else(null)?;
        let mu = Composition::parse(read_str(mu)?).map_err(lib_err)?;
        if mu.n() != ctx.rep.n() {
            return Err((ChStatus::Domain, format!("{mu} has the wrong number of parts")));
        }
        let v = match method {
            0 => jack_by_solve(&ctx.rep, &mu),
            1 => jack_by_intertwiners(&ctx.rep, &mu),
            m => return Err((ChStatus::Domain, format!("unknown method {m}"))),
        }
        .map_err(lib_err)?;
        write_json(out, &v.to_json())?;
        Ok(ChStatus::Ok)
    })
}

/// Relation and PBW checks as JSON. Returns `CheckFailed` with the report when
/// a check fails.
///
/// # Safety
/// `ctx` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_verify_json(ctx: *const ChContext, max_deg: u32, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let ctx = ctx.as_ref().ok_or_else(null)?;
        let rel = check_relations(&ctx.rep, max_deg);
        let pbw = check_pbw(&rca_forms(ctx.rep.params()), ctx.rep.params().spec());
        let ok = rel.passed() && pbw.passed();
        let v = serde_json::json!({
            "status": if ok { "pass" } else { "fail" },
            "relations": rel,
            "pbw": pbw,
        });
        write_json(out, &v)?;
        Ok(if ok { ChStatus::Ok } else { ChStatus::CheckFailed })
    })
}

/// The report at c_s = (h+1)/h.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_gordon_json(r: u32, p: u32, n: usize, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let rep = gordon_report(&spec(r, p, n)?).map_err(lib_err)?;
        let ok = rep.passed();
        let mut v = serde_json::to_value(&rep).map_err(|e| (ChStatus::Internal, e.to_string()))?;
        v["status"] = (if ok { "pass" } else { "fail" }).into();
        write_json(out, &v)?;
        Ok(if ok { ChStatus::Ok } else { ChStatus::CheckFailed })
    })
}

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_catalan_json(r: u32, p: u32, n: usize, trunc: usize, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let c = catalan_series(&spec(r, p, n)?, trunc).map_err(lib_err)?;
        write_json(out, &serde_json::json!(c))?;
        Ok(ChStatus::Ok)
    })
}

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_exponents_json(r: u32, p: u32, n: usize, m: u32, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let e = exponents_and_freeness(&spec(r, p, n)?, m).map_err(lib_err)?;
        let ok = e.passed();
        write_json(out, &serde_json::json!(e))?;
        Ok(if ok { ChStatus::Ok } else { ChStatus::CheckFailed })
    })
}

/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_coxeter_number(r: u32, p: u32, n: usize, out: *mut u32) -> ChStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = coxeter_number(&spec(r, p, n)?).map_err(lib_err)?;
        Ok(ChStatus::Ok)
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn ch_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn ch_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

//! C interface to the root-system and parabolic-subset library.
//!
//! Systems and subsets are opaque handles released with their `_free`
//! functions. Every fallible call returns a status: `PB_OK` or a nonzero
//! code, with a message available from `pb_last_error` on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with `pb_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use parabolic_core::gallery::{h_counterexample, psl_counterexample};
use parabolic_core::parabolic::{classify, is_parabolic, verify_verdict, Verdict};
use parabolic_core::rootsys::{RootSubset, RootSystem};
use parabolic_core::Error;

pub const PB_OK: i32 = 0;
/// A required pointer argument was null.
pub const PB_NULL_ARGUMENT: i32 = 100;
/// A string argument was not valid UTF-8.
pub const PB_INVALID_UTF8: i32 = 101;
/// The library panicked; this is a bug.
pub const PB_PANIC: i32 = 102;

/// A root system.
pub struct PbSystem(RootSystem);

/// A subset of the roots of one system.
pub struct PbSubset(RootSubset);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(i32, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.code(), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PB_OK,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic".into());
            PB_PANIC
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(PB_NULL_ARGUMENT, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(PB_INVALID_UTF8, "string argument is not UTF-8".into()))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(PB_NULL_ARGUMENT, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(PB_NULL_ARGUMENT, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(PB_PANIC, "output contains a nul byte".into()))?;
    put(out, c.into_raw())
}

fn json_fail(e: serde_json::Error) -> Fail {
    Error::from(e).into()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a catalog system: finite names such as `A2` or `psl(3|3)`, affine
/// `X^(1)` or toroidal `Tn(X)`, the latter two truncated at `window`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_system_from_name(name: *const c_char, window: u32, out: *mut *mut PbSystem) -> i32 {
    guard(|| {
        let sys = RootSystem::by_spec(text(name)?, window)?;
        put(out, Box::into_raw(Box::new(PbSystem(sys))))
    })
}

/// Loads a system from its JSON form.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_system_from_json(json: *const c_char, out: *mut *mut PbSystem) -> i32 {
    guard(|| {
        let sys = RootSystem::from_json_str(text(json)?)?;
        put(out, Box::into_raw(Box::new(PbSystem(sys))))
    })
}

/// # Safety
/// `sys` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pb_system_free(sys: *mut PbSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Number of roots, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pb_system_len(sys: *const PbSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.0.len())
}

/// Dimension of the canonical coordinates, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pb_system_dim(sys: *const PbSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.0.dim())
}

/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pb_system_to_json(sys: *const PbSystem, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let sys = get(sys)?;
        put_string(out, sys.0.to_json().to_string())
    })
}

/// Subset from a list of root ids.
///
/// # Safety
/// `sys` must be a live handle, `ids` must point to `len` values (or be null
/// when `len` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pb_subset_from_ids(
    sys: *const PbSystem,
    ids: *const usize,
    len: usize,
    out: *mut *mut PbSubset,
) -> i32 {
    guard(|| {
        let sys = get(sys)?;
        let ids: &[usize] = if len == 0 {
            &[]
        } else if ids.is_null() {
            return Err(Fail(PB_NULL_ARGUMENT, "null id array".into()));
        } else {
            std::slice::from_raw_parts(ids, len)
        };
        let p = RootSubset::new(&sys.0, ids.iter().copied())?;
        put(out, Box::into_raw(Box::new(PbSubset(p))))
    })
}

/// Subset from `{"system": name, "members": [ids]}`, checked against `sys`.
///
/// # Safety
/// `sys` must be a live handle, `json` a nul-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pb_subset_from_json(sys: *const PbSystem, json: *const c_char, out: *mut *mut PbSubset) -> i32 {
    guard(|| {
        let sys = get(sys)?;
        let p: RootSubset = serde_json::from_str(text(json)?).map_err(json_fail)?;
        sys.0.check_subset(&p)?;
        put(out, Box::into_raw(Box::new(PbSubset(p))))
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pb_subset_free(p: *mut PbSubset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes 1 to `out` when the subset is parabolic, 0 otherwise.
///
/// # Safety
/// Handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pb_is_parabolic(sys: *const PbSystem, p: *const PbSubset, out: *mut i32) -> i32 {
    guard(|| {
        let (sys, p) = (get(sys)?, get(p)?);
        sys.0.check_subset(&p.0)?;
        put(out, i32::from(is_parabolic(&sys.0, &p.0).is_ok()))
    })
}

/// Classifies the subset and writes the verdict JSON, with its certificate.
///
/// # Safety
/// Handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pb_classify(sys: *const PbSystem, p: *const PbSubset, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let (sys, p) = (get(sys)?, get(p)?);
        let v = classify(&sys.0, &p.0)?;
        put_string(out, serde_json::to_string(&v).map_err(json_fail)?)
    })
}

/// Re-checks a verdict JSON against the system and subset; `PB_OK` when the
/// certificate holds.
///
/// # Safety
/// Handles must be live and `verdict` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn pb_verify_verdict(sys: *const PbSystem, p: *const PbSubset, verdict: *const c_char) -> i32 {
    guard(|| {
        let (sys, p) = (get(sys)?, get(p)?);
        let v: Verdict = serde_json::from_str(text(verdict)?).map_err(json_fail)?;
        verify_verdict(&sys.0, &p.0, &v)?;
        Ok(())
    })
}

/// Report JSON for the H(n) subset, `n >= 10`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pb_gallery_h(n: usize, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let r = h_counterexample(n)?;
        put_string(out, serde_json::to_string(&r).map_err(json_fail)?)
    })
}

/// Report JSON for the psl(m|m) subset, `m >= 3`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pb_gallery_psl(m: usize, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let r = psl_counterexample(m)?;
        put_string(out, serde_json::to_string(&r).map_err(json_fail)?)
    })
}

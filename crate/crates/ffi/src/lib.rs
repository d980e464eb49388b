//! C interface to `mwrsk`.
//!
//! Objects are opaque heap handles owned by the caller and released with the
//! matching `*_free`. Every fallible call returns an [`MwrskStatus`]; on failure
//! `mwrsk_last_error()` describes the problem for the calling thread. Strings
//! handed out by the library are released with `mwrsk_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mwrsk::harness::{self, EnumSpec};
use mwrsk::rsk::LadderTuple;
use mwrsk::{Error, Ladder, Multisegment};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MwrskStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Well-formed input outside the domain of the operation.
    InvalidInput = 4,
    Budget = 5,
    UnknownSuite = 6,
    /// A verification run finished with failures; the report is still returned.
    CheckFailed = 7,
    Internal = 8,
    Panic = 9,
}

/// A multisegment, possibly with dummy segments.
pub struct MwrskMultisegment(Multisegment);

/// A tuple of ladders, as produced by RSK.
pub struct MwrskLadderTuple(LadderTuple);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes were removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MwrskStatus {
    match e {
        Error::Parse { .. } => MwrskStatus::Parse,
        Error::Budget { .. } => MwrskStatus::Budget,
        Error::UnknownSuite(_) => MwrskStatus::UnknownSuite,
        Error::Internal(_) => MwrskStatus::Internal,
        _ => MwrskStatus::InvalidInput,
    }
}

struct Fail(MwrskStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MwrskStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MwrskStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            MwrskStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(MwrskStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(MwrskStatus::InvalidUtf8, e.to_string()))
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(MwrskStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(MwrskStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(MwrskStatus::NullPointer, "null output pointer".into()));
    }
    *out = CString::new(s).map_err(|e| Fail(MwrskStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn mwrsk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn mwrsk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `[1,3]+[2,2]+d(0)` style text or the JSON form.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_multisegment_parse(
    text: *const c_char,
    out: *mut *mut MwrskMultisegment,
) -> MwrskStatus {
    guard(|| put(out, MwrskMultisegment(Multisegment::parse_any(self::text(text)?)?)))
}

/// # Safety
/// `m` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_multisegment_free(m: *mut MwrskMultisegment) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Canonical text form; free with `mwrsk_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_multisegment_to_string(
    m: *const MwrskMultisegment,
    out: *mut *mut c_char,
) -> MwrskStatus {
    guard(|| put_string(out, borrow(m)?.0.to_string()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_multisegment_to_json(m: *const MwrskMultisegment, out: *mut *mut c_char) -> MwrskStatus {
    guard(|| put_string(out, borrow(m)?.0.to_json()))
}

/// Number of segments, dummies included.
///
/// # Safety
/// `m` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_multisegment_len(m: *const MwrskMultisegment) -> usize {
    m.as_ref().map_or(0, |m| m.0.len())
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_multisegment_equal(a: *const MwrskMultisegment, b: *const MwrskMultisegment) -> bool {
    matches!((a.as_ref(), b.as_ref()), (Some(a), Some(b)) if a.0 == b.0)
}

/// One MW step. With `enhanced` set, dummy segments are kept. The removed
/// segment is written to `b_out` and `e_out`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_mw_step(
    m: *const MwrskMultisegment,
    enhanced: bool,
    dagger_out: *mut *mut MwrskMultisegment,
    b_out: *mut i32,
    e_out: *mut i32,
) -> MwrskStatus {
    guard(|| {
        if b_out.is_null() || e_out.is_null() {
            return Err(Fail(MwrskStatus::NullPointer, "null output pointer".into()));
        }
        let m = &borrow(m)?.0;
        let r = if enhanced { mwrsk::mw::mw_step_enhanced(m)? } else { mwrsk::mw::mw_step(m)? };
        *b_out = r.delta_circ.b();
        *e_out = r.delta_circ.e();
        put(dagger_out, MwrskMultisegment(r.m_dagger))
    })
}

/// The MW involution `m -> m#` on a genuine multisegment.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_mw_involution(
    m: *const MwrskMultisegment,
    out: *mut *mut MwrskMultisegment,
) -> MwrskStatus {
    guard(|| put(out, MwrskMultisegment(mwrsk::mw::mw_involution(&borrow(m)?.0)?)))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_rsk(m: *const MwrskMultisegment, out: *mut *mut MwrskLadderTuple) -> MwrskStatus {
    guard(|| put(out, MwrskLadderTuple(mwrsk::rsk::rsk(&borrow(m)?.0))))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_rsk_inverse(
    t: *const MwrskLadderTuple,
    out: *mut *mut MwrskMultisegment,
) -> MwrskStatus {
    guard(|| put(out, MwrskMultisegment(mwrsk::rsk::rsk_inverse(&borrow(t)?.0)?)))
}

/// Socle of `Z(m) x Z(l)`, where `l` must be a ladder.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_socle(
    m: *const MwrskMultisegment,
    ladder: *const MwrskMultisegment,
    out: *mut *mut MwrskMultisegment,
) -> MwrskStatus {
    guard(|| {
        let l = Ladder::try_from(&borrow(ladder)?.0)?;
        put(out, MwrskMultisegment(mwrsk::socle::socle(&borrow(m)?.0, &l)?))
    })
}

/// Parses ladders separated by `;`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_ladder_tuple_parse(text: *const c_char, out: *mut *mut MwrskLadderTuple) -> MwrskStatus {
    guard(|| put(out, MwrskLadderTuple(self::text(text)?.parse()?)))
}

/// # Safety
/// `t` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_ladder_tuple_free(t: *mut MwrskLadderTuple) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_ladder_tuple_len(t: *const MwrskLadderTuple) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_ladder_tuple_to_string(
    t: *const MwrskLadderTuple,
    out: *mut *mut c_char,
) -> MwrskStatus {
    guard(|| put_string(out, borrow(t)?.0.to_string()))
}

/// Copies ladder `i` out as a multisegment.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_ladder_tuple_get(
    t: *const MwrskLadderTuple,
    i: usize,
    out: *mut *mut MwrskMultisegment,
) -> MwrskStatus {
    guard(|| {
        let t = &borrow(t)?.0;
        let l = t
            .ladders
            .get(i)
            .ok_or_else(|| Fail(MwrskStatus::InvalidInput, format!("index {i} out of range ({} ladders)", t.len())))?;
        put(out, MwrskMultisegment(l.to_multisegment()))
    })
}

/// Runs a verification suite on the window `lo..=hi` and writes the JSON
/// report. Returns `CheckFailed` (with the report) if an assertion failed.
///
/// # Safety
/// `suite` must be a nul-terminated string and `json_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mwrsk_verify(
    suite: *const c_char,
    lo: i32,
    hi: i32,
    max_segments: usize,
    dummy_budget: usize,
    json_out: *mut *mut c_char,
) -> MwrskStatus {
    let mut passed = true;
    let status = guard(|| {
        let spec = EnumSpec::window(lo, hi, max_segments).with_dummies(dummy_budget);
        let r = harness::run_suite(text(suite)?, &spec, None)?;
        passed = r.passed();
        put_string(json_out, r.to_json())
    });
    if status == MwrskStatus::Ok && !passed {
        set_error("the suite reported failures".into());
        return MwrskStatus::CheckFailed;
    }
    status
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn parse_and_involution() {
        unsafe {
            let mut m = ptr::null_mut();
            assert_eq!(mwrsk_multisegment_parse(c("[1,1]+[2,2]").as_ptr(), &mut m), MwrskStatus::Ok);
            let mut sharp = ptr::null_mut();
            assert_eq!(mwrsk_mw_involution(m, &mut sharp), MwrskStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(mwrsk_multisegment_to_string(sharp, &mut s), MwrskStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "[1,2]");
            mwrsk_string_free(s);
            mwrsk_multisegment_free(sharp);
            mwrsk_multisegment_free(m);
        }
    }

    #[test]
    fn errors_are_reported() {
        unsafe {
            let mut m = ptr::null_mut();
            assert_eq!(mwrsk_multisegment_parse(c("[1,").as_ptr(), &mut m), MwrskStatus::Parse);
            assert!(m.is_null());
            assert!(!mwrsk_last_error().is_null());
            assert_eq!(mwrsk_multisegment_parse(ptr::null(), &mut m), MwrskStatus::NullPointer);
            let mut out = ptr::null_mut();
            assert_eq!(mwrsk_verify(c("nope").as_ptr(), 1, 2, 1, 0, &mut out), MwrskStatus::UnknownSuite);
            assert_eq!(mwrsk_multisegment_parse(c("[1,1]").as_ptr(), &mut m), MwrskStatus::Ok);
            assert!(mwrsk_last_error().is_null());
            mwrsk_multisegment_free(m);
        }
    }
}

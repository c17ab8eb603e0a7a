//! C ABI over `qstring`.
//!
//! Strings and runs are opaque heap handles created and freed through this
//! API. Every fallible call returns a [`QsStatus`]; on failure a message is
//! available from [`qs_last_error`] on the same thread. Panics never cross
//! the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qstring::bench::RunRecord;
use qstring::lcs::LcsAlgo;
use qstring::ulam::UlamConfig;
use qstring::{Error, Text};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotNonRepetitive = 4,
    LengthMismatch = 5,
    PreconditionBreach = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsLcsAlgo {
    Exact = 0,
    Approx = 1,
    NonrepExact = 2,
    NonrepApprox = 3,
}

/// Plain-data view of a run's witness. Positions are 1-based; zero when
/// unused.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct QsWitness {
    pub pos_a: usize,
    pub pos_b: usize,
    pub length: usize,
    pub value: f64,
}

/// An immutable input string.
pub struct QsText(Text);

/// The record of one algorithm run.
pub struct QsRun(RunRecord);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> QsStatus {
    match e {
        Error::NotNonRepetitive | Error::Repetition { .. } => QsStatus::NotNonRepetitive,
        Error::LengthMismatch(..) => QsStatus::LengthMismatch,
        Error::IndicatorPrecondition { .. } => QsStatus::PreconditionBreach,
        _ => QsStatus::InvalidInput,
    }
}

/// Runs `f`, turning errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (QsStatus, String)>) -> QsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QsStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (QsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (QsStatus, String) {
    (QsStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `p` is null or points to a live handle produced by this library.
unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, (QsStatus, String)> {
    p.as_ref().ok_or_else(null)
}

fn store<T>(out: *mut *mut T, value: T) -> Result<(), (QsStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    // SAFETY: checked non-null; the caller provides a writable slot.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

/// Message of the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn qs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a string from `len` integer symbols below `alphabet`.
///
/// # Safety
/// `symbols` points to `len` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qs_text_from_symbols(
    symbols: *const u32,
    len: usize,
    alphabet: u64,
    non_repetitive: bool,
    out: *mut *mut QsText,
) -> QsStatus {
    guard(|| {
        if symbols.is_null() && len > 0 {
            return Err(null());
        }
        let chars = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(symbols, len).to_vec()
        };
        let text = if non_repetitive {
            Text::non_repetitive(chars, alphabet)
        } else {
            Text::new(chars, alphabet)
        };
        store(out, QsText(text.map_err(lib_err)?))
    })
}

/// Builds a string from NUL-terminated UTF-8; symbols are code points.
///
/// # Safety
/// `s` is a valid C string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qs_text_from_utf8(s: *const c_char, non_repetitive: bool, out: *mut *mut QsText) -> QsStatus {
    guard(|| {
        if s.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(s)
            .to_str()
            .map_err(|e| (QsStatus::InvalidUtf8, e.to_string()))?;
        let mut text = Text::from_utf8(s).map_err(lib_err)?;
        if non_repetitive {
            text = text.into_non_repetitive().map_err(lib_err)?;
        }
        store(out, QsText(text))
    })
}

/// Length of `t`, or 0 for null.
///
/// # Safety
/// `t` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_text_len(t: *const QsText) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// # Safety
/// `t` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qs_text_free(t: *mut QsText) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Longest common substring. `epsilon` is read only by the approximate
/// algorithms. With `check`, the run is compared against the exact oracle.
///
/// # Safety
/// `a`, `b` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qs_lcs(
    a: *const QsText,
    b: *const QsText,
    algo: QsLcsAlgo,
    epsilon: f64,
    seed: u64,
    check: bool,
    out: *mut *mut QsRun,
) -> QsStatus {
    guard(|| {
        let (a, b) = (&deref(a)?.0, &deref(b)?.0);
        let algo = match algo {
            QsLcsAlgo::Exact => LcsAlgo::Exact,
            QsLcsAlgo::Approx => LcsAlgo::Approx(epsilon),
            QsLcsAlgo::NonrepExact => LcsAlgo::NonrepExact,
            QsLcsAlgo::NonrepApprox => LcsAlgo::NonrepApprox(epsilon),
        };
        store(out, QsRun(RunRecord::lcs(a, b, algo, seed, check).map_err(lib_err)?))
    })
}

/// Longest palindromic substring.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qs_lps(a: *const QsText, seed: u64, check: bool, out: *mut *mut QsRun) -> QsStatus {
    guard(|| {
        let a = &deref(a)?.0;
        store(out, QsRun(RunRecord::lps(a, seed, check).map_err(lib_err)?))
    })
}

/// `(1 +- epsilon)` estimate of the Ulam distance of two non-repetitive
/// strings.
///
/// # Safety
/// `a`, `b` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qs_ulam(
    a: *const QsText,
    b: *const QsText,
    epsilon: f64,
    seed: u64,
    check: bool,
    out: *mut *mut QsRun,
) -> QsStatus {
    guard(|| {
        let (a, b) = (&deref(a)?.0, &deref(b)?.0);
        let cfg = UlamConfig::new(epsilon);
        store(out, QsRun(RunRecord::ulam(a, b, &cfg, seed, check).map_err(lib_err)?))
    })
}

/// The numeric answer: a length, or the distance estimate.
///
/// # Safety
/// `r` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_run_answer(r: *const QsRun) -> f64 {
    r.as_ref().and_then(|r| r.0.answer.as_f64()).unwrap_or(f64::NAN)
}

/// # Safety
/// `r` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qs_run_witness(r: *const QsRun, out: *mut QsWitness) -> QsStatus {
    guard(|| {
        let r = deref(r)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = r.0.witness.as_ref().map_or_else(QsWitness::default, |w| QsWitness {
            pos_a: w.pos_a,
            pos_b: w.pos_b,
            length: w.length,
            value: w.value,
        });
        Ok(())
    })
}

/// Model cost charged by the run.
///
/// # Safety
/// `r` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_run_charged_cost(r: *const QsRun) -> f64 {
    r.as_ref().map_or(f64::NAN, |r| r.0.ledger.charged_cost)
}

/// Characters the simulation actually read.
///
/// # Safety
/// `r` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_run_sim_reads(r: *const QsRun) -> u64 {
    r.as_ref().map_or(0, |r| r.0.ledger.sim_reads)
}

/// 1 when checked and within contract, 0 when checked and not, -1 when
/// unchecked.
///
/// # Safety
/// `r` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_run_success(r: *const QsRun) -> i32 {
    match r.as_ref().and_then(|r| r.0.success) {
        Some(true) => 1,
        Some(false) => 0,
        None => -1,
    }
}

/// The full run record as JSON; release with [`qs_string_free`]. Null on
/// a null handle.
///
/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_run_json(r: *const QsRun) -> *mut c_char {
    let Some(r) = r.as_ref() else {
        return ptr::null_mut();
    };
    let json = serde_json::to_string(&r.0).expect("plain data");
    CString::new(json).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `r` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qs_run_free(r: *mut QsRun) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

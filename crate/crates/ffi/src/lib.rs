//! C interface to the choosability library.
//!
//! Problems and decisions are opaque handles owned by the caller and released
//! with the matching `*_free` function. Fallible calls return a [`ChError`]
//! and write their result through an out pointer; the message of the last
//! failure on the calling thread is available from
//! [`ch_last_error_message`]. Strings returned by the library are released
//! with [`ch_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use choosability::decide::{decide_with_mode, DecideConfig, DecideMode, Decision, Findings, Verdict};
use choosability::graph::{generate_family, parse_problem, Family, Heuristic, Problem};
use choosability::oracle::{brute_force_choosable, BruteLimits};
use choosability::poly::RunStats;
use choosability::Error;

/// Status codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChError {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    LimitExceeded = 5,
    Panic = 6,
}

/// Verdict codes, equal to the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChVerdict {
    Choosable = 0,
    NotChoosable = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChMode {
    Standard = 0,
    Extended = 1,
    Pipeline = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChHeuristic {
    Input = 0,
    Vsep = 1,
    Md = 2,
    MdProc = 3,
    Over = 4,
    List = 5,
    ListDeg = 6,
    Mdr = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChOptions {
    pub mode: ChMode,
    pub heuristic: ChHeuristic,
    pub branch_limit: usize,
    pub pattern_cap: usize,
    pub feasible_cap: usize,
    pub prune_matching: bool,
}

/// Opaque problem handle.
pub struct ChProblem(Problem);

/// Opaque decision handle.
pub struct ChDecision(Decision);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(code: ChError, msg: impl Into<String>) -> ChError {
    set_error(msg);
    code
}

fn from_lib(e: Error) -> ChError {
    let code = match e {
        Error::Syntax { .. }
        | Error::VertexOutOfRange { .. }
        | Error::DuplicateEdge(..)
        | Error::SelfLoop(_)
        | Error::NonPositiveListSize(_)
        | Error::SizeCount { .. } => ChError::Parse,
        Error::LimitExceeded(_) | Error::Overflow => ChError::LimitExceeded,
        Error::InvalidFamily(_) | Error::InvalidArgument(_) => ChError::InvalidArgument,
    };
    fail(code, e.to_string())
}

/// Runs `f`, turning a panic into [`ChError::Panic`].
fn guarded(f: impl FnOnce() -> ChError) -> ChError {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(ChError::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ChError> {
    if s.is_null() {
        return Err(fail(ChError::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(ChError::InvalidUtf8, "string is not valid UTF-8"))
}

fn heuristic(h: ChHeuristic) -> Heuristic {
    match h {
        ChHeuristic::Input => Heuristic::Input,
        ChHeuristic::Vsep => Heuristic::Vsep,
        ChHeuristic::Md => Heuristic::Md,
        ChHeuristic::MdProc => Heuristic::MdProc,
        ChHeuristic::Over => Heuristic::Over,
        ChHeuristic::List => Heuristic::List,
        ChHeuristic::ListDeg => Heuristic::ListDeg,
        ChHeuristic::Mdr => Heuristic::Mdr,
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn ch_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Default options: pipeline mode, MD+PROC ordering.
#[no_mangle]
pub extern "C" fn ch_options_default() -> ChOptions {
    let d = DecideConfig::default();
    ChOptions {
        mode: ChMode::Pipeline,
        heuristic: ChHeuristic::MdProc,
        branch_limit: d.branch_limit,
        pattern_cap: d.pattern_cap,
        feasible_cap: d.feasible_cap,
        prune_matching: d.prune_matching,
    }
}

/// Parses a problem in the text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_problem_parse(text: *const c_char, out: *mut *mut ChProblem) -> ChError {
    guarded(|| {
        if out.is_null() {
            return fail(ChError::NullPointer, "null out pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(code) => return code,
        };
        match parse_problem(text) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(ChProblem(p)));
                ChError::Ok
            }
            Err(e) => from_lib(e),
        }
    })
}

/// Builds a problem from a named test family, e.g. `"glued-cliques"` with
/// parameters `{2, 3}`.
///
/// # Safety
/// `family` must be a NUL-terminated string, `params` must point to `len`
/// readable values (or be NULL when `len` is 0), and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_problem_generate(
    family: *const c_char,
    params: *const usize,
    len: usize,
    out: *mut *mut ChProblem,
) -> ChError {
    guarded(|| {
        if out.is_null() {
            return fail(ChError::NullPointer, "null out pointer");
        }
        *out = ptr::null_mut();
        let name = match read_str(family) {
            Ok(t) => t,
            Err(code) => return code,
        };
        let params: &[usize] = match (params.is_null(), len) {
            (_, 0) => &[],
            (true, _) => return fail(ChError::NullPointer, "null parameter array"),
            (false, len) => std::slice::from_raw_parts(params, len),
        };
        match Family::from_args(name, params).and_then(generate_family) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(ChProblem(p)));
                ChError::Ok
            }
            Err(e) => from_lib(e),
        }
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_problem_free(p: *mut ChProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a valid problem handle.
#[no_mangle]
pub unsafe extern "C" fn ch_problem_vertex_count(p: *const ChProblem) -> usize {
    p.as_ref().map_or(0, |p| p.0.vertex_count())
}

/// # Safety
/// `p` must be a valid problem handle.
#[no_mangle]
pub unsafe extern "C" fn ch_problem_edge_count(p: *const ChProblem) -> usize {
    p.as_ref().map_or(0, |p| p.0.edge_count())
}

/// Decides choosability of `p` with the given options.
///
/// # Safety
/// `p` must be a valid problem handle, `options` NULL (for defaults) or
/// valid, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_decide(
    p: *const ChProblem,
    options: *const ChOptions,
    out: *mut *mut ChDecision,
) -> ChError {
    guarded(|| {
        if out.is_null() || p.is_null() {
            return fail(ChError::NullPointer, "null problem or out pointer");
        }
        *out = ptr::null_mut();
        let o = options.as_ref().copied().unwrap_or_else(|| ch_options_default());
        let cfg = DecideConfig {
            heuristic: heuristic(o.heuristic),
            branch_limit: o.branch_limit,
            pattern_cap: o.pattern_cap,
            feasible_cap: o.feasible_cap,
            prune_matching: o.prune_matching,
        };
        let mode = match o.mode {
            ChMode::Standard => DecideMode::Standard,
            ChMode::Extended => DecideMode::Extended,
            ChMode::Pipeline => DecideMode::Pipeline,
        };
        match decide_with_mode(&(*p).0, &cfg, mode) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(ChDecision(d)));
                ChError::Ok
            }
            Err(e) => from_lib(e),
        }
    })
}

/// Decides by exhaustive search over list assignments (tiny problems only).
///
/// # Safety
/// `p` must be a valid problem handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_oracle_decide(p: *const ChProblem, out: *mut *mut ChDecision) -> ChError {
    guarded(|| {
        if out.is_null() || p.is_null() {
            return fail(ChError::NullPointer, "null problem or out pointer");
        }
        *out = ptr::null_mut();
        match brute_force_choosable(&(*p).0, &BruteLimits::default()) {
            Ok(verdict) => {
                let d = Decision {
                    verdict,
                    findings: Findings::default(),
                    stats: RunStats::default(),
                };
                *out = Box::into_raw(Box::new(ChDecision(d)));
                ChError::Ok
            }
            Err(e) => from_lib(e),
        }
    })
}

/// # Safety
/// `d` must be a valid decision handle.
#[no_mangle]
pub unsafe extern "C" fn ch_decision_verdict(d: *const ChDecision) -> ChVerdict {
    match d.as_ref().map(|d| &d.0.verdict) {
        Some(Verdict::Choosable { .. }) => ChVerdict::Choosable,
        Some(Verdict::NotChoosable { .. }) => ChVerdict::NotChoosable,
        _ => ChVerdict::Unknown,
    }
}

/// The decision as JSON; release with [`ch_string_free`]. NULL on failure.
///
/// # Safety
/// `d` must be a valid decision handle.
#[no_mangle]
pub unsafe extern "C" fn ch_decision_to_json(d: *const ChDecision) -> *mut c_char {
    let Some(d) = d.as_ref() else {
        set_error("null decision");
        return ptr::null_mut();
    };
    serde_json::to_string(&d.0)
        .ok()
        .and_then(|s| CString::new(s).ok())
        .map_or(ptr::null_mut(), CString::into_raw)
}

/// One-line human-readable verdict; release with [`ch_string_free`].
///
/// # Safety
/// `d` must be a valid decision handle.
#[no_mangle]
pub unsafe extern "C" fn ch_decision_summary(d: *const ChDecision) -> *mut c_char {
    d.as_ref()
        .and_then(|d| CString::new(d.0.verdict.to_string()).ok())
        .map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `d` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_decision_free(d: *mut ChDecision) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

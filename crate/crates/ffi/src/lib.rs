//! C interface: structures and reports are opaque handles, every call returns a
//! [`GdStatus`], and the message of the last failure on the calling thread is kept
//! for [`gd_last_error`].
//!
//! Strings returned through `char **` are owned by the caller and released with
//! [`gd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gdlab::cli::format::StructureFile;
use gdlab::cli::text::render_report;
use gdlab::cli::{check_file, Kind};
use gdlab::conformal::{affinize, build_cobracket, render_structure};
use gdlab::structures::AxiomReport;
use gdlab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GdStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    Precondition = 5,
    Config = 6,
    Io = 7,
    Panic = 8,
}

/// A parsed structure file.
pub struct GdStructure {
    file: StructureFile,
}

/// The outcome of a check.
pub struct GdReport {
    report: AxiomReport,
    text: String,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> GdStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => GdStatus::Parse,
        Error::Dimension(_) => GdStatus::Dimension,
        Error::Precondition(_) => GdStatus::Precondition,
        Error::Config(_) => GdStatus::Config,
        Error::Io(_) => GdStatus::Io,
    }
}

struct Fail(GdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GdStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            GdStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(GdStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(GdStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(GdStatus::NullArgument, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(GdStatus::NullArgument, format!("{what} is null")));
    }
    out.write(v);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed").into_raw()
}

/// Message of the last failed call on this thread; empty if none. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn gd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn gd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a structure file given as JSON text.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_structure_parse(json: *const c_char, out: *mut *mut GdStructure) -> GdStatus {
    guard(|| {
        let file = StructureFile::parse(text(json, "json")?)?;
        put(out, Box::into_raw(Box::new(GdStructure { file })), "out")
    })
}

/// # Safety
/// `s` must come from [`gd_structure_parse`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gd_structure_free(s: *mut GdStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Dimension of the underlying space, 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gd_structure_dim(s: *const GdStructure) -> usize {
    s.as_ref().map_or(0, |s| s.file.dim)
}

/// Canonical JSON with sorted tuples.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_structure_to_json(s: *const GdStructure, out: *mut *mut c_char) -> GdStatus {
    guard(|| {
        let s = deref(s, "structure")?;
        put(out, owned(s.file.to_json()), "out")
    })
}

/// λ-brackets of the affinized algebra, followed by the conformal cobracket built from the file's coalgebra tables.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_conformal_text(s: *const GdStructure, out: *mut *mut c_char) -> GdStatus {
    guard(|| {
        let d = deref(s, "structure")?.file.bialgebra()?;
        let (cs, _) = build_cobracket(&affinize(&d.alg), &d.co)?;
        put(out, owned(render_structure(&cs)), "out")
    })
}

/// Runs the check named by `kind` (the names accepted by `gdlab check --kind`).
/// A failing verdict is reported through the report, not the status.
///
/// # Safety
/// `s` must be a live handle, `kind` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gd_check(s: *const GdStructure, kind: *const c_char, out: *mut *mut GdReport) -> GdStatus {
    guard(|| {
        let s = deref(s, "structure")?;
        let kind: Kind = text(kind, "kind")?.parse()?;
        let (report, extra) = check_file(&s.file, kind)?;
        let text = render_report(&report) + &extra;
        put(out, Box::into_raw(Box::new(GdReport { report, text })), "out")
    })
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gd_report_passed(r: *const GdReport) -> bool {
    r.as_ref().is_some_and(|r| r.report.passed)
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gd_report_violation_count(r: *const GdReport) -> usize {
    r.as_ref().map_or(0, |r| r.report.violations.len())
}

/// The report as printed by `gdlab check`.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gd_report_text(r: *const GdReport, out: *mut *mut c_char) -> GdStatus {
    guard(|| {
        let r = deref(r, "report")?;
        put(out, owned(r.text.clone()), "out")
    })
}

/// # Safety
/// `r` must come from [`gd_check`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gd_report_free(r: *mut GdReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `p` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gd_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    const LIE_TYPE: &str = r#"{"dim": 2, "bracket": [[1, 2, 2, 1, 1], [2, 1, 2, -1, 1]], "Delta": [[2, 1, 2, 1, 1]]}"#;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    fn take(p: *mut c_char) -> String {
        let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
        unsafe { gd_string_free(p) };
        s
    }

    #[test]
    fn check_round_trip() {
        unsafe {
            let mut s = ptr::null_mut();
            assert_eq!(gd_structure_parse(c(LIE_TYPE).as_ptr(), &mut s), GdStatus::Ok);
            assert_eq!(gd_structure_dim(s), 2);
            let mut r = ptr::null_mut();
            assert_eq!(gd_check(s, c("gd-bialg").as_ptr(), &mut r), GdStatus::Ok);
            assert!(gd_report_passed(r));
            assert_eq!(gd_report_violation_count(r), 0);
            let mut t = ptr::null_mut();
            assert_eq!(gd_report_text(r, &mut t), GdStatus::Ok);
            assert_eq!(take(t), "verdict: pass\n");
            gd_report_free(r);
            assert_eq!(gd_conformal_text(s, &mut t), GdStatus::Ok);
            assert!(take(t).contains("δ(e2) = ∂e1⊗e2 − e2⊗∂e1"));
            gd_structure_free(s);
        }
    }

    #[test]
    fn errors_set_status_and_message() {
        unsafe {
            let mut s = ptr::null_mut();
            assert_eq!(gd_structure_parse(c(r#"{"dim": 2"#).as_ptr(), &mut s), GdStatus::Parse);
            assert!(s.is_null());
            assert!(CStr::from_ptr(gd_last_error()).to_str().unwrap().starts_with("parse error"));
            assert_eq!(gd_structure_parse(ptr::null(), &mut s), GdStatus::NullArgument);
            assert_eq!(gd_structure_parse(c(LIE_TYPE).as_ptr(), &mut s), GdStatus::Ok);
            let mut r = ptr::null_mut();
            assert_eq!(gd_check(s, c("nonsense").as_ptr(), &mut r), GdStatus::Config);
            assert_eq!(gd_check(s, c("rep").as_ptr(), &mut r), GdStatus::Parse);
            assert!(r.is_null());
            gd_structure_free(s);
            gd_structure_free(ptr::null_mut());
            assert!(!gd_report_passed(ptr::null()));
        }
    }
}

//! C ABI over `connsys`.
//!
//! Systems are opaque handles created from instance JSON and released with
//! `connsys_system_free`. Every fallible call returns a `ConnsysStatus`; on
//! failure the message is available from `connsys_last_error_message` on the
//! same thread. Strings handed out by the library are freed with
//! `connsys_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use connsys::audit::{parse_selection, run_theorem_audit, AuditOptions, AuditStatus};
use connsys::decomposition::{branch_width, linear_width};
use connsys::families::{check_family, FamilyKind};
use connsys::io;
use connsys::{ConnectivitySystem, EfficiencyBound, Error, Subset};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnsysStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not UTF-8.
    InvalidUtf8 = 2,
    /// Malformed JSON, unknown labels, or a function that fails validation.
    InvalidInput = 3,
    /// The instance is above a size gate.
    SizeLimit = 4,
    /// The call succeeded and found a violation or counterexample.
    Violation = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Opaque connectivity system.
pub struct ConnsysSystem {
    inner: ConnectivitySystem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg.into()));
}

fn fail(e: Error) -> ConnsysStatus {
    let status = match e {
        Error::SizeLimit { .. } | Error::GroundSetTooLarge { .. } => ConnsysStatus::SizeLimit,
        _ => ConnsysStatus::InvalidInput,
    };
    set_error(e.to_string());
    status
}

fn guard(body: impl FnOnce() -> ConnsysStatus) -> ConnsysStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        set_error(format!("panic: {msg}"));
        ConnsysStatus::Panic
    })
}

/// # Safety
/// `s` must be null or a NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, ConnsysStatus> {
    if s.is_null() {
        set_error(format!("{what} is null"));
        return Err(ConnsysStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(format!("{what} is not UTF-8"));
        ConnsysStatus::InvalidUtf8
    })
}

/// # Safety
/// `sys` must be null or a live handle.
unsafe fn system<'a>(sys: *const ConnsysSystem) -> Result<&'a ConnectivitySystem, ConnsysStatus> {
    sys.as_ref().map(|s| &s.inner).ok_or_else(|| {
        set_error("system handle is null");
        ConnsysStatus::NullPointer
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior NUL").into_raw()
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Parses instance JSON and validates it. On success `*out` owns a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn connsys_system_from_json(json: *const c_char, out: *mut *mut ConnsysSystem) -> ConnsysStatus {
    guard(|| {
        if out.is_null() {
            set_error("out is null");
            return ConnsysStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = attempt!(read_str(json, "json"));
        match io::parse_instance(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ConnsysSystem { inner }));
                ConnsysStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `sys` must be null or a handle from `connsys_system_from_json` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn connsys_system_free(sys: *mut ConnsysSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Number of ground-set elements, 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn connsys_system_size(sys: *const ConnsysSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.n())
}

/// `f` of the subset whose bit `i` marks element `i`.
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn connsys_evaluate(sys: *const ConnsysSystem, subset: u32, out: *mut u32) -> ConnsysStatus {
    guard(|| {
        let sys = attempt!(system(sys));
        if out.is_null() {
            set_error("out is null");
            return ConnsysStatus::NullPointer;
        }
        let a = Subset::from_bits(subset);
        if !a.is_subset_of(sys.full()) {
            set_error(format!("subset {subset:#x} has bits outside the ground set"));
            return ConnsysStatus::InvalidInput;
        }
        *out = sys.evaluate(a);
        ConnsysStatus::Ok
    })
}

/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn connsys_branch_width(sys: *const ConnsysSystem, out: *mut u32) -> ConnsysStatus {
    width(sys, out, branch_width)
}

/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn connsys_linear_width(sys: *const ConnsysSystem, out: *mut u32) -> ConnsysStatus {
    width(sys, out, linear_width)
}

unsafe fn width(
    sys: *const ConnsysSystem,
    out: *mut u32,
    f: fn(&ConnectivitySystem) -> connsys::Result<connsys::decomposition::WidthResult>,
) -> ConnsysStatus {
    guard(|| {
        let sys = attempt!(system(sys));
        if out.is_null() {
            set_error("out is null");
            return ConnsysStatus::NullPointer;
        }
        match f(sys) {
            Ok(w) => {
                *out = w.width;
                ConnsysStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Checks family JSON against a kind such as `"ultrafilter"`. Returns `Ok` when
/// the axioms hold and `Violation` when one fails. If `verdict_json` is not
/// null it receives the verdict as JSON, to be freed with `connsys_string_free`.
///
/// # Safety
/// `sys` must be a live handle, `kind` and `family_json` NUL-terminated strings,
/// and `verdict_json` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn connsys_check_family(
    sys: *const ConnsysSystem,
    kind: *const c_char,
    family_json: *const c_char,
    verdict_json: *mut *mut c_char,
) -> ConnsysStatus {
    guard(|| {
        if !verdict_json.is_null() {
            *verdict_json = ptr::null_mut();
        }
        let sys = attempt!(system(sys));
        let kind = attempt!(read_str(kind, "kind"));
        let text = attempt!(read_str(family_json, "family_json"));
        let run = || -> connsys::Result<_> {
            let kind: FamilyKind = kind.parse()?;
            let fam = io::parse_family(sys, text)?;
            check_family(sys, &fam, kind)
        };
        match run() {
            Ok(v) => {
                if !verdict_json.is_null() {
                    *verdict_json = into_c_string(io::verdict_to_json(sys, &v, None).to_string());
                }
                if v.holds {
                    ConnsysStatus::Ok
                } else {
                    ConnsysStatus::Violation
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// Runs theorem audits (`"all"`, a group name or comma-separated ids) at bound
/// `k`. `*report_json` receives a JSON array of reports. Returns `Violation`
/// when any audit found a counterexample.
///
/// # Safety
/// `sys` must be a live handle, `theorems` a NUL-terminated string and
/// `report_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn connsys_run_audit(
    sys: *const ConnsysSystem,
    theorems: *const c_char,
    k: u32,
    report_json: *mut *mut c_char,
) -> ConnsysStatus {
    guard(|| {
        if report_json.is_null() {
            set_error("report_json is null");
            return ConnsysStatus::NullPointer;
        }
        *report_json = ptr::null_mut();
        let sys = attempt!(system(sys));
        let selection = attempt!(read_str(theorems, "theorems"));
        let run = || -> connsys::Result<_> {
            let ids = parse_selection(selection)?;
            run_theorem_audit(sys, EfficiencyBound(k), &ids, AuditOptions::default())
        };
        match run() {
            Ok(reports) => {
                let found = reports.iter().any(|r| r.status == AuditStatus::CounterexampleFound);
                let json: Vec<_> = reports.iter().map(|r| io::audit_report_to_json(sys, r)).collect();
                *report_json = into_c_string(serde_json::Value::Array(json).to_string());
                if found {
                    ConnsysStatus::Violation
                } else {
                    ConnsysStatus::Ok
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// The last error on this thread as a new string, or null if the last call
/// succeeded. Free with `connsys_string_free`.
#[no_mangle]
pub extern "C" fn connsys_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => into_c_string(msg.replace('\0', " ")),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn connsys_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn connsys_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

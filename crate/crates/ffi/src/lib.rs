//! C interface to `rbhopf`.
//!
//! Groups, operator lists and reports are opaque handles owned by the
//! caller and released with the matching `_free` function. Every fallible
//! call returns an [`RbhopfStatus`]; on failure [`rbhopf_last_error`] holds a
//! message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rbhopf::group::{catalog_group, enumerate_group_rb, GroupMap, GroupTable};
use rbhopf::report::{to_json, verify_operator, Stage, VerificationReport};
use rbhopf::Error;

/// Result of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RbhopfStatus {
    Ok = 0,
    /// A checked identity does not hold.
    IdentityFailed = 1,
    /// Malformed or out-of-range input.
    InvalidInput = 2,
    /// The map given is not a Rota-Baxter operator.
    InvalidOperator = 3,
    /// A size limit was exceeded.
    CapExceeded = 4,
    NullPointer = 5,
    /// The output buffer is too small; the needed length was written.
    BufferTooSmall = 6,
    Panic = 7,
}

/// A finite group given by its Cayley table.
pub struct RbhopfGroup(GroupTable);

/// An enumerated list of operators.
pub struct RbhopfOperators(Vec<GroupMap>);

/// The result of running the pipeline on one operator.
pub struct RbhopfReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> RbhopfStatus {
    match e {
        Error::Identity { .. } | Error::HopfAxiom { .. } => RbhopfStatus::IdentityFailed,
        Error::InvalidOperator(_) => RbhopfStatus::InvalidOperator,
        Error::CapExceeded { .. } => RbhopfStatus::CapExceeded,
        _ => RbhopfStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), RbhopfStatus>) -> RbhopfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RbhopfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            RbhopfStatus::Panic
        }
    }
}

fn fail(e: Error) -> RbhopfStatus {
    set_error(e.to_string());
    status_of(&e)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, RbhopfStatus> {
    if s.is_null() {
        set_error("null string");
        return Err(RbhopfStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not UTF-8");
        RbhopfStatus::InvalidInput
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, RbhopfStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        RbhopfStatus::NullPointer
    })
}

fn out_ptr<T>(out: *mut *mut T) -> Result<(), RbhopfStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(RbhopfStatus::NullPointer);
    }
    Ok(())
}

unsafe fn read_images(images: *const usize, len: usize) -> Result<GroupMap, RbhopfStatus> {
    if images.is_null() && len > 0 {
        set_error("null image array");
        return Err(RbhopfStatus::NullPointer);
    }
    let slice = if len == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(images, len)
    };
    Ok(GroupMap::new(slice.to_vec()))
}

/// The message for the last failed call on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rbhopf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn rbhopf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Looks up a catalog group such as `"S3"` or `"Z2xZ4"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_group_from_name(name: *const c_char, out: *mut *mut RbhopfGroup) -> RbhopfStatus {
    guard(|| {
        out_ptr(out)?;
        let name = read_str(name)?;
        let g = catalog_group(name).map_err(fail)?;
        *out = Box::into_raw(Box::new(RbhopfGroup(g)));
        Ok(())
    })
}

/// Parses a Cayley table: `order n` followed by n rows of n indices.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_group_from_table(text: *const c_char, out: *mut *mut RbhopfGroup) -> RbhopfStatus {
    guard(|| {
        out_ptr(out)?;
        let text = read_str(text)?;
        let g = GroupTable::parse_cayley("table", text).map_err(fail)?;
        *out = Box::into_raw(Box::new(RbhopfGroup(g)));
        Ok(())
    })
}

/// # Safety
/// `group` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_group_free(group: *mut RbhopfGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Order of the group, 0 for NULL.
///
/// # Safety
/// `group` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_group_order(group: *const RbhopfGroup) -> usize {
    group.as_ref().map_or(0, |g| g.0.order())
}

/// Checks the operator identity on group elements. Returns
/// `InvalidOperator` with the failing pair in the error message.
///
/// # Safety
/// `group` must be a live handle and `images` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_check_operator(
    group: *const RbhopfGroup,
    images: *const usize,
    len: usize,
) -> RbhopfStatus {
    guard(|| {
        let g = deref(group)?;
        let f = read_images(images, len)?;
        rbhopf::report::require_group_rb(&g.0, &f).map_err(fail)
    })
}

/// Every operator on the group, refusing orders above `cap`.
///
/// # Safety
/// `group` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_enumerate(
    group: *const RbhopfGroup,
    cap: usize,
    out: *mut *mut RbhopfOperators,
) -> RbhopfStatus {
    guard(|| {
        out_ptr(out)?;
        let g = deref(group)?;
        let ops = enumerate_group_rb(&g.0, cap).map_err(fail)?;
        *out = Box::into_raw(Box::new(RbhopfOperators(ops)));
        Ok(())
    })
}

/// # Safety
/// `ops` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_operators_count(ops: *const RbhopfOperators) -> usize {
    ops.as_ref().map_or(0, |o| o.0.len())
}

/// Copies the images of operator `index` into `buf`. `len` is the buffer
/// length on input; the group order is always written to `needed`.
///
/// # Safety
/// `ops` must be a live handle, `buf` must hold `len` values and `needed`
/// must be writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_operators_get(
    ops: *const RbhopfOperators,
    index: usize,
    buf: *mut usize,
    len: usize,
    needed: *mut usize,
) -> RbhopfStatus {
    guard(|| {
        let ops = deref(ops)?;
        let Some(f) = ops.0.get(index) else {
            set_error(format!("index {index} out of range, {} operators", ops.0.len()));
            return Err(RbhopfStatus::InvalidInput);
        };
        if !needed.is_null() {
            *needed = f.len();
        }
        if len < f.len() {
            set_error(format!("buffer holds {len}, need {}", f.len()));
            return Err(RbhopfStatus::BufferTooSmall);
        }
        if buf.is_null() {
            set_error("null buffer");
            return Err(RbhopfStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(f.images.as_ptr(), buf, f.len());
        Ok(())
    })
}

/// # Safety
/// `ops` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_operators_free(ops: *mut RbhopfOperators) {
    if !ops.is_null() {
        drop(Box::from_raw(ops));
    }
}

/// Runs the pipeline. `stages` is a comma-separated list or NULL for all.
/// A report is produced even when identities fail; check
/// [`rbhopf_report_passed`].
///
/// # Safety
/// `group` must be a live handle, `images` must point to `len` values,
/// `stages` must be NULL or NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_verify(
    group: *const RbhopfGroup,
    images: *const usize,
    len: usize,
    stages: *const c_char,
    out: *mut *mut RbhopfReport,
) -> RbhopfStatus {
    guard(|| {
        out_ptr(out)?;
        let g = deref(group)?;
        let f = read_images(images, len)?;
        let stages = if stages.is_null() {
            Stage::ALL.to_vec()
        } else {
            Stage::parse_list(read_str(stages)?).map_err(fail)?
        };
        let report = verify_operator(&g.0, &f, &stages).map_err(fail)?;
        *out = Box::into_raw(Box::new(RbhopfReport(report)));
        Ok(())
    })
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_report_passed(report: *const RbhopfReport) -> bool {
    report.as_ref().is_some_and(|r| r.0.passed)
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_report_checks(report: *const RbhopfReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.checks_run)
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_report_failures(report: *const RbhopfReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.failures)
}

/// The report as JSON. Free the string with [`rbhopf_string_free`].
/// With `include_timing` false the output is deterministic.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_report_json(
    report: *const RbhopfReport,
    include_timing: bool,
    out: *mut *mut c_char,
) -> RbhopfStatus {
    guard(|| {
        out_ptr(out)?;
        let r = deref(report)?;
        let json = if include_timing {
            to_json(&r.0)
        } else {
            let mut stripped = r.0.clone();
            stripped.timing = None;
            to_json(&stripped)
        }
        .map_err(fail)?;
        *out = CString::new(json).expect("JSON has no interior nul").into_raw();
        Ok(())
    })
}

/// # Safety
/// `report` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_report_free(report: *mut RbhopfReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rbhopf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> *mut RbhopfGroup {
        let name = CString::new(name).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            unsafe { rbhopf_group_from_name(name.as_ptr(), &mut g) },
            RbhopfStatus::Ok
        );
        g
    }

    fn last_error() -> String {
        unsafe { CStr::from_ptr(rbhopf_last_error()) }
            .to_str()
            .unwrap()
            .to_string()
    }

    #[test]
    fn enumerate_z2() {
        let g = group("Z2");
        let mut ops = ptr::null_mut();
        unsafe {
            assert_eq!(rbhopf_group_order(g), 2);
            assert_eq!(rbhopf_enumerate(g, 12, &mut ops), RbhopfStatus::Ok);
            assert_eq!(rbhopf_operators_count(ops), 2);
            let mut buf = [9usize; 2];
            let mut needed = 0;
            assert_eq!(
                rbhopf_operators_get(ops, 1, buf.as_mut_ptr(), 2, &mut needed),
                RbhopfStatus::Ok
            );
            assert_eq!(buf, [0, 1]);
            assert_eq!(
                rbhopf_operators_get(ops, 0, buf.as_mut_ptr(), 1, &mut needed),
                RbhopfStatus::BufferTooSmall
            );
            assert_eq!(needed, 2);
            assert_eq!(
                rbhopf_operators_get(ops, 5, buf.as_mut_ptr(), 2, &mut needed),
                RbhopfStatus::InvalidInput
            );
            rbhopf_operators_free(ops);
            rbhopf_group_free(g);
        }
    }

    #[test]
    fn verify_and_json() {
        let g = group("Z4");
        let images = [0usize, 1, 2, 3];
        let mut r = ptr::null_mut();
        unsafe {
            assert_eq!(
                rbhopf_verify(g, images.as_ptr(), 4, ptr::null(), &mut r),
                RbhopfStatus::Ok
            );
            assert!(rbhopf_report_passed(r));
            assert!(rbhopf_report_checks(r) > 0);
            assert_eq!(rbhopf_report_failures(r), 0);
            let mut s = ptr::null_mut();
            assert_eq!(rbhopf_report_json(r, false, &mut s), RbhopfStatus::Ok);
            let text = CStr::from_ptr(s).to_str().unwrap();
            assert!(text.contains("\"group\": \"Z4\""));
            assert!(!text.contains("\"timing\""));
            rbhopf_string_free(s);
            rbhopf_report_free(r);
            rbhopf_group_free(g);
        }
    }

    #[test]
    fn errors_are_reported() {
        let g = group("Z4");
        let bad = [1usize, 2, 3, 0];
        unsafe {
            assert_eq!(rbhopf_check_operator(g, bad.as_ptr(), 4), RbhopfStatus::InvalidOperator);
            assert!(last_error().contains("(0, 0)"), "{}", last_error());
            let mut r = ptr::null_mut();
            assert_eq!(
                rbhopf_verify(g, bad.as_ptr(), 4, ptr::null(), &mut r),
                RbhopfStatus::InvalidOperator
            );
            assert!(r.is_null());
            let stages = CString::new("operator,bogus").unwrap();
            let ok = [0usize, 1, 2, 3];
            assert_eq!(
                rbhopf_verify(g, ok.as_ptr(), 4, stages.as_ptr(), &mut r),
                RbhopfStatus::InvalidInput
            );
            assert_eq!(
                rbhopf_verify(ptr::null(), ok.as_ptr(), 4, ptr::null(), &mut r),
                RbhopfStatus::NullPointer
            );
            rbhopf_group_free(g);

            let name = CString::new("Z5xZ6").unwrap();
            let mut h = ptr::null_mut();
            assert_eq!(rbhopf_group_from_name(name.as_ptr(), &mut h), RbhopfStatus::CapExceeded);
            let text = CString::new("order 2\n0 1\n1 1\n").unwrap();
            assert_eq!(
                rbhopf_group_from_table(text.as_ptr(), &mut h),
                RbhopfStatus::InvalidInput
            );
            assert!(h.is_null());
        }
    }

    #[test]
    fn version_is_static() {
        let v = unsafe { CStr::from_ptr(rbhopf_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

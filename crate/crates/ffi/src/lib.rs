//! C ABI over the `homrecon` library.
//!
//! Colorings cross the boundary as opaque `HrColoring` handles owned by the
//! caller and released with `hr_coloring_free`. Every fallible call returns
//! an `HrStatus`; on failure `hr_last_error` describes the problem until the
//! next call on the same thread. Strings returned through `char **` are
//! released with `hr_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use homrecon::io::{coloring_json, emit_coloring, parse_coloring, Format};
use homrecon::{
    canonical_form, classify, critical_pairs, generate, Coloring, Error, GeneratorSpec,
};

/// Status codes; the numeric values match the CLI exit codes where they overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HrStatus {
    Ok = 0,
    /// Bad argument: null pointer, unknown format, vertex out of range.
    InvalidArgument = 1,
    /// Malformed or invalid input text.
    Validation = 2,
    /// Instance exceeds a resource guard.
    Resource = 3,
    /// A proven identity failed; please report.
    Invariant = 4,
    /// The library panicked; the handle arguments are left untouched.
    Panic = 5,
}

/// Text formats accepted by `hr_coloring_parse` and `hr_coloring_emit`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HrFormat {
    Json = 0,
    Graph6 = 1,
}

/// Opaque coloring handle.
pub struct HrColoring {
    inner: Coloring,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn status_of(e: &Error) -> HrStatus {
    match e {
        Error::Domain(_) => HrStatus::InvalidArgument,
        Error::Parse { .. } | Error::Validation(_) => HrStatus::Validation,
        Error::Resource(_) => HrStatus::Resource,
        Error::Invariant(_) => HrStatus::Invariant,
    }
}

struct Fail(HrStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn arg(msg: &str) -> Fail {
    Fail(HrStatus::InvalidArgument, msg.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HrStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HrStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside homrecon");
            HrStatus::Panic
        }
    }
}

unsafe fn coloring_ref<'a>(p: *const HrColoring) -> Result<&'a Coloring, Fail> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| arg("null coloring handle"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| arg("null output pointer"))
}

unsafe fn text_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(arg("null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HrStatus::Validation, "string is not UTF-8".into()))
}

fn boxed(c: Coloring) -> *mut HrColoring {
    Box::into_raw(Box::new(HrColoring { inner: c }))
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(HrStatus::Invariant, "output contains a NUL byte".into()))
}

fn check_pair(c: &Coloring, i: usize, j: usize) -> Result<(), Fail> {
    if i == j || i >= c.n() || j >= c.n() {
        return Err(arg(&format!("invalid pair {{{i}, {j}}} for n = {}", c.n())));
    }
    Ok(())
}

fn format_of(f: HrFormat) -> Format {
    match f {
        HrFormat::Json => Format::Json,
        HrFormat::Graph6 => Format::Graph6,
    }
}

/// Message for the last failed call on this thread (empty after success).
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// New all-zero coloring on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_new(n: usize, out: *mut *mut HrColoring) -> HrStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = boxed(Coloring::zeros(n));
        Ok(())
    })
}

/// Parses a coloring from NUL-terminated `text`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_parse(
    text: *const c_char,
    format: HrFormat,
    out: *mut *mut HrColoring,
) -> HrStatus {
    guard(|| {
        let text = text_arg(text)?;
        let out = out_ref(out)?;
        *out = boxed(parse_coloring(text, format_of(format))?);
        Ok(())
    })
}

/// Builds a coloring from a generator spec such as `partition(0,1,2|3,4|5)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_generate(
    spec: *const c_char,
    out: *mut *mut HrColoring,
) -> HrStatus {
    guard(|| {
        let spec: GeneratorSpec = text_arg(spec)?.parse()?;
        let out = out_ref(out)?;
        *out = boxed(generate(&spec)?);
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `c` must be null or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_free(c: *mut HrColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of vertices (0 for a null handle).
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_n(c: *const HrColoring) -> usize {
    c.as_ref().map_or(0, |h| h.inner.n())
}

/// Color of the pair `{i, j}`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_get(
    c: *const HrColoring,
    i: usize,
    j: usize,
    out: *mut u8,
) -> HrStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        check_pair(c, i, j)?;
        *out_ref(out)? = c.get(i, j);
        Ok(())
    })
}

/// Sets the color of the pair `{i, j}` (`color` is 0 or 1).
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_set(
    c: *mut HrColoring,
    i: usize,
    j: usize,
    color: u8,
) -> HrStatus {
    guard(|| {
        let h = c.as_mut().ok_or_else(|| arg("null coloring handle"))?;
        check_pair(&h.inner, i, j)?;
        if color > 1 {
            return Err(arg("color must be 0 or 1"));
        }
        h.inner.set(i, j, color);
        Ok(())
    })
}

/// Serializes a coloring; release the string with `hr_string_free`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_coloring_emit(
    c: *const HrColoring,
    format: HrFormat,
    out: *mut *mut c_char,
) -> HrStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let out = out_ref(out)?;
        *out = c_string(emit_coloring(c, format_of(format)))?;
        Ok(())
    })
}

/// Whether only the coloring and its complement share its homogeneous sets.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_is_reconstructible(c: *const HrColoring, out: *mut bool) -> HrStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        *out_ref(out)? = homrecon::is_reconstructible(c)?;
        Ok(())
    })
}

/// Least distance to a nontrivial reconstruction (0 when reconstructible).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_r_value(c: *const HrColoring, out: *mut usize) -> HrStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        *out_ref(out)? = classify(c)?.r_value;
        Ok(())
    })
}

/// Writes up to `cap` critical pairs into `pairs` as `x0, y0, x1, y1, ...`
/// (so `pairs` needs room for `2 * cap` entries) and the total number of
/// critical pairs into `count`, which may exceed `cap`.
///
/// # Safety
/// `c` must be a live handle; `pairs` must be null (with `cap == 0`) or hold
/// `2 * cap` entries; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_critical_pairs(
    c: *const HrColoring,
    pairs: *mut usize,
    cap: usize,
    count: *mut usize,
) -> HrStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let count = out_ref(count)?;
        if pairs.is_null() && cap > 0 {
            return Err(arg("null pair buffer with nonzero capacity"));
        }
        let found = critical_pairs(c)?;
        for (k, &(x, y)) in found.iter().take(cap).enumerate() {
            *pairs.add(2 * k) = x;
            *pairs.add(2 * k + 1) = y;
        }
        *count = found.len();
        Ok(())
    })
}

/// Canonical representative under relabeling and complementation (n <= 9).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_canonical_form(
    c: *const HrColoring,
    out: *mut *mut HrColoring,
) -> HrStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let out = out_ref(out)?;
        *out = boxed(canonical_form(c)?);
        Ok(())
    })
}

/// Full classification as a JSON object with keys `critical_pairs`,
/// `r_value`, `reconstructible`, `solution_count` and `witness`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_classify_json(c: *const HrColoring, out: *mut *mut c_char) -> HrStatus {
    guard(|| {
        let c = coloring_ref(c)?;
        let out = out_ref(out)?;
        let r = classify(c)?;
        let doc = serde_json::json!({
            "reconstructible": r.reconstructible,
            "solution_count": r.solution_count,
            "r_value": r.r_value,
            "critical_pairs": r.critical_pairs.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
            "witness": r.witness.as_ref().map(coloring_json),
        });
        *out = c_string(doc.to_string())?;
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

//! C ABI for the graph-mosaic enumeration library.
//!
//! Every entry point returns a [`GmStatus`] and reports results through
//! out pointers.  Counts travel as NUL-terminated decimal strings so
//! values beyond 64 bits survive the trip; strings allocated here must
//! be released with [`gm_string_free`], handles with their matching
//! `_free` function.  After a non-`Ok` status the failing thread can
//! read a human-readable description via [`gm_last_error_message`].
//! Panics never cross the boundary; they surface as
//! [`GmStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use graph_mosaic::census;
use graph_mosaic::magnified::AnyMagnified;
use graph_mosaic::state_matrix::{AnyStateMatrices, StateMatrixKind};
use graph_mosaic::verify::{run_suites, VerifyOptions};
use graph_mosaic::{Backend, Error, Mosaic, Side};

/// Result of every `gm_` call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GmStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// An argument was out of range or otherwise unusable.
    InvalidArgument = 2,
    /// The request exceeds a built-in size guard.
    LimitExceeded = 3,
    /// The result does not fit the fixed-width backend.
    Overflow = 4,
    /// Malformed input text.
    ParseError = 5,
    /// A cross-check suite found a mismatch (see the error message).
    VerifyFailed = 6,
    /// A defect inside the library; never expected.
    Internal = 7,
}

/// Backend selector: fixed-width first, bignum on overflow.
pub const GM_BACKEND_AUTO: c_int = 0;
/// Backend selector: checked 128-bit arithmetic only.
pub const GM_BACKEND_FIXED128: c_int = 1;
/// Backend selector: arbitrary precision throughout.
pub const GM_BACKEND_BIGNUM: c_int = 2;

/// State-matrix kind with blank bottom and top.
pub const GM_KIND_X_PLUS: c_int = 0;
/// State-matrix kind with blank bottom, connected top.
pub const GM_KIND_X_MINUS: c_int = 1;
/// State-matrix kind with connected bottom and top.
pub const GM_KIND_O_PLUS: c_int = 2;
/// State-matrix kind with connected bottom, blank top.
pub const GM_KIND_O_MINUS: c_int = 3;

/// Boundary side selector for [`gm_mosaic_boundary`].
pub const GM_SIDE_LEFT: c_int = 0;
pub const GM_SIDE_RIGHT: c_int = 1;
pub const GM_SIDE_TOP: c_int = 2;
pub const GM_SIDE_BOTTOM: c_int = 3;

/// Classification: adjacent tiles disagree on a shared edge.
pub const GM_MOSAIC_INVALID: c_int = 0;
/// Classification: suitably connected, but the outer boundary carries
/// connection points.
pub const GM_MOSAIC_SUITABLY_CONNECTED: c_int = 1;
/// Classification: a graph mosaic (suitably connected, blank boundary).
pub const GM_MOSAIC_GRAPH: c_int = 2;

/// Largest index accepted by [`gm_lucas`].
pub const GM_MAX_LUCAS_INDEX: u64 = 1 << 20;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn remember_error(message: String) {
    let sanitized = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = sanitized);
}

fn status_of(err: &Error) -> GmStatus {
    match err {
        Error::Overflow => GmStatus::Overflow,
        Error::Parse { .. } | Error::InvalidTileId(_) | Error::InvalidCount { .. } => {
            GmStatus::ParseError
        }
        Error::OracleLimit { .. } | Error::DimensionLimit { .. } => GmStatus::LimitExceeded,
        _ => GmStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> GmStatus {
    let status = status_of(&err);
    remember_error(err.to_string());
    status
}

fn invalid(message: impl Into<String>) -> GmStatus {
    remember_error(message.into());
    GmStatus::InvalidArgument
}

fn null_pointer() -> GmStatus {
    remember_error("required pointer argument is NULL".to_owned());
    GmStatus::NullPointer
}

fn guarded(f: impl FnOnce() -> GmStatus) -> GmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            remember_error("internal panic".to_owned());
            GmStatus::Internal
        }
    }
}

fn backend_from(raw: c_int) -> Option<Backend> {
    match raw {
        GM_BACKEND_AUTO => Some(Backend::Auto),
        GM_BACKEND_FIXED128 => Some(Backend::Fixed128),
        GM_BACKEND_BIGNUM => Some(Backend::Bignum),
        _ => None,
    }
}

fn kind_from(raw: c_int) -> Option<StateMatrixKind> {
    match raw {
        GM_KIND_X_PLUS => Some(StateMatrixKind::XPlus),
        GM_KIND_X_MINUS => Some(StateMatrixKind::XMinus),
        GM_KIND_O_PLUS => Some(StateMatrixKind::OPlus),
        GM_KIND_O_MINUS => Some(StateMatrixKind::OMinus),
        _ => None,
    }
}

fn side_from(raw: c_int) -> Option<Side> {
    match raw {
        GM_SIDE_LEFT => Some(Side::Left),
        GM_SIDE_RIGHT => Some(Side::Right),
        GM_SIDE_TOP => Some(Side::Top),
        GM_SIDE_BOTTOM => Some(Side::Bottom),
        _ => None,
    }
}

fn size_from(value: u64, what: &str) -> Result<usize, GmStatus> {
    usize::try_from(value).map_err(|_| invalid(format!("{what} {value} does not fit in usize")))
}

/// Write `text` through the out pointer as an owned C string.
///
/// # Safety
///
/// `out` must be valid for writes.
unsafe fn put_string(out: *mut *mut c_char, text: String) -> GmStatus {
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            GmStatus::Ok
        }
        Err(_) => {
            remember_error("result contained an interior NUL".to_owned());
            GmStatus::Internal
        }
    }
}

/// Library version as a static NUL-terminated string; never freed.
#[no_mangle]
pub extern "C" fn gm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing this thread's most recent failure.
///
/// The pointer stays valid until the next failing `gm_` call on the
/// same thread.  Empty string if nothing failed yet.  Never freed by
/// the caller.
#[no_mangle]
pub extern "C" fn gm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string allocated by this library.  NULL is a no-op.
///
/// # Safety
///
/// `s` must have been produced by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn gm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Count the graph mosaics on a `rows x cols` grid.
///
/// On success `*out_count` receives the exact count as a decimal
/// string; release it with [`gm_string_free`].
///
/// # Safety
///
/// `out_count` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_count(
    rows: u64,
    cols: u64,
    backend: c_int,
    out_count: *mut *mut c_char,
) -> GmStatus {
    if out_count.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let Some(backend) = backend_from(backend) else {
            return invalid(format!("unknown backend code {backend}"));
        };
        let (rows, cols) = match (size_from(rows, "rows"), size_from(cols, "cols")) {
            (Ok(r), Ok(c)) => (r, c),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match census::count_graph_mosaics(rows, cols, backend) {
            Ok(result) => unsafe { put_string(out_count, result.count.to_string()) },
            Err(err) => fail(err),
        }
    })
}

/// The `k`-th boundary weight (2, 1, 3, 4, 7, ...), as a decimal string.
///
/// # Safety
///
/// `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_lucas(k: u64, out_value: *mut *mut c_char) -> GmStatus {
    if out_value.is_null() {
        return null_pointer();
    }
    guarded(|| {
        if k > GM_MAX_LUCAS_INDEX {
            remember_error(format!("index {k} is over the limit {GM_MAX_LUCAS_INDEX}"));
            return GmStatus::LimitExceeded;
        }
        let value = census::lucas(k as usize);
        unsafe { put_string(out_value, value.to_string()) }
    })
}

/// Run every brute-force cross-check suite on grids up to `max_cells`
/// cells.  `Ok` when all suites pass; [`GmStatus::VerifyFailed`] with
/// the first differing value in the error message otherwise.
#[no_mangle]
pub extern "C" fn gm_verify(max_cells: u64) -> GmStatus {
    guarded(|| {
        let max_cells = match size_from(max_cells, "max_cells") {
            Ok(v) => v,
            Err(s) => return s,
        };
        let opts = VerifyOptions {
            max_cells,
            corrupt_weights: false,
        };
        match run_suites(&opts) {
            Ok(outcomes) => {
                for outcome in &outcomes {
                    if let Some(mismatch) = &outcome.failure {
                        remember_error(format!(
                            "{}: mismatch at {}: formula {} vs oracle {}",
                            outcome.name, mismatch.location, mismatch.formula, mismatch.oracle
                        ));
                        return GmStatus::VerifyFailed;
                    }
                }
                GmStatus::Ok
            }
            Err(err) => fail(err),
        }
    })
}

/// Opaque handle: the four column state matrices of one height.
pub struct GmStateMatrices {
    inner: AnyStateMatrices,
}

/// Build the four height-`m` state matrices.
///
/// # Safety
///
/// `out_handle` must be valid for writes.  Release the handle with
/// [`gm_state_matrices_free`].
#[no_mangle]
pub unsafe extern "C" fn gm_state_matrices_build(
    m: u64,
    backend: c_int,
    out_handle: *mut *mut GmStateMatrices,
) -> GmStatus {
    if out_handle.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let Some(backend) = backend_from(backend) else {
            return invalid(format!("unknown backend code {backend}"));
        };
        let m = match size_from(m, "height") {
            Ok(v) => v,
            Err(s) => return s,
        };
        match AnyStateMatrices::build(m, backend) {
            Ok(inner) => {
                let handle = Box::new(GmStateMatrices { inner });
                unsafe { *out_handle = Box::into_raw(handle) };
                GmStatus::Ok
            }
            Err(err) => fail(err),
        }
    })
}

/// Matrix dimension (`2^m`) behind the handle.
///
/// # Safety
///
/// `handle` must be a live handle, `out_dim` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_state_matrices_dim(
    handle: *const GmStateMatrices,
    out_dim: *mut u64,
) -> GmStatus {
    if handle.is_null() || out_dim.is_null() {
        return null_pointer();
    }
    unsafe { *out_dim = (*handle).inner.dim() as u64 };
    GmStatus::Ok
}

/// Entry `(i, j)` (1-based) of the matrix of the given kind, as a
/// decimal string.
///
/// # Safety
///
/// `handle` must be a live handle, `out_value` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_state_matrices_entry(
    handle: *const GmStateMatrices,
    kind: c_int,
    i: u64,
    j: u64,
    out_value: *mut *mut c_char,
) -> GmStatus {
    if handle.is_null() || out_value.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let Some(kind) = kind_from(kind) else {
            return invalid(format!("unknown state matrix kind code {kind}"));
        };
        let (i, j) = match (size_from(i, "row"), size_from(j, "column")) {
            (Ok(i), Ok(j)) => (i, j),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match unsafe { &*handle }.inner.entry(kind, i, j) {
            Ok(value) => unsafe { put_string(out_value, value.to_string()) },
            Err(err) => fail(err),
        }
    })
}

/// Release a state-matrix handle.  NULL is a no-op.
///
/// # Safety
///
/// `handle` must come from [`gm_state_matrices_build`] and not be freed
/// twice.
#[no_mangle]
pub unsafe extern "C" fn gm_state_matrices_free(handle: *mut GmStateMatrices) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Opaque handle: the magnified state matrix of an `m x n` grid.
pub struct GmMagnified {
    inner: AnyMagnified,
}

/// Build the magnified state matrix for an `m x n` grid.
///
/// # Safety
///
/// `out_handle` must be valid for writes.  Release the handle with
/// [`gm_magnified_free`].
#[no_mangle]
pub unsafe extern "C" fn gm_magnified_build(
    m: u64,
    n: u64,
    backend: c_int,
    out_handle: *mut *mut GmMagnified,
) -> GmStatus {
    if out_handle.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let Some(backend) = backend_from(backend) else {
            return invalid(format!("unknown backend code {backend}"));
        };
        let (m, n) = match (size_from(m, "rows"), size_from(n, "cols")) {
            (Ok(m), Ok(n)) => (m, n),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match AnyMagnified::build(m, n, backend) {
            Ok(inner) => {
                let handle = Box::new(GmMagnified { inner });
                unsafe { *out_handle = Box::into_raw(handle) };
                GmStatus::Ok
            }
            Err(err) => fail(err),
        }
    })
}

/// Matrix dimension (`2^(m+n)`) behind the handle.
///
/// # Safety
///
/// `handle` must be a live handle, `out_dim` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_magnified_dim(
    handle: *const GmMagnified,
    out_dim: *mut u64,
) -> GmStatus {
    if handle.is_null() || out_dim.is_null() {
        return null_pointer();
    }
    unsafe { *out_dim = (*handle).inner.dim() as u64 };
    GmStatus::Ok
}

/// Entry `(i, j)` (1-based) as a decimal string.
///
/// # Safety
///
/// `handle` must be a live handle, `out_value` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_magnified_entry(
    handle: *const GmMagnified,
    i: u64,
    j: u64,
    out_value: *mut *mut c_char,
) -> GmStatus {
    if handle.is_null() || out_value.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let (i, j) = match (size_from(i, "row"), size_from(j, "column")) {
            (Ok(i), Ok(j)) => (i, j),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match unsafe { &*handle }.inner.entry(i, j) {
            Ok(value) => unsafe { put_string(out_value, value.to_string()) },
            Err(err) => fail(err),
        }
    })
}

/// Sum of all entries, as a decimal string.
///
/// # Safety
///
/// `handle` must be a live handle, `out_value` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_magnified_entry_sum(
    handle: *const GmMagnified,
    out_value: *mut *mut c_char,
) -> GmStatus {
    if handle.is_null() || out_value.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let sum = unsafe { &*handle }.inner.entry_sum();
        unsafe { put_string(out_value, sum.to_string()) }
    })
}

/// Release a magnified-matrix handle.  NULL is a no-op.
///
/// # Safety
///
/// `handle` must come from [`gm_magnified_build`] and not be freed
/// twice.
#[no_mangle]
pub unsafe extern "C" fn gm_magnified_free(handle: *mut GmMagnified) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Opaque handle: a parsed mosaic.
pub struct GmMosaic {
    inner: Mosaic,
}

/// Parse mosaic text (`"<rows> <cols>"` header, then hex tile rows).
///
/// # Safety
///
/// `text` must be a NUL-terminated string, `out_handle` valid for
/// writes.  Release the handle with [`gm_mosaic_free`].
#[no_mangle]
pub unsafe extern "C" fn gm_mosaic_parse(
    text: *const c_char,
    out_handle: *mut *mut GmMosaic,
) -> GmStatus {
    if text.is_null() || out_handle.is_null() {
        return null_pointer();
    }
    let text = unsafe { CStr::from_ptr(text) };
    guarded(|| {
        let Ok(text) = text.to_str() else {
            remember_error("mosaic text is not valid UTF-8".to_owned());
            return GmStatus::ParseError;
        };
        match Mosaic::parse(text) {
            Ok(inner) => {
                let handle = Box::new(GmMosaic { inner });
                unsafe { *out_handle = Box::into_raw(handle) };
                GmStatus::Ok
            }
            Err(err) => fail(err),
        }
    })
}

/// Grid shape behind the handle.
///
/// # Safety
///
/// `handle` must be a live handle; out pointers must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn gm_mosaic_shape(
    handle: *const GmMosaic,
    out_rows: *mut u64,
    out_cols: *mut u64,
) -> GmStatus {
    if handle.is_null() || out_rows.is_null() || out_cols.is_null() {
        return null_pointer();
    }
    let mosaic = unsafe { &(*handle).inner };
    unsafe {
        *out_rows = mosaic.rows() as u64;
        *out_cols = mosaic.cols() as u64;
    }
    GmStatus::Ok
}

/// Classify the mosaic: [`GM_MOSAIC_GRAPH`],
/// [`GM_MOSAIC_SUITABLY_CONNECTED`], or [`GM_MOSAIC_INVALID`].
///
/// # Safety
///
/// `handle` must be a live handle, `out_class` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_mosaic_classify(
    handle: *const GmMosaic,
    out_class: *mut c_int,
) -> GmStatus {
    if handle.is_null() || out_class.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let mosaic = unsafe { &(*handle).inner };
        let class = if mosaic.is_graph_mosaic() {
            GM_MOSAIC_GRAPH
        } else if mosaic.is_suitably_connected() {
            GM_MOSAIC_SUITABLY_CONNECTED
        } else {
            GM_MOSAIC_INVALID
        };
        unsafe { *out_class = class };
        GmStatus::Ok
    })
}

/// Boundary word of one side as a string over `x`/`o`, read
/// top-to-bottom for the vertical sides and left-to-right otherwise.
///
/// # Safety
///
/// `handle` must be a live handle, `out_word` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gm_mosaic_boundary(
    handle: *const GmMosaic,
    side: c_int,
    out_word: *mut *mut c_char,
) -> GmStatus {
    if handle.is_null() || out_word.is_null() {
        return null_pointer();
    }
    guarded(|| {
        let Some(side) = side_from(side) else {
            return invalid(format!("unknown side code {side}"));
        };
        let word = unsafe { &(*handle).inner }.boundary_state(side);
        unsafe { put_string(out_word, word.to_string()) }
    })
}

/// Release a mosaic handle.  NULL is a no-op.
///
/// # Safety
///
/// `handle` must come from [`gm_mosaic_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gm_mosaic_free(handle: *mut GmMosaic) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

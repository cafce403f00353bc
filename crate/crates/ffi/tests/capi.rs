//! Exercises the C surface from Rust, plus a syntax check of the
//! generated header with the system C compiler.

use std::ffi::{c_char, c_int, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use graph_mosaic_ffi::*;

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { gm_string_free(ptr) };
    text
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(gm_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn count_returns_decimal_strings() {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { gm_count(3, 3, GM_BACKEND_AUTO, &mut out) }, GmStatus::Ok);
    assert_eq!(take_string(out), "71");

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { gm_count(5, 5, GM_BACKEND_BIGNUM, &mut out) }, GmStatus::Ok);
    assert_eq!(take_string(out), "9899808106");

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { gm_count(1, 9, GM_BACKEND_FIXED128, &mut out) }, GmStatus::Ok);
    assert_eq!(take_string(out), "1");
}

#[test]
fn count_rejects_bad_arguments() {
    assert_eq!(
        unsafe { gm_count(3, 3, GM_BACKEND_AUTO, ptr::null_mut()) },
        GmStatus::NullPointer
    );

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { gm_count(3, 3, 99, &mut out) }, GmStatus::InvalidArgument);
    assert!(last_error().contains("backend code 99"), "got {:?}", last_error());

    assert_eq!(unsafe { gm_count(0, 5, GM_BACKEND_AUTO, &mut out) }, GmStatus::InvalidArgument);
    assert_eq!(unsafe { gm_count(40, 40, GM_BACKEND_AUTO, &mut out) }, GmStatus::LimitExceeded);
    assert!(last_error().contains("2^76"), "got {:?}", last_error());
}

#[test]
fn lucas_anchors() {
    for (k, want) in [(0u64, "2"), (1, "1"), (2, "3"), (3, "4"), (10, "123")] {
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { gm_lucas(k, &mut out) }, GmStatus::Ok);
        assert_eq!(take_string(out), want, "L_{k}");
    }
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { gm_lucas(u64::MAX, &mut out) }, GmStatus::LimitExceeded);
}

#[test]
fn verify_passes_on_small_grids() {
    assert_eq!(gm_verify(9), GmStatus::Ok);
    assert_eq!(gm_verify(10_000), GmStatus::LimitExceeded);
}

#[test]
fn state_matrix_handles() {
    let mut handle: *mut GmStateMatrices = ptr::null_mut();
    assert_eq!(
        unsafe { gm_state_matrices_build(1, GM_BACKEND_AUTO, &mut handle) },
        GmStatus::Ok
    );
    let mut dim = 0u64;
    assert_eq!(unsafe { gm_state_matrices_dim(handle, &mut dim) }, GmStatus::Ok);
    assert_eq!(dim, 2);

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { gm_state_matrices_entry(handle, GM_KIND_O_PLUS, 2, 2, &mut out) },
        GmStatus::Ok
    );
    assert_eq!(take_string(out), "5");

    assert_eq!(
        unsafe { gm_state_matrices_entry(handle, 7, 1, 1, &mut out) },
        GmStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { gm_state_matrices_entry(handle, GM_KIND_X_PLUS, 3, 1, &mut out) },
        GmStatus::InvalidArgument
    );

    unsafe { gm_state_matrices_free(handle) };
    unsafe { gm_state_matrices_free(ptr::null_mut()) };
}

#[test]
fn magnified_handles() {
    let mut handle: *mut GmMagnified = ptr::null_mut();
    assert_eq!(
        unsafe { gm_magnified_build(1, 1, GM_BACKEND_AUTO, &mut handle) },
        GmStatus::Ok
    );
    let mut dim = 0u64;
    assert_eq!(unsafe { gm_magnified_dim(handle, &mut dim) }, GmStatus::Ok);
    assert_eq!(dim, 4);

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { gm_magnified_entry(handle, 4, 4, &mut out) }, GmStatus::Ok);
    assert_eq!(take_string(out), "5");

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { gm_magnified_entry_sum(handle, &mut out) }, GmStatus::Ok);
    assert_eq!(take_string(out), "16");

    unsafe { gm_magnified_free(handle) };
}

#[test]
fn mosaic_handles() {
    let text = CString::new("2 2\n21\n43\n").unwrap();
    let mut handle: *mut GmMosaic = ptr::null_mut();
    assert_eq!(unsafe { gm_mosaic_parse(text.as_ptr(), &mut handle) }, GmStatus::Ok);

    let (mut rows, mut cols) = (0u64, 0u64);
    assert_eq!(unsafe { gm_mosaic_shape(handle, &mut rows, &mut cols) }, GmStatus::Ok);
    assert_eq!((rows, cols), (2, 2));

    let mut class: c_int = -1;
    assert_eq!(unsafe { gm_mosaic_classify(handle, &mut class) }, GmStatus::Ok);
    assert_eq!(class, GM_MOSAIC_GRAPH);

    let mut word: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { gm_mosaic_boundary(handle, GM_SIDE_LEFT, &mut word) },
        GmStatus::Ok
    );
    assert_eq!(take_string(word), "xx");
    unsafe { gm_mosaic_free(handle) };

    // A single straight strand leaves connection points on the boundary.
    let text = CString::new("1 1\n5\n").unwrap();
    let mut handle: *mut GmMosaic = ptr::null_mut();
    assert_eq!(unsafe { gm_mosaic_parse(text.as_ptr(), &mut handle) }, GmStatus::Ok);
    let mut class: c_int = -1;
    assert_eq!(unsafe { gm_mosaic_classify(handle, &mut class) }, GmStatus::Ok);
    assert_eq!(class, GM_MOSAIC_SUITABLY_CONNECTED);
    let mut word: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { gm_mosaic_boundary(handle, GM_SIDE_RIGHT, &mut word) },
        GmStatus::Ok
    );
    assert_eq!(take_string(word), "o");
    unsafe { gm_mosaic_free(handle) };

    let bad = CString::new("1 1\nZ\n").unwrap();
    let mut handle: *mut GmMosaic = ptr::null_mut();
    assert_eq!(unsafe { gm_mosaic_parse(bad.as_ptr(), &mut handle) }, GmStatus::ParseError);
    assert!(last_error().contains("line 2"), "got {:?}", last_error());
}

#[test]
fn version_and_error_strings_are_static() {
    let version = unsafe { CStr::from_ptr(gm_version()) }.to_str().unwrap();
    assert!(!version.is_empty());
    let _ = last_error(); // must not crash before any failure happened
}

#[test]
fn generated_header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/graph_mosaic.h");
    assert!(header.exists(), "missing generated header {header:?}");
    let text = std::fs::read_to_string(&header).unwrap();
    for symbol in ["gm_count", "gm_verify", "gm_mosaic_parse", "GM_STATUS_OVERFLOW"] {
        assert!(text.contains(symbol), "header misses {symbol}");
    }

    let probe = Command::new("cc").arg("--version").output();
    if probe.is_err() {
        eprintln!("cc not available; skipping header syntax check");
        return;
    }
    let out = Command::new("cc")
        .args(["-x", "c", "-std=c99", "-fsyntax-only"])
        .arg(&header)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "header failed to compile: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use pperm_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { pp_string_free(s) };
    text
}

fn last_error() -> String {
    let e = pp_last_error();
    assert!(!e.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_owned()
}

fn coeffs(p: *const PpPoly) -> Vec<String> {
    let d = unsafe { pp_poly_degree(p) };
    (0..=d.max(0) as usize)
        .map(|i| {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { pp_poly_coeff(p, i, &mut s) }, PpStatus::Ok);
            take_string(s)
        })
        .collect()
}

#[test]
fn ehrhart_of_p22_has_exact_coefficients() {
    let method = CString::new("interpolate").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { pp_ehrhart(2, 2, method.as_ptr(), &mut p) },
        PpStatus::Ok
    );
    assert_eq!(coeffs(p), ["1", "7/2", "7/2"]);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { pp_poly_to_json(p, &mut json) }, PpStatus::Ok);
    let value: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(
        value["coefficients"],
        serde_json::json!(["1", "7/2", "7/2"])
    );
    assert_eq!(value["variable"], "t");
    unsafe { pp_poly_free(p) };
}

#[test]
fn default_ehrhart_engine_matches_counting() {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { pp_ehrhart(3, 2, ptr::null(), &mut p) },
        PpStatus::Ok
    );
    // 4t^3 + 15/2 t^2 + 9/2 t + 1
    assert_eq!(coeffs(p), ["1", "9/2", "15/2", "4"]);
    for t in 0..=3u64 {
        let mut count = 0;
        assert_eq!(
            unsafe { pp_count_points(3, 2, t, 2, &mut count) },
            PpStatus::Ok
        );
        let t = t as i64;
        assert_eq!(count as i64 * 2, 8 * t * t * t + 15 * t * t + 9 * t + 2);
    }
    unsafe { pp_poly_free(p) };
}

#[test]
fn volume_strings_and_polynomials() {
    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { pp_volume(3, 3, ptr::null(), &mut v) },
        PpStatus::Ok
    );
    assert_eq!(take_string(v), "129");
    let oracle = CString::new("oracle").unwrap();
    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { pp_volume(2, 3, oracle.as_ptr(), &mut v) },
        PpStatus::Ok
    );
    assert_eq!(take_string(v), "17");

    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pp_volume_poly(2, false, &mut p) }, PpStatus::Ok);
    assert_eq!(coeffs(p), ["-1", "0", "2"]);
    unsafe { pp_poly_free(p) };
    assert_eq!(unsafe { pp_volume_poly(2, true, &mut p) }, PpStatus::Ok);
    assert_eq!(coeffs(p), ["1", "4", "2"]);
    unsafe { pp_poly_free(p) };
}

#[test]
fn faces_through_the_abi() {
    let mut count = 0;
    assert_eq!(unsafe { pp_vertex_count(3, 3, &mut count) }, PpStatus::Ok);
    assert_eq!(count, 16);

    let mut buf = [0u64; 4];
    let mut written = 0;
    assert_eq!(
        unsafe { pp_f_vector(3, 3, buf.as_mut_ptr(), 4, &mut written) },
        PpStatus::Ok
    );
    assert_eq!((buf, written), ([16, 24, 10, 1], 4));
    assert_eq!(
        unsafe { pp_f_vector(3, 3, buf.as_mut_ptr(), 2, &mut written) },
        PpStatus::BufferTooSmall
    );
    assert_eq!(written, 4);

    let mut h = ptr::null_mut();
    assert_eq!(unsafe { pp_h_poly(3, 3, &mut h) }, PpStatus::Ok);
    // h(1) is the vertex count
    assert_eq!(coeffs(h), ["1", "7", "7", "1"]);
    unsafe { pp_poly_free(h) };
}

#[test]
fn errors_set_status_and_message() {
    let mut count = 0;
    assert_eq!(
        unsafe { pp_vertex_count(0, 3, &mut count) },
        PpStatus::InvalidArgument
    );
    assert!(!last_error().is_empty());

    let parking = CString::new("parking").unwrap();
    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { pp_volume(2, 3, parking.as_ptr(), &mut v) },
        PpStatus::OutOfRange
    );
    assert!(last_error().contains("n = m - 1"));

    let bogus = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { pp_volume(2, 3, bogus.as_ptr(), &mut v) },
        PpStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { pp_vertex_count(2, 2, ptr::null_mut()) },
        PpStatus::NullPointer
    );
    assert_eq!(
        unsafe { pp_poly_coeff(ptr::null(), 0, &mut v) },
        PpStatus::NullPointer
    );

    assert_eq!(unsafe { pp_vertex_count(2, 2, &mut count) }, PpStatus::Ok);
    assert!(pp_last_error().is_null(), "a success clears the message");
}

#[test]
fn null_handles_are_tolerated() {
    assert_eq!(unsafe { pp_poly_degree(ptr::null()) }, -1);
    unsafe {
        pp_poly_free(ptr::null_mut());
        pp_string_free(ptr::null_mut());
    }
    let version = unsafe { CStr::from_ptr(pp_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    // tests run from <target>/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_header() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib_dir = target_dir();
    let archive = lib_dir.join("libpperm_ffi.a");
    assert!(
        archive.exists(),
        "static library missing at {}",
        archive.display()
    );
    let out = std::env::temp_dir().join(format!("pperm_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "OK");
}

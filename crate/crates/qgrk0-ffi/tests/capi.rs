//! Exercise the C surface through the exported symbols.

use qgrk0_ffi::*;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

fn make_degrees(values: &[i64]) -> *mut QgrDegrees {
    let mut handle: *mut QgrDegrees = ptr::null_mut();
    let status = qgr_degrees_new(values.as_ptr(), values.len(), &mut handle);
    assert_eq!(status, QgrStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn make_poly(text: &str) -> *mut QgrPoly {
    let c = CString::new(text).unwrap();
    let mut handle: *mut QgrPoly = ptr::null_mut();
    let status = qgr_poly_parse(c.as_ptr(), &mut handle);
    assert_eq!(status, QgrStatus::Ok);
    handle
}

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    qgr_string_free(ptr);
    s
}

fn last_error() -> String {
    take_string(qgr_last_error_message())
}

#[test]
fn degree_validation_errors() {
    let mut handle: *mut QgrDegrees = ptr::null_mut();
    let bad = [2i64, 2, 2];
    let status = qgr_degrees_new(bad.as_ptr(), bad.len(), &mut handle);
    assert_eq!(status, QgrStatus::DomainError);
    assert!(last_error().contains("gcd"));

    let status = qgr_degrees_new(ptr::null(), 0, &mut handle);
    assert_eq!(status, QgrStatus::NullArgument);
}

#[test]
fn sign_and_theta() {
    let dd = make_degrees(&[1, 1, 1]);
    let p = make_poly("0:-3,1:13,2:-4");
    let mut sign = 42i32;
    assert_eq!(qgr_sign_at_theta(dd, p, &mut sign), QgrStatus::Ok);
    assert_eq!(sign, 1);

    let mut theta = 0.0f64;
    assert_eq!(qgr_theta(dd, &mut theta), QgrStatus::Ok);
    assert!((theta - (3.0 - 5.0f64.sqrt()) / 2.0).abs() < 1e-12);

    qgr_poly_free(p);
    qgr_degrees_free(dd);
}

#[test]
fn poly_text_round_trip() {
    let p = make_poly(" -2:5 , 0:1 ");
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_poly_text(p, &mut out), QgrStatus::Ok);
    assert_eq!(take_string(out), "-2:5,0:1");
    qgr_poly_free(p);

    let mut bad: *mut QgrPoly = ptr::null_mut();
    let text = CString::new("1;2").unwrap();
    assert_eq!(qgr_poly_parse(text.as_ptr(), &mut bad), QgrStatus::InvalidInput);
    assert!(last_error().contains("malformed"));
}

#[test]
fn hilbert_and_reduce_json() {
    let dd = make_degrees(&[1, 1, 1]);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_hilbert_json(dd, 4, &mut out), QgrStatus::Ok);
    assert_eq!(take_string(out), "[1,3,8,21,55]");

    let p = make_poly("-1:1");
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_k0_reduce_json(dd, p, &mut out), QgrStatus::Ok);
    assert_eq!(
        take_string(out),
        r#"{"degrees":[1,1,1],"rep":[3,-1],"cone":"positive"}"#
    );
    qgr_poly_free(p);
    qgr_degrees_free(dd);
}

#[test]
fn shift_and_torsion() {
    let dd = make_degrees(&[1, 1, 1]);
    let one = make_poly("0:1");
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_k0_shift_json(dd, one, 1, &mut out), QgrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["rep"], serde_json::json!([3, -1]));
    qgr_poly_free(one);

    let f = make_poly("0:1,1:-3,2:1");
    let mut torsion = 0i32;
    assert_eq!(qgr_classify_torsion(dd, f, &mut torsion), QgrStatus::Ok);
    assert_eq!(torsion, 1);
    qgr_poly_free(f);
    qgr_degrees_free(dd);
}

#[test]
fn realize_and_verify() {
    let dd = make_degrees(&[1, 1, 1]);
    let p = make_poly("0:1");
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_realize_json(dd, p, &mut out), QgrStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(report["verification"]["reduce_zero"], serde_json::Value::Bool(true));

    let module = CString::new(report["description"].to_string()).unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_verify_json(dd, p, module.as_ptr(), &mut out), QgrStatus::Ok);
    let verification: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(verification["hilbert_nonnegative"], serde_json::Value::Bool(true));

    // non-positive input is a domain error with a message
    let negative = make_poly("0:-1");
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_realize_json(dd, negative, &mut out), QgrStatus::DomainError);
    assert!(last_error().contains("positive"));
    qgr_poly_free(negative);

    // malformed module JSON is invalid input
    let broken = CString::new("{").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_verify_json(dd, p, broken.as_ptr(), &mut out), QgrStatus::InvalidInput);

    qgr_poly_free(p);
    qgr_degrees_free(dd);
}

#[test]
fn report_functions() {
    let dd = make_degrees(&[5, 6, 7]);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_analyze_json(dd, &mut out), QgrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_roots_json(dd, 0.0, &mut out), QgrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["unique_max_modulus"], serde_json::Value::Bool(true));

    // an absurd tolerance fails certification
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_roots_json(dd, 0.5, &mut out), QgrStatus::CertificationError);
    assert!(last_error().contains("certification"));

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_graph_json(dd, 0.0, &mut out), QgrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["certification"]["period"], serde_json::json!(1));

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(qgr_graph_dot(dd, &mut out), QgrStatus::Ok);
    let dot = take_string(out);
    assert!(dot.contains("digraph quiver {"));
    assert!(dot.contains("digraph second {"));

    qgr_degrees_free(dd);
}

#[test]
fn selftest_is_clean() {
    assert_eq!(qgr_selftest(), 0);
}

#[test]
fn c_program_compiles_links_and_runs() {
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    // cargo emits the cdylib under deps/ during tests and at the profile
    // root on plain builds; accept either
    let profile_dir = manifest.join("../../target/debug");
    let lib_dir = [profile_dir.join("deps"), profile_dir.clone()]
        .into_iter()
        .find(|d| d.join("libqgrk0_ffi.so").exists())
        .expect("cdylib not found next to the test binary");

    let work = std::env::temp_dir().join("qgrk0-capi-smoke");
    std::fs::create_dir_all(&work).unwrap();
    let source = work.join("smoke.c");
    std::fs::write(
        &source,
        r#"
#include "qgrk0.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    int64_t degs[3] = {1, 1, 1};
    QgrDegrees *dd = NULL;
    if (qgr_degrees_new(degs, 3, &dd) != QgrStatus_Ok) return 1;
    QgrPoly *p = NULL;
    if (qgr_poly_parse("0:-3,1:13,2:-4", &p) != QgrStatus_Ok) return 2;
    int32_t sign = 0;
    if (qgr_sign_at_theta(dd, p, &sign) != QgrStatus_Ok) return 3;
    if (sign != 1) return 4;
    char *json = NULL;
    if (qgr_k0_reduce_json(dd, p, &json) != QgrStatus_Ok) return 5;
    if (strstr(json, "\"cone\":\"positive\"") == NULL) return 6;
    printf("%s\n", json);
    qgr_string_free(json);
    qgr_poly_free(p);
    double theta = 0.0;
    if (qgr_theta(dd, &theta) != QgrStatus_Ok) return 7;
    if (theta < 0.38 || theta > 0.39) return 8;
    qgr_degrees_free(dd);
    return 0;
}
"#,
    )
    .unwrap();
    let binary = work.join("smoke");
    let compile = std::process::Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include_dir)
        .arg("-L")
        .arg(&lib_dir)
        .arg("-lqgrk0_ffi")
        .arg(format!("-Wl,-rpath,{}", lib_dir.display()))
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc is available");
    assert!(
        compile.status.success(),
        "compile failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );
    let run = std::process::Command::new(&binary).output().unwrap();
    assert_eq!(run.status.code(), Some(0), "smoke binary failed");
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(stdout.contains("\"cone\":\"positive\""));
}

#[test]
fn generated_header_covers_the_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/qgrk0.h"
    ))
    .expect("header generated by the build script");
    for symbol in [
        "qgr_degrees_new",
        "qgr_degrees_free",
        "qgr_poly_parse",
        "qgr_poly_free",
        "qgr_poly_text",
        "qgr_hilbert_json",
        "qgr_sign_at_theta",
        "qgr_theta",
        "qgr_k0_reduce_json",
        "qgr_k0_shift_json",
        "qgr_classify_torsion",
        "qgr_realize_json",
        "qgr_verify_json",
        "qgr_analyze_json",
        "qgr_roots_json",
        "qgr_graph_json",
        "qgr_graph_dot",
        "qgr_selftest",
        "qgr_string_free",
        "qgr_last_error_message",
        "QgrStatus",
        "QgrDegrees",
        "QgrPoly",
    ] {
        assert!(header.contains(symbol), "header misses {symbol}");
    }
}

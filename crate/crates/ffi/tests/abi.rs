use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use parahoric_ffi::*;

fn open(spec: &str) -> *mut PhRootSystem {
    let s = CString::new(spec).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { ph_root_system_new(s.as_ptr(), &mut h) },
        PhStatus::Ok
    );
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    let p = ph_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn basic_queries() {
    let h = open("B3");
    unsafe {
        assert_eq!(ph_rank(h), 3);
        assert_eq!(ph_num_positive_roots(h), 9);
        let mut order = 0u64;
        assert_eq!(ph_weyl_order(h, &mut order), PhStatus::Ok);
        assert_eq!(order, 48);
        ph_root_system_free(h);
        assert_eq!(ph_rank(ptr::null()), 0);
        ph_root_system_free(ptr::null_mut());
    }
}

#[test]
fn bad_spec_reports_an_error() {
    let s = CString::new("Q9").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { ph_root_system_new(s.as_ptr(), &mut h) },
        PhStatus::InvalidSpec
    );
    assert!(h.is_null());
    assert!(!last_error().is_empty());

    let bytes = [0xffu8, 0];
    let status = unsafe { ph_root_system_new(bytes.as_ptr().cast(), &mut h) };
    assert_eq!(status, PhStatus::InvalidUtf8);
    assert_eq!(
        unsafe { ph_root_system_new(ptr::null(), &mut h) },
        PhStatus::NullPointer
    );
}

#[test]
fn admissibility_and_kernel_inclusion_agree() {
    let h = open("B2");
    unsafe {
        for mask in 0..4u32 {
            let (mut adm, mut inc, mut lemma) = (false, false, false);
            assert_eq!(ph_is_admissible(h, mask, &mut adm), PhStatus::Ok);
            assert_eq!(ph_kernel_inclusion(h, mask, &mut inc), PhStatus::Ok);
            assert_eq!(ph_closure_lemma(h, mask, &mut lemma), PhStatus::Ok);
            assert_eq!(adm, mask != 3);
            assert_eq!(inc, adm);
            assert!(lemma);
        }
        let mut adm = false;
        assert_eq!(
            ph_is_admissible(h, 1 << 2, &mut adm),
            PhStatus::IndexOutOfRange
        );
        assert_eq!(
            ph_is_admissible(h, 0, ptr::null_mut()),
            PhStatus::NullPointer
        );
        assert_eq!(
            ph_is_admissible(ptr::null(), 0, &mut adm),
            PhStatus::NullPointer
        );
        ph_root_system_free(h);
    }
}

#[test]
fn polynomial_buffer_protocol() {
    let h = open("A2");
    unsafe {
        let mut len = 0usize;
        let status = ph_coset_polynomial(h, 0, ptr::null_mut(), 0, &mut len);
        assert_eq!(status, PhStatus::BufferTooSmall);
        assert_eq!(len, 4);
        let mut buf = vec![0i64; len];
        assert_eq!(
            ph_coset_polynomial(h, 0, buf.as_mut_ptr(), buf.len(), &mut len),
            PhStatus::Ok
        );
        assert_eq!(buf, [1, 2, 2, 1]);

        let mut buf = [0i64; 8];
        assert_eq!(
            ph_steinberg_polynomial(h, 0b01, buf.as_mut_ptr(), 8, &mut len),
            PhStatus::Ok
        );
        assert_eq!(&buf[..len], &[0, 1, 1]);
        assert_eq!(
            ph_steinberg_polynomial(h, 0, buf.as_mut_ptr(), 8, &mut len),
            PhStatus::Ok
        );
        assert_eq!(&buf[..len], &[0, 0, 0, 1]);

        let mut count = 0u64;
        assert_eq!(ph_descent_count(h, 0b01, &mut count), PhStatus::Ok);
        assert_eq!(count, 2);
        assert_eq!(
            ph_double_coset_count(h, 0b01, 0b10, &mut count),
            PhStatus::Ok
        );
        assert_eq!(count, 2);
        assert_eq!(ph_double_coset_count(h, 0, 0, &mut count), PhStatus::Ok);
        assert_eq!(count, 6);
        ph_root_system_free(h);
    }
}

#[test]
fn oversized_group_is_refused() {
    let h = open("E8");
    unsafe {
        let mut order = 0u64;
        assert_eq!(ph_weyl_order(h, &mut order), PhStatus::Ok);
        assert_eq!(order, 696_729_600);
        let mut len = 0usize;
        let status = ph_steinberg_polynomial(h, 0, ptr::null_mut(), 0, &mut len);
        assert_eq!(status, PhStatus::GroupTooLarge);
        assert!(last_error().contains("696729600"));
        ph_root_system_free(h);
    }
}

#[test]
fn verify_json_round_trip() {
    let spec = CString::new("A2").unwrap();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(ph_verify_json(spec.as_ptr(), &mut out), PhStatus::Ok);
        let text = CStr::from_ptr(out).to_str().unwrap().to_owned();
        ph_string_free(out);
        assert!(text.contains("\"closure_lemma\""));
        assert!(text.contains("\"schema_version\": \"1\""));

        let e8 = CString::new("E8").unwrap();
        assert_eq!(
            ph_verify_json(e8.as_ptr(), &mut out),
            PhStatus::GroupTooLarge
        );
        assert!(out.is_null());
    }
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/parahoric.h");
    let text = std::fs::read_to_string(&header).expect("header generated by the build script");
    for name in [
        "ph_root_system_new",
        "ph_root_system_free",
        "ph_last_error",
        "ph_weyl_order",
        "ph_is_admissible",
        "ph_kernel_inclusion",
        "ph_steinberg_polynomial",
        "ph_double_coset_count",
        "ph_verify_json",
        "ph_string_free",
        "PH_STATUS_BUFFER_TOO_SMALL",
        "typedef struct PhRootSystem PhRootSystem",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }

    // the header must also be valid C, when a compiler is around
    if let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(&header)
        .output()
    {
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

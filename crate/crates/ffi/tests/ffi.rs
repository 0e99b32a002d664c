use std::ffi::{c_char, CStr, CString};
use std::ptr;

use parabolic_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { pb_string_free(s) };
    out
}

fn system(name: &str, window: u32) -> *mut PbSystem {
    let c = CString::new(name).unwrap();
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { pb_system_from_name(c.as_ptr(), window, &mut sys) }, PB_OK);
    sys
}

#[test]
fn classify_and_verify_round_trip() {
    let sys = system("A2", 4);
    assert_eq!(unsafe { pb_system_len(sys) }, 6);
    let ids = [0usize, 1, 2];
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pb_subset_from_ids(sys, ids.as_ptr(), ids.len(), &mut p) }, PB_OK);
    let mut par = -1;
    assert_eq!(unsafe { pb_is_parabolic(sys, p, &mut par) }, PB_OK);
    let mut out = ptr::null_mut();
    let code = unsafe { pb_classify(sys, p, &mut out) };
    if par == 1 {
        assert_eq!(code, PB_OK);
        let json = take(out);
        assert!(json.contains("class"));
        let c = CString::new(json).unwrap();
        assert_eq!(unsafe { pb_verify_verdict(sys, p, c.as_ptr()) }, PB_OK);
    }
    unsafe {
        pb_subset_free(p);
        pb_system_free(sys);
    }
}

#[test]
fn full_set_is_parabolic() {
    let sys = system("B2", 4);
    let n = unsafe { pb_system_len(sys) };
    let ids: Vec<usize> = (0..n).collect();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pb_subset_from_ids(sys, ids.as_ptr(), n, &mut p) }, PB_OK);
    let mut par = 0;
    assert_eq!(unsafe { pb_is_parabolic(sys, p, &mut par) }, PB_OK);
    assert_eq!(par, 1);
    unsafe {
        pb_subset_free(p);
        pb_system_free(sys);
    }
}

#[test]
fn system_json_round_trip() {
    let sys = system("A1^(1)", 4);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pb_system_to_json(sys, &mut out) }, PB_OK);
    let json = CString::new(take(out)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { pb_system_from_json(json.as_ptr(), &mut back) }, PB_OK);
    assert_eq!(unsafe { pb_system_len(back) }, unsafe { pb_system_len(sys) });
    assert_eq!(unsafe { pb_system_dim(back) }, unsafe { pb_system_dim(sys) });
    unsafe {
        pb_system_free(back);
        pb_system_free(sys);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let bad = CString::new("Q7").unwrap();
    let mut sys = ptr::null_mut();
    let code = unsafe { pb_system_from_name(bad.as_ptr(), 4, &mut sys) };
    assert_ne!(code, PB_OK);
    assert!(sys.is_null());
    let msg = unsafe { CStr::from_ptr(pb_last_error()) }.to_str().unwrap();
    assert!(!msg.is_empty());

    assert_eq!(unsafe { pb_system_from_name(ptr::null(), 4, &mut sys) }, PB_NULL_ARGUMENT);
    assert_eq!(unsafe { pb_system_len(ptr::null()) }, 0);

    let sys = system("A2", 4);
    let ids = [99usize];
    let mut p = ptr::null_mut();
    let code = unsafe { pb_subset_from_ids(sys, ids.as_ptr(), 1, &mut p) };
    assert_eq!(code, parabolic_core::Error::UnknownRoot(99).code());

    let garbage = CString::new("{").unwrap();
    let mut q = ptr::null_mut();
    let code = unsafe { pb_subset_from_json(sys, garbage.as_ptr(), &mut q) };
    assert_eq!(code, 21);
    unsafe { pb_system_free(sys) };
}

#[test]
fn gallery_psl_is_reported() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pb_gallery_psl(4, &mut out) }, PB_OK);
    let json = take(out);
    assert!(json.contains("ParabolicNotStronglyParabolic"));
    assert_ne!(unsafe { pb_gallery_h(3, &mut out) }, PB_OK);
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/parabolic.h");
    for f in [
        "pb_last_error",
        "pb_string_free",
        "pb_system_from_name",
        "pb_system_from_json",
        "pb_system_free",
        "pb_system_len",
        "pb_system_dim",
        "pb_system_to_json",
        "pb_subset_from_ids",
        "pb_subset_from_json",
        "pb_subset_free",
        "pb_is_parabolic",
        "pb_classify",
        "pb_verify_verdict",
        "pb_gallery_h",
        "pb_gallery_psl",
    ] {
        assert!(header.contains(f), "{f} missing from header");
    }
}

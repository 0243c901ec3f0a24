use std::ffi::{CStr, CString};
use std::ptr;

use hecke_wgraph_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { hw_string_free(s) };
    out
}

fn last_error() -> String {
    let p = hw_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn group_kl_and_wgraph_round_trip() {
    unsafe {
        let name = CString::new("B3").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(hw_group_new_named(name.as_ptr(), &mut g), HwStatus::Ok);
        let (mut order, mut rank) = (0, 0);
        assert_eq!(hw_group_order(g, &mut order), HwStatus::Ok);
        assert_eq!(hw_group_rank(g, &mut rank), HwStatus::Ok);
        assert_eq!((order, rank), (48, 3));
        let mut len = 0;
        assert_eq!(hw_group_length(g, order - 1, &mut len), HwStatus::Ok);
        assert_eq!(len, 9);
        let mut word = ptr::null_mut();
        assert_eq!(hw_group_element_word(g, 0, &mut word), HwStatus::Ok);
        assert_eq!(take(word), "e");

        let mut kl = ptr::null_mut();
        assert_eq!(hw_kl_new(g, &mut kl), HwStatus::Ok);
        let mut mu = 0;
        assert_eq!(hw_kl_mu(kl, 0, 1, &mut mu), HwStatus::Ok);
        assert_eq!(mu, 1);
        let mut poly = ptr::null_mut();
        assert_eq!(hw_kl_poly_json(kl, 0, 1, &mut poly), HwStatus::Ok);
        assert_eq!(take(poly), "[[1,-1]]");
        let mut passed = 0;
        let mut report = ptr::null_mut();
        assert_eq!(hw_verify(kl, 1, 7, &mut passed, &mut report), HwStatus::Ok);
        assert_eq!(passed, 1);
        assert!(take(report).contains("\"kl-basis\""));
        assert_eq!(
            hw_verify(kl, 9, 7, &mut passed, ptr::null_mut()),
            HwStatus::InvalidArgument
        );

        let mut w = ptr::null_mut();
        assert_eq!(hw_wgraph_new(g, 0b010, &mut w), HwStatus::Ok);
        let (mut v, mut e, mut ok) = (0, 0, 0);
        assert_eq!(hw_wgraph_vertex_count(w, &mut v), HwStatus::Ok);
        assert_eq!(hw_wgraph_edge_count(w, &mut e), HwStatus::Ok);
        assert_eq!(hw_wgraph_verify(w, &mut ok), HwStatus::Ok);
        assert!(v > 0 && e > 0 && ok == 1);
        let mut json = ptr::null_mut();
        assert_eq!(hw_wgraph_to_json(w, &mut json), HwStatus::Ok);
        let parsed: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(parsed["vertices"].as_array().unwrap().len(), v);
        let mut dot = ptr::null_mut();
        assert_eq!(hw_wgraph_to_dot(w, &mut dot), HwStatus::Ok);
        assert!(take(dot).starts_with("graph"));

        hw_wgraph_free(w);
        hw_kl_free(kl);
        hw_group_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("Q7").unwrap();
        assert_eq!(hw_group_new_named(bad.as_ptr(), &mut g), HwStatus::InvalidArgument);
        assert!(last_error().contains("Q7"));
        assert!(g.is_null());
        assert_eq!(hw_group_new_named(ptr::null(), &mut g), HwStatus::NullPointer);

        let affine = [1u32, 3, 3, 3, 1, 3, 3, 3, 1];
        assert_eq!(hw_group_new_matrix(3, affine.as_ptr(), 500, &mut g), HwStatus::TooLarge);
        assert!(last_error().contains("500"));
        let asym = [1u32, 3, 4, 1];
        assert_eq!(
            hw_group_new_matrix(2, asym.as_ptr(), 500, &mut g),
            HwStatus::InvalidArgument
        );
        let a2 = [1u32, 3, 3, 1];
        assert_eq!(hw_group_new_matrix(2, a2.as_ptr(), 500, &mut g), HwStatus::Ok);

        let mut order = 0;
        assert_eq!(hw_group_order(ptr::null(), &mut order), HwStatus::NullPointer);
        assert_eq!(hw_group_order(g, ptr::null_mut()), HwStatus::NullPointer);
        let mut len = 0;
        assert_eq!(hw_group_length(g, 6, &mut len), HwStatus::InvalidArgument);
        let mut w = ptr::null_mut();
        assert_eq!(hw_wgraph_new(g, 0b100, &mut w), HwStatus::InvalidArgument);
        hw_group_free(g);
        hw_group_free(ptr::null_mut());
        hw_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(hw_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

use hallkit_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hk_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(hk_last_error()).to_str().unwrap().to_owned()
}

fn a2() -> *mut HkTable {
    let mut t = ptr::null_mut();
    let st = unsafe { hk_table_build(c("vertices 2\narrow 1 2\n").as_ptr(), c("1,1").as_ptr(), 0, &mut t) };
    assert_eq!(st, HkStatus::Ok);
    t
}

#[test]
fn table_lifecycle() {
    unsafe {
        let t = a2();
        assert_eq!(hk_table_class_count(t), 5);
        assert_eq!(hk_table_indecomposable_count(t), 3);
        let mut bad = 99;
        assert_eq!(hk_table_verify(t, &mut bad), HkStatus::Ok);
        assert_eq!(bad, 0);

        let mut json = ptr::null_mut();
        assert_eq!(hk_table_to_json(t, &mut json), HkStatus::Ok);
        let text = take(json);
        let mut back = ptr::null_mut();
        assert_eq!(hk_table_from_json(c(&text).as_ptr(), &mut back), HkStatus::Ok);
        assert_eq!(hk_table_class_count(back), 5);
        hk_table_free(back);
        hk_table_free(t);
        hk_table_free(ptr::null_mut());
        assert_eq!(hk_table_class_count(ptr::null()), 0);
    }
}

#[test]
fn products() {
    unsafe {
        let t = a2();
        let mut out = ptr::null_mut();
        let st =
            hk_mult(HkAlgebra::Sf, t, ptr::null(), c("s[[0,1]]").as_ptr(), c("s[[1,0]]").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::Ok);
        assert_eq!(take(out), "(L-1)*s[[1,1]] + s[[1,0],[0,1]]");
        let st =
            hk_mult(HkAlgebra::Cf, t, ptr::null(), c("d[[0,1]]").as_ptr(), c("d[[1,0]]").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::Ok);
        assert_eq!(take(out), "d[[1,1]] + d[[1,0],[0,1]]");

        let mut f = ptr::null_mut();
        assert_eq!(hk_form_parse(c("1,2;-1,1").as_ptr(), &mut f), HkStatus::Ok);
        for graph in [false, true] {
            let st =
                hk_mult(HkAlgebra::B, ptr::null(), f, c("b{[1,0]}").as_ptr(), c("b{[0,1]}").as_ptr(), graph, &mut out);
            assert_eq!(st, HkStatus::Ok);
            assert_eq!(take(out), "b{[1,0],[0,1]} + b{[1,1]}");
        }
        let st = hk_mult(HkAlgebra::C, ptr::null(), f, c("c{[0,1]}").as_ptr(), c("c{[1,0]}").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::Ok);
        assert_eq!(take(out), "c{[1,0],[0,1]} - 2*c{[1,1]}");
        let mut g = ptr::null_mut();
        assert_eq!(hk_form_of_table(t, &mut g), HkStatus::Ok);
        let st = hk_mult(HkAlgebra::A, ptr::null(), g, c("a[1,0]").as_ptr(), c("a[0,1]").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::Ok);
        assert_eq!(take(out), "a[1,1]");
        hk_form_free(f);
        hk_form_free(g);
        hk_table_free(t);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut t = ptr::null_mut();
        let cyclic = c("vertices 2\narrow 1 2\narrow 2 1\n");
        assert_eq!(hk_table_build(cyclic.as_ptr(), c("1,1").as_ptr(), 0, &mut t), HkStatus::Domain);
        assert!(last_error().contains("oriented cycle"));
        assert!(t.is_null());
        assert_eq!(hk_table_build(ptr::null(), c("1,1").as_ptr(), 0, &mut t), HkStatus::NullPointer);
        assert_eq!(hk_table_build(c("vertices 2").as_ptr(), c("1,1,1").as_ptr(), 0, &mut t), HkStatus::Parse);

        let t = a2();
        let mut out = ptr::null_mut();
        let st =
            hk_mult(HkAlgebra::Cf, t, ptr::null(), c("d[[1,1]]").as_ptr(), c("d[[1,1]]").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::Bound);
        let st = hk_mult(HkAlgebra::Cf, t, ptr::null(), c("d[[1,0]").as_ptr(), c("d[[0,1]]").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::Parse);
        let st = hk_mult(HkAlgebra::B, t, ptr::null(), c("b{[1,0]}").as_ptr(), c("b{[0,1]}").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::NullPointer);
        let bad = [0xffu8, 0];
        let st = hk_mult(HkAlgebra::Cf, t, ptr::null(), bad.as_ptr().cast(), c("d[[0,1]]").as_ptr(), false, &mut out);
        assert_eq!(st, HkStatus::InvalidUtf8);
        hk_table_free(t);
    }
}

#[test]
fn suites() {
    unsafe {
        let t = a2();
        let (mut ok, mut rep) = (false, ptr::null_mut());
        assert_eq!(hk_verify(c("serre").as_ptr(), t, 0, 0, &mut ok, &mut rep), HkStatus::Ok);
        assert!(ok);
        assert!(!take(rep).contains("\"fail\""));
        assert_eq!(hk_verify(c("thm65").as_ptr(), ptr::null(), 3, 2, &mut ok, &mut rep), HkStatus::Ok);
        assert!(ok);
        assert_eq!(take(rep).lines().count(), 2);
        assert_eq!(hk_verify(c("pbw").as_ptr(), ptr::null(), 0, 0, &mut ok, &mut rep), HkStatus::NullPointer);
        assert_eq!(hk_verify(c("nope").as_ptr(), t, 0, 0, &mut ok, &mut rep), HkStatus::Parse);
        hk_table_free(t);
        assert!(!CStr::from_ptr(hk_version()).to_bytes().is_empty());
    }
}

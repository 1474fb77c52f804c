use std::ffi::{CStr, CString};
use std::ptr;

use superybe_ffi::*;

const EX: &str = "[space]\neven = e\nodd = f\n\n[bracket]\ne f = 1 f\n\n\
[map T1 : g* -> g parity odd]\ne* = 1 f\nf* = -1 e\n\n\
[tensor r0]\nf f = 1\n\n[tensor ef]\ne f = 1\n";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse(text: &str) -> *mut SyDocument {
    let mut doc = ptr::null_mut();
    let src = c(text);
    assert_eq!(unsafe { sy_document_parse(src.as_ptr(), &mut doc) }, SY_OK);
    doc
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sy_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn parse_emit_round_trip() {
    let doc = parse(EX);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sy_document_emit(doc, &mut out) }, SY_OK);
    let emitted = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe { sy_string_free(out) };
    let again = parse(&emitted);
    let mut out2 = ptr::null_mut();
    assert_eq!(unsafe { sy_document_emit(again, &mut out2) }, SY_OK);
    assert_eq!(unsafe { CStr::from_ptr(out2) }.to_str().unwrap(), emitted);
    unsafe {
        sy_string_free(out2);
        sy_document_free(again);
        sy_document_free(doc);
    }
}

#[test]
fn checks() {
    let doc = parse(EX);
    let mut flag = false;
    assert_eq!(unsafe { sy_validate(doc, &mut flag) }, SY_OK);
    assert!(flag);
    assert_eq!(unsafe { sy_check_oop(doc, c("T1").as_ptr(), c("coad").as_ptr(), &mut flag) }, SY_OK);
    assert!(flag);
    assert_eq!(unsafe { sy_check_cybe(doc, c("r0").as_ptr(), &mut flag) }, SY_OK);
    assert!(flag);
    assert_eq!(unsafe { sy_check_cybe(doc, c("ef").as_ptr(), &mut flag) }, SY_OK);
    assert!(!flag);
    unsafe { sy_document_free(doc) };
}

#[test]
fn constructions_return_new_handles() {
    let doc = parse(EX);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sy_hierarchy(doc, c("r0").as_ptr(), c("+").as_ptr(), &mut out) }, SY_OK);
    let mut holds = false;
    assert_eq!(unsafe { sy_check_cybe(out, c("r").as_ptr(), &mut holds) }, SY_OK);
    assert!(holds);
    unsafe { sy_document_free(out) };

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { sy_build_rmatrix(doc, c("T1").as_ptr(), c("coad").as_ptr(), true, &mut out) },
        SY_OK
    );
    assert_eq!(unsafe { sy_check_cybe(out, c("r").as_ptr(), &mut holds) }, SY_OK);
    assert!(holds);
    unsafe { sy_document_free(out) };

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sy_dualize(doc, c("T1").as_ptr(), c("coad").as_ptr(), &mut out) }, SY_OK);
    assert_eq!(
        unsafe { sy_check_oop(out, c("T1_s").as_ptr(), c("coad_s").as_ptr(), &mut holds) },
        SY_OK
    );
    assert!(holds);
    unsafe {
        sy_document_free(out);
        sy_document_free(doc);
    }
}

#[test]
fn error_codes() {
    let mut doc = ptr::null_mut();
    let bad = c("[space]\neven = e\nodd = f\n[bracket]\ne f = 1 e\n");
    assert_eq!(unsafe { sy_document_parse(bad.as_ptr(), &mut doc) }, SY_ERR_PARSE);
    assert!(last_error().contains("line 5"));
    assert_eq!(unsafe { sy_document_parse(ptr::null(), &mut doc) }, SY_ERR_NULL);

    let doc = parse(EX);
    let mut flag = false;
    assert_eq!(unsafe { sy_check_cybe(doc, c("nope").as_ptr(), &mut flag) }, SY_ERR_UNKNOWN);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sy_hierarchy(doc, c("r0").as_ptr(), c("").as_ptr(), &mut out) }, SY_ERR_INVALID);
    unsafe { sy_document_free(doc) };
}

#[test]
fn fixtures() {
    let mut doc = ptr::null_mut();
    let mut passed = false;
    assert_eq!(unsafe { sy_fixture_load(c("ex4.4").as_ptr(), &mut doc, &mut passed) }, SY_OK);
    assert!(passed);
    let mut holds = false;
    assert_eq!(unsafe { sy_check_cybe(doc, c("r1").as_ptr(), &mut holds) }, SY_OK);
    assert!(holds);
    unsafe { sy_document_free(doc) };
    assert_eq!(
        unsafe { sy_fixture_load(c("nope").as_ptr(), ptr::null_mut(), &mut passed) },
        SY_ERR_UNKNOWN
    );
}

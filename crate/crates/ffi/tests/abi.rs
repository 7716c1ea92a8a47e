use std::ffi::{CStr, CString};
use std::ptr;

use triarray_ffi::*;

fn parse(s: &str) -> *mut TriTriangle {
    let c = CString::new(s).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { tri_triangle_parse(c.as_ptr(), &mut t) }, TriStatus::Ok);
    t
}

fn text(t: *const TriTriangle) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tri_triangle_to_string(t, &mut s) }, TriStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { tri_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(tri_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn transform_round_trip() {
    let y = parse("0,0,3/0,3/3");
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { tri_transform(y, &mut t) }, TriStatus::Ok);
    assert_eq!(text(t), "3,0,0/3,0/3");
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { tri_inverse_transform(t, &mut back) }, TriStatus::Ok);
    assert_eq!(text(back), "0,0,3/0,3/3");
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { tri_oracle(y, 1, 3, 7, &mut o) }, TriStatus::Ok);
    assert_eq!(text(o), "3,0,0/3,0/3");
    unsafe {
        tri_triangle_free(y);
        tri_triangle_free(t);
        tri_triangle_free(back);
        tri_triangle_free(o);
    }
}

#[test]
fn accessors() {
    let y = parse("0,1,2/1,2/3");
    let (mut n, mut v, mut d) = (0usize, 0u32, 0u64);
    unsafe {
        assert_eq!(tri_triangle_size(y, &mut n), TriStatus::Ok);
        assert_eq!(n, 3);
        assert_eq!(tri_triangle_get(y, 2, 2, &mut v), TriStatus::Ok);
        assert_eq!(v, 2);
        assert_eq!(tri_triangle_get(y, 3, 2, &mut v), TriStatus::OutOfRange);
        assert_eq!(tri_orbit_dim(y, &mut d), TriStatus::Ok);
        assert_eq!(d, 17);
        let mut w = [0u32; 3];
        assert_eq!(tri_triangle_dim_vector(y, w.as_mut_ptr(), 3), TriStatus::Ok);
        assert_eq!(w, [3, 3, 3]);
        assert_eq!(tri_triangle_dim_vector(y, w.as_mut_ptr(), 2), TriStatus::BufferTooSmall);
        let mut json = ptr::null_mut();
        assert_eq!(tri_triangle_to_json(y, &mut json), TriStatus::Ok);
        let mut z = ptr::null_mut();
        assert_eq!(tri_triangle_from_json(json, &mut z), TriStatus::Ok);
        assert_eq!(text(z), "0,1,2/1,2/3");
        tri_string_free(json);
        tri_triangle_free(z);
        tri_triangle_free(y);
    }
}

#[test]
fn comparisons() {
    let a = parse("0,1,2/1,2/3");
    let b = parse("0,0,3/0,3/3");
    let c = parse("1,0/1");
    let mut r = TriComparison::Equal;
    unsafe {
        for m in [TriOrderMethod::Chutewise, TriOrderMethod::Segments, TriOrderMethod::Coweights] {
            assert_eq!(tri_compare(a, b, m, &mut r), TriStatus::Ok);
            assert_eq!(r, TriComparison::Less);
        }
        assert_eq!(tri_compare(a, c, TriOrderMethod::Chutewise, &mut r), TriStatus::DimMismatch);
        assert!(!last_error().is_empty());
        for t in [a, b, c] {
            tri_triangle_free(t);
        }
    }
}

#[test]
fn error_codes() {
    let mut t = ptr::null_mut();
    let cases = [("0,1/2/3", TriStatus::Shape), ("0,2/1", TriStatus::LadderViolation), ("1,x/1", TriStatus::Parse)];
    for (s, expect) in cases {
        let c = CString::new(s).unwrap();
        assert_eq!(unsafe { tri_triangle_parse(c.as_ptr(), &mut t) }, expect, "{s}");
        assert!(!last_error().is_empty());
    }
    assert_eq!(unsafe { tri_triangle_parse(ptr::null(), &mut t) }, TriStatus::NullPointer);
    let mut n = 0usize;
    assert_eq!(unsafe { tri_triangle_size(ptr::null(), &mut n) }, TriStatus::NullPointer);
    let name = unsafe { CStr::from_ptr(tri_status_name(TriStatus::LadderViolation)) };
    assert_eq!(name.to_str().unwrap(), "ladder violation");
    let y = parse("1");
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { tri_oracle(y, 0, 0, 7, &mut o) }, TriStatus::OutOfRange);
    unsafe { tri_triangle_free(y) };
}

#[test]
fn posets() {
    let w = [3u32, 3, 3];
    let (mut count, mut len, mut covers) = (0usize, 0usize, 0usize);
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(tri_enumerate_count(w.as_ptr(), 3, &mut count), TriStatus::Ok);
        assert_eq!(count, 20);
        let mut first = ptr::null_mut();
        assert_eq!(tri_enumerate_nth(w.as_ptr(), 3, 0, &mut first), TriStatus::Ok);
        assert_eq!(text(first), "3,0,0/3,0/3");
        tri_triangle_free(first);
        assert_eq!(tri_enumerate_nth(w.as_ptr(), 3, 20, &mut first), TriStatus::OutOfRange);
        assert_eq!(tri_poset_new(w.as_ptr(), 3, &mut p), TriStatus::Ok);
        assert_eq!(tri_poset_len(p, &mut len), TriStatus::Ok);
        assert_eq!(tri_poset_cover_count(p, &mut covers), TriStatus::Ok);
        assert_eq!((len, covers), (20, 30));
        let mut dot = ptr::null_mut();
        assert_eq!(tri_poset_to_dot(p, &mut dot), TriStatus::Ok);
        assert!(CStr::from_ptr(dot).to_str().unwrap().starts_with("digraph"));
        tri_string_free(dot);
        let mut json = ptr::null_mut();
        assert_eq!(tri_poset_to_json(p, &mut json), TriStatus::Ok);
        let v: &str = CStr::from_ptr(json).to_str().unwrap();
        assert!(v.starts_with("{\"dim_vector\":[3,3,3]"));
        tri_string_free(json);
        let mut e = ptr::null_mut();
        assert_eq!(tri_poset_element(p, 19, &mut e), TriStatus::Ok);
        tri_triangle_free(e);
        assert_eq!(tri_poset_element(p, 20, &mut e), TriStatus::OutOfRange);
        assert_eq!(tri_poset_new(ptr::null(), 0, &mut p), TriStatus::NullPointer);
        tri_poset_free(p);
    }
}

//! C ABI for `triarray`.
//!
//! Arrays and posets are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`TriStatus`]; on failure a
//! description is available from [`tri_last_error_message`] on the same
//! thread. Strings handed out by the library are released with
//! [`tri_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use triarray::geometry::{fourier_oracle, OracleParams};
use triarray::{
    compare, enumerate, fiber_dim, flag_dim, hasse, orbit_dim, transform_t, transform_t_prime, Comparison, DimVector,
    Error, OrbitPoset, OrderMethod, TriangularArray,
};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Shape = 4,
    LadderViolation = 5,
    NegativeEntry = 6,
    DimMismatch = 7,
    OutOfRange = 8,
    Undefined = 9,
    BufferTooSmall = 10,
    Internal = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriOrderMethod {
    Chutewise = 0,
    Segments = 1,
    Coweights = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriComparison {
    Less = 0,
    Equal = 1,
    Greater = 2,
    Incomparable = 3,
}

/// A triangular array.
pub struct TriTriangle {
    inner: TriangularArray,
}

/// The closure order on all arrays of one dimension vector.
pub struct TriPoset {
    inner: OrbitPoset,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TriStatus {
    match e {
        Error::Parse { .. } => TriStatus::Parse,
        Error::Shape(_) | Error::Size(_) | Error::SizeMismatch { .. } => TriStatus::Shape,
        Error::LadderViolation { .. } | Error::NotDecreasing(_) => TriStatus::LadderViolation,
        Error::NegativeEntry { .. } => TriStatus::NegativeEntry,
        Error::DimMismatch { .. } => TriStatus::DimMismatch,
        Error::Index(_) => TriStatus::OutOfRange,
        Error::UndefinedMove { .. } | Error::InfiniteI(_) => TriStatus::Undefined,
        Error::Internal(_) => TriStatus::Internal,
    }
}

fn fail(status: TriStatus, msg: impl Into<String>) -> TriStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> TriStatus {
    let s = status_of(&e);
    fail(s, e.to_string())
}

/// Runs `f`, converting panics into `TriStatus::Panic`.
fn guard(f: impl FnOnce() -> TriStatus) -> TriStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == TriStatus::Ok {
                set_error(String::new());
            }
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(TriStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, TriStatus> {
    if text.is_null() {
        return Err(fail(TriStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(text).to_str().map_err(|e| fail(TriStatus::InvalidUtf8, e.to_string()))
}

unsafe fn read_dims(w: *const u32, len: usize) -> Result<DimVector, TriStatus> {
    if w.is_null() {
        return Err(fail(TriStatus::NullPointer, "null dimension vector"));
    }
    DimVector::new(std::slice::from_raw_parts(w, len).to_vec()).map_err(from_error)
}

unsafe fn triangle<'a>(t: *const TriTriangle) -> Result<&'a TriangularArray, TriStatus> {
    t.as_ref().map(|t| &t.inner).ok_or_else(|| fail(TriStatus::NullPointer, "null triangle"))
}

unsafe fn poset<'a>(p: *const TriPoset) -> Result<&'a OrbitPoset, TriStatus> {
    p.as_ref().map(|p| &p.inner).ok_or_else(|| fail(TriStatus::NullPointer, "null poset"))
}

unsafe fn put<T>(out: *mut T, value: T) -> TriStatus {
    if out.is_null() {
        return fail(TriStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    TriStatus::Ok
}

unsafe fn put_triangle(out: *mut *mut TriTriangle, y: TriangularArray) -> TriStatus {
    put(out, Box::into_raw(Box::new(TriTriangle { inner: y })))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> TriStatus {
    match CString::new(s) {
        Ok(c) => put(out, c.into_raw()),
        Err(e) => fail(TriStatus::Internal, e.to_string()),
    }
}

macro_rules! tri_try {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Description of the last failure on this thread; empty after a success.
/// Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn tri_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn tri_status_name(status: TriStatus) -> *const c_char {
    let s: &'static CStr = match status {
        TriStatus::Ok => c"ok",
        TriStatus::NullPointer => c"null pointer",
        TriStatus::InvalidUtf8 => c"invalid utf-8",
        TriStatus::Parse => c"parse error",
        TriStatus::Shape => c"shape error",
        TriStatus::LadderViolation => c"ladder violation",
        TriStatus::NegativeEntry => c"negative entry",
        TriStatus::DimMismatch => c"dimension vector mismatch",
        TriStatus::OutOfRange => c"index out of range",
        TriStatus::Undefined => c"undefined operation",
        TriStatus::BufferTooSmall => c"buffer too small",
        TriStatus::Internal => c"internal error",
        TriStatus::Panic => c"panic",
    };
    s.as_ptr()
}

#[no_mangle]
pub unsafe extern "C" fn tri_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the text form, e.g. `"0,1,2/1,2/3"`.
#[no_mangle]
pub unsafe extern "C" fn tri_triangle_parse(text: *const c_char, out: *mut *mut TriTriangle) -> TriStatus {
    guard(|| {
        let s = tri_try!(read_str(text));
        match triarray::parse_triangle(s) {
            Ok(y) => put_triangle(out, y),
            Err(e) => from_error(e),
        }
    })
}

/// Parses `{"n": 3, "chutes": [[0,1,2],[1,2],[3]]}`.
#[no_mangle]
pub unsafe extern "C" fn tri_triangle_from_json(json: *const c_char, out: *mut *mut TriTriangle) -> TriStatus {
    guard(|| {
        let s = tri_try!(read_str(json));
        match TriangularArray::from_json(s) {
            Ok(y) => put_triangle(out, y),
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_triangle_clone(t: *const TriTriangle, out: *mut *mut TriTriangle) -> TriStatus {
    guard(|| {
        let y = tri_try!(triangle(t));
        put_triangle(out, y.clone())
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_triangle_free(t: *mut TriTriangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

#[no_mangle]
pub unsafe extern "C" fn tri_triangle_to_string(t: *const TriTriangle, out: *mut *mut c_char) -> TriStatus {
    guard(|| {
        let y = tri_try!(triangle(t));
        put_string(out, y.to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_triangle_to_json(t: *const TriTriangle, out: *mut *mut c_char) -> TriStatus {
    guard(|| {
        let y = tri_try!(triangle(t));
        put_string(out, y.to_json())
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_triangle_size(t: *const TriTriangle, out: *mut usize) -> TriStatus {
    guard(|| {
        let y = tri_try!(triangle(t));
        put(out, y.size())
    })
}

/// Entry `y_{ij}`, 1-based.
#[no_mangle]
pub unsafe extern "C" fn tri_triangle_get(t: *const TriTriangle, i: usize, j: usize, out: *mut u32) -> TriStatus {
    guard(|| {
        let y = tri_try!(triangle(t));
        let n = y.size();
        if i < 1 || i > n || j < 1 || j > n - i + 1 {
            return fail(TriStatus::OutOfRange, format!("position ({i},{j}) outside a triangle of size {n}"));
        }
        put(out, y.get(i, j))
    })
}

/// Writes the chute sums into `out[0..n]`; `capacity` must be at least `n`.
#[no_mangle]
pub unsafe extern "C" fn tri_triangle_dim_vector(t: *const TriTriangle, out: *mut u32, capacity: usize) -> TriStatus {
    guard(|| {
        let y = tri_try!(triangle(t));
        if out.is_null() {
            return fail(TriStatus::NullPointer, "null output buffer");
        }
        let w = y.dim_vector();
        if capacity < w.len() {
            return fail(TriStatus::BufferTooSmall, format!("need {} entries, have {capacity}", w.len()));
        }
        std::slice::from_raw_parts_mut(out, w.len()).copy_from_slice(w.entries());
        TriStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_orbit_dim(t: *const TriTriangle, out: *mut u64) -> TriStatus {
    guard(|| put(out, orbit_dim(tri_try!(triangle(t)))))
}

#[no_mangle]
pub unsafe extern "C" fn tri_flag_dim(t: *const TriTriangle, out: *mut u64) -> TriStatus {
    guard(|| put(out, flag_dim(tri_try!(triangle(t)))))
}

#[no_mangle]
pub unsafe extern "C" fn tri_fiber_dim(t: *const TriTriangle, out: *mut u64) -> TriStatus {
    guard(|| put(out, fiber_dim(tri_try!(triangle(t)))))
}

/// The combinatorial Fourier transform `T`.
#[no_mangle]
pub unsafe extern "C" fn tri_transform(t: *const TriTriangle, out: *mut *mut TriTriangle) -> TriStatus {
    guard(|| put_triangle(out, transform_t(tri_try!(triangle(t)))))
}

/// The inverse transform `T'`.
#[no_mangle]
pub unsafe extern "C" fn tri_inverse_transform(t: *const TriTriangle, out: *mut *mut TriTriangle) -> TriStatus {
    guard(|| put_triangle(out, transform_t_prime(tri_try!(triangle(t)))))
}

#[no_mangle]
pub unsafe extern "C" fn tri_compare(
    left: *const TriTriangle,
    right: *const TriTriangle,
    method: TriOrderMethod,
    out: *mut TriComparison,
) -> TriStatus {
    guard(|| {
        let (a, b) = (tri_try!(triangle(left)), tri_try!(triangle(right)));
        let m = match method {
            TriOrderMethod::Chutewise => OrderMethod::Chutewise,
            TriOrderMethod::Segments => OrderMethod::Segments,
            TriOrderMethod::Coweights => OrderMethod::Coweights,
        };
        match compare(a, b, m) {
            Ok(c) => put(
                out,
                match c {
                    Comparison::Less => TriComparison::Less,
                    Comparison::Equal => TriComparison::Equal,
                    Comparison::Greater => TriComparison::Greater,
                    Comparison::Incomparable => TriComparison::Incomparable,
                },
            ),
            Err(e) => from_error(e),
        }
    })
}

/// Label of the dense orbit in the commuting space of `t`'s normal form.
#[no_mangle]
pub unsafe extern "C" fn tri_oracle(
    t: *const TriTriangle,
    seed: u64,
    trials: usize,
    range: i64,
    out: *mut *mut TriTriangle,
) -> TriStatus {
    guard(|| {
        let y = tri_try!(triangle(t));
        match fourier_oracle(y, &OracleParams { seed, trials, range }) {
            Ok(z) => put_triangle(out, z),
            Err(e) => from_error(e),
        }
    })
}

/// `|P(w)|` for `w = (w[0], ..., w[len-1])`.
#[no_mangle]
pub unsafe extern "C" fn tri_enumerate_count(w: *const u32, len: usize, out: *mut usize) -> TriStatus {
    guard(|| {
        let w = tri_try!(read_dims(w, len));
        put(out, triarray::enumerate::count(&w))
    })
}

/// Array number `index` of `P(w)` in canonical order.
#[no_mangle]
pub unsafe extern "C" fn tri_enumerate_nth(
    w: *const u32,
    len: usize,
    index: usize,
    out: *mut *mut TriTriangle,
) -> TriStatus {
    guard(|| {
        let w = tri_try!(read_dims(w, len));
        let all = enumerate(&w);
        match all.into_iter().nth(index) {
            Some(y) => put_triangle(out, y),
            None => fail(TriStatus::OutOfRange, format!("index {index} past the end of P(w)")),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_poset_new(w: *const u32, len: usize, out: *mut *mut TriPoset) -> TriStatus {
    guard(|| {
        let w = tri_try!(read_dims(w, len));
        put(out, Box::into_raw(Box::new(TriPoset { inner: hasse(&w) })))
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_poset_free(p: *mut TriPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[no_mangle]
pub unsafe extern "C" fn tri_poset_len(p: *const TriPoset, out: *mut usize) -> TriStatus {
    guard(|| put(out, tri_try!(poset(p)).len()))
}

#[no_mangle]
pub unsafe extern "C" fn tri_poset_cover_count(p: *const TriPoset, out: *mut usize) -> TriStatus {
    guard(|| put(out, tri_try!(poset(p)).covers().len()))
}

#[no_mangle]
pub unsafe extern "C" fn tri_poset_element(p: *const TriPoset, index: usize, out: *mut *mut TriTriangle) -> TriStatus {
    guard(|| {
        let p = tri_try!(poset(p));
        match p.elements().get(index) {
            Some(y) => put_triangle(out, y.clone()),
            None => fail(TriStatus::OutOfRange, format!("index {index} past {} elements", p.len())),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn tri_poset_to_json(p: *const TriPoset, out: *mut *mut c_char) -> TriStatus {
    guard(|| put_string(out, tri_try!(poset(p)).to_json()))
}

#[no_mangle]
pub unsafe extern "C" fn tri_poset_to_dot(p: *const TriPoset, out: *mut *mut c_char) -> TriStatus {
    guard(|| put_string(out, tri_try!(poset(p)).to_dot()))
}

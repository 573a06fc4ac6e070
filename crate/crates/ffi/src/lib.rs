//! C ABI over `corequot`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! a [`CqStatus`]; on failure a description is available from
//! [`cq_last_error_message`] on the same thread. Strings returned through
//! `char **` out-parameters are NUL-terminated UTF-8 and must be released
//! with [`cq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use corequot::characters::{mn_character, CycleType};
use corequot::littlewood_richardson::lr_coefficient;
use corequot::theorems::{verify_theorem2, verify_theorem3, weight_of};
use corequot::vertex::{vertex_apply, OddPolynomial};
use corequot::{reduced_schur, schur, GradedPolynomial, Partition, Sign, Triplet, Weight};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Overflow = 4,
    Panic = 5,
}

/// An integer partition.
pub struct CqPartition(Partition);

/// A polynomial with exact rational coefficients in t1, t2, ...
pub struct CqPolynomial(GradedPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CqStatus, String);

impl Failure {
    fn invalid(err: impl ToString) -> Self {
        Failure(CqStatus::InvalidArgument, err.to_string())
    }
}

fn set_last_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CqStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CqStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            CqStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(ptr: *const T, name: &str) -> Result<&'a T, Failure> {
    ptr.as_ref()
        .ok_or_else(|| Failure(CqStatus::NullPointer, format!("{name} is null")))
}

unsafe fn out<'a, T>(ptr: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    ptr.as_mut()
        .ok_or_else(|| Failure(CqStatus::NullPointer, format!("{name} is null")))
}

unsafe fn text<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(Failure(CqStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|e| Failure(CqStatus::InvalidUtf8, format!("{name}: {e}")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message for the most recent failed call on this thread, or NULL. The
/// pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn cq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn cq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses "4,3,1,1"; the empty string is the empty partition.
///
/// # Safety
/// `text_in` must be a NUL-terminated string and `out_handle` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_parse(text_in: *const c_char, out_handle: *mut *mut CqPartition) -> CqStatus {
    guard(|| {
        let slot = out(out_handle, "out")?;
        let y: Partition = text(text_in, "text")?.parse().map_err(Failure::invalid)?;
        *slot = boxed(CqPartition(y));
        Ok(())
    })
}

/// Builds a partition from `len` weakly decreasing parts; trailing zeros are dropped.
///
/// # Safety
/// `parts` must point to `len` readable values (or be NULL with `len == 0`);
/// `out_handle` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_from_parts(
    parts: *const usize,
    len: usize,
    out_handle: *mut *mut CqPartition,
) -> CqStatus {
    guard(|| {
        let slot = out(out_handle, "out")?;
        let values = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(deref(parts, "parts")?, len).to_vec()
        };
        let trimmed: Vec<usize> = {
            let keep = values.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1);
            values[..keep].to_vec()
        };
        let y = Partition::new(trimmed).map_err(Failure::invalid)?;
        *slot = boxed(CqPartition(y));
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_free(p: *mut CqPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Sum of the parts; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_size(p: *const CqPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.size())
}

/// Number of nonzero parts; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_length(p: *const CqPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies up to `capacity` parts into `buffer` and stores the full length
/// in `length`. Returns `CQ_STATUS_OVERFLOW` when the buffer was too small.
///
/// # Safety
/// `buffer` must have room for `capacity` values; `length` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_parts(
    p: *const CqPartition,
    buffer: *mut usize,
    capacity: usize,
    length: *mut usize,
) -> CqStatus {
    guard(|| {
        let parts = deref(p, "partition")?.0.parts();
        *out(length, "length")? = parts.len();
        let n = parts.len().min(capacity);
        if n > 0 {
            ptr::copy_nonoverlapping(parts.as_ptr(), out(buffer, "buffer")?, n);
        }
        if parts.len() > capacity {
            return Err(Failure(CqStatus::Overflow, format!("{} parts do not fit in {capacity}", parts.len())));
        }
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle and `out_str` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_to_string(p: *const CqPartition, out_str: *mut *mut c_char) -> CqStatus {
    guard(|| {
        let y = deref(p, "partition")?;
        *out(out_str, "out")? = c_string(y.0.to_string());
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle and `out_handle` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_partition_conjugate(p: *const CqPartition, out_handle: *mut *mut CqPartition) -> CqStatus {
    guard(|| {
        let y = deref(p, "partition")?;
        *out(out_handle, "out")? = boxed(CqPartition(y.0.conjugate()));
        Ok(())
    })
}

/// Splits a partition into its 2-core and the two quotient partitions.
///
/// # Safety
/// `p` must be a live handle; the three out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cq_two_quotient(
    p: *const CqPartition,
    core: *mut *mut CqPartition,
    quotient0: *mut *mut CqPartition,
    quotient1: *mut *mut CqPartition,
) -> CqStatus {
    guard(|| {
        let y = deref(p, "partition")?;
        let (c, q0, q1) = (out(core, "core")?, out(quotient0, "quotient0")?, out(quotient1, "quotient1")?);
        let t = y.0.two_quotient();
        *c = boxed(CqPartition(t.core));
        *q0 = boxed(CqPartition(t.quotient0));
        *q1 = boxed(CqPartition(t.quotient1));
        Ok(())
    })
}

/// Inverse of [`cq_two_quotient`]; fails unless `core` is a staircase.
///
/// # Safety
/// All handles must be live; `out_handle` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cq_from_triplet(
    core: *const CqPartition,
    quotient0: *const CqPartition,
    quotient1: *const CqPartition,
    out_handle: *mut *mut CqPartition,
) -> CqStatus {
    guard(|| {
        let t = Triplet::new(
            deref(core, "core")?.0.clone(),
            deref(quotient0, "quotient0")?.0.clone(),
            deref(quotient1, "quotient1")?.0.clone(),
        );
        let slot = out(out_handle, "out")?;
        *slot = boxed(CqPartition(t.to_partition().map_err(Failure::invalid)?));
        Ok(())
    })
}

/// Stores +1 or -1.
///
/// # Safety
/// `p` must be a live handle and `sign` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_two_sign(p: *const CqPartition, sign: *mut i32) -> CqStatus {
    guard(|| {
        let y = deref(p, "partition")?;
        *out(sign, "sign")? = match y.0.two_sign() {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        Ok(())
    })
}

/// The weight Λ_r - nδ carried by the reduced Schur function of `p`.
///
/// # Safety
/// `p` must be a live handle; `r` and `n` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cq_weight_of(p: *const CqPartition, r: *mut usize, n: *mut usize) -> CqStatus {
    guard(|| {
        let w = weight_of(&deref(p, "partition")?.0);
        *out(r, "r")? = w.r;
        *out(n, "n")? = w.n;
        Ok(())
    })
}

/// Schur function of `p`, or its restriction to odd variables when `reduced`.
///
/// # Safety
/// `p` must be a live handle and `out_handle` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_schur(p: *const CqPartition, reduced: bool, out_handle: *mut *mut CqPolynomial) -> CqStatus {
    guard(|| {
        let y = &deref(p, "partition")?.0;
        let f = if reduced { reduced_schur(y) } else { schur(y) };
        *out(out_handle, "out")? = boxed(CqPolynomial(f));
        Ok(())
    })
}

/// Parses the text form, e.g. "1/24*t1^4 + t1*t3".
///
/// # Safety
/// `text_in` must be a NUL-terminated string and `out_handle` valid.
#[no_mangle]
pub unsafe extern "C" fn cq_polynomial_parse(text_in: *const c_char, out_handle: *mut *mut CqPolynomial) -> CqStatus {
    guard(|| {
        let slot = out(out_handle, "out")?;
        let f: GradedPolynomial = text(text_in, "text")?.parse().map_err(Failure::invalid)?;
        *slot = boxed(CqPolynomial(f));
        Ok(())
    })
}

/// # Safety
/// `f` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cq_polynomial_free(f: *mut CqPolynomial) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle and `out_str` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_polynomial_to_string(f: *const CqPolynomial, out_str: *mut *mut c_char) -> CqStatus {
    guard(|| {
        let f = deref(f, "polynomial")?;
        *out(out_str, "out")? = c_string(f.0.to_string());
        Ok(())
    })
}

/// JSON term list: [{"exps":{"1":4},"coeff":"1/24"}, ...].
///
/// # Safety
/// `f` must be a live handle and `out_str` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_polynomial_to_json(f: *const CqPolynomial, out_str: *mut *mut c_char) -> CqStatus {
    guard(|| {
        let f = deref(f, "polynomial")?;
        let json = serde_json::to_string(&f.0).map_err(Failure::invalid)?;
        *out(out_str, "out")? = c_string(json);
        Ok(())
    })
}

/// Applies the vertex operator mode X_k. `f` must not involve even variables.
///
/// # Safety
/// `f` must be a live handle and `out_handle` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_vertex_apply(k: i64, f: *const CqPolynomial, out_handle: *mut *mut CqPolynomial) -> CqStatus {
    guard(|| {
        let f = OddPolynomial::new(deref(f, "polynomial")?.0.clone()).map_err(Failure::invalid)?;
        let slot = out(out_handle, "out")?;
        *slot = boxed(CqPolynomial(vertex_apply(k, &f).into_poly()));
        Ok(())
    })
}

/// Littlewood–Richardson coefficient c^outer_{inner, content}.
///
/// # Safety
/// All handles must be live and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_lr_coefficient(
    outer: *const CqPartition,
    inner: *const CqPartition,
    content: *const CqPartition,
    value: *mut u64,
) -> CqStatus {
    guard(|| {
        let c = lr_coefficient(&deref(outer, "outer")?.0, &deref(inner, "inner")?.0, &deref(content, "content")?.0);
        *out(value, "value")? = c;
        Ok(())
    })
}

/// Irreducible character of S_N labelled by `shape` at cycle type `cycles`.
/// Returns `CQ_STATUS_OVERFLOW` if the value does not fit in 64 bits.
///
/// # Safety
/// Both handles must be live and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cq_character(shape: *const CqPartition, cycles: *const CqPartition, value: *mut i64) -> CqStatus {
    guard(|| {
        let class = CycleType::new(deref(cycles, "cycles")?.0.clone());
        let chi = mn_character(&deref(shape, "shape")?.0, &class).map_err(Failure::invalid)?;
        let slot = out(value, "value")?;
        *slot = i64::try_from(&chi).map_err(|_| Failure(CqStatus::Overflow, format!("{chi} exceeds 64 bits")))?;
        Ok(())
    })
}

/// Rank check for the weight space Λ_r - nδ. `json` may be NULL; otherwise it
/// receives the full report.
///
/// # Safety
/// `pass` must be valid; `json` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn cq_verify_theorem2(r: usize, n: usize, pass: *mut bool, json: *mut *mut c_char) -> CqStatus {
    guard(|| {
        let slot = out(pass, "pass")?;
        let report = verify_theorem2(Weight::new(r, n));
        *slot = report.pass;
        if let Some(json) = json.as_mut() {
            *json = c_string(serde_json::to_string(&report).map_err(Failure::invalid)?);
        }
        Ok(())
    })
}

/// Compares the Littlewood–Richardson decomposition of the reduced Schur
/// function of `p` against an exact linear solve. `json` may be NULL.
///
/// # Safety
/// `p` must be a live handle, `pass` valid, `json` NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn cq_verify_theorem3(p: *const CqPartition, pass: *mut bool, json: *mut *mut c_char) -> CqStatus {
    guard(|| {
        let y = deref(p, "partition")?;
        let slot = out(pass, "pass")?;
        let report = verify_theorem3(&y.0);
        *slot = report.matches;
        if let Some(json) = json.as_mut() {
            *json = c_string(serde_json::to_string(&report).map_err(Failure::invalid)?);
        }
        Ok(())
    })
}

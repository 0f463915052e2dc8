//! C interface to `fouradic`.
//!
//! Sequences live behind opaque handles created by `fa_*` constructors and
//! released with the matching `*_free`. Every fallible call returns an
//! [`FaStatus`]; on failure a message is kept per thread and can be read with
//! [`fa_last_error_message`]. Strings handed out by the library are
//! NUL-terminated and must be released with [`fa_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fouradic::adic::analyze;
use fouradic::interleave::{interleave, QuaternarySequence};
use fouradic::qseq;
use fouradic::seqgen::{apply_transform, from_tag, is_ideal, BinarySequence};
use fouradic::verify::{run_request, Request};
use fouradic::Error;

/// Result codes. The first four match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaStatus {
    Ok = 0,
    Mismatch = 1,
    InvalidArgument = 2,
    Io = 3,
    Parse = 4,
    NullPointer = 5,
    Internal = 6,
    Panic = 7,
}

/// Binary sequence of odd period with its provenance tag.
pub struct FaBinary {
    inner: BinarySequence,
}

/// Quaternary sequence.
pub struct FaQuaternary {
    inner: QuaternarySequence,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> FaStatus {
    match e {
        Error::Parameter(_) | Error::Precondition(_) => FaStatus::InvalidArgument,
        Error::Parse(_) => FaStatus::Parse,
        Error::Io { .. } => FaStatus::Io,
        Error::Internal(_) => FaStatus::Internal,
    }
}

struct Fail(FaStatus);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        set_error(e.to_string());
        Fail(status_of(&e))
    }
}

fn null(what: &str) -> Fail {
    set_error(format!("{what} is NULL"));
    Fail(FaStatus::NullPointer)
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<FaStatus, Fail>) -> FaStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail(status))) => status,
        Err(_) => {
            set_error("panic inside fouradic");
            FaStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        Fail(FaStatus::Parse)
    })
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s).map(CString::into_raw).map_err(|_| {
        set_error("string contains NUL");
        Fail(FaStatus::Internal)
    })
}

unsafe fn slice_arg<'a>(p: *const u8, len: usize, what: &str) -> Result<&'a [u8], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// Copies `src` into `buf` of capacity `cap`, always reporting the full length.
unsafe fn copy_out(src: &[u8], buf: *mut u8, cap: usize, len_out: *mut usize) -> Result<FaStatus, Fail> {
    *out_arg(len_out, "len_out")? = src.len();
    if buf.is_null() || cap < src.len() {
        set_error(format!("buffer holds {cap} bytes, {} needed", src.len()));
        return Err(Fail(FaStatus::InvalidArgument));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    Ok(FaStatus::Ok)
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn fa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next `fa_*` call on the same thread.
#[no_mangle]
pub extern "C" fn fa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a sequence from a provenance tag such as `legendre:p=7,variant=ell+L2`.
///
/// # Safety
/// `tag` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_from_tag(tag: *const c_char, out: *mut *mut FaBinary) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let s = from_tag(str_arg(tag, "tag")?)?;
        *out = boxed(FaBinary { inner: s });
        Ok(FaStatus::Ok)
    })
}

/// Builds a sequence from `len` bits, each 0 or 1.
///
/// # Safety
/// `bits` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_from_bits(bits: *const u8, len: usize, out: *mut *mut FaBinary) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let bits = slice_arg(bits, len, "bits")?;
        let s = BinarySequence::from_bits(bits.to_vec())?;
        *out = boxed(FaBinary { inner: s });
        Ok(FaStatus::Ok)
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_free(s: *mut FaBinary) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Period of `s`, or 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_period(s: *const FaBinary) -> usize {
    s.as_ref().map_or(0, |s| s.inner.period())
}

/// Copies the bits into `buf`. `*len_out` always receives the period; a
/// short buffer gives `InvalidArgument`.
///
/// # Safety
/// `buf` must have room for `cap` bytes; `len_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_bits(
    s: *const FaBinary,
    buf: *mut u8,
    cap: usize,
    len_out: *mut usize,
) -> FaStatus {
    guard(|| copy_out(ref_arg(s, "sequence")?.inner.bits(), buf, cap, len_out))
}

/// Provenance tag as a new string.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_provenance(s: *const FaBinary, out: *mut *mut c_char) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = c_string(ref_arg(s, "sequence")?.inner.provenance().to_string())?;
        Ok(FaStatus::Ok)
    })
}

/// `Ok` if `s` has ideal autocorrelation, `Mismatch` otherwise.
///
/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_is_ideal(s: *const FaBinary) -> FaStatus {
    guard(|| {
        Ok(if is_ideal(&ref_arg(s, "sequence")?.inner) {
            FaStatus::Ok
        } else {
            FaStatus::Mismatch
        })
    })
}

/// Applies one transform step `C`, `L<e>` or `M<r>` into a new handle.
///
/// # Safety
/// `s` must be a live handle, `step` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_transform(
    s: *const FaBinary,
    step: *const c_char,
    out: *mut *mut FaBinary,
) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let t = apply_transform(&ref_arg(s, "sequence")?.inner, str_arg(step, "step")?)?;
        *out = boxed(FaBinary { inner: t });
        Ok(FaStatus::Ok)
    })
}

/// `QSEQ` text of `s` (alphabet 2).
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_to_qseq(s: *const FaBinary, out: *mut *mut c_char) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = c_string(qseq::format_binary(&ref_arg(s, "sequence")?.inner))?;
        Ok(FaStatus::Ok)
    })
}

/// Parses `QSEQ` text with alphabet 2.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_binary_from_qseq(text: *const c_char, out: *mut *mut FaBinary) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let s = qseq::parse(str_arg(text, "text")?)?.into_binary()?;
        *out = boxed(FaBinary { inner: s });
        Ok(FaStatus::Ok)
    })
}

/// Interleaves two binary sequences of equal period.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_interleave(
    a: *const FaBinary,
    b: *const FaBinary,
    out: *mut *mut FaQuaternary,
) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let w = interleave(&ref_arg(a, "a")?.inner, &ref_arg(b, "b")?.inner)?;
        *out = boxed(FaQuaternary { inner: w });
        Ok(FaStatus::Ok)
    })
}

/// Builds a quaternary sequence from `len` digits in `0..=3`.
///
/// # Safety
/// `digits` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_quaternary_from_digits(
    digits: *const u8,
    len: usize,
    out: *mut *mut FaQuaternary,
) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let q = QuaternarySequence::new(slice_arg(digits, len, "digits")?.to_vec())?;
        *out = boxed(FaQuaternary { inner: q });
        Ok(FaStatus::Ok)
    })
}

/// # Safety
/// `q` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fa_quaternary_free(q: *mut FaQuaternary) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Period of `q`, or 0 for NULL.
///
/// # Safety
/// `q` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fa_quaternary_period(q: *const FaQuaternary) -> usize {
    q.as_ref().map_or(0, |q| q.inner.period())
}

/// Copies the digits into `buf`; see [`fa_binary_bits`].
///
/// # Safety
/// `buf` must have room for `cap` bytes; `len_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_quaternary_digits(
    q: *const FaQuaternary,
    buf: *mut u8,
    cap: usize,
    len_out: *mut usize,
) -> FaStatus {
    guard(|| copy_out(ref_arg(q, "sequence")?.inner.digits(), buf, cap, len_out))
}

/// JSON analysis record: `S(4)`, `d`, `d_+`, `d_-`, ratio, `log4`, thresholds, spectrum.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_quaternary_analyze_json(q: *const FaQuaternary, out: *mut *mut c_char) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let record = analyze(&ref_arg(q, "sequence")?.inner);
        let json = serde_json::to_string(&record)
            .map_err(|e| Error::Internal(format!("JSON encoding failed: {e}")))?;
        *out = c_string(json)?;
        Ok(FaStatus::Ok)
    })
}

/// `QSEQ` text of `q` (alphabet 4).
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_quaternary_to_qseq(q: *const FaQuaternary, out: *mut *mut c_char) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = c_string(qseq::format_quaternary(&ref_arg(q, "sequence")?.inner))?;
        Ok(FaStatus::Ok)
    })
}

/// Parses `QSEQ` text with alphabet 4.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_quaternary_from_qseq(text: *const c_char, out: *mut *mut FaQuaternary) -> FaStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let q = qseq::parse(str_arg(text, "text")?)?.into_quaternary()?;
        *out = boxed(FaQuaternary { inner: q });
        Ok(FaStatus::Ok)
    })
}

/// Runs a JSON verification request, e.g. `{"theorem":"thm8","k":3,"l":2}`.
/// Returns `Ok` on a match and `Mismatch` otherwise; in both cases
/// `*report_out` receives the JSON report.
///
/// # Safety
/// `request` must be a NUL-terminated string; `report_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fa_verify_json(request: *const c_char, report_out: *mut *mut c_char) -> FaStatus {
    guard(|| {
        let out = out_arg(report_out, "report_out")?;
        *out = ptr::null_mut();
        let req = Request::from_json(str_arg(request, "request")?)?;
        let outcome = run_request(&req)?;
        let json = serde_json::to_string(&outcome.report)
            .map_err(|e| Error::Internal(format!("JSON encoding failed: {e}")))?;
        *out = c_string(json)?;
        Ok(if outcome.matched {
            FaStatus::Ok
        } else {
            FaStatus::Mismatch
        })
    })
}

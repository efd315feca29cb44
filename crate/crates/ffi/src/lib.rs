//! C ABI over `cablecalc`.
//!
//! Every function returns a [`CcStatus`]; results come back through out
//! pointers. Handles are opaque and must be released with their `_free`
//! function. On failure a message is kept per thread and can be read with
//! [`cc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cablecalc::atlas::{self, Classification, MountainRange};
use cablecalc::render::{to_json, ClassificationModel};
use cablecalc::trefoil_cable::non_thickenable_slope;
use cablecalc::{Error, Slope, Utp};
use num_bigint::BigInt;

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    /// The input lies outside every known classification; see
    /// [`cc_last_hypothesis`].
    NotCovered = 5,
    NotSimple = 6,
    Overflow = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcUtp {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

/// A classified knot type.
pub struct CcKnot {
    expr: String,
    class: Classification,
}

/// An enumerated mountain range.
pub struct CcRange {
    range: MountainRange,
}

struct LastError {
    message: CString,
    hypothesis: Option<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<LastError>> = const { RefCell::new(None) };
}

fn set_error(message: impl ToString, hypothesis: Option<&str>) {
    let clean = |s: String| CString::new(s.replace('\0', " ")).expect("nul bytes removed");
    let err = LastError {
        message: clean(message.to_string()),
        hypothesis: hypothesis.map(|h| clean(h.to_string())),
    };
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(err));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CcStatus {
    match e {
        Error::NotCovered { .. } => CcStatus::NotCovered,
        Error::Overflow(_) => CcStatus::Overflow,
        _ => CcStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> CcStatus {
    set_error(&e, e.hypothesis().map(|h| h.code()));
    status_of(&e)
}

fn to_i64(v: &BigInt) -> Option<i64> {
    i64::try_from(v).ok()
}

/// Runs `body`, turning panics into [`CcStatus::Panic`].
fn guard(body: impl FnOnce() -> CcStatus) -> CcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic", None);
            CcStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CcStatus> {
    if s.is_null() {
        set_error("null string argument", None);
        return Err(CcStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8", None);
        CcStatus::InvalidUtf8
    })
}

macro_rules! deref {
    ($p:expr) => {
        match unsafe { $p.as_ref() } {
            Some(v) => v,
            None => {
                set_error(concat!("null pointer: ", stringify!($p)), None);
                return CcStatus::NullPointer;
            }
        }
    };
}

macro_rules! out {
    ($p:expr, $v:expr) => {{
        if $p.is_null() {
            set_error(concat!("null out pointer: ", stringify!($p)), None);
            return CcStatus::NullPointer;
        }
        unsafe { $p.write($v) };
    }};
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call on the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null(), |e| e.message.as_ptr())
    })
}

/// Machine-readable hypothesis code (e.g. `"base_not_utp"`) when the last
/// call returned [`CcStatus::NotCovered`], else NULL.
#[no_mangle]
pub extern "C" fn cc_last_hypothesis() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .and_then(|e| e.hypothesis.as_ref())
            .map_or(ptr::null(), |h| h.as_ptr())
    })
}

/// Parses and classifies a knot expression such as `"T(2,3).cable(2,3)"`.
///
/// # Safety
/// `expr` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_classify(expr: *const c_char, out: *mut *mut CcKnot) -> CcStatus {
    guard(|| {
        let text = match read_str(expr) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed = match cablecalc::parse(text) {
            Ok(e) => e,
            Err(e) => {
                set_error(&e, None);
                return CcStatus::ParseError;
            }
        };
        match atlas::classify(&parsed) {
            Ok(class) => {
                out!(
                    out,
                    Box::into_raw(Box::new(CcKnot {
                        expr: text.to_string(),
                        class
                    }))
                );
                CcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `knot` must come from [`cc_classify`] and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_free(knot: *mut CcKnot) {
    if !knot.is_null() {
        drop(Box::from_raw(knot));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_tb_bar(knot: *const CcKnot, out: *mut i64) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        out!(out, k.class.tb_bar);
        CcStatus::Ok
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_utp(knot: *const CcKnot, out: *mut CcUtp) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        out!(
            out,
            match k.class.utp {
                Utp::Yes => CcUtp::Yes,
                Utp::No => CcUtp::No,
                Utp::Unknown => CcUtp::Unknown,
            }
        );
        CcStatus::Ok
    })
}

/// `(r + tb) mod 2` for every Legendrian representative.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_parity(knot: *const CcKnot, out: *mut u8) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        out!(out, k.class.parity);
        CcStatus::Ok
    })
}

/// Width as a reduced fraction; `*exact` is false when only the bracket
/// `[num, num + 1]` is known (then `*den` is 1).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_width(
    knot: *const CcKnot,
    num: *mut i64,
    den: *mut i64,
    exact: *mut bool,
) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        let (n, d, e) = match &k.class.width {
            cablecalc::Width::Exact(w) => match (to_i64(w.numer()), to_i64(w.denom())) {
                (Some(n), Some(d)) => (n, d, true),
                _ => return fail(Error::Overflow("width")),
            },
            cablecalc::Width::Interval { lo, .. } => (*lo, 1, false),
        };
        out!(num, n);
        out!(den, d);
        out!(exact, e);
        CcStatus::Ok
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_is_simple(knot: *const CcKnot, out: *mut bool) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        out!(out, k.class.is_simple());
        CcStatus::Ok
    })
}

/// Copies up to `cap` peak rotation numbers into `buf` and stores the total
/// count in `*len`. Pass `buf = NULL, cap = 0` to query the count.
/// Returns [`CcStatus::NotSimple`] for knot types without peaks.
///
/// # Safety
/// `buf` must have room for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_peaks(
    knot: *const CcKnot,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        let Some(peaks) = k.class.peaks() else {
            set_error("knot type is not Legendrian simple", None);
            return CcStatus::NotSimple;
        };
        out!(len, peaks.len());
        if !buf.is_null() {
            let n = cap.min(peaks.len());
            ptr::copy_nonoverlapping(peaks.as_ptr(), buf, n);
        }
        CcStatus::Ok
    })
}

/// Classification record as JSON. Release with [`cc_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_knot_to_json(knot: *const CcKnot, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        let json = to_json(&ClassificationModel::new(k.expr.clone(), &k.class));
        out!(out, CString::new(json).expect("JSON has no NUL").into_raw());
        CcStatus::Ok
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Enumerates the mountain range from `tb_bar` down to `floor`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_range_new(
    knot: *const CcKnot,
    floor: i64,
    out: *mut *mut CcRange,
) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        match atlas::mountain_range(&k.class, floor) {
            Ok(range) => {
                out!(out, Box::into_raw(Box::new(CcRange { range })));
                CcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Multiplicity at `(r, tb)`; zero outside the enumerated window.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_range_mult(
    range: *const CcRange,
    r: i64,
    tb: i64,
    out: *mut u32,
) -> CcStatus {
    guard(|| {
        let m = deref!(range);
        out!(out, m.range.mult(r, tb));
        CcStatus::Ok
    })
}

/// # Safety
/// `range` must come from [`cc_range_new`] and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cc_range_free(range: *mut CcRange) {
    if !range.is_null() {
        drop(Box::from_raw(range));
    }
}

/// Number of transverse classes with self-linking `sl` that have a
/// Legendrian approximation at `tb >= floor`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_transverse_count(
    knot: *const CcKnot,
    floor: i64,
    sl: i64,
    out: *mut u32,
) -> CcStatus {
    guard(|| {
        let k = deref!(knot);
        match atlas::transverse(&k.class, floor) {
            Ok(t) => {
                out!(out, t.count(sl));
                CcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Boundary slope `num/den` of the `k`-th non-thickenable torus of the
/// positive trefoil.
///
/// # Safety
/// Out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cc_nonthick_slope(k: i64, num: *mut i64, den: *mut i64) -> CcStatus {
    guard(|| match non_thickenable_slope(k) {
        Ok(s) => match (to_i64(s.num()), to_i64(s.den())) {
            (Some(n), Some(d)) => {
                out!(num, n);
                out!(den, d);
                CcStatus::Ok
            }
            _ => fail(Error::Overflow("nonthick slope")),
        },
        Err(e) => fail(e),
    })
}

/// Farey-graph distance between two slopes written as `"p/q"`, an integer or `"inf"`.
///
/// # Safety
/// Strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_farey_distance(
    s: *const c_char,
    t: *const c_char,
    out: *mut usize,
) -> CcStatus {
    guard(|| {
        let parse = |p| -> Result<Slope, CcStatus> {
            read_str(p)?.parse::<Slope>().map_err(|e| {
                set_error(&e, None);
                CcStatus::ParseError
            })
        };
        match (parse(s), parse(t)) {
            (Ok(a), Ok(b)) => {
                out!(out, cablecalc::farey_distance(&a, &b));
                CcStatus::Ok
            }
            (Err(e), _) | (_, Err(e)) => e,
        }
    })
}

//! C ABI over isoproj: opaque handles for symmetric pairs, FKM families and
//! census results. Every entry point returns an [`IsoStatus`]; out-parameters
//! are written only on success. Strings returned through out-parameters are
//! owned by the caller and must be released with [`iso_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isoproj::census::{self, ExportFormat, FoliationRecord};
use isoproj::fkmproj::{self, FkmClassCount, FkmFamily, Split};
use isoproj::symcat::{dims, Label, SymmetricPairRecord};
use isoproj::voganproj::{self, ClassCount};
use isoproj::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidString = 2,
    UnknownLabel = 3,
    IllegalParameters = 4,
    NotFkm = 5,
    SplitShape = 6,
    OutOfScope = 7,
    UnknownFormat = 8,
    Invariant = 9,
    Other = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoFormat {
    Json = 0,
    Csv = 1,
}

/// A catalog record with its congruence classes.
pub struct IsoPair {
    rec: SymmetricPairRecord,
    count: ClassCount,
}

/// An FKM family with its congruence classes.
pub struct IsoFkm {
    family: FkmFamily,
    count: FkmClassCount,
}

/// The census rows for one n.
pub struct IsoCensus {
    records: Vec<FoliationRecord>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> IsoStatus {
    match e {
        Error::UnknownLabel(_) => IsoStatus::UnknownLabel,
        Error::IllegalParameters { .. } | Error::IllegalCartanType { .. } => IsoStatus::IllegalParameters,
        Error::NotFkm { .. } => IsoStatus::NotFkm,
        Error::SplitShape(_) => IsoStatus::SplitShape,
        Error::OutOfScope { .. } => IsoStatus::OutOfScope,
        Error::UnknownFormat(_) => IsoStatus::UnknownFormat,
        Error::Invariant(_) => IsoStatus::Invariant,
        _ => IsoStatus::Other,
    }
}

fn fail(e: Error) -> IsoStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

fn guard<F: FnOnce() -> Result<(), IsoStatus>>(f: F) -> IsoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IsoStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("panic inside isoproj");
            IsoStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, IsoStatus> {
    if s.is_null() {
        set_last_error("null string");
        return Err(IsoStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_last_error("string is not UTF-8");
        IsoStatus::InvalidString
    })
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, IsoStatus> {
    h.as_ref().ok_or_else(|| {
        set_last_error("null handle");
        IsoStatus::NullPointer
    })
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), IsoStatus> {
    if out.is_null() {
        set_last_error("null out-parameter");
        return Err(IsoStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), IsoStatus> {
    let c = CString::new(s).map_err(|_| {
        set_last_error("interior NUL in output");
        IsoStatus::Other
    })?;
    write(out, c.into_raw())
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn iso_status_message(status: IsoStatus) -> *const c_char {
    let s: &'static CStr = match status {
        IsoStatus::Ok => c"ok",
        IsoStatus::NullPointer => c"null pointer",
        IsoStatus::InvalidString => c"invalid string",
        IsoStatus::UnknownLabel => c"unknown symmetric pair label",
        IsoStatus::IllegalParameters => c"illegal parameters",
        IsoStatus::NotFkm => c"not an FKM foliation",
        IsoStatus::SplitShape => c"split shape mismatch",
        IsoStatus::OutOfScope => c"outside the supported scope",
        IsoStatus::UnknownFormat => c"unknown export format",
        IsoStatus::Invariant => c"invariant violation",
        IsoStatus::Other => c"error",
        IsoStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Detail of the last failure on this thread, or null if none. Free with
/// `iso_string_free`.
#[no_mangle]
pub extern "C" fn iso_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn iso_string_free(s: *mut c_char) {
    if !s.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(CString::from_raw(s))));
    }
}

/// # Safety
/// `label` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_pair_new(label: *const c_char, p: usize, nu: usize, out: *mut *mut IsoPair) -> IsoStatus {
    guard(|| {
        let label: Label = read_str(label)?.parse().map_err(fail)?;
        let rec = SymmetricPairRecord::new(label, p, nu).map_err(fail)?;
        let count = voganproj::count_classes(&rec).map_err(fail)?;
        write(out, Box::into_raw(Box::new(IsoPair { rec, count })))
    })
}

/// # Safety
/// `pair` must be null or a handle from `iso_pair_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn iso_pair_free(pair: *mut IsoPair) {
    if !pair.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(pair))));
    }
}

/// Number N of congruence classes.
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_pair_class_count(pair: *const IsoPair, out: *mut usize) -> IsoStatus {
    guard(|| write(out, handle(pair)?.count.n))
}

/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_pair_admissible_count(pair: *const IsoPair, out: *mut usize) -> IsoStatus {
    guard(|| write(out, handle(pair)?.count.points.len()))
}

/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_pair_is_hermitian(pair: *const IsoPair, out: *mut bool) -> IsoStatus {
    guard(|| write(out, handle(pair)?.rec.hermitian))
}

/// Ambient CP^n and codimension of the projected foliations.
///
/// # Safety
/// `pair` must be a live handle; both outs must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_pair_dimensions(pair: *const IsoPair, n: *mut u64, codim: *mut usize) -> IsoStatus {
    guard(|| {
        let d = dims(&handle(pair)?.rec);
        if n.is_null() || codim.is_null() {
            set_last_error("null out-parameter");
            return Err(IsoStatus::NullPointer);
        }
        write(n, d.n as u64)?;
        write(codim, d.codim)
    })
}

/// Orbit representatives, one per line, in the h-basis.
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_pair_representatives(pair: *const IsoPair, out: *mut *mut c_char) -> IsoStatus {
    guard(|| {
        let lines: Vec<String> = handle(pair)?.count.representatives().iter().map(|t| t.h_combination()).collect();
        write_string(out, lines.join("\n"))
    })
}

fn fkm_new(m: usize, split: Split, out: *mut *mut IsoFkm) -> IsoStatus {
    guard(|| {
        let family = fkmproj::clifford_family(m, split).map_err(fail)?;
        let count = fkmproj::count_classes_fkm(&family).map_err(fail)?;
        unsafe { write(out, Box::into_raw(Box::new(IsoFkm { family, count }))) }
    })
}

/// Family with a single multiplicity k (m not divisible by 4).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_fkm_new(m: usize, k: usize, out: *mut *mut IsoFkm) -> IsoStatus {
    fkm_new(m, Split::K(k), out)
}

/// Family with split (k+, k-) (m divisible by 4).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_fkm_new_split(m: usize, kplus: usize, kminus: usize, out: *mut *mut IsoFkm) -> IsoStatus {
    fkm_new(m, Split::PlusMinus { plus: kplus, minus: kminus }, out)
}

/// # Safety
/// `f` must be null or a handle from `iso_fkm_new*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn iso_fkm_free(f: *mut IsoFkm) {
    if !f.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(f))));
    }
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_fkm_class_count(f: *const IsoFkm, out: *mut usize) -> IsoStatus {
    guard(|| write(out, handle(f)?.count.n))
}

/// # Safety
/// `f` must be a live handle; all outs must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_fkm_multiplicities(
    f: *const IsoFkm,
    n: *mut u64,
    m1: *mut i64,
    m2: *mut i64,
) -> IsoStatus {
    guard(|| {
        let fam = &handle(f)?.family;
        if n.is_null() || m1.is_null() || m2.is_null() {
            set_last_error("null out-parameter");
            return Err(IsoStatus::NullPointer);
        }
        write(n, fam.n)?;
        write(m1, fam.mult.0)?;
        write(m2, fam.mult.1)
    })
}

/// Orbit representatives, one per line, in the ε-basis.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_fkm_representatives(f: *const IsoFkm, out: *mut *mut c_char) -> IsoStatus {
    guard(|| {
        let h = handle(f)?;
        let lines: Vec<String> =
            h.count.representatives().iter().map(|t| fkmproj::format_point(&h.family, t)).collect();
        write_string(out, lines.join("\n"))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_census_new(n: u64, out: *mut *mut IsoCensus) -> IsoStatus {
    guard(|| {
        if n == 0 {
            return Err(fail(Error::IllegalParameters { label: "census".into(), reason: "n must be positive".into() }));
        }
        let records = census::enumerate_foliations(n).map_err(fail)?;
        write(out, Box::into_raw(Box::new(IsoCensus { records })))
    })
}

/// # Safety
/// `c` must be null or a handle from `iso_census_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn iso_census_free(c: *mut IsoCensus) {
    if !c.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(c))));
    }
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_census_len(c: *const IsoCensus, out: *mut usize) -> IsoStatus {
    guard(|| write(out, handle(c)?.records.len()))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_census_export(c: *const IsoCensus, format: IsoFormat, out: *mut *mut c_char) -> IsoStatus {
    guard(|| {
        let fmt = match format {
            IsoFormat::Json => ExportFormat::Json,
            IsoFormat::Csv => ExportFormat::Csv,
        };
        let text = census::export(&handle(c)?.records, fmt).map_err(fail)?;
        write_string(out, text)
    })
}

/// Whether every irreducible isoparametric foliation on CP^n is homogeneous.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn iso_all_homogeneous(n: u64, out: *mut bool) -> IsoStatus {
    guard(|| write(out, census::all_homogeneous(n)))
}

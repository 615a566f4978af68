//! C interface to `qschur`. Objects are opaque handles released with the
//! matching `_free` function; every call returns a [`QsStatus`] and the
//! message of the last failure on the calling thread is available from
//! [`qschur_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qschur::cartan::{builtin_cartan, validate_cartan, CartanData};
use qschur::present::{presented_dimension, PresentedDimension};
use qschur::schur::{
    algebra_dimension, assemble_with_budget, rep_dump, verify_presentation, SchurRep,
};
use qschur::{Error, WeightSet};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidCartan = 3,
    InvalidWeights = 4,
    NotSaturated = 5,
    BudgetExceeded = 6,
    Unstabilized = 7,
    Internal = 8,
    Panic = 9,
}

/// Validated Cartan data.
pub struct QsCartan(CartanData);

/// Assembled representation of a generalized q-Schur algebra.
pub struct QsRep(SchurRep);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QsStatus {
    match e {
        Error::NotSquare
        | Error::BadDiagonal { .. }
        | Error::NotSymmetrizable
        | Error::SymmetrizerOutOfRange { .. }
        | Error::NotFiniteType { .. }
        | Error::UnknownType(_)
        | Error::CartanMismatch => QsStatus::InvalidCartan,
        Error::NotDominant(_) | Error::WeightArity { .. } | Error::EmptyPi => {
            QsStatus::InvalidWeights
        }
        Error::NotSaturated(_) => QsStatus::NotSaturated,
        Error::ResourceBudgetExceeded(_) => QsStatus::BudgetExceeded,
        Error::IndexOutOfRange { .. }
        | Error::ZeroEvaluationPoint
        | Error::PoleAtPoint(_)
        | Error::BoundTooSmall { .. }
        | Error::Parse(_) => QsStatus::InvalidArgument,
        Error::RankMismatch { .. } | Error::MembershipFailure { .. } | Error::Internal(_) => {
            QsStatus::Internal
        }
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (QsStatus, String)>) -> QsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            QsStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside qschur".into());
            QsStatus::Panic
        }
    }
}

fn lib<T>(r: qschur::Result<T>) -> Result<T, (QsStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (QsStatus, String) {
    (QsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (QsStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (QsStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library.
#[no_mangle]
pub extern "C" fn qschur_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Built-in Cartan matrix of `family` (`'A'` to `'G'`) and `rank`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qschur_cartan_builtin(
    family: c_char,
    rank: usize,
    out: *mut *mut QsCartan,
) -> QsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = lib(builtin_cartan(family as u8 as char, rank))?;
        *out = Box::into_raw(Box::new(QsCartan(c)));
        Ok(())
    })
}

/// Cartan data from `n * n` row-major entries.
///
/// # Safety
/// `entries` must point to `n * n` integers and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qschur_cartan_from_matrix(
    entries: *const i64,
    n: usize,
    out: *mut *mut QsCartan,
) -> QsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if entries.is_null() && n > 0 {
            return Err(null("entries"));
        }
        let flat = if n == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(entries, n * n)
        };
        let rows: Vec<Vec<i64>> = flat.chunks(n.max(1)).map(<[i64]>::to_vec).collect();
        let c = lib(validate_cartan(&rows))?;
        *out = Box::into_raw(Box::new(QsCartan(c)));
        Ok(())
    })
}

/// # Safety
/// `c` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn qschur_cartan_free(c: *mut QsCartan) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Rank of the Cartan matrix.
///
/// # Safety
/// `c` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qschur_cartan_rank(c: *const QsCartan, out: *mut usize) -> QsStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("cartan"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = c.0.rank();
        Ok(())
    })
}

/// Assemble the representation for the weight set `pi` (e.g. `"0;2"`),
/// with module dimensions capped by `budget`.
///
/// # Safety
/// `c`, `pi` and `out` must be valid; `pi` must be nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qschur_rep_assemble(
    c: *const QsCartan,
    pi: *const c_char,
    budget: usize,
    out: *mut *mut QsRep,
) -> QsStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("cartan"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let pi = lib(WeightSet::parse(text(pi, "pi")?))?;
        let r = lib(assemble_with_budget(&c.0, &pi, budget))?;
        *out = Box::into_raw(Box::new(QsRep(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn qschur_rep_free(r: *mut QsRep) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Dimension of the representation space.
///
/// # Safety
/// `r` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qschur_rep_space_dim(r: *const QsRep, out: *mut usize) -> QsStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("rep"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = r.0.dim();
        Ok(())
    })
}

/// Dimension of the algebra spanned by the generators.
///
/// # Safety
/// `r` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qschur_rep_algebra_dim(r: *const QsRep, out: *mut usize) -> QsStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("rep"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = lib(algebra_dimension(&r.0))?;
        Ok(())
    })
}

/// Check every defining relation; `passed` receives the verdict and
/// `failures` the number of failed checks.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qschur_rep_verify(
    r: *const QsRep,
    passed: *mut bool,
    failures: *mut usize,
) -> QsStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("rep"))?;
        if passed.is_null() || failures.is_null() {
            return Err(null("out"));
        }
        let report = verify_presentation(&r.0);
        *passed = report.passed();
        *failures = report.failures().count();
        Ok(())
    })
}

/// Text dump of the representation. Release with [`qschur_string_free`].
///
/// # Safety
/// `r` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qschur_rep_dump(r: *const QsRep, out: *mut *mut c_char) -> QsStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("rep"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CString::new(rep_dump(&r.0)).map_err(|e| (QsStatus::Internal, e.to_string()))?;
        *out = s.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn qschur_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Dimension of the algebra defined by generators and relations, found by
/// completing the relations up to `degree_bound`. Returns
/// `QS_STATUS_UNSTABILIZED` when the bound does not suffice.
///
/// # Safety
/// `c`, `pi` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qschur_presented_dim(
    c: *const QsCartan,
    pi: *const c_char,
    classical: bool,
    degree_bound: usize,
    out: *mut usize,
) -> QsStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("cartan"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let pi = lib(WeightSet::parse(text(pi, "pi")?))?;
        match lib(presented_dimension(&c.0, &pi, classical, degree_bound))? {
            PresentedDimension::Finite(d) => {
                *out = d;
                Ok(())
            }
            PresentedDimension::Unstabilized(why) => Err((QsStatus::Unstabilized, why)),
        }
    })
}

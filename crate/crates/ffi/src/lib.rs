//! C ABI over `hallkit`.
//!
//! Tables and forms are opaque handles owned by the caller and released with
//! the matching `*_free`. Every fallible call returns an [`HkStatus`]; the
//! message of the last failure on the calling thread is available from
//! [`hk_last_error`]. Strings handed out by the library are freed with
//! [`hk_string_free`].

use hallkit::hallalg::CfAlgebra;
use hallkit::hallnum::{from_json_str, to_json_string, HallTable, TableConfig};
use hallkit::quantumhall::SfAlgebra;
use hallkit::quiver::{DimVec, EulerForm, Quiver};
use hallkit::twistedalg::{a_mult, b_mult, c_mult, parse_a, parse_b, parse_c, render_a, render_b, render_c, BMode};
use hallkit::verify::{run_random_suite, run_table_suite, Suite};
use hallkit::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Bound = 4,
    Domain = 5,
    Consistency = 6,
    Budget = 7,
    Panic = 8,
    Other = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HkAlgebra {
    Cf = 0,
    Sf = 1,
    A = 2,
    B = 3,
    C = 4,
}

/// A Hall table.
pub struct HkTable(HallTable);

/// A bilinear form on dimension vectors.
pub struct HkForm(EulerForm);

thread_local! {
    static LAST: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST.with(|l| *l.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HkStatus {
    match e {
        Error::Parse(_) | Error::DimensionMismatch { .. } => HkStatus::Parse,
        Error::Bound(_) => HkStatus::Bound,
        Error::Consistency(_) => HkStatus::Consistency,
        Error::Budget(_) => HkStatus::Budget,
        Error::Domain(_)
        | Error::SelfLoop(_)
        | Error::OrientedCycle(_)
        | Error::UnsupportedQuiver(_)
        | Error::UnsupportedPoset(_)
        | Error::NotLambdaCirc(_)
        | Error::Pole(_)
        | Error::DivisionByZero => HkStatus::Domain,
        _ => HkStatus::Other,
    }
}

struct Fail(HkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HkStatus::Ok,
        Ok(Err(Fail(s, m))) => {
            set_error(m);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            HkStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(HkStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(HkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn out_ptr<T>(p: *mut T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(HkStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("NULs removed").into_raw()
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hk_last_error() -> *const c_char {
    LAST.with(|l| l.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub extern "C" fn hk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a table from quiver text (`vertices N` / `arrow S T` lines) and a
/// dimension bound such as `"2,2"`. `max_total == 0` means no cap.
///
/// # Safety
/// String arguments must be valid NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hk_table_build(
    quiver: *const c_char,
    max_dim: *const c_char,
    max_total: usize,
    out: *mut *mut HkTable,
) -> HkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let q = Quiver::load(text(quiver, "quiver")?)?;
        let dmax = DimVec::parse(text(max_dim, "max_dim")?)?;
        if dmax.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch { expected: q.vertex_count(), found: dmax.len() }.into());
        }
        let cfg = TableConfig { max_total: (max_total > 0).then_some(max_total), ..TableConfig::default() };
        let t = HallTable::build(&q, &dmax, &cfg)?;
        *out = Box::into_raw(Box::new(HkTable(t)));
        Ok(())
    })
}

/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_table_from_json(json: *const c_char, out: *mut *mut HkTable) -> HkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let t = from_json_str(text(json, "json")?)?;
        *out = Box::into_raw(Box::new(HkTable(t)));
        Ok(())
    })
}

/// # Safety
/// `t` must be a live table handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_table_to_json(t: *const HkTable, out: *mut *mut c_char) -> HkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let t = t.as_ref().ok_or(Fail(HkStatus::NullPointer, "table is null".into()))?;
        *out = give_string(to_json_string(&t.0));
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a table handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hk_table_free(t: *mut HkTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of classes, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn hk_table_class_count(t: *const HkTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// # Safety
/// `t` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn hk_table_indecomposable_count(t: *const HkTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.indecomposables().len())
}

/// Count of violated polynomial identities (0 for a consistent table); the
/// first violation, if any, is left in [`hk_last_error`].
///
/// # Safety
/// `t` must be a live table handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_table_verify(t: *const HkTable, out: *mut usize) -> HkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let t = t.as_ref().ok_or(Fail(HkStatus::NullPointer, "table is null".into()))?;
        let v = t.0.verify_identities();
        if let Some(first) = v.first() {
            set_error(format!("{}: {}", first.check, first.detail));
        }
        *out = v.len();
        Ok(())
    })
}

/// Parse a form written as rows, e.g. `"1,-1;0,1"`.
///
/// # Safety
/// `s` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_form_parse(s: *const c_char, out: *mut *mut HkForm) -> HkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let f = EulerForm::parse(text(s, "form")?)?;
        *out = Box::into_raw(Box::new(HkForm(f)));
        Ok(())
    })
}

/// The Euler form of the table's quiver.
///
/// # Safety
/// `t` must be a live table handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_form_of_table(t: *const HkTable, out: *mut *mut HkForm) -> HkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let t = t.as_ref().ok_or(Fail(HkStatus::NullPointer, "table is null".into()))?;
        *out = Box::into_raw(Box::new(HkForm(t.0.quiver.euler_form())));
        Ok(())
    })
}

/// # Safety
/// `f` must be null or a form handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hk_form_free(f: *mut HkForm) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Multiply two elements written in the element grammar and return the
/// canonical rendering of the product. `CF` and `SF` need a table; `A`, `B`
/// and `C` need a form. `graph_mode` selects the connected-graph form of the
/// `B` product (otherwise the partition sum).
///
/// # Safety
/// Handles must be null or live; strings valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hk_mult(
    algebra: HkAlgebra,
    table: *const HkTable,
    form: *const HkForm,
    lhs: *const c_char,
    rhs: *const c_char,
    graph_mode: bool,
    out: *mut *mut c_char,
) -> HkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let (l, r) = (text(lhs, "lhs")?, text(rhs, "rhs")?);
        let s = match algebra {
            HkAlgebra::Cf | HkAlgebra::Sf => {
                let t = &table.as_ref().ok_or(Fail(HkStatus::NullPointer, "table is null".into()))?.0;
                if algebra == HkAlgebra::Cf {
                    let a = CfAlgebra::new(t);
                    a.render(&a.mult(&a.parse(l)?, &a.parse(r)?)?)
                } else {
                    let a = SfAlgebra::new(t)?;
                    a.render(&a.mult(&a.parse(l)?, &a.parse(r)?)?)
                }
            }
            _ => {
                let f = &form.as_ref().ok_or(Fail(HkStatus::NullPointer, "form is null".into()))?.0;
                let n = f.rank();
                let mode = if graph_mode { BMode::Graph } else { BMode::Sum };
                match algebra {
                    HkAlgebra::A => render_a(&a_mult(&parse_a(l, n)?, &parse_a(r, n)?, f)?),
                    HkAlgebra::B => render_b(&b_mult(&parse_b(l, n)?, &parse_b(r, n)?, f, mode)?),
                    _ => render_c(&c_mult(&parse_c(l, n)?, &parse_c(r, n)?, f)?),
                }
            }
        };
        *out = give_string(s);
        Ok(())
    })
}

/// Run a named suite. Table suites need `table`; the others use `seed` and
/// `trials`. `passed` receives whether every check passed and `report` the
/// JSON records, one per line.
///
/// # Safety
/// `suite` must be a valid string; `table` null or live; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn hk_verify(
    suite: *const c_char,
    table: *const HkTable,
    seed: u64,
    trials: usize,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> HkStatus {
    guard(|| {
        out_ptr(passed, "passed")?;
        out_ptr(report, "report")?;
        let suite: Suite = text(suite, "suite")?.parse()?;
        let rep = if suite.needs_table() {
            let t = table.as_ref().ok_or(Fail(HkStatus::NullPointer, format!("suite {suite} needs a table")))?;
            run_table_suite(suite, &t.0)?
        } else {
            run_random_suite(suite, seed, trials)?
        };
        let lines: Vec<String> = rep
            .checks
            .iter()
            .map(|c| serde_json::json!({"suite": suite.name(), "check": c.name, "status": c.status.as_str(), "detail": c.detail}).to_string())
            .collect();
        *passed = rep.ok();
        *report = give_string(lines.join("\n"));
        Ok(())
    })
}

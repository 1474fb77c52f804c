//! C ABI over `superybe`.
//!
//! Every function returns a status code (`SY_OK` on success). On failure the
//! message is available from `sy_last_error` on the same thread. Documents are
//! opaque handles released with `sy_document_free`; strings returned through
//! out-parameters are released with `sy_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use superybe::catalog::load_fixture;
use superybe::cli::{dualize, rmatrix_document};
use superybe::format::{emit, parse, Document};
use superybe::lie::check_lie_axioms;
use superybe::oop::oop_holds;
use superybe::prelie::check_prelie;
use superybe::rep::check_representation;
use superybe::rmat::{hierarchy_walk, is_super_rmatrix, operator_to_rmatrix, Variant};
use superybe::Error;

pub const SY_OK: i32 = 0;
/// A required pointer argument was null.
pub const SY_ERR_NULL: i32 = 1;
/// A string argument was not valid UTF-8.
pub const SY_ERR_UTF8: i32 = 2;
/// The document text could not be parsed.
pub const SY_ERR_PARSE: i32 = 3;
/// No object, label or fixture with the given name.
pub const SY_ERR_UNKNOWN: i32 = 4;
/// The inputs violate a mathematical precondition.
pub const SY_ERR_INVALID: i32 = 5;
/// An internal panic was caught.
pub const SY_ERR_PANIC: i32 = 6;

/// A parsed document.
pub struct SyDocument {
    doc: Document,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => SY_ERR_PARSE,
        Error::UnknownName(_) | Error::UnknownLabel(_) | Error::UnknownFixture(_) => SY_ERR_UNKNOWN,
        _ => SY_ERR_INVALID,
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SY_OK,
        Ok(Err(Failure(code, message))) => {
            set_error(&message);
            code
        }
        Err(_) => {
            set_error("internal panic");
            SY_ERR_PANIC
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SY_ERR_NULL, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SY_ERR_UTF8, format!("{what} is not valid UTF-8")))
}

unsafe fn document<'a>(p: *const SyDocument) -> Result<&'a Document, Failure> {
    if p.is_null() {
        return Err(Failure(SY_ERR_NULL, "document is null".into()));
    }
    Ok(&(*p).doc)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SY_ERR_NULL, "output pointer is null".into()));
    }
    *out = value;
    Ok(())
}

fn handle(doc: Document) -> *mut SyDocument {
    Box::into_raw(Box::new(SyDocument { doc }))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message of the last failure on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn sy_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sy_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `doc` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sy_document_free(doc: *mut SyDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Parses document text into a new handle.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sy_document_parse(source: *const c_char, out: *mut *mut SyDocument) -> i32 {
    guard(|| {
        let doc = parse(text(source, "source")?)?;
        write_out(out, handle(doc))
    })
}

/// Renders a document as text.
///
/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sy_document_emit(doc: *const SyDocument, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let s = emit(document(doc)?);
        write_out(out, c_string(s))
    })
}

/// Checks the algebra, every representation and every pre-Lie product.
///
/// # Safety
/// `doc` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sy_validate(doc: *const SyDocument, passed: *mut bool) -> i32 {
    guard(|| {
        let d = document(doc)?;
        let mut ok = check_lie_axioms(&d.algebra).passed();
        for rep in &d.reps {
            ok &= check_representation(&d.algebra, &d.space(&rep.on)?, &rep.action)?.passed();
        }
        for p in &d.prelies {
            ok &= check_prelie(&p.algebra).passed();
        }
        write_out(passed, ok)
    })
}

/// Whether the named map is an O-operator for the named representation
/// (`ad` and `coad` are built in).
///
/// # Safety
/// `doc` must be a live handle; the names NUL-terminated; `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn sy_check_oop(
    doc: *const SyDocument,
    map: *const c_char,
    rep: *const c_char,
    holds: *mut bool,
) -> i32 {
    guard(|| {
        let d = document(doc)?;
        let rho = d.representation(text(rep, "rep")?)?;
        let t = d.map(text(map, "map")?)?;
        write_out(holds, oop_holds(t, &rho)?)
    })
}

/// Whether the named tensor solves the super classical Yang-Baxter equation.
///
/// # Safety
/// `doc` must be a live handle; `tensor` NUL-terminated; `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn sy_check_cybe(doc: *const SyDocument, tensor: *const c_char, holds: *mut bool) -> i32 {
    guard(|| {
        let d = document(doc)?;
        let r = d.tensor(text(tensor, "tensor")?)?;
        write_out(holds, is_super_rmatrix(r))
    })
}

/// A new document with `T^s` and `ρ^s` added as `{map}_s` and `{rep}_s`.
///
/// # Safety
/// `doc` must be a live handle; the names NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sy_dualize(
    doc: *const SyDocument,
    map: *const c_char,
    rep: *const c_char,
    out: *mut *mut SyDocument,
) -> i32 {
    guard(|| {
        let d = document(doc)?;
        let result = dualize(d, text(map, "map")?, text(rep, "rep")?)?;
        write_out(out, handle(result))
    })
}

/// The semidirect algebra and the r-matrix of an O-operator, as a document
/// with one tensor `r`. `dual` selects `r_{T^s}` in `g ⋉ (sV)*`.
///
/// # Safety
/// `doc` must be a live handle; the names NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sy_build_rmatrix(
    doc: *const SyDocument,
    map: *const c_char,
    rep: *const c_char,
    dual: bool,
    out: *mut *mut SyDocument,
) -> i32 {
    guard(|| {
        let d = document(doc)?;
        let rho = d.representation(text(rep, "rep")?)?;
        let t = d.map(text(map, "map")?)?;
        let variant = if dual { Variant::Dual } else { Variant::Plain };
        let level = operator_to_rmatrix(t, &rho, variant)?;
        write_out(out, handle(rmatrix_document(&level)?))
    })
}

/// The last level of the tree hierarchy along `word` (`+` and `-` steps).
///
/// # Safety
/// `doc` must be a live handle; the strings NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sy_hierarchy(
    doc: *const SyDocument,
    tensor: *const c_char,
    word: *const c_char,
    out: *mut *mut SyDocument,
) -> i32 {
    guard(|| {
        let d = document(doc)?;
        let r = d.tensor(text(tensor, "tensor")?)?;
        let levels = hierarchy_walk(r, text(word, "word")?)?;
        let last = levels
            .last()
            .ok_or_else(|| Failure(SY_ERR_INVALID, "the word is empty".into()))?;
        write_out(out, handle(rmatrix_document(last)?))
    })
}

/// The document of a built-in fixture and whether all its expectations hold.
///
/// # Safety
/// `name` must be NUL-terminated; `out` and `passed` writable (`out` may be null).
#[no_mangle]
pub unsafe extern "C" fn sy_fixture_load(
    name: *const c_char,
    out: *mut *mut SyDocument,
    passed: *mut bool,
) -> i32 {
    guard(|| {
        let f = load_fixture(text(name, "name")?)?;
        write_out(passed, f.passed())?;
        if !out.is_null() {
            *out = handle(f.document);
        }
        Ok(())
    })
}

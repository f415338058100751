//! C interface to `latdual`.
//!
//! Contexts, posets and training contexts cross the boundary as opaque
//! handles, released with the matching `*_free`. Every fallible function
//! returns an [`LdStatus`]; on failure [`ld_last_error`] describes the
//! problem on the calling thread. Results are written through out-pointers
//! only on success.
//!
//! Sets and families of sets travel as JSON arrays of names, the same shape
//! the command line tool prints. Strings handed out through `char **` belong
//! to the caller and go back through [`ld_string_free`].
//!
//! Pointer arguments must be null or valid for the access implied by their
//! type; input strings must be NUL-terminated. Handles are not thread-safe
//! to free concurrently with use, but may be read from several threads.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use latdual::dualization::{self, TestOptions};
use latdual::{formats, hypotheses, reductions, Error, FormalContext, Poset, TrainingContext};
use serde_json::{json, Value};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    GuardExceeded = 4,
    Internal = 5,
    Panic = 6,
}

pub struct LdContext {
    inner: FormalContext,
}

pub struct LdPoset {
    inner: Poset,
}

pub struct LdTraining {
    inner: TrainingContext,
}

enum Failure {
    Null(&'static str),
    Utf8(&'static str),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Lib(Error::Json(e))
    }
}

impl Failure {
    fn status(&self) -> LdStatus {
        match self {
            Failure::Null(_) => LdStatus::NullPointer,
            Failure::Utf8(_) => LdStatus::InvalidUtf8,
            Failure::Lib(e) if e.is_guard() => LdStatus::GuardExceeded,
            Failure::Lib(Error::Internal(_)) => LdStatus::Internal,
            Failure::Lib(_) => LdStatus::InvalidInput,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Null(arg) => format!("argument `{arg}` is null"),
            Failure::Utf8(arg) => format!("argument `{arg}` is not valid UTF-8"),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn run(f: impl FnOnce() -> Result<(), Failure>) -> LdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(String::new());
            LdStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(failure.message());
            failure.status()
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            LdStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, arg: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(arg));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8(arg))
}

unsafe fn handle<'a, T>(p: *const T, arg: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(arg))
}

fn check_out<T>(p: *mut T, arg: &'static str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure::Null(arg))
    } else {
        Ok(())
    }
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Error::Internal("output contains a NUL byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_json(out: *mut *mut c_char, v: &Value) -> Result<(), Failure> {
    put_string(out, v.to_string())
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into this library on the thread.
#[no_mangle]
pub extern "C" fn ld_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn ld_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ld_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// ---------------------------------------------------------------------------
// contexts

/// Parses a Burmeister `.cxt` document.
#[no_mangle]
pub unsafe extern "C" fn ld_context_from_cxt(cxt: *const c_char, out: *mut *mut LdContext) -> LdStatus {
    run(|| {
        check_out(out, "out")?;
        let inner = formats::parse_cxt(text(cxt, "cxt")?)?;
        *out = Box::into_raw(Box::new(LdContext { inner }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ld_context_free(ctx: *mut LdContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ld_context_size(ctx: *const LdContext, objects: *mut usize, attributes: *mut usize) -> LdStatus {
    run(|| {
        let ctx = handle(ctx, "ctx")?;
        check_out(objects, "objects")?;
        check_out(attributes, "attributes")?;
        *objects = ctx.inner.num_objects();
        *attributes = ctx.inner.num_attributes();
        Ok(())
    })
}

/// The context as `.cxt` text.
#[no_mangle]
pub unsafe extern "C" fn ld_context_to_cxt(ctx: *const LdContext, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let ctx = handle(ctx, "ctx")?;
        check_out(out, "out")?;
        put_string(out, formats::write_cxt(&ctx.inner))
    })
}

/// All concepts as `[{"extent": [...], "intent": [...]}, ...]`.
#[no_mangle]
pub unsafe extern "C" fn ld_context_concepts(ctx: *const LdContext, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let ctx = &handle(ctx, "ctx")?.inner;
        check_out(out, "out")?;
        let concepts: Vec<Value> = ctx
            .concepts()?
            .iter()
            .map(|c| json!({ "extent": ctx.object_names(&c.extent), "intent": ctx.attribute_names(&c.intent) }))
            .collect();
        put_json(out, &Value::Array(concepts))
    })
}

/// Closure `X''` of an attribute set given as a JSON list of names.
#[no_mangle]
pub unsafe extern "C" fn ld_context_close(ctx: *const LdContext, set: *const c_char, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let ctx = &handle(ctx, "ctx")?.inner;
        check_out(out, "out")?;
        let names: Vec<String> = serde_json::from_str(text(set, "set")?)?;
        let x = ctx.attribute_set(&names)?;
        put_json(out, &formats::set_json(&ctx.close_attributes(&x), ctx.attributes()))
    })
}

// ---------------------------------------------------------------------------
// posets and duality

/// Parses a poset from `{"elements": [...], "less_than": [[a, b], ...]}`.
#[no_mangle]
pub unsafe extern "C" fn ld_poset_from_json(json: *const c_char, out: *mut *mut LdPoset) -> LdStatus {
    run(|| {
        check_out(out, "out")?;
        let inner = formats::parse_poset_json(text(json, "json")?)?;
        *out = Box::into_raw(Box::new(LdPoset { inner }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ld_poset_free(p: *mut LdPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ld_poset_len(p: *const LdPoset, out: *mut usize) -> LdStatus {
    run(|| {
        let p = handle(p, "poset")?;
        check_out(out, "out")?;
        *out = p.inner.len();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ld_poset_downsets(p: *const LdPoset, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let p = &handle(p, "poset")?.inner;
        check_out(out, "out")?;
        put_json(out, &formats::family_json(&p.all_downsets()?, p.names()))
    })
}

/// Decides whether two families of downsets, each a JSON list of name
/// lists, are dual. Answers through `dual`.
#[no_mangle]
pub unsafe extern "C" fn ld_duality_test(
    p: *const LdPoset,
    a: *const c_char,
    b: *const c_char,
    parallel: bool,
    dual: *mut bool,
) -> LdStatus {
    run(|| {
        let p = &handle(p, "poset")?.inner;
        check_out(dual, "dual")?;
        let a = formats::parse_family_json(text(a, "a")?, p.names())?;
        let b = formats::parse_family_json(text(b, "b")?, p.names())?;
        let inst = dualization::DualityInstance::new(p.clone(), a, b)?;
        *dual = dualization::test_duality_with(&inst, TestOptions { parallel })?.dual;
        Ok(())
    })
}

/// The dual of a family of downsets, by enumeration.
#[no_mangle]
pub unsafe extern "C" fn ld_duality_dualize(p: *const LdPoset, a: *const c_char, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let p = &handle(p, "poset")?.inner;
        check_out(out, "out")?;
        let a = formats::parse_family_json(text(a, "a")?, p.names())?;
        put_json(out, &formats::family_json(&dualization::dualize_brute(p, &a)?, p.names()))
    })
}

// ---------------------------------------------------------------------------
// training contexts

#[no_mangle]
pub unsafe extern "C" fn ld_training_from_json(json: *const c_char, out: *mut *mut LdTraining) -> LdStatus {
    run(|| {
        check_out(out, "out")?;
        let inner = formats::parse_training_json(text(json, "json")?)?;
        *out = Box::into_raw(Box::new(LdTraining { inner }));
        Ok(())
    })
}

/// Builds a training context from copies of two contexts over the same
/// attributes.
#[no_mangle]
pub unsafe extern "C" fn ld_training_from_contexts(
    positive: *const LdContext,
    negative: *const LdContext,
    out: *mut *mut LdTraining,
) -> LdStatus {
    run(|| {
        let pos = handle(positive, "positive")?.inner.clone();
        let neg = handle(negative, "negative")?.inner.clone();
        check_out(out, "out")?;
        let inner = TrainingContext::new(pos, neg)?;
        *out = Box::into_raw(Box::new(LdTraining { inner }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn ld_training_free(t: *mut LdTraining) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ld_training_to_json(t: *const LdTraining, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let t = &handle(t, "training")?.inner;
        check_out(out, "out")?;
        put_json(out, &formats::training_json(t))
    })
}

/// Minimal k-weak hypotheses as a JSON family; `[M]` when there are none.
#[no_mangle]
pub unsafe extern "C" fn ld_training_minimal_hypotheses(t: *const LdTraining, k: usize, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let t = &handle(t, "training")?.inner;
        check_out(out, "out")?;
        put_json(out, &formats::family_json(&hypotheses::minimal_hypotheses(t, k), t.attributes()))
    })
}

/// Whether a minimal hypothesis exists outside `known` (a JSON family).
#[no_mangle]
pub unsafe extern "C" fn ld_training_decide_amh(t: *const LdTraining, known: *const c_char, additional: *mut bool) -> LdStatus {
    run(|| {
        let t = &handle(t, "training")?.inner;
        check_out(additional, "additional")?;
        let known = formats::parse_family_json(text(known, "known")?, t.attributes())?;
        *additional = hypotheses::decide_amh(t, &known)?;
        Ok(())
    })
}

/// A minimal hypothesis outside `known`. Fails with `InvalidInput` when
/// there is none.
#[no_mangle]
pub unsafe extern "C" fn ld_training_find_new_min_h(t: *const LdTraining, known: *const c_char, out: *mut *mut c_char) -> LdStatus {
    run(|| {
        let t = &handle(t, "training")?.inner;
        check_out(out, "out")?;
        let known = formats::parse_family_json(text(known, "known")?, t.attributes())?;
        let h = hypotheses::find_new_min_h(t, &known)?;
        put_json(out, &formats::set_json(&h, t.attributes()))
    })
}

/// Reduces a DIMACS CNF to a training context plus its known minimal
/// hypotheses (a JSON family).
#[no_mangle]
pub unsafe extern "C" fn ld_sat_to_amh(dimacs: *const c_char, training: *mut *mut LdTraining, known: *mut *mut c_char) -> LdStatus {
    run(|| {
        check_out(training, "training")?;
        check_out(known, "known")?;
        let f = formats::parse_dimacs(text(dimacs, "dimacs")?)?;
        let inst = reductions::sat_to_amh(&f)?;
        put_json(known, &formats::family_json(&inst.known, inst.training.attributes()))?;
        *training = Box::into_raw(Box::new(LdTraining { inner: inst.training }));
        Ok(())
    })
}

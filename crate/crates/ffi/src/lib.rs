//! C ABI for `cyclotile`.
//!
//! Sets are passed around as opaque `CtSet` handles created by
//! `ct_set_parse` or `ct_set_from_elements` and released with
//! `ct_set_free`. Every fallible function returns a `CtStatus`. The search
//! outcomes `CT_NOT_FOUND` and `CT_BUDGET_EXHAUSTED` are answers, not
//! errors; for the error codes a description is available from
//! `ct_last_error` on the same thread. Strings returned by the library are
//! freed with `ct_string_free`.
//!
//! No function unwinds into the caller: panics are caught and reported as
//! `CT_INTERNAL_ERROR`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclotile::verifier::{parse_sizes, run_campaign, CampaignConfig, Strategy};
use cyclotile::{Budget, CyclicGroupCtx, CyclicMultiset, Error, SearchOutcome};

/// Passing this as a budget removes the node limit.
pub const CT_BUDGET_UNLIMITED: u64 = u64::MAX;

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtStatus {
    CT_OK = 0,
    /// A search finished without a witness.
    CT_NOT_FOUND = 1,
    /// A search ran out of nodes before deciding.
    CT_BUDGET_EXHAUSTED = 2,
    CT_INVALID_ARGUMENT = 3,
    CT_PARSE_ERROR = 4,
    CT_NULL_POINTER = 5,
    CT_INTERNAL_ERROR = 6,
}

use CtStatus::*;

/// A subset (or multiset) of `Z_n`.
pub struct CtSet {
    inner: CyclicMultiset,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

fn status_of(e: &Error) -> CtStatus {
    match e {
        Error::Parse(_) => CT_PARSE_ERROR,
        Error::Io(_) | Error::Json(_) => CT_INTERNAL_ERROR,
        _ => CT_INVALID_ARGUMENT,
    }
}

/// Runs `f`, turning errors and panics into a status plus a message.
fn guard(f: impl FnOnce() -> Result<CtStatus, (CtStatus, String)>) -> CtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            CT_INTERNAL_ERROR
        }
    }
}

fn lib_err(e: Error) -> (CtStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CtStatus, String) {
    (CT_NULL_POINTER, format!("{what} is null"))
}

unsafe fn set_ref<'a>(p: *const CtSet, what: &str) -> Result<&'a CyclicMultiset, (CtStatus, String)> {
    p.as_ref().map(|s| &s.inner).ok_or_else(|| null(what))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (CtStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

fn boxed(inner: CyclicMultiset) -> *mut CtSet {
    Box::into_raw(Box::new(CtSet { inner }))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CtStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CT_PARSE_ERROR, format!("{what} is not valid UTF-8")))
}

/// Copies `items` into a caller buffer. `*len` always receives the full
/// count; a buffer that is too small yields `CT_INVALID_ARGUMENT`.
unsafe fn fill(items: &[usize], buf: *mut usize, cap: usize, len: *mut usize) -> Result<CtStatus, (CtStatus, String)> {
    *out_ref(len, "len")? = items.len();
    if items.len() > cap {
        return Err((CT_INVALID_ARGUMENT, format!("buffer holds {cap}, need {}", items.len())));
    }
    if !items.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len());
    }
    Ok(CT_OK)
}

/// Message for the last failed call on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ct_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn ct_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses `n=<order>:<e>,<e>,...` (multiplicities as `<e>^<m>`).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ct_set_parse(text: *const c_char, out: *mut *mut CtSet) -> CtStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let s: CyclicMultiset = c_str(text, "text")?.parse().map_err(lib_err)?;
        *out = boxed(s);
        Ok(CT_OK)
    })
}

/// Builds a set from `len` elements of `Z_n`. Repeated elements give a
/// multiset.
///
/// # Safety
/// `elems` must point to `len` readable values (it may be null when
/// `len` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_set_from_elements(
    n: usize,
    elems: *const usize,
    len: usize,
    out: *mut *mut CtSet,
) -> CtStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let items: &[usize] = if len == 0 {
            &[]
        } else if elems.is_null() {
            return Err(null("elems"));
        } else {
            std::slice::from_raw_parts(elems, len)
        };
        let ctx = CyclicGroupCtx::new(n).map_err(lib_err)?;
        let s = CyclicMultiset::from_elements(&ctx, items.iter().copied()).map_err(lib_err)?;
        *out = boxed(s);
        Ok(CT_OK)
    })
}

/// Releases a handle. Null is accepted and ignored.
///
/// # Safety
/// `set` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ct_set_free(set: *mut CtSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// The group order `n`, or 0 for a null handle.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_set_order(set: *const CtSet) -> usize {
    set.as_ref().map_or(0, |s| s.inner.n())
}

/// Number of elements counted with multiplicity, or 0 for a null handle.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_set_len(set: *const CtSet) -> usize {
    set.as_ref().map_or(0, |s| s.inner.total() as usize)
}

/// Writes the elements, increasing and repeated by multiplicity.
///
/// # Safety
/// `buf` must have room for `cap` values; `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_set_elements(set: *const CtSet, buf: *mut usize, cap: usize, len: *mut usize) -> CtStatus {
    guard(|| fill(&set_ref(set, "set")?.elements(), buf, cap, len))
}

/// The set in the `n=...:...` text form, or null for a null handle. Free
/// with `ct_string_free`.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_set_to_string(set: *const CtSet) -> *mut c_char {
    match set.as_ref() {
        Some(s) => CString::new(s.inner.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => {
            set_error("set is null");
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The divisors `d > 1` of `n` with `Φ_d` dividing the mask polynomial.
///
/// # Safety
/// `buf` must have room for `cap` values; `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_zero_divisor_set(
    set: *const CtSet,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> CtStatus {
    guard(|| {
        let z = cyclotile::zero_divisor_set(set_ref(set, "set")?).map_err(lib_err)?;
        fill(z.members(), buf, cap, len)
    })
}

/// # Safety
/// Handles must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_verify_spectral_pair(
    set: *const CtSet,
    spectrum: *const CtSet,
    out: *mut bool,
) -> CtStatus {
    guard(|| {
        let ok =
            cyclotile::verify_spectral_pair(set_ref(set, "set")?, set_ref(spectrum, "spectrum")?).map_err(lib_err)?;
        *out_ref(out, "out")? = ok;
        Ok(CT_OK)
    })
}

/// # Safety
/// Handles must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_verify_tiling(set: *const CtSet, complement: *const CtSet, out: *mut bool) -> CtStatus {
    guard(|| {
        let ok = cyclotile::verify_tiling(set_ref(set, "set")?, set_ref(complement, "complement")?).map_err(lib_err)?;
        *out_ref(out, "out")? = ok;
        Ok(CT_OK)
    })
}

unsafe fn finish_search<T>(
    outcome: SearchOutcome<T>,
    nodes: u64,
    pick: impl FnOnce(T) -> CyclicMultiset,
    out: *mut *mut CtSet,
    nodes_out: *mut u64,
) -> Result<CtStatus, (CtStatus, String)> {
    let out = out_ref(out, "out")?;
    if let Some(n) = nodes_out.as_mut() {
        *n = nodes;
    }
    *out = ptr::null_mut();
    Ok(match outcome {
        SearchOutcome::Found(c) => {
            *out = boxed(pick(c));
            CT_OK
        }
        SearchOutcome::NotFound => CT_NOT_FOUND,
        SearchOutcome::BudgetExhausted => CT_BUDGET_EXHAUSTED,
    })
}

/// Searches for a spectrum containing 0. On `CT_OK` a new handle is stored
/// in `*out`; otherwise `*out` is null. `nodes_out` may be null.
///
/// # Safety
/// `set` must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_find_spectrum(
    set: *const CtSet,
    budget: u64,
    out: *mut *mut CtSet,
    nodes_out: *mut u64,
) -> CtStatus {
    guard(|| {
        let r = cyclotile::find_spectrum(set_ref(set, "set")?, Budget(budget)).map_err(lib_err)?;
        finish_search(r.outcome, r.nodes, |c| c.spectrum, out, nodes_out)
    })
}

/// Searches for a tiling complement containing 0. Same conventions as
/// `ct_find_spectrum`.
///
/// # Safety
/// `set` must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_find_tiling_complement(
    set: *const CtSet,
    budget: u64,
    out: *mut *mut CtSet,
    nodes_out: *mut u64,
) -> CtStatus {
    guard(|| {
        let r = cyclotile::find_tiling_complement(set_ref(set, "set")?, Budget(budget)).map_err(lib_err)?;
        finish_search(r.outcome, r.nodes, |c| c.complement, out, nodes_out)
    })
}

/// # Safety
/// `set` must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_t1_check(set: *const CtSet, out: *mut bool) -> CtStatus {
    guard(|| {
        let r = cyclotile::t1_check(set_ref(set, "set")?).map_err(lib_err)?;
        *out_ref(out, "out")? = r.holds;
        Ok(CT_OK)
    })
}

/// # Safety
/// `set` must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_t2_check(set: *const CtSet, out: *mut bool) -> CtStatus {
    guard(|| {
        let r = cyclotile::t2_check(set_ref(set, "set")?).map_err(lib_err)?;
        *out_ref(out, "out")? = r;
        Ok(CT_OK)
    })
}

/// The lexicographically smallest affine image `aS + b`, `gcd(a, n) = 1`.
///
/// # Safety
/// `set` must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_affine_canonical(set: *const CtSet, out: *mut *mut CtSet) -> CtStatus {
    guard(|| {
        let c = cyclotile::affine_canonical(set_ref(set, "set")?);
        *out_ref(out, "out")? = boxed(c);
        Ok(CT_OK)
    })
}

/// Runs a campaign and returns its JSON report in `*json_out` (free with
/// `ct_string_free`). `strategy` is `"clique"` or `"exhaustive"`; `sizes`
/// may be null for the default range, or a list such as `"1-6,12"`.
///
/// # Safety
/// Strings must be nul-terminated or null where allowed; `json_out` must
/// be valid.
#[no_mangle]
pub unsafe extern "C" fn ct_run_campaign_json(
    n: usize,
    strategy: *const c_char,
    sizes: *const c_char,
    budget: u64,
    workers: usize,
    seed: u64,
    json_out: *mut *mut c_char,
) -> CtStatus {
    guard(|| {
        let json_out = out_ref(json_out, "json_out")?;
        *json_out = ptr::null_mut();
        let strategy: Strategy = c_str(strategy, "strategy")?.parse().map_err(lib_err)?;
        let mut cfg = CampaignConfig::new(n, strategy)
            .with_budget(Budget(budget))
            .with_workers(workers.max(1))
            .with_seed(seed);
        if !sizes.is_null() {
            cfg = cfg.with_sizes(parse_sizes(c_str(sizes, "sizes")?).map_err(lib_err)?);
        }
        let report = run_campaign(&cfg).map_err(lib_err)?;
        let text = report.to_json().map_err(lib_err)?;
        *json_out = CString::new(text)
            .map_err(|_| (CT_INTERNAL_ERROR, "report contains a nul byte".to_string()))?
            .into_raw();
        Ok(CT_OK)
    })
}

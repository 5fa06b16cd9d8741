//! C ABI for `tgs-core`.
//!
//! Systems are passed around as opaque `TgsSystem` handles created by
//! [`tgs_system_parse`] or [`tgs_system_fixture`] and released with
//! [`tgs_system_free`]. Every fallible call returns a [`TgsStatus`]; on a
//! non-zero status [`tgs_last_error`] describes what went wrong on the calling
//! thread. Subsets cross the boundary as byte arrays of length `|S|` holding 0
//! or 1 per state.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tgs_core::homomorphism::{enumerate_homomorphisms_with_budget, is_homomorphism, StateMap};
use tgs_core::{axioms, finder, fixtures, format, ideals, pathways};
use tgs_core::{Error, IdealKind, MediatorId, StateId, StateSet, Tgs};

/// Opaque system handle.
pub struct TgsSystem {
    inner: Tgs,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    EmptySubset = 4,
    TooLarge = 5,
    BudgetExhausted = 6,
    MediatorMismatch = 7,
    NotAnIdeal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgsIdealKind {
    ReactionClosed = 0,
    Chemical = 1,
    LeftGamma = 2,
    RightGamma = 3,
    MiddleGamma = 4,
    TwoSidedGamma = 5,
}

impl From<TgsIdealKind> for IdealKind {
    fn from(k: TgsIdealKind) -> Self {
        match k {
            TgsIdealKind::ReactionClosed => IdealKind::ReactionClosed,
            TgsIdealKind::Chemical => IdealKind::Chemical,
            TgsIdealKind::LeftGamma => IdealKind::LeftGamma,
            TgsIdealKind::RightGamma => IdealKind::RightGamma,
            TgsIdealKind::MiddleGamma => IdealKind::MiddleGamma,
            TgsIdealKind::TwoSidedGamma => IdealKind::TwoSidedGamma,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(TgsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) => TgsStatus::ParseError,
            Error::EmptySubset => TgsStatus::EmptySubset,
            Error::TooLarge { .. } => TgsStatus::TooLarge,
            Error::BudgetExhausted { .. } => TgsStatus::BudgetExhausted,
            Error::MediatorMismatch => TgsStatus::MediatorMismatch,
            Error::NotChemicalIdeal(_) | Error::NotTwoSidedIdeal(_) => TgsStatus::NotAnIdeal,
            _ => TgsStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(TgsStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(TgsStatus::InvalidArgument, msg.into())
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TgsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TgsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            TgsStatus::Panic
        }
    }
}

unsafe fn system<'a>(h: *const TgsSystem) -> Result<&'a Tgs, Failure> {
    h.as_ref()
        .map(|s| &s.inner)
        .ok_or_else(|| null("system handle"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null("string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid("string is not UTF-8"))
}

unsafe fn subset_arg(tgs: &Tgs, members: *const u8, len: usize) -> Result<StateSet, Failure> {
    if members.is_null() {
        return Err(null("subset"));
    }
    if len != tgs.state_count() {
        return Err(invalid(format!(
            "subset has {len} entries, system has {} states",
            tgs.state_count()
        )));
    }
    let bytes = std::slice::from_raw_parts(members, len);
    Ok(StateSet::from_bits(
        &bytes.iter().map(|&b| b != 0).collect::<Vec<_>>(),
    ))
}

unsafe fn write_subset(set: &StateSet, out: *mut u8) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output subset"));
    }
    for (i, b) in set.to_bits().into_iter().enumerate() {
        *out.add(i) = b as u8;
    }
    Ok(())
}

fn boxed(tgs: Tgs) -> *mut TgsSystem {
    Box::into_raw(Box::new(TgsSystem { inner: tgs }))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tgs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a `tgs v1` document.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tgs_system_parse(
    text: *const c_char,
    out: *mut *mut TgsSystem,
) -> TgsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let tgs = format::parse_tgs(str_arg(text)?)?;
        *out = boxed(tgs);
        Ok(())
    })
}

/// Builds a named reference system (`left:5,3`, `modular:6`, `catalysis`, ...).
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tgs_system_fixture(
    name: *const c_char,
    out: *mut *mut TgsSystem,
) -> TgsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        *out = boxed(fixtures::by_name(str_arg(name)?)?);
        Ok(())
    })
}

/// # Safety
/// `sys` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn tgs_system_free(sys: *mut TgsSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Number of states, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tgs_system_state_count(sys: *const TgsSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.state_count())
}

/// Number of mediators, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tgs_system_mediator_count(sys: *const TgsSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.mediator_count())
}

/// Canonical text of the system; release with [`tgs_string_free`].
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tgs_system_serialize(
    sys: *const TgsSystem,
    out: *mut *mut c_char,
) -> TgsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let text = format::serialize_tgs(system(sys)?);
        *out = CString::new(text)
            .map_err(|_| invalid("text contains NUL"))?
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not freed yet.
#[no_mangle]
pub unsafe extern "C" fn tgs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `[a, alpha, b, beta, c]`.
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tgs_evaluate(
    sys: *const TgsSystem,
    a: u32,
    alpha: u32,
    b: u32,
    beta: u32,
    c: u32,
    out: *mut u32,
) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        let out = out_ref(out)?;
        let (n, m) = (tgs.state_count() as u32, tgs.mediator_count() as u32);
        if a >= n || b >= n || c >= n || alpha >= m || beta >= m {
            return Err(invalid("id out of range"));
        }
        *out = tgs
            .evaluate(
                StateId(a),
                MediatorId(alpha),
                StateId(b),
                MediatorId(beta),
                StateId(c),
            )
            .0;
        Ok(())
    })
}

/// Writes the verdicts for T1, T3a and T3b to `out[0..3]`.
///
/// # Safety
/// `sys` must be a live handle and `out` must point to three writable bools.
#[no_mangle]
pub unsafe extern "C" fn tgs_check_axioms(sys: *const TgsSystem, out: *mut bool) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        for (i, r) in axioms::check_all(tgs, 0).iter().enumerate() {
            *out.add(i) = r.holds;
        }
        Ok(())
    })
}

/// Decides whether `members` satisfies the law of `kind`.
///
/// # Safety
/// `sys` must be a live handle, `members` must hold `len` bytes, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tgs_satisfies(
    sys: *const TgsSystem,
    members: *const u8,
    len: usize,
    kind: TgsIdealKind,
    out: *mut bool,
) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        let set = subset_arg(tgs, members, len)?;
        *out_ref(out)? = ideals::satisfies(tgs, &set, kind.into())?.holds();
        Ok(())
    })
}

/// Smallest `kind`-ideal containing `seed`, written to `out` (`len` bytes).
///
/// # Safety
/// `seed` and `out` must each hold `len` bytes; `sys` must be live.
#[no_mangle]
pub unsafe extern "C" fn tgs_generate_ideal(
    sys: *const TgsSystem,
    seed: *const u8,
    len: usize,
    kind: TgsIdealKind,
    out: *mut u8,
) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        let seed = subset_arg(tgs, seed, len)?;
        let closed = ideals::generate_ideal(tgs, &seed, kind.into())?;
        write_subset(&closed, out)
    })
}

/// # Safety
/// As [`tgs_satisfies`].
#[no_mangle]
pub unsafe extern "C" fn tgs_is_prime(
    sys: *const TgsSystem,
    members: *const u8,
    len: usize,
    out: *mut bool,
) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        let set = subset_arg(tgs, members, len)?;
        *out_ref(out)? = ideals::is_prime(tgs, &set)?.holds();
        Ok(())
    })
}

/// Fails with `NotAnIdeal` when `members` is not a chemical ideal.
///
/// # Safety
/// As [`tgs_satisfies`].
#[no_mangle]
pub unsafe extern "C" fn tgs_is_semiprime(
    sys: *const TgsSystem,
    members: *const u8,
    len: usize,
    out: *mut bool,
) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        let set = subset_arg(tgs, members, len)?;
        *out_ref(out)? = ideals::is_semiprime(tgs, &set)?.holds();
        Ok(())
    })
}

/// States reachable from `sources`, written to `out`.
///
/// # Safety
/// `sources` and `out` must each hold `len` bytes; `sys` must be live.
#[no_mangle]
pub unsafe extern "C" fn tgs_reachable(
    sys: *const TgsSystem,
    sources: *const u8,
    len: usize,
    out: *mut u8,
) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        let set = subset_arg(tgs, sources, len)?;
        write_subset(&pathways::reachable(tgs, &set)?, out)
    })
}

/// Length of a shortest pathway from `source` to `target` of at most
/// `max_len` steps; `*out_len` is 0 when there is none.
///
/// # Safety
/// `sys` must be live and `out_len` valid.
#[no_mangle]
pub unsafe extern "C" fn tgs_find_pathway(
    sys: *const TgsSystem,
    source: u32,
    target: u32,
    max_len: usize,
    out_len: *mut usize,
) -> TgsStatus {
    guard(|| {
        let tgs = system(sys)?;
        let out = out_ref(out_len)?;
        let p = pathways::find_pathway(tgs, StateId(source), StateId(target), max_len)?;
        *out = p.map_or(0, |p| p.len());
        Ok(())
    })
}

/// Checks the homomorphism identity for `images` (one codomain index per
/// domain state).
///
/// # Safety
/// Both handles must be live, `images` must hold `len` values, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tgs_is_homomorphism(
    domain: *const TgsSystem,
    codomain: *const TgsSystem,
    images: *const u32,
    len: usize,
    out: *mut bool,
) -> TgsStatus {
    guard(|| {
        let (dom, cod) = (system(domain)?, system(codomain)?);
        if images.is_null() {
            return Err(null("image array"));
        }
        let images = std::slice::from_raw_parts(images, len)
            .iter()
            .map(|&i| StateId(i))
            .collect();
        let f = StateMap::new(dom, cod, images)?;
        *out_ref(out)? = is_homomorphism(dom, cod, &f)?.holds();
        Ok(())
    })
}

/// Number of homomorphisms from `domain` to `codomain`.
///
/// # Safety
/// Both handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tgs_count_homomorphisms(
    domain: *const TgsSystem,
    codomain: *const TgsSystem,
    budget: u64,
    out: *mut u64,
) -> TgsStatus {
    guard(|| {
        let (dom, cod) = (system(domain)?, system(codomain)?);
        *out_ref(out)? = enumerate_homomorphisms_with_budget(dom, cod, budget)?.len() as u64;
        Ok(())
    })
}

/// Number of labeled models with `states` states and `mediators` mediators.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tgs_count_models(
    states: usize,
    mediators: usize,
    budget: u64,
    out: *mut u64,
) -> TgsStatus {
    guard(|| {
        let out = out_ref(out)?;
        let spec = finder::SearchSpec {
            budget,
            ..finder::SearchSpec::new(states, mediators, finder::SearchMode::Count)
        };
        match finder::run(&spec)? {
            finder::SearchOutcome::Count(c) => *out = c,
            _ => unreachable!("count mode yields a count"),
        }
        Ok(())
    })
}

/// Seeded model sample; `*out` is null when none was found within budget.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tgs_sample_model(
    states: usize,
    mediators: usize,
    seed: u64,
    budget: u64,
    out: *mut *mut TgsSystem,
) -> TgsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        if let Some(t) = finder::sample_model(states, mediators, seed, budget)? {
            *out = boxed(t);
        }
        Ok(())
    })
}

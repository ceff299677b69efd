//! C bindings for `ait-core`.
//!
//! Every entry point returns an [`AitStatus`]; results come back through
//! out-pointers. Handles and strings allocated here must be released with
//! the matching `*_free` function. After a non-`Ok` status that is not a
//! machine outcome, [`ait_last_error`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ait_core::ait::{omega_lower_bound, ChaitinMachine};
use ait_core::bits::BitString;
use ait_core::curried::{parse_curried, print_lenient};
use ait_core::eliminator::{eliminate, BemMachine, ElimLimits};
use ait_core::languages::LanguageId;
use ait_core::reduce::equivalent;
use ait_core::runtime::{Divergence, RunOutcome};
use ait_core::term::Term;

/// Status codes. Machine outcomes share their values with the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AitStatus {
    Ok = 0,
    InvalidArgument = 2,
    NullPointer = 3,
    Internal = 4,
    Underflow = 10,
    Overflow = 11,
    SyntaxError = 12,
    StepLimit = 13,
}

impl From<Divergence> for AitStatus {
    fn from(d: Divergence) -> Self {
        match d {
            Divergence::Underflow => AitStatus::Underflow,
            Divergence::Overflow => AitStatus::Overflow,
            Divergence::SyntaxError => AitStatus::SyntaxError,
            Divergence::StepLimit => AitStatus::StepLimit,
        }
    }
}

/// A lambda/combinator term.
pub struct AitTerm(Term);

/// The result of one run.
pub struct AitOutcome(RunOutcome);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(AitStatus, String);

type FfiResult<T> = Result<T, Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(AitStatus::InvalidArgument, msg.into())
}

/// Runs `f`, recording errors and converting panics into `Internal`.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> AitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AitStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AitStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(AitStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{name} is not UTF-8")))
}

fn out_arg<'a, T>(p: *mut T, name: &str) -> FfiResult<&'a mut T> {
    // SAFETY: callers pass a valid, writable pointer or null.
    unsafe { p.as_mut() }.ok_or_else(|| Failure(AitStatus::NullPointer, format!("{name} is null")))
}

fn bits_arg(p: *const c_char) -> FfiResult<BitString> {
    let s = unsafe { str_arg(p, "bits")? };
    s.parse().map_err(|e| invalid(format!("{e}")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior nul")
        .into_raw()
}

/// Copy of the calling thread's last error message, or null. Free with [`ait_string_free`].
#[no_mangle]
pub extern "C" fn ait_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ait_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses backtick curried syntax into a new term handle.
///
/// # Safety
/// `source` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_term_parse(
    source: *const c_char,
    out: *mut *mut AitTerm,
) -> AitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let t = parse_curried(str_arg(source, "source")?).map_err(|e| invalid(e.to_string()))?;
        *out = Box::into_raw(Box::new(AitTerm(t)));
        Ok(())
    })
}

/// Canonical text of a term. Free with [`ait_string_free`].
///
/// # Safety
/// `term` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_term_print(term: *const AitTerm, out: *mut *mut c_char) -> AitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let t = term
            .as_ref()
            .ok_or_else(|| Failure(AitStatus::NullPointer, "term is null".into()))?;
        *out = to_c_string(print_lenient(&t.0));
        Ok(())
    })
}

/// Writes 1 to `out` when both terms have the same normal form after
/// expanding S, K and I, else 0.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_term_equivalent(
    a: *const AitTerm,
    b: *const AitTerm,
    steps: u64,
    out: *mut i32,
) -> AitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return Err(Failure(AitStatus::NullPointer, "term is null".into()));
        };
        *out = i32::from(equivalent(&a.0, &b.0, steps));
        Ok(())
    })
}

/// # Safety
/// `term` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ait_term_free(term: *mut AitTerm) {
    if !term.is_null() {
        drop(Box::from_raw(term));
    }
}

fn store_outcome(out: *mut *mut AitOutcome, outcome: RunOutcome) -> FfiResult<()> {
    let out = out_arg(out, "out")?;
    *out = Box::into_raw(Box::new(AitOutcome(outcome)));
    Ok(())
}

/// Runs `bits` in language `lang` (iota, fokker, simple, ext, zot, blc,
/// keraia, pf-keraia). A halting or diverging run both return `Ok`; inspect
/// the outcome with [`ait_outcome_status`].
///
/// # Safety
/// `lang` and `bits` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_run(
    lang: *const c_char,
    bits: *const c_char,
    steps: u64,
    out: *mut *mut AitOutcome,
) -> AitStatus {
    guard(|| {
        let lang: LanguageId = str_arg(lang, "lang")?
            .parse()
            .map_err(|e| invalid(format!("{e}")))?;
        let bits = bits_arg(bits)?;
        if steps == 0 {
            return Err(invalid("steps must be at least 1"));
        }
        store_outcome(out, lang.run(&bits, steps))
    })
}

/// Runs `bits` through the endmarker eliminator for `machine` (keraia, zot,
/// blc, fixed3, parity or echo).
///
/// # Safety
/// As for [`ait_run`].
#[no_mangle]
pub unsafe extern "C" fn ait_eliminate(
    machine: *const c_char,
    bits: *const c_char,
    steps: u64,
    out: *mut *mut AitOutcome,
) -> AitStatus {
    guard(|| {
        let m: BemMachine = str_arg(machine, "machine")?
            .parse()
            .map_err(|e| invalid(format!("{e}")))?;
        let bits = bits_arg(bits)?;
        if steps == 0 {
            return Err(invalid("steps must be at least 1"));
        }
        store_outcome(out, eliminate(m, ElimLimits::uniform(steps)).run(&bits))
    })
}

/// `Ok` for a halted run, otherwise the divergence reason. Null yields `NullPointer`.
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ait_outcome_status(outcome: *const AitOutcome) -> AitStatus {
    match outcome.as_ref() {
        None => AitStatus::NullPointer,
        Some(AitOutcome(RunOutcome::Halted(_))) => AitStatus::Ok,
        Some(AitOutcome(RunOutcome::Diverged(d))) => (*d).into(),
    }
}

fn halted<'a>(outcome: *const AitOutcome) -> FfiResult<&'a ait_core::runtime::Halted> {
    // SAFETY: callers pass null or a live handle.
    let o = unsafe { outcome.as_ref() }
        .ok_or_else(|| Failure(AitStatus::NullPointer, "outcome is null".into()))?;
    match &o.0 {
        RunOutcome::Halted(h) => Ok(h),
        RunOutcome::Diverged(d) => Err(Failure((*d).into(), format!("run did not halt: {d}"))),
    }
}

/// New handle for the output term of a halted run.
///
/// # Safety
/// `outcome` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_outcome_term(
    outcome: *const AitOutcome,
    out: *mut *mut AitTerm,
) -> AitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        *out = Box::into_raw(Box::new(AitTerm(halted(outcome)?.term.clone())));
        Ok(())
    })
}

/// Output of a halted run decoded as a boolean list, as `0`/`1` text.
///
/// # Safety
/// `outcome` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_outcome_bits(
    outcome: *const AitOutcome,
    out: *mut *mut c_char,
) -> AitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        *out = to_c_string(halted(outcome)?.bits.to_string());
        Ok(())
    })
}

/// Reduction steps used by a halted run.
///
/// # Safety
/// `outcome` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_outcome_steps(outcome: *const AitOutcome, out: *mut u64) -> AitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = halted(outcome)?.steps;
        Ok(())
    })
}

/// # Safety
/// `outcome` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ait_outcome_free(outcome: *mut AitOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// Exact halting-probability lower bound over all codewords up to `max_len`
/// bits, written as `numerator/2^k`. `machine` is simple, ext, pf-keraia or
/// `elim-<bem>`.
///
/// # Safety
/// `machine` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ait_omega_lower_bound(
    machine: *const c_char,
    max_len: u32,
    steps: u64,
    out: *mut *mut c_char,
) -> AitStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let m: ChaitinMachine = str_arg(machine, "machine")?.parse().map_err(invalid)?;
        if max_len > 30 {
            return Err(invalid("max_len above 30 is not supported"));
        }
        *out = to_c_string(
            omega_lower_bound(&m, max_len as usize, steps)
                .lower
                .to_string(),
        );
        Ok(())
    })
}

//! C ABI over the `parahoric` library.
//!
//! A root system is held behind an opaque [`PhRootSystem`] handle created by
//! [`ph_root_system_new`] and released by [`ph_root_system_free`]. Every
//! fallible call returns a [`PhStatus`]; on failure a description is
//! available from [`ph_last_error`] on the same thread. Subsets of simple
//! roots are passed as bitmasks, bit `i` standing for simple root `i + 1`.
//! Strings returned to the caller are owned by it and must be released with
//! [`ph_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use parahoric::alcove::{verify_closure_lemma, verify_kernel_inclusion};
use parahoric::cli::{self, Which};
use parahoric::parabolics::is_admissible;
use parahoric::steinberg::{coset_polynomial, descent_count, steinberg_polynomial, QPolynomial};
use parahoric::{Error, RootSystem, Subset, WeylGroup};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidSpec = 3,
    IndexOutOfRange = 4,
    GroupTooLarge = 5,
    RankTooLarge = 6,
    NotAdmissible = 7,
    BufferTooSmall = 8,
    Overflow = 9,
    VerificationFailed = 10,
    Internal = 11,
}

/// Opaque root system handle, with its Weyl group generated on first use.
pub struct PhRootSystem {
    rs: RootSystem,
    group: OnceLock<Result<WeylGroup, Error>>,
}

impl PhRootSystem {
    fn group(&self) -> Result<&WeylGroup, Error> {
        self.group
            .get_or_init(|| WeylGroup::generate(&self.rs))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn subset(&self, mask: u32) -> Result<Subset, Error> {
        let s = Subset::from_bits(mask);
        if !s.is_subset_of(Subset::full(self.rs.rank())) {
            return Err(Error::IndexOutOfRange {
                index: 32 - mask.leading_zeros() as usize,
                rank: self.rs.rank(),
            });
        }
        Ok(s)
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> PhStatus {
    match e {
        Error::InvalidSpec(_) | Error::DimensionMismatch { .. } => PhStatus::InvalidSpec,
        Error::IndexOutOfRange { .. } => PhStatus::IndexOutOfRange,
        Error::GroupTooLarge { .. } => PhStatus::GroupTooLarge,
        Error::RankTooLarge { .. } => PhStatus::RankTooLarge,
        Error::NotAdmissible { .. } => PhStatus::NotAdmissible,
        Error::Overflow => PhStatus::Overflow,
        Error::NonIntegralCoweight | Error::NotNested { .. } | Error::InfiniteIndex { .. } => {
            PhStatus::Internal
        }
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), PhStatus>) -> PhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PhStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            PhStatus::Internal
        }
    }
}

fn fail(e: Error) -> PhStatus {
    set_error(e.to_string());
    status_of(&e)
}

unsafe fn handle<'a>(h: *const PhRootSystem) -> Result<&'a PhRootSystem, PhStatus> {
    if h.is_null() {
        set_error("null handle");
        return Err(PhStatus::NullPointer);
    }
    Ok(&*h)
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, PhStatus> {
    if p.is_null() {
        set_error("null output pointer");
        return Err(PhStatus::NullPointer);
    }
    Ok(&mut *p)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, PhStatus> {
    if p.is_null() {
        set_error("null string");
        return Err(PhStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        PhStatus::InvalidUtf8
    })
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ph_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a root system from a spec such as `"B3"` or `"A1xA2"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_root_system_new(
    spec: *const c_char,
    out: *mut *mut PhRootSystem,
) -> PhStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let spec = read_str(spec)?;
        let rs = RootSystem::from_str_spec(spec).map_err(fail)?;
        *out = Box::into_raw(Box::new(PhRootSystem {
            rs,
            group: OnceLock::new(),
        }));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `h` must come from [`ph_root_system_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_root_system_free(h: *mut PhRootSystem) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Rank `l`, or 0 for a NULL handle.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ph_rank(h: *const PhRootSystem) -> u32 {
    h.as_ref().map_or(0, |h| h.rs.rank() as u32)
}

/// `|Φ⁺|`, or 0 for a NULL handle.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ph_num_positive_roots(h: *const PhRootSystem) -> u32 {
    h.as_ref().map_or(0, |h| h.rs.num_positive_roots() as u32)
}

/// `|W|` from the classical order formula; no enumeration.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_weyl_order(h: *const PhRootSystem, out: *mut u64) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let out = out_ref(out)?;
        *out = u64::try_from(h.rs.weyl_order()).map_err(|_| fail(Error::Overflow))?;
        Ok(())
    })
}

/// Whether every positive root supported on `mask` has coefficients ≤ 1.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_is_admissible(
    h: *const PhRootSystem,
    mask: u32,
    out: *mut bool,
) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let out = out_ref(out)?;
        let s = h.subset(mask).map_err(fail)?;
        *out = is_admissible(&h.rs, s);
        Ok(())
    })
}

/// Whether `ω_j + 𝔠_I ⊆ cl(C ∪ 𝔠_I)` holds for every `j ∈ I`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_kernel_inclusion(
    h: *const PhRootSystem,
    mask: u32,
    out: *mut bool,
) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let out = out_ref(out)?;
        let s = h.subset(mask).map_err(fail)?;
        *out = verify_kernel_inclusion(&h.rs, s).all;
        Ok(())
    })
}

/// Whether the convex closure of `C ∪ 𝔠_I` has the expected half-space
/// description.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_closure_lemma(
    h: *const PhRootSystem,
    mask: u32,
    out: *mut bool,
) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let out = out_ref(out)?;
        let s = h.subset(mask).map_err(fail)?;
        *out = verify_closure_lemma(&h.rs, s).passed();
        Ok(())
    })
}

unsafe fn write_poly(
    p: &QPolynomial,
    coeffs: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> Result<(), PhStatus> {
    let len = out_ref(len)?;
    *len = p.coeffs().len();
    if capacity < p.coeffs().len() {
        set_error(format!("need room for {} coefficients", p.coeffs().len()));
        return Err(PhStatus::BufferTooSmall);
    }
    if !p.coeffs().is_empty() {
        if coeffs.is_null() {
            set_error("null coefficient buffer");
            return Err(PhStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(p.coeffs().as_ptr(), coeffs, p.coeffs().len());
    }
    Ok(())
}

/// Writes the coefficients of `Σ_{w ∈ W^I} q^{ℓ(w)}`, constant term first.
/// `*len` always receives the required length; `PH_STATUS_BUFFER_TOO_SMALL`
/// is returned when `capacity` is insufficient.
///
/// # Safety
/// `coeffs` must have room for `capacity` values; `h` and `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ph_coset_polynomial(
    h: *const PhRootSystem,
    mask: u32,
    coeffs: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let s = h.subset(mask).map_err(fail)?;
        let g = h.group().map_err(fail)?;
        write_poly(&coset_polynomial(g, s), coeffs, capacity, len)
    })
}

/// Writes the Steinberg polynomial of `I`; same buffer protocol as
/// [`ph_coset_polynomial`].
///
/// # Safety
/// `coeffs` must have room for `capacity` values; `h` and `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ph_steinberg_polynomial(
    h: *const PhRootSystem,
    mask: u32,
    coeffs: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let s = h.subset(mask).map_err(fail)?;
        let g = h.group().map_err(fail)?;
        write_poly(&steinberg_polynomial(g, s), coeffs, capacity, len)
    })
}

/// `#{w ∈ W : D_R(w) = Δ∖I}`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_descent_count(
    h: *const PhRootSystem,
    mask: u32,
    out: *mut u64,
) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let out = out_ref(out)?;
        let s = h.subset(mask).map_err(fail)?;
        let g = h.group().map_err(fail)?;
        *out = descent_count(g, s) as u64;
        Ok(())
    })
}

/// Number of double cosets `W_{I1}\W/W_{I2}`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_double_coset_count(
    h: *const PhRootSystem,
    left: u32,
    right: u32,
    out: *mut u64,
) -> PhStatus {
    guard(|| {
        let h = handle(h)?;
        let out = out_ref(out)?;
        let (l, r) = (
            h.subset(left).map_err(fail)?,
            h.subset(right).map_err(fail)?,
        );
        let g = h.group().map_err(fail)?;
        *out = g.double_cosets(l, r).len() as u64;
        Ok(())
    })
}

/// Produces the JSON report of `parahoric verify <spec> all`. The string is
/// written even when a check fails, in which case
/// `PH_STATUS_VERIFICATION_FAILED` is returned.
///
/// # Safety
/// `spec` must be NUL-terminated; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ph_verify_json(
    spec: *const c_char,
    out_json: *mut *mut c_char,
) -> PhStatus {
    guard(|| {
        let out = out_ref(out_json)?;
        *out = ptr::null_mut();
        let spec = read_str(spec)?;
        let report = cli::cmd_verify(spec, Which::All).map_err(|e| {
            set_error(e.message.clone());
            match e.code {
                cli::ExitCode::ResourceCap => PhStatus::GroupTooLarge,
                _ => PhStatus::InvalidSpec,
            }
        })?;
        let json = CString::new(report.to_json()).map_err(|_| PhStatus::Internal)?;
        *out = json.into_raw();
        if report.all_passed() {
            Ok(())
        } else {
            set_error("a verification check failed");
            Err(PhStatus::VerificationFailed)
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

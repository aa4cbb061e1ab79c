//! C ABI over the octoplane library.
//!
//! Objects are opaque handles created by `octo_*_new`/`octo_*_parse`-style
//! functions and released with the matching `octo_*_free`. Every fallible
//! function returns an [`OctoStatus`]; on failure a message is available
//! from [`octo_last_error_message`] on the same thread.

use octoplane::complex::parse_complex;
use octoplane::flips::subgroup_census;
use octoplane::group::{build_g351, build_normalizer};
use octoplane::verify::{certify_manifold, CertifyOptions};
use octoplane::{fixtures, Complex, Error, PermGroup};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OctoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Group = 5,
    Io = 6,
    Fixture = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// Opaque simplicial complex.
pub struct OctoComplex(Complex);

/// Opaque permutation group.
pub struct OctoGroup(PermGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OctoStatus {
    match e {
        Error::Parse { .. } => OctoStatus::Parse,
        Error::Domain(_) => OctoStatus::Domain,
        Error::Group(_) => OctoStatus::Group,
        Error::Fixture(_) => OctoStatus::Fixture,
        Error::Io(_) => OctoStatus::Io,
    }
}

fn fail(status: OctoStatus, msg: impl Into<String>) -> OctoStatus {
    set_error(msg.into());
    status
}

/// Run `f`, turning library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), OctoStatus>) -> OctoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OctoStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(OctoStatus::Panic, "internal panic"),
    }
}

fn lib<T>(r: octoplane::Result<T>) -> Result<T, OctoStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, OctoStatus> {
    p.as_ref().ok_or_else(|| fail(OctoStatus::NullPointer, "null pointer argument"))
}

unsafe fn store<T>(out: *mut *mut T, v: T) -> Result<(), OctoStatus> {
    if out.is_null() {
        return Err(fail(OctoStatus::NullPointer, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn octo_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse `.dat` text (count line, then rows of '0'/'1').
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_complex_parse(text: *const c_char, out: *mut *mut OctoComplex) -> OctoStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(OctoStatus::NullPointer, "null text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| fail(OctoStatus::InvalidUtf8, e.to_string()))?;
        let k = lib(parse_complex(s))?;
        store(out, OctoComplex(k))
    })
}

/// Orbit representatives of `K_i`, `i` in 1..=4.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_complex_fixture(i: u32, out: *mut *mut OctoComplex) -> OctoStatus {
    guard(|| {
        let k = lib(fixtures::k_reps(i as usize))?;
        store(out, OctoComplex(k))
    })
}

/// # Safety
/// `c` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn octo_complex_free(c: *mut OctoComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Size of the vertex universe.
///
/// # Safety
/// `c` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn octo_complex_num_vertices(c: *const OctoComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.m())
}

/// # Safety
/// `c` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn octo_complex_num_facets(c: *const OctoComplex) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Write `f_0..f_d` to `buf`. `*written` receives the number of entries;
/// if `len` is too small nothing is copied and the required length is
/// reported.
///
/// # Safety
/// `buf` must hold `len` values; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_complex_f_vector(
    c: *const OctoComplex,
    buf: *mut u64,
    len: usize,
    written: *mut usize,
) -> OctoStatus {
    guard(|| {
        let k = deref(c)?;
        if written.is_null() {
            return Err(fail(OctoStatus::NullPointer, "null length pointer"));
        }
        let f = &k.0.f_vector().f;
        *written = f.len();
        if len < f.len() || buf.is_null() {
            return Err(fail(OctoStatus::BufferTooSmall, format!("need {} entries", f.len())));
        }
        ptr::copy_nonoverlapping(f.as_ptr(), buf, f.len());
        Ok(())
    })
}

/// Euler characteristic.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_complex_euler(c: *const OctoComplex, out: *mut i64) -> OctoStatus {
    guard(|| {
        let k = deref(c)?;
        if out.is_null() {
            return Err(fail(OctoStatus::NullPointer, "null output pointer"));
        }
        *out = k.0.f_vector().chi;
        Ok(())
    })
}

/// The 351-element group on 27 vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_group_g351(out: *mut *mut OctoGroup) -> OctoStatus {
    guard(|| store(out, OctoGroup(lib(build_g351())?)))
}

/// Its 2106-element normaliser.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_group_normalizer(out: *mut *mut OctoGroup) -> OctoStatus {
    guard(|| store(out, OctoGroup(lib(build_normalizer())?)))
}

/// The trivial group on `m` points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_group_trivial(m: usize, out: *mut *mut OctoGroup) -> OctoStatus {
    guard(|| {
        if m == 0 || m > octoplane::complex::MAX_VERTICES {
            return Err(fail(OctoStatus::Domain, format!("m = {m} out of range")));
        }
        store(out, OctoGroup(PermGroup::trivial(m)))
    })
}

/// # Safety
/// `g` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn octo_group_order(g: *const OctoGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn octo_group_free(g: *mut OctoGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// The union of the `g`-orbits of the facets of `reps`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_group_expand(
    g: *const OctoGroup,
    reps: *const OctoComplex,
    out: *mut *mut OctoComplex,
) -> OctoStatus {
    guard(|| {
        let (g, r) = (deref(g)?, deref(reps)?);
        if g.0.m() != r.0.m() {
            return Err(fail(OctoStatus::Domain, "group and complex act on different universes"));
        }
        store(out, OctoComplex(lib(g.0.expand_orbits(&r.0))?))
    })
}

/// Certify `g · reps` as a combinatorial manifold. `*certified` is 1 when
/// every simplex orbit has a nonevasive witness and 0 when inconclusive.
///
/// # Safety
/// Handles must be live; `certified` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_certify(
    reps: *const OctoComplex,
    g: *const OctoGroup,
    certified: *mut i32,
) -> OctoStatus {
    guard(|| {
        let (r, g) = (deref(reps)?, deref(g)?);
        if certified.is_null() {
            return Err(fail(OctoStatus::NullPointer, "null output pointer"));
        }
        if g.0.m() != r.0.m() {
            return Err(fail(OctoStatus::Domain, "group and complex act on different universes"));
        }
        let rep = lib(certify_manifold(&r.0, &g.0, &CertifyOptions::default()))?;
        *certified = rep.is_certified() as i32;
        Ok(())
    })
}

/// The number of complexes `K_S` up to isomorphism plus the two without
/// distinguished subcomplexes, in decimal. Free with [`octo_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octo_census_total(out: *mut *mut c_char) -> OctoStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(OctoStatus::NullPointer, "null output pointer"));
        }
        let c = lib(subgroup_census())?;
        *out = CString::new(c.with_exceptional.to_string()).expect("digits only").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn octo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

//! C ABI for reptile-lab.
//!
//! Every function returns an [`RlStatus`]; results go through out-pointers. On failure the
//! message is kept per thread and can be fetched with [`rl_last_error_message`]. Handles
//! are opaque and must be released with their `_free` function. Strings handed out by the
//! library are released with [`rl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use reptile_lab::coxeter::CoxeterDiagram;
use reptile_lab::exactmath::rat;
use reptile_lab::realize::{
    algebraic_degree, search_tiling, verify_tiling, SearchConfig, SearchOutcome, SphTiling, TileSpec,
    TilingJson,
};
use reptile_lab::spherical::edge_lengths;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The search finished without finding a tiling.
    NotFound = 4,
    /// The search ran out of its node budget.
    Aborted = 5,
    /// A tiling was found but failed verification.
    Unverified = 6,
    Internal = 7,
}

/// A parsed Coxeter diagram.
pub struct RlDiagram(CoxeterDiagram);

/// A verified tiling of a spherical triangle.
pub struct RlTiling(SphTiling);

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn fail(status: RlStatus, msg: impl Into<String>) -> RlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg.into()));
    status
}

fn from_lib(e: reptile_lab::Error) -> RlStatus {
    let status = match e {
        reptile_lab::Error::Parse(_) => RlStatus::Parse,
        _ => RlStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> RlStatus) -> RlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(RlStatus::Internal, msg)
        }
    }
}

fn into_c_string(s: String) -> *mut c_char {
    // interior NULs cannot occur in the library's JSON or messages
    CString::new(s).map(CString::into_raw).unwrap_or(std::ptr::null_mut())
}

/// Library version as a static NUL-terminated string. Do not free.
#[no_mangle]
pub extern "C" fn rl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Free with [`rl_string_free`].
#[no_mangle]
pub extern "C" fn rl_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone().map(into_c_string).unwrap_or(std::ptr::null_mut()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn rl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Edge lengths of the spherical triangle with the given angles (radians); edge `i` is
/// opposite angle `i`.
///
/// # Safety
/// `angles` and `out` must each point to three doubles.
#[no_mangle]
pub unsafe extern "C" fn rl_spherical_edge_lengths(angles: *const f64, out: *mut f64) -> RlStatus {
    guard(|| {
        if angles.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "null pointer");
        }
        let a = [*angles, *angles.add(1), *angles.add(2)];
        match edge_lengths(a) {
            Ok(e) => {
                for (i, x) in e.iter().enumerate() {
                    *out.add(i) = *x;
                }
                RlStatus::Ok
            }
            Err(e) => from_lib(e),
        }
    })
}

/// Degree over Q of the real `d`-th root of `k`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_algebraic_degree(k: u64, d: u32, out: *mut u32) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return fail(RlStatus::NullPointer, "null pointer");
        }
        match algebraic_degree(k, d) {
            Ok(r) => {
                *out = r.degree;
                RlStatus::Ok
            }
            Err(e) => from_lib(e),
        }
    })
}

/// Parses a diagram from its JSON fixture form.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_diagram_from_json(json: *const c_char, out: *mut *mut RlDiagram) -> RlStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "null pointer");
        }
        let Ok(s) = CStr::from_ptr(json).to_str() else {
            return fail(RlStatus::Parse, "input is not UTF-8");
        };
        match CoxeterDiagram::from_json(s) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(RlDiagram(d)));
                RlStatus::Ok
            }
            Err(e) => from_lib(e),
        }
    })
}

/// # Safety
/// `d` must come from [`rl_diagram_from_json`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn rl_diagram_free(d: *mut RlDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Order of the label-preserving automorphism group.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_diagram_automorphism_count(d: *const RlDiagram, out: *mut usize) -> RlStatus {
    guard(|| {
        if d.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "null pointer");
        }
        *out = (*d).0.automorphisms().order();
        RlStatus::Ok
    })
}

/// Searches for a tiling of the triangle with angles `target` (radians) by copies of the
/// tile whose angles are `num[i]/den[i]` times pi, using at most `n_max` tiles.
///
/// Returns `RL_STATUS_OK` with a handle in `out` only when a tiling was found and verified.
///
/// # Safety
/// `num`, `den` and `target` must each point to three values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rl_tile_search(
    num: *const i64,
    den: *const i64,
    target: *const f64,
    n_max: usize,
    node_budget: u64,
    out: *mut *mut RlTiling,
) -> RlStatus {
    guard(|| {
        if num.is_null() || den.is_null() || target.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "null pointer");
        }
        let mut q = vec![];
        for i in 0..3 {
            let (n, d) = (*num.add(i), *den.add(i));
            if d <= 0 || n <= 0 {
                return fail(RlStatus::InvalidArgument, format!("tile angle {n}/{d} is not a positive fraction"));
            }
            q.push(rat(n, d));
        }
        let tile = match TileSpec::new(q[0].clone(), q[1].clone(), q[2].clone()) {
            Ok(t) => t,
            Err(e) => return from_lib(e),
        };
        let angles = [*target, *target.add(1), *target.add(2)];
        let cfg = SearchConfig { n_max, node_budget, ..SearchConfig::default() };
        match search_tiling(angles, &tile, &cfg) {
            Ok((SearchOutcome::Found(t), _)) => {
                if !verify_tiling(&t, &tile, cfg.eps).valid {
                    return fail(RlStatus::Unverified, "tiling failed verification");
                }
                *out = Box::into_raw(Box::new(RlTiling(t)));
                RlStatus::Ok
            }
            Ok((SearchOutcome::Exhausted, _)) => fail(RlStatus::NotFound, format!("no tiling with at most {n_max} tiles")),
            Ok((SearchOutcome::Aborted, s)) => fail(RlStatus::Aborted, format!("node budget exhausted after {} nodes", s.nodes)),
            Err(e) => from_lib(e),
        }
    })
}

/// Number of tiles in a tiling.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_tiling_tile_count(t: *const RlTiling, out: *mut usize) -> RlStatus {
    guard(|| {
        if t.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "null pointer");
        }
        *out = (*t).0.tiles.len();
        RlStatus::Ok
    })
}

/// Tiling as JSON (`vertices`, `target`, `tiles`). Free the string with [`rl_string_free`].
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_tiling_to_json(t: *const RlTiling, out: *mut *mut c_char) -> RlStatus {
    guard(|| {
        if t.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "null pointer");
        }
        match serde_json::to_string(&TilingJson::from_tiling(&(*t).0)) {
            Ok(s) => {
                *out = into_c_string(s);
                RlStatus::Ok
            }
            Err(e) => fail(RlStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `t` must come from [`rl_tile_search`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn rl_tiling_free(t: *mut RlTiling) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

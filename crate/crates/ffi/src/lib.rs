//! C ABI over `hecke-wgraph`.
//!
//! Objects are opaque handles created by `hw_*_new*` and released by the
//! matching `hw_*_free`. Every fallible call returns an `HwStatus`; on
//! failure `hw_last_error_message` describes the error on the calling thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with `hw_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hecke_wgraph::verify::{self, Level};
use hecke_wgraph::{CoxeterGroup, CoxeterSpec, Error, GenSet, KlTable, SpechtModule, WGraph};

/// Result codes for every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    TooLarge = 3,
    ComputationFailed = 4,
    Panic = 5,
}

/// A finite Coxeter group with its enumerated elements.
pub struct HwGroup(Arc<CoxeterGroup>);

/// The Kazhdan-Lusztig table of a group.
pub struct HwKl(KlTable);

/// A W-graph with its vertices, edges and generator matrices.
pub struct HwWGraph(WGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> HwStatus {
    match e {
        Error::InfiniteOrTooLarge { .. } | Error::TooLarge { .. } => HwStatus::TooLarge,
        Error::RecursionStuck(_) | Error::NotCellClosed | Error::Cache(_) | Error::Io(_) => HwStatus::ComputationFailed,
        _ => HwStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (HwStatus, String)>) -> HwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HwStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            HwStatus::Panic
        }
    }
}

fn lib<T>(r: hecke_wgraph::Result<T>) -> Result<T, (HwStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (HwStatus, String) {
    (HwStatus::NullPointer, "null pointer argument".into())
}

fn invalid(msg: impl Into<String>) -> (HwStatus, String) {
    (HwStatus::InvalidArgument, msg.into())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, (HwStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (HwStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (HwStatus, String)> {
    let c = CString::new(s).map_err(|_| invalid("string contains a nul byte"))?;
    write(out, c.into_raw())
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn hw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a named group such as "B3" or "I2(5)".
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_group_new_named(name: *const c_char, out: *mut *mut HwGroup) -> HwStatus {
    guard(|| {
        if name.is_null() {
            return Err(null());
        }
        let name = CStr::from_ptr(name)
            .to_str()
            .map_err(|_| invalid("name is not UTF-8"))?;
        let g = lib(CoxeterGroup::named(name))?;
        write(out, Box::into_raw(Box::new(HwGroup(Arc::new(g)))))
    })
}

/// Builds a group from a row-major `rank x rank` Coxeter matrix. Groups with
/// more than `cap` elements, including infinite ones, are rejected.
///
/// # Safety
/// `matrix` must point to `rank * rank` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_group_new_matrix(
    rank: usize,
    matrix: *const u32,
    cap: usize,
    out: *mut *mut HwGroup,
) -> HwStatus {
    guard(|| {
        if matrix.is_null() {
            return Err(null());
        }
        let flat = std::slice::from_raw_parts(matrix, rank * rank);
        let rows = flat.chunks(rank.max(1)).map(<[u32]>::to_vec).collect();
        let spec = lib(CoxeterSpec::new(rows))?;
        let g = lib(CoxeterGroup::build(spec, cap))?;
        write(out, Box::into_raw(Box::new(HwGroup(Arc::new(g)))))
    })
}

/// # Safety
/// `g` must come from `hw_group_new_*` and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hw_group_free(g: *mut HwGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_group_order(g: *const HwGroup, out: *mut usize) -> HwStatus {
    guard(|| write(out, deref(g)?.0.order()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_group_rank(g: *const HwGroup, out: *mut usize) -> HwStatus {
    guard(|| write(out, deref(g)?.0.rank()))
}

/// Length of the element with the given index.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_group_length(g: *const HwGroup, index: usize, out: *mut usize) -> HwStatus {
    guard(|| {
        let g = &deref(g)?.0;
        let w = lib(g.element(index))?;
        write(out, g.length(w))
    })
}

/// ShortLex reduced word of an element, e.g. "s1s2" or "e".
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_group_element_word(g: *const HwGroup, index: usize, out: *mut *mut c_char) -> HwStatus {
    guard(|| {
        let g = &deref(g)?.0;
        let w = lib(g.element(index))?;
        write_string(out, g.format(w))
    })
}

/// Computes the Kazhdan-Lusztig table.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_kl_new(g: *const HwGroup, out: *mut *mut HwKl) -> HwStatus {
    guard(|| {
        let g = &deref(g)?.0;
        write(out, Box::into_raw(Box::new(HwKl(KlTable::compute(g)))))
    })
}

/// # Safety
/// `kl` must come from `hw_kl_new` and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hw_kl_free(kl: *mut HwKl) {
    if !kl.is_null() {
        drop(Box::from_raw(kl));
    }
}

/// `mu(y, w)` for element indices `y`, `w`.
///
/// # Safety
/// `kl` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_kl_mu(kl: *const HwKl, y: usize, w: usize, out: *mut i64) -> HwStatus {
    guard(|| {
        let kl = &deref(kl)?.0;
        let g = kl.group();
        let (y, w) = (lib(g.element(y))?, lib(g.element(w))?);
        write(out, kl.mu(y, w))
    })
}

/// Coefficient of `T_y` in `C_w` as JSON `[[exponent, coefficient], ...]`.
///
/// # Safety
/// `kl` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_kl_poly_json(kl: *const HwKl, y: usize, w: usize, out: *mut *mut c_char) -> HwStatus {
    guard(|| {
        let kl = &deref(kl)?.0;
        let g = kl.group();
        let (y, w) = (lib(g.element(y))?, lib(g.element(w))?);
        let json = serde_json::to_string(&kl.p(y, w)).map_err(|e| invalid(e.to_string()))?;
        write_string(out, json)
    })
}

/// W-graph of the generic Specht module for the subset `J` given as a bit
/// mask (bit `i` set when generator `s_{i+1}` is in `J`).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_wgraph_new(g: *const HwGroup, j_mask: u32, out: *mut *mut HwWGraph) -> HwStatus {
    guard(|| {
        let g = &deref(g)?.0;
        if g.rank() < 32 && j_mask >> g.rank() != 0 {
            return Err(invalid(format!(
                "mask {j_mask:#x} names generators beyond rank {}",
                g.rank()
            )));
        }
        let module = lib(SpechtModule::build(g, GenSet(j_mask)))?;
        let rel = lib(module.relative_kl())?;
        write(
            out,
            Box::into_raw(Box::new(HwWGraph(WGraph::from_specht(&module, &rel)))),
        )
    })
}

/// # Safety
/// `w` must come from `hw_wgraph_new` and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hw_wgraph_free(w: *mut HwWGraph) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_wgraph_vertex_count(w: *const HwWGraph, out: *mut usize) -> HwStatus {
    guard(|| write(out, deref(w)?.0.len()))
}

/// Number of undirected edges with nonzero `mu`.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_wgraph_edge_count(w: *const HwWGraph, out: *mut usize) -> HwStatus {
    guard(|| write(out, deref(w)?.0.edges().count()))
}

/// Sets `*out` to 1 when the generator matrices satisfy the quadratic and
/// braid relations, else 0.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_wgraph_verify(w: *const HwWGraph, out: *mut i32) -> HwStatus {
    guard(|| write(out, i32::from(deref(w)?.0.verify().passed())))
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_wgraph_to_json(w: *const HwWGraph, out: *mut *mut c_char) -> HwStatus {
    guard(|| write_string(out, deref(w)?.0.to_json().to_string()))
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_wgraph_to_dot(w: *const HwWGraph, out: *mut *mut c_char) -> HwStatus {
    guard(|| write_string(out, deref(w)?.0.to_dot()))
}

/// Runs the invariant suites. `level` is 1 for fast and 2 for full. Sets
/// `*passed` to 1 when every assertive suite passes; `report_json` may be
/// NULL, otherwise it receives the full report.
///
/// # Safety
/// `kl` must be a live handle; `passed` must be writable; `report_json`
/// must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn hw_verify(
    kl: *const HwKl,
    level: u32,
    seed: u64,
    passed: *mut i32,
    report_json: *mut *mut c_char,
) -> HwStatus {
    guard(|| {
        let kl = &deref(kl)?.0;
        let level = match level {
            1 => Level::Fast,
            2 => Level::Full,
            other => return Err(invalid(format!("unknown level {other}"))),
        };
        let report = lib(verify::run(kl.group(), kl, level, seed))?;
        write(passed, i32::from(report.passed()))?;
        if !report_json.is_null() {
            let json = serde_json::to_string(&report).map_err(|e| invalid(e.to_string()))?;
            write_string(report_json, json)?;
        }
        Ok(())
    })
}

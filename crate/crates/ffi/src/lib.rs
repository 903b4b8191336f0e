//! C ABI over `ecckit`.
//!
//! Graphs and covers are opaque handles owned by the caller and released
//! with the matching `_free` function. Every fallible call returns an
//! [`EcckitStatus`]; on failure [`ecckit_last_error`] gives a message for the
//! calling thread. Panics are caught at the boundary and reported as
//! `ECCKIT_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ecckit::cli::{classify_report, cover_report, parse_graph, CoverReport, GraphFormat, Method, ReportOptions};
use ecckit::{exact_ecc, EccError, ExactConfig, Graph};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcckitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Capacity = 4,
    Precondition = 5,
    Budget = 6,
    Unsupported = 7,
    /// Hypothesis violation, stalled elimination or a bound counterexample.
    Construction = 8,
    Io = 9,
    OutOfRange = 10,
    Panic = 11,
}

impl From<&EccError> for EcckitStatus {
    fn from(e: &EccError) -> Self {
        match e {
            EccError::Input(_) | EccError::Generation { .. } => EcckitStatus::InvalidInput,
            EccError::Parse { .. } => EcckitStatus::Parse,
            EccError::Capacity { .. } => EcckitStatus::Capacity,
            EccError::Precondition(_) => EcckitStatus::Precondition,
            EccError::Budget { .. } => EcckitStatus::Budget,
            EccError::Unsupported(_) => EcckitStatus::Unsupported,
            EccError::HypothesisViolation { .. }
            | EccError::SupercyclePresent { .. }
            | EccError::Counterexample { .. } => EcckitStatus::Construction,
            EccError::Io(_) => EcckitStatus::Io,
        }
    }
}

/// Cover construction selector, mirroring `ecckit cover --method`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcckitMethod {
    Auto = 0,
    NoDominating = 1,
    Diam3 = 2,
    Theorem1 = 3,
    Theorem8 = 4,
    Fallback = 5,
}

impl From<EcckitMethod> for Method {
    fn from(m: EcckitMethod) -> Self {
        match m {
            EcckitMethod::Auto => Method::Auto,
            EcckitMethod::NoDominating => Method::NoDominating,
            EcckitMethod::Diam3 => Method::Diam3,
            EcckitMethod::Theorem1 => Method::Theorem1,
            EcckitMethod::Theorem8 => Method::Theorem8,
            EcckitMethod::Fallback => Method::Fallback,
        }
    }
}

/// Opaque graph handle.
pub struct EcckitGraph {
    inner: Graph,
}

/// Opaque cover handle: the cliques plus the report they came with.
pub struct EcckitCover {
    report: CoverReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

struct Fail(EcckitStatus, String);

impl From<EccError> for Fail {
    fn from(e: EccError) -> Self {
        Fail(EcckitStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(EcckitStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> EcckitStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EcckitStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside ecckit".into());
            EcckitStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const EcckitGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next ecckit call on the same thread.
#[no_mangle]
pub extern "C" fn ecckit_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static, NUL-terminated library version.
#[no_mangle]
pub extern "C" fn ecckit_version() -> *const c_char {
    static VERSION: &[u8] = concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes();
    VERSION.as_ptr().cast()
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`). `edges` may be null when `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut EcckitGraph,
) -> EcckitStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::new(n, &pairs)?;
        write_out(out, Box::into_raw(Box::new(EcckitGraph { inner: g })))
    })
}

/// Parses an edge list (`dimacs` false) or DIMACS text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_graph_parse(
    text: *const c_char,
    dimacs: bool,
    out: *mut *mut EcckitGraph,
) -> EcckitStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(EcckitStatus::InvalidInput, "text is not UTF-8".into()))?;
        let format = if dimacs { GraphFormat::Dimacs } else { GraphFormat::Edgelist };
        let g = parse_graph(s, format)?;
        write_out(out, Box::into_raw(Box::new(EcckitGraph { inner: g })))
    })
}

/// # Safety
/// `g` must be null or a handle from `ecckit_graph_new`/`ecckit_graph_parse` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ecckit_graph_free(g: *mut EcckitGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ecckit_graph_order(g: *const EcckitGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.n())
}

/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ecckit_graph_edge_count(g: *const EcckitGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_is_alpha_two(g: *const EcckitGraph, out: *mut bool) -> EcckitStatus {
    guard(|| write_out(out, graph_ref(g)?.is_alpha_two()))
}

/// Structure report as JSON; release with `ecckit_string_free`.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_classify_json(g: *const EcckitGraph, out: *mut *mut c_char) -> EcckitStatus {
    guard(|| {
        let r = classify_report(graph_ref(g)?)?;
        let json = serde_json::to_string(&r).map_err(|e| Fail(EcckitStatus::Io, e.to_string()))?;
        write_out(out, to_c_string(json))
    })
}

/// Builds a cover. `edge_u`/`edge_v` pick the dominating edge for
/// `Theorem1`; pass `SIZE_MAX` for both to let the library choose.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_cover(
    g: *const EcckitGraph,
    method: EcckitMethod,
    edge_u: usize,
    edge_v: usize,
    out: *mut *mut EcckitCover,
) -> EcckitStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let edge = (edge_u != usize::MAX || edge_v != usize::MAX).then_some((edge_u, edge_v));
        let report = cover_report(g, method.into(), edge, ReportOptions::default())?;
        write_out(out, Box::into_raw(Box::new(EcckitCover { report })))
    })
}

/// # Safety
/// `c` must be null or a live cover handle.
#[no_mangle]
pub unsafe extern "C" fn ecckit_cover_free(c: *mut EcckitCover) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of cliques, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live cover handle.
#[no_mangle]
pub unsafe extern "C" fn ecckit_cover_len(c: *const EcckitCover) -> usize {
    c.as_ref().map_or(0, |h| h.report.cliques.len())
}

/// Size bound the cover was built against.
///
/// # Safety
/// `c` must be null or a live cover handle.
#[no_mangle]
pub unsafe extern "C" fn ecckit_cover_bound(c: *const EcckitCover) -> usize {
    c.as_ref().map_or(0, |h| h.report.bound)
}

/// Whether every edge is covered and every set is a clique.
///
/// # Safety
/// `c` must be null or a live cover handle.
#[no_mangle]
pub unsafe extern "C" fn ecckit_cover_is_valid(c: *const EcckitCover) -> bool {
    c.as_ref().is_some_and(|h| h.report.valid)
}

/// Borrowed view of clique `index`: sorted vertices, valid while `c` lives.
///
/// # Safety
/// `c` must be a live cover handle; `vertices` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_cover_clique(
    c: *const EcckitCover,
    index: usize,
    vertices: *mut *const usize,
    len: *mut usize,
) -> EcckitStatus {
    guard(|| {
        let h = c.as_ref().ok_or_else(|| null("cover"))?;
        let clique = h.report.cliques.get(index).ok_or_else(|| {
            Fail(EcckitStatus::OutOfRange, format!("clique {index} of {}", h.report.cliques.len()))
        })?;
        write_out(len, clique.len())?;
        write_out(vertices, clique.vertices().as_ptr())
    })
}

/// Full cover report as JSON; release with `ecckit_string_free`.
///
/// # Safety
/// `c` must be a live cover handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_cover_json(c: *const EcckitCover, out: *mut *mut c_char) -> EcckitStatus {
    guard(|| {
        let h = c.as_ref().ok_or_else(|| null("cover"))?;
        let json = serde_json::to_string(&h.report).map_err(|e| Fail(EcckitStatus::Io, e.to_string()))?;
        write_out(out, to_c_string(json))
    })
}

/// Exact minimum cover size. Zero for `max_n` or `node_budget` selects the default.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ecckit_exact_ecc(
    g: *const EcckitGraph,
    max_n: usize,
    node_budget: u64,
    out: *mut usize,
) -> EcckitStatus {
    guard(|| {
        let mut cfg = ExactConfig::default();
        if max_n != 0 {
            cfg.max_n = max_n;
        }
        if node_budget != 0 {
            cfg.node_budget = node_budget;
        }
        let r = exact_ecc(graph_ref(g)?, cfg)?;
        write_out(out, r.ecc)
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from an ecckit `_json` call, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ecckit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

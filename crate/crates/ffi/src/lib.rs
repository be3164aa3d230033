//! C ABI for leafspan.
//!
//! Graphs and trees are opaque handles created and freed by this library.
//! Vertex ids are 0-based. Every fallible call returns a [`LeafspanStatus`];
//! the message of the most recent failure on the calling thread is available
//! through [`leafspan_last_error`].

use leafspan::graph::{parse_graph, Graph};
use leafspan::potential::greedy_spanning_tree;
use leafspan::solver::{exact_max_leaves_capped, fpt_decide_with, Answer, FptOptions};
use leafspan::tree::TreeEdges;
use leafspan::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafspanStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidArgument = 3,
    Disconnected = 4,
    TooSmall = 5,
    Capacity = 6,
    Internal = 7,
}

pub struct LeafspanGraph(Graph);

pub struct LeafspanTree(TreeEdges);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn remember(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> LeafspanStatus {
    match e {
        Error::Parse { .. } | Error::VertexRange { .. } | Error::LoopInInput { .. } => LeafspanStatus::Parse,
        Error::Disconnected => LeafspanStatus::Disconnected,
        Error::TooSmall { .. } => LeafspanStatus::TooSmall,
        Error::Capacity { .. } => LeafspanStatus::Capacity,
        Error::Argument(_) | Error::NoSuchVertex(_) | Error::NoSuchEdge(_) => LeafspanStatus::InvalidArgument,
        _ => LeafspanStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), LeafspanStatus>) -> LeafspanStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LeafspanStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            remember("internal panic".into());
            LeafspanStatus::Internal
        }
    }
}

fn fail(e: Error) -> LeafspanStatus {
    remember(e.to_string());
    status_of(&e)
}

fn null() -> LeafspanStatus {
    remember("null pointer argument".into());
    LeafspanStatus::NullPointer
}

/// Parses a graph in the DIMACS-like text format (`p n m`, then `e u v` with 1-based ids).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn leafspan_graph_parse(text: *const c_char, out: *mut *mut LeafspanGraph) -> LeafspanStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let bytes = CStr::from_ptr(text).to_bytes();
        let g = parse_graph(bytes).map_err(fail)?;
        *out = Box::into_raw(Box::new(LeafspanGraph(g)));
        Ok(())
    })
}

/// A graph with `n` isolated vertices `0..n`.
#[no_mangle]
pub extern "C" fn leafspan_graph_new(n: usize) -> *mut LeafspanGraph {
    Box::into_raw(Box::new(LeafspanGraph(Graph::with_vertices(n))))
}

/// # Safety
/// `g` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn leafspan_graph_free(g: *mut LeafspanGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn leafspan_graph_add_edge(g: *mut LeafspanGraph, u: usize, v: usize) -> LeafspanStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(null)?;
        g.0.add_edge(u, v).map(|_| ()).map_err(fail)
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn leafspan_graph_vertex_count(g: *const LeafspanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn leafspan_graph_edge_count(g: *const LeafspanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

unsafe fn hand_out(tree: TreeEdges, out: *mut *mut LeafspanTree) {
    if !out.is_null() {
        *out = Box::into_raw(Box::new(LeafspanTree(tree)));
    }
}

/// Exact maximum leaf count for graphs with at most `cap` vertices (`cap` ≤ 64).
/// When `tree` is non-null it receives an optimal tree.
///
/// # Safety
/// `g` and `leaves` must be valid pointers; `tree` may be null.
#[no_mangle]
pub unsafe extern "C" fn leafspan_max_leaves_exact(
    g: *const LeafspanGraph,
    cap: usize,
    leaves: *mut usize,
    tree: *mut *mut LeafspanTree,
) -> LeafspanStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        let leaves = leaves.as_mut().ok_or_else(null)?;
        let (l, t) = exact_max_leaves_capped(&g.0, cap).map_err(fail)?;
        *leaves = l;
        hand_out(t, tree);
        Ok(())
    })
}

/// Heuristic spanning tree with many leaves.
///
/// # Safety
/// `g` and `leaves` must be valid pointers; `tree` may be null.
#[no_mangle]
pub unsafe extern "C" fn leafspan_max_leaves_heuristic(
    g: *const LeafspanGraph,
    leaves: *mut usize,
    tree: *mut *mut LeafspanTree,
) -> LeafspanStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        let leaves = leaves.as_mut().ok_or_else(null)?;
        let (t, report) = greedy_spanning_tree(&g.0).map_err(fail)?;
        *leaves = report.leaves;
        hand_out(t, tree);
        Ok(())
    })
}

/// Decides whether `g` has a spanning tree with at least `k` leaves.
/// `threads` = 0 uses the default pool. `answer` is set to 1 for yes and 0 for no;
/// `subsets` (optional) receives the number of enumerated candidate sets and
/// `witness` (optional) a tree when the answer is yes.
///
/// # Safety
/// `g` and `answer` must be valid pointers; `subsets` and `witness` may be null.
#[no_mangle]
pub unsafe extern "C" fn leafspan_fpt_decide(
    g: *const LeafspanGraph,
    k: usize,
    threads: usize,
    answer: *mut i32,
    subsets: *mut u64,
    witness: *mut *mut LeafspanTree,
) -> LeafspanStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        let answer = answer.as_mut().ok_or_else(null)?;
        let opts = FptOptions { threads: (threads > 0).then_some(threads), witness: !witness.is_null() };
        let v = fpt_decide_with(&g.0, k, opts).map_err(fail)?;
        *answer = i32::from(v.answer == Answer::Yes);
        if let Some(s) = subsets.as_mut() {
            *s = v.stats.subsets_enumerated;
        }
        if !witness.is_null() {
            *witness = ptr::null_mut();
            if let Some(t) = v.witness {
                hand_out(t, witness);
            }
        }
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a live tree handle.
#[no_mangle]
pub unsafe extern "C" fn leafspan_tree_edge_count(t: *const LeafspanTree) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// Endpoints of the `i`-th tree edge.
///
/// # Safety
/// `t` must be a live tree handle; `u` and `v` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn leafspan_tree_edge(t: *const LeafspanTree, i: usize, u: *mut usize, v: *mut usize) -> LeafspanStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(null)?;
        let (u, v) = (u.as_mut().ok_or_else(null)?, v.as_mut().ok_or_else(null)?);
        let &(a, b) = t.0.get(i).ok_or_else(|| fail(Error::Argument(format!("edge index {i} out of range"))))?;
        (*u, *v) = (a, b);
        Ok(())
    })
}

/// # Safety
/// `t` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn leafspan_tree_free(t: *mut LeafspanTree) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length without the NUL.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn leafspan_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn leafspan_status_str(status: LeafspanStatus) -> *const c_char {
    let s: &'static CStr = match status {
        LeafspanStatus::Ok => c"ok",
        LeafspanStatus::NullPointer => c"null pointer",
        LeafspanStatus::Parse => c"parse error",
        LeafspanStatus::InvalidArgument => c"invalid argument",
        LeafspanStatus::Disconnected => c"graph is not connected",
        LeafspanStatus::TooSmall => c"graph too small",
        LeafspanStatus::Capacity => c"instance exceeds the size cap",
        LeafspanStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

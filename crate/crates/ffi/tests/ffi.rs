use leafspan_ffi::*;
use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

const G7: &str = "p 7 12\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 4 5\ne 6 2\ne 6 5\ne 7 3\ne 7 4\ne 6 7\ne 2 5\n";

fn parse(text: &str) -> *mut LeafspanGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { leafspan_graph_parse(c.as_ptr(), &mut g) }, LeafspanStatus::Ok);
    g
}

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 256];
    unsafe {
        leafspan_last_error(buf.as_mut_ptr(), buf.len());
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

#[test]
fn g7_round_trip() {
    let g = parse(G7);
    unsafe {
        assert_eq!((leafspan_graph_vertex_count(g), leafspan_graph_edge_count(g)), (7, 12));
        let mut leaves = 0;
        let mut tree = ptr::null_mut();
        assert_eq!(leafspan_max_leaves_exact(g, 30, &mut leaves, &mut tree), LeafspanStatus::Ok);
        assert_eq!(leaves, 4);
        assert_eq!(leafspan_tree_edge_count(tree), 6);
        let (mut u, mut v) = (0, 0);
        assert_eq!(leafspan_tree_edge(tree, 0, &mut u, &mut v), LeafspanStatus::Ok);
        assert!(u < 7 && v < 7);
        assert_eq!(leafspan_tree_edge(tree, 6, &mut u, &mut v), LeafspanStatus::InvalidArgument);
        leafspan_tree_free(tree);

        let (mut answer, mut subsets) = (-1, 0u64);
        let mut witness = ptr::null_mut();
        assert_eq!(leafspan_fpt_decide(g, 4, 2, &mut answer, &mut subsets, &mut witness), LeafspanStatus::Ok);
        assert_eq!(answer, 1);
        assert!(!witness.is_null());
        leafspan_tree_free(witness);
        assert_eq!(leafspan_fpt_decide(g, 5, 0, &mut answer, &mut subsets, ptr::null_mut()), LeafspanStatus::Ok);
        assert_eq!(answer, 0);
        assert!(subsets > 0);

        assert_eq!(leafspan_max_leaves_heuristic(g, &mut leaves, ptr::null_mut()), LeafspanStatus::Ok);
        assert_eq!(leaves, 4);
        leafspan_graph_free(g);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("p 3 1\ne 1 4\n").unwrap();
        assert_eq!(leafspan_graph_parse(bad.as_ptr(), &mut g), LeafspanStatus::Parse);
        assert!(last_error().contains("out of range"));
        assert_eq!(leafspan_graph_parse(ptr::null(), &mut g), LeafspanStatus::NullPointer);

        let two = leafspan_graph_new(4);
        assert_eq!(leafspan_graph_add_edge(two, 0, 1), LeafspanStatus::Ok);
        assert_eq!(leafspan_graph_add_edge(two, 2, 3), LeafspanStatus::Ok);
        assert_eq!(leafspan_graph_add_edge(two, 2, 9), LeafspanStatus::InvalidArgument);
        let mut answer = 0;
        assert_eq!(leafspan_fpt_decide(two, 2, 0, &mut answer, ptr::null_mut(), ptr::null_mut()), LeafspanStatus::Disconnected);
        assert_eq!(leafspan_fpt_decide(two, 0, 0, &mut answer, ptr::null_mut(), ptr::null_mut()), LeafspanStatus::InvalidArgument);
        let mut leaves = 0;
        assert_eq!(leafspan_max_leaves_exact(two, 2, &mut leaves, ptr::null_mut()), LeafspanStatus::Capacity);
        assert_eq!(leafspan_max_leaves_exact(ptr::null(), 2, &mut leaves, ptr::null_mut()), LeafspanStatus::NullPointer);
        leafspan_graph_free(two);
        leafspan_graph_free(ptr::null_mut());
        assert_eq!(leafspan_graph_vertex_count(ptr::null()), 0);
        let s = CStr::from_ptr(leafspan_status_str(LeafspanStatus::Capacity));
        assert_eq!(s.to_str().unwrap(), "instance exceeds the size cap");
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/leafspan.h");
    assert!(header.exists(), "build script did not write the header");
    let lib = target_dir().join("libleafspan_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let out = std::env::temp_dir().join(format!("leafspan-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stdout));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok"));
}

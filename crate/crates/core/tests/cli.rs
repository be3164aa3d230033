use leafspan::cli::{parse_trace, run};
use leafspan::generators;
use leafspan::graph::{parse_graph, write_graph};
use leafspan::reductions::replay_trace;
use leafspan::tree::{leaf_count, verify_spanning_tree};
use std::process::Command;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn call(args: &[&str], stdin: &str) -> Outcome {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["leafspan"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn edges_of(text: &str) -> Vec<(usize, usize)> {
    text.lines()
        .filter_map(|l| l.strip_prefix("e "))
        .map(|l| {
            let mut it = l.split_whitespace().map(|x| x.parse::<usize>().unwrap() - 1);
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect()
}

#[test]
fn solve_exit_codes_follow_the_answer() {
    let q3 = write_graph(&generators::q3());
    let yes = call(&["solve", "-k", "4", "--witness", "-"], &q3);
    assert_eq!(yes.code, 0);
    assert!(yes.out.starts_with("YES"));
    let t = edges_of(&yes.out);
    verify_spanning_tree(&generators::q3(), &t).unwrap();
    assert!(leaf_count(&t) >= 4);
    let no = call(&["solve", "-k", "5", "--json", "-"], &q3);
    assert_eq!(no.code, 1);
    let doc: serde_json::Value = serde_json::from_str(&no.out).unwrap();
    assert_eq!(doc["answer"], "NO");
}

#[test]
fn stats_are_json() {
    let g7 = write_graph(&generators::g7());
    let r = call(&["solve", "-k", "5", "--stats", "--threads", "2", "-"], &g7);
    assert_eq!(r.code, 1);
    let line = r.out.lines().find(|l| l.starts_with('{')).unwrap();
    let stats: serde_json::Value = serde_json::from_str(line).unwrap();
    assert!(stats["subsets_enumerated"].as_u64().unwrap() > 0);
}

#[test]
fn maximize_reports_the_bound() {
    let g7 = write_graph(&generators::g7());
    let exact = call(&["maximize", "--exact", "-"], &g7);
    assert_eq!(exact.code, 0);
    assert_eq!(leaf_count(&edges_of(&exact.out)), 4);
    let heur = call(&["maximize", "--json", "-"], &g7);
    let doc: serde_json::Value = serde_json::from_str(&heur.out).unwrap();
    assert_eq!(doc["method"], "heuristic");
    assert_eq!(doc["met"], true);
    assert!(doc["leaves"].as_u64().unwrap() >= 4);
    let big = write_graph(&generators::flowerbed(3).unwrap());
    let capped = call(&["maximize", "--exact", "--cap", "20", "-"], &big);
    assert_eq!(capped.code, 2);
    assert!(capped.err.contains("cap"));
}

#[test]
fn reduce_trace_replays() {
    let dir = std::env::temp_dir().join(format!("leafspan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let trace_path = dir.join("trace.jsonl");
    let g = generators::random_invariant_graph(12, 1, 4).unwrap();
    let text = write_graph(&g);
    let r = call(&["reduce", "-", "--trace", trace_path.to_str().unwrap()], &text);
    assert_eq!(r.code, 0, "{}", r.err);
    let reduced = parse_graph(r.out.as_bytes()).unwrap();
    let trace = parse_trace(&std::fs::read_to_string(&trace_path).unwrap()).unwrap();
    let replayed = replay_trace(&g, &trace).unwrap();
    assert_eq!((replayed.n(), replayed.m()), (reduced.n(), reduced.m()));
    let again = call(&["reduce", "-", "--replay", trace_path.to_str().unwrap()], &text);
    assert_eq!(again.code, 0, "{}", again.err);
    assert_eq!(again.out, r.out);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn detect_finds_the_g7_blossom_after_a_deletion() {
    let mut g = generators::g7();
    g.remove_edge_between(generators::G7_A1, generators::G7_A4).unwrap();
    let r = call(&["detect", "--pattern", "2blossom", "--json", "-"], &write_graph(&g));
    assert_eq!(r.code, 0);
    let doc: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(doc["vertices"][0], generators::G7_B + 1);
    let inv = call(&["detect", "--pattern", "invariant", "-"], &write_graph(&g));
    assert_eq!(inv.code, 1);
    let dot = call(&["detect", "--pattern", "blossom", "--dot", "-"], &write_graph(&g));
    assert!(dot.out.starts_with("graph G {") && dot.out.contains("fillcolor"));
}

#[test]
fn generate_writes_the_text_format() {
    let r = call(&["generate", "--family", "flowerbed", "--param", "2"], "");
    let g = parse_graph(r.out.as_bytes()).unwrap();
    assert_eq!((g.n(), r.code), (26, 0));
    let a = call(&["generate", "--family", "random", "--param", "10", "--seed", "9"], "");
    let b = call(&["generate", "--family", "random", "--param", "10", "--seed", "9"], "");
    assert_eq!(a.out, b.out);
    let s = call(&["suppress", "-"], &r.out);
    assert_eq!(s.code, 0);
}

#[test]
fn bad_input_exits_with_two() {
    let r = call(&["solve", "-k", "3", "-"], "p 3 1\ne 1 9\n");
    assert_eq!(r.code, 2);
    assert!(r.err.contains("line 2"));
    assert_eq!(call(&["solve", "-k", "3"], "").code, 2);
    assert_eq!(call(&["frobnicate"], "").code, 2);
    let disconnected = call(&["solve", "-k", "2", "-"], "p 4 2\ne 1 2\ne 3 4\n");
    assert_eq!(disconnected.code, 2);
}

#[test]
fn help_and_version() {
    let v = call(&["--version"], "");
    assert_eq!(v.code, 0);
    assert!(v.out.contains("graph format 1"));
    assert_eq!(call(&["--help"], "").code, 0);
}

#[test]
fn binary_verify_passes() {
    let out = Command::new(env!("CARGO_BIN_EXE_leafspan")).args(["verify", "--check", "g7", "--check", "q3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

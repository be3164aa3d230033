//! Command-line front end. Files use 1-based vertex ids; everything printed is 1-based.

use crate::error::{Error, Result};
use crate::generators::{self, FamilySpec};
use crate::graph::{parse_graph, suppress, to_dot, write_graph, Graph};
use crate::patterns::{self, check_invariant, PatternMatch, TwoTerminalKind};
use crate::potential::greedy_spanning_tree;
use crate::reductions::{reduce_to_irreducible, ReductionStep};
use crate::solver::{exact_max_leaves_capped, fpt_decide_with, Answer, FptOptions, DEFAULT_CAP};
use crate::tree::{leaf_count, TreeEdges};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fmt::Write as _;
use std::io::{Read, Write};

#[derive(Parser, Debug)]
#[command(name = "leafspan", version = version_string(), about = "Maximum-leaf spanning tree toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const fn version_string() -> &'static str {
    concat!(env!("CARGO_PKG_VERSION"), " (graph format 1)")
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a spanning tree with at least K leaves exists (exit 0 = yes, 1 = no)
    Solve {
        #[arg(short, long)]
        k: usize,
        /// Graph file, or `-` for stdin
        input: String,
        /// Print a witness tree as `e u v` lines
        #[arg(long)]
        witness: bool,
        /// Print enumeration statistics as JSON
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        json: bool,
        /// Worker threads for the subset enumeration
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Compute a spanning tree with many leaves
    Maximize {
        input: String,
        /// Exact optimum (small graphs only)
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        /// Potential-guided heuristic (the default)
        #[arg(long)]
        heuristic: bool,
        /// Vertex limit for --exact
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply reduction rules until none is admissible, or replay a saved trace
    Reduce {
        input: String,
        /// Write the trace as JSON lines to this file (`-` for stdout)
        #[arg(long)]
        trace: Option<String>,
        /// Replay a JSON-lines trace instead of reducing
        #[arg(long, conflicts_with = "trace")]
        replay: Option<String>,
        /// Write the resulting graph here instead of stdout
        #[arg(short, long)]
        output: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// List occurrences of a structure
    Detect {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        input: String,
        #[arg(long)]
        json: bool,
        /// Print the graph as Graphviz DOT with matched vertices highlighted
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Suppress degree-2 vertices and print the resulting multigraph
    Suppress {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a member of a named family
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// k for necklaces, i for flowerbeds, n for random graphs
        #[arg(long)]
        param: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Minimum degree target for random graphs
        #[arg(long, default_value_t = 3)]
        min_degree: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Run the built-in checks against the known extremal graphs
    Verify {
        /// Checks to run; all of them when omitted
        #[arg(long, value_enum)]
        check: Vec<CheckArg>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PatternArg {
    Diamond,
    CubicDiamond,
    Necklace,
    #[value(name = "2necklace")]
    TwoNecklace,
    Blossom,
    #[value(name = "2blossom")]
    TwoBlossom,
    #[value(name = "2terminal-diamond")]
    TwoTerminalDiamond,
    #[value(name = "2terminal-blossom")]
    TwoTerminalBlossom,
    Invariant,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Necklace,
    NecklaceRing,
    Blossom,
    G7,
    Q3,
    Flower,
    Flowerbed,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    G7,
    Q3,
    Flowerbed,
    #[value(name = "theorem1-sample")]
    LowerBoundSample,
}

/// Runs the tool and returns the process exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_graph(path: &str, stdin: &mut dyn Read) -> Result<Graph> {
    let mut buf = Vec::new();
    if path == "-" {
        stdin.read_to_end(&mut buf).map_err(|e| Error::Argument(format!("reading stdin: {e}")))?;
    } else {
        buf = std::fs::read(path).map_err(|e| Error::Argument(format!("{path}: {e}")))?;
    }
    parse_graph(&buf)
}

fn write_target(path: Option<&str>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        None | Some("-") => out.write_all(text.as_bytes()).map_err(io_err),
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Argument(format!("{p}: {e}"))),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Argument(format!("output: {e}"))
}

fn one_based(t: &[(usize, usize)]) -> Vec<[usize; 2]> {
    t.iter().map(|&(u, v)| [u.min(v) + 1, u.max(v) + 1]).collect()
}

fn tree_text(t: &TreeEdges) -> String {
    let mut s = String::new();
    for [u, v] in one_based(t) {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json")).map_err(io_err)
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve { k, input, witness, stats, json, threads } => {
            if k < 1 {
                return Err(Error::Argument("k must be at least 1".into()));
            }
            let g = read_graph(&input, stdin)?;
            let v = fpt_decide_with(&g, k, FptOptions { threads, witness })?;
            let code = if v.answer == Answer::Yes { 0 } else { 1 };
            if json {
                let mut doc = json!({ "answer": v.answer, "k": k });
                if witness {
                    doc["witness"] = json!(v.witness.as_ref().map(|t| one_based(t)));
                }
                if stats {
                    doc["stats"] = json!(v.stats);
                }
                emit_json(out, &doc)?;
            } else {
                writeln!(out, "{}", if code == 0 { "YES" } else { "NO" }).map_err(io_err)?;
                if witness {
                    if let Some(t) = &v.witness {
                        write!(out, "{}", tree_text(t)).map_err(io_err)?;
                    }
                }
                if stats {
                    writeln!(out, "{}", serde_json::to_string(&v.stats).expect("json")).map_err(io_err)?;
                }
            }
            Ok(code)
        }
        Command::Maximize { input, exact, heuristic: _, cap, json } => {
            let g = read_graph(&input, stdin)?;
            let (leaves, tree, method) = if exact {
                let (l, t) = exact_max_leaves_capped(&g, cap)?;
                (l, t, "exact")
            } else {
                let (t, _) = greedy_spanning_tree(&g)?;
                (leaf_count(&t), t, "heuristic")
            };
            // bound n≥3/3 + 4/3 compared as 3ℓ ≥ n≥3 + 4
            let n3 = g.n_ge3();
            let met = 3 * leaves >= n3 + 4;
            let bound = format!("{}/3", n3 + 4);
            if json {
                emit_json(
                    out,
                    &json!({ "method": method, "leaves": leaves, "bound": bound, "met": met, "tree": one_based(&tree) }),
                )?;
            } else {
                writeln!(out, "c {method}: {leaves} leaves (bound {bound}, met: {met})").map_err(io_err)?;
                write!(out, "{}", tree_text(&tree)).map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Reduce { input, trace, replay, output, json } => {
            let g = read_graph(&input, stdin)?;
            let (h, steps) = match &replay {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("{path}: {e}")))?;
                    let steps = parse_trace(&text)?;
                    let mut h = g.clone();
                    for s in &steps {
                        s.replay(&mut h)?;
                    }
                    (h, steps)
                }
                None => reduce_to_irreducible(&g)?,
            };
            if let Some(path) = &trace {
                let mut lines = String::new();
                for s in &steps {
                    lines.push_str(&serde_json::to_string(&s.shifted(1)).expect("json"));
                    lines.push('\n');
                }
                write_target(Some(path), &lines, out)?;
            }
            if json {
                let steps1: Vec<ReductionStep> = steps.iter().map(|s| s.shifted(1)).collect();
                emit_json(
                    out,
                    &json!({ "n": h.n(), "m": h.m(), "n_ge3": h.n_ge3(), "steps": steps1, "graph": write_graph(&h) }),
                )?;
            } else if trace.as_deref() != Some("-") || output.is_some() {
                write_target(output.as_deref(), &write_graph(&h), out)?;
            }
            Ok(0)
        }
        Command::Detect { pattern, input, json, dot } => {
            let g = read_graph(&input, stdin)?;
            if let PatternArg::Invariant = pattern {
                let v = check_invariant(&g);
                if json {
                    emit_json(out, &shift_verdict(&v))?;
                } else {
                    writeln!(out, "{}", if v.holds { "invariant holds" } else { "invariant violated" }).map_err(io_err)?;
                    if v.violation.is_some() {
                        writeln!(out, "{}", shift_verdict(&v)["violation"]).map_err(io_err)?;
                    }
                }
                return Ok(if v.holds { 0 } else { 1 });
            }
            if !g.is_simple() && !matches!(pattern, PatternArg::Diamond) {
                return Err(Error::Argument("pattern detection needs a simple graph".into()));
            }
            let ms: Vec<PatternMatch> = match pattern {
                PatternArg::Diamond => patterns::find_diamonds(&g),
                PatternArg::CubicDiamond => patterns::find_cubic_diamonds(&g),
                PatternArg::Necklace => patterns::find_necklaces(&g),
                PatternArg::TwoNecklace => patterns::find_2necklaces(&g),
                PatternArg::Blossom => patterns::find_blossoms(&g),
                PatternArg::TwoBlossom => patterns::find_2blossoms(&g),
                PatternArg::TwoTerminalDiamond => patterns::find_2terminal(&g, TwoTerminalKind::Diamond),
                PatternArg::TwoTerminalBlossom => patterns::find_2terminal(&g, TwoTerminalKind::Blossom),
                PatternArg::Invariant => unreachable!(),
            };
            let shifted: Vec<PatternMatch> = ms.iter().map(|m| m.shifted(1)).collect();
            if dot {
                let mut marked: Vec<_> = ms.iter().flat_map(|m| m.vertices.iter().copied()).collect();
                marked.sort_unstable();
                marked.dedup();
                write!(out, "{}", to_dot(&g, &marked)).map_err(io_err)?;
            } else if json {
                let doc = if shifted.len() == 1 { json!(shifted[0]) } else { json!(shifted) };
                emit_json(out, &doc)?;
            } else {
                for m in &shifted {
                    writeln!(out, "{} {:?} terminals {:?}", m.kind, m.vertices, m.terminals).map_err(io_err)?;
                }
                writeln!(out, "c {} match(es)", shifted.len()).map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Suppress { input, json } => {
            let g = read_graph(&input, stdin)?;
            let s = suppress(&g)?;
            let edges: Vec<serde_json::Value> = s
                .edges
                .iter()
                .map(|e| {
                    json!({
                        "u": e.u + 1,
                        "v": e.v + 1,
                        "internal": e.internal.iter().map(|x| x + 1).collect::<Vec<_>>(),
                        "cost": e.cost(),
                    })
                })
                .collect();
            if json {
                let vs: Vec<usize> = s.vertices.iter().map(|v| v + 1).collect();
                emit_json(out, &json!({ "vertices": vs, "edges": edges }))?;
            } else {
                writeln!(out, "c S(G): {} vertices, {} edges", s.vertices.len(), s.edges.len()).map_err(io_err)?;
                for e in &s.edges {
                    writeln!(out, "s {} {} internal {} cost {}", e.u + 1, e.v + 1, e.internal_count(), e.cost())
                        .map_err(io_err)?;
                }
            }
            Ok(0)
        }
        Command::Generate { family, param, seed, min_degree, output } => {
            let need = |what: &str| param.ok_or_else(|| Error::Argument(format!("--param {what} is required")));
            let spec = match family {
                FamilyArg::Necklace => FamilySpec::Necklace { k: need("k")? },
                FamilyArg::NecklaceRing => FamilySpec::NecklaceRing { k: need("k")? },
                FamilyArg::Blossom => FamilySpec::Blossom,
                FamilyArg::G7 => FamilySpec::G7,
                FamilyArg::Q3 => FamilySpec::Q3,
                FamilyArg::Flower => FamilySpec::Flower,
                FamilyArg::Flowerbed => FamilySpec::Flowerbed { i: need("i")? },
                FamilyArg::Random => FamilySpec::Random { n: need("n")?, min_degree, seed },
            };
            let g = generators::generate(spec)?;
            write_target(output.as_deref(), &write_graph(&g), out)?;
            Ok(0)
        }
        Command::Verify { check, json } => {
            let checks = if check.is_empty() {
                vec![CheckArg::G7, CheckArg::Q3, CheckArg::Flowerbed, CheckArg::LowerBoundSample]
            } else {
                check
            };
            let mut results = Vec::new();
            for c in checks {
                let (name, outcome) = run_check(c);
                results.push((name, outcome));
            }
            let all_ok = results.iter().all(|(_, r)| r.is_ok());
            if json {
                let doc: Vec<serde_json::Value> = results
                    .iter()
                    .map(|(n, r)| json!({ "check": n, "pass": r.is_ok(), "detail": r.clone().unwrap_or_else(|e| e) }))
                    .collect();
                emit_json(out, &json!(doc))?;
            } else {
                for (n, r) in &results {
                    match r {
                        Ok(d) => writeln!(out, "PASS {n}: {d}"),
                        Err(d) => writeln!(out, "FAIL {n}: {d}"),
                    }
                    .map_err(io_err)?;
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

fn shift_verdict(v: &patterns::InvariantVerdict) -> serde_json::Value {
    use patterns::Violation;
    let shift = |c: &[usize]| c.iter().map(|x| x + 1).collect::<Vec<_>>();
    let viol = v.violation.as_ref().map(|viol| match viol {
        Violation::ComponentWithoutGoober { component } => {
            json!({ "clause": "component-without-goober", "component": shift(component) })
        }
        Violation::NotSimple { component } => json!({ "clause": "not-simple", "component": shift(component) }),
        Violation::TwoNecklace { witness } => json!({ "clause": "two-necklace", "witness": witness.shifted(1) }),
        Violation::TwoBlossom { witness } => json!({ "clause": "two-blossom", "witness": witness.shifted(1) }),
    });
    json!({ "holds": v.holds, "violation": viol })
}

/// Parses a JSON-lines trace written with 1-based ids.
pub fn parse_trace(text: &str) -> Result<Vec<ReductionStep>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let s: ReductionStep =
                serde_json::from_str(l).map_err(|e| Error::Trace(format!("line {}: {e}", i + 1)))?;
            let all = s.roles.iter().chain(&s.removed_vertices).chain(&s.added_vertices);
            if all.chain(s.removed_edges.iter().chain(&s.added_edges).flat_map(|(a, b)| [a, b])).any(|&v| v == 0) {
                return Err(Error::Trace(format!("line {}: ids are 1-based", i + 1)));
            }
            Ok(s.shifted(-1))
        })
        .collect()
}

fn run_check(c: CheckArg) -> (&'static str, std::result::Result<String, String>) {
    match c {
        CheckArg::G7 => ("g7", check_g7()),
        CheckArg::Q3 => ("q3", check_q3()),
        CheckArg::Flowerbed => ("flowerbed", check_flowerbed()),
        CheckArg::LowerBoundSample => ("theorem1-sample", check_lower_bound_sample(40)),
    }
}

fn check_g7() -> std::result::Result<String, String> {
    let g = generators::g7();
    let (l, _) = exact_max_leaves_capped(&g, DEFAULT_CAP).map_err(|e| e.to_string())?;
    if l != 4 {
        return Err(format!("optimum {l}, expected 4"));
    }
    let high: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 4).collect();
    let mut deleted = 0;
    for (i, &a) in high.iter().enumerate() {
        for &b in &high[i + 1..] {
            if !g.has_edge(a, b) {
                continue;
            }
            let mut h = g.clone();
            h.remove_edge_between(a, b).map_err(|e| e.to_string())?;
            if patterns::find_2blossoms(&h).is_empty() {
                return Err(format!("deleting {}-{} leaves no 2-blossom", a + 1, b + 1));
            }
            deleted += 1;
        }
    }
    if deleted != 3 {
        return Err(format!("{deleted} edges among degree-4 vertices, expected 3"));
    }
    Ok("optimum 4; each of 3 deletions yields a 2-blossom".into())
}

fn check_q3() -> std::result::Result<String, String> {
    let (l, _) = exact_max_leaves_capped(&generators::q3(), DEFAULT_CAP).map_err(|e| e.to_string())?;
    if l == 4 {
        Ok("optimum 4".into())
    } else {
        Err(format!("optimum {l}, expected 4"))
    }
}

fn check_flowerbed() -> std::result::Result<String, String> {
    let g = generators::flowerbed(2).map_err(|e| e.to_string())?;
    let opts = FptOptions { threads: None, witness: false };
    let yes = fpt_decide_with(&g, 10, opts).map_err(|e| e.to_string())?;
    let no = fpt_decide_with(&g, 11, opts).map_err(|e| e.to_string())?;
    if yes.answer == Answer::Yes && no.answer == Answer::No {
        Ok(format!("R_2 (n = {}): 10 leaves possible, 11 not", g.n()))
    } else {
        Err(format!("k=10 -> {:?}, k=11 -> {:?}", yes.answer, no.answer))
    }
}

/// Samples invariant-satisfying graphs and compares the optimum with the bound.
pub fn check_lower_bound_sample(count: u64) -> std::result::Result<String, String> {
    for seed in 0..count {
        let n = 6 + (seed as usize % 9);
        let min_degree = if seed % 2 == 0 { 3 } else { 1 };
        let g = generators::random_invariant_graph(n, min_degree, seed).map_err(|e| e.to_string())?;
        let (l, _) = exact_max_leaves_capped(&g, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let plus = if g.min_degree().unwrap_or(0) >= 3 { 4 } else { 6 };
        if 3 * l < g.n_ge3() + plus {
            let extra = if plus == 6 { "2" } else { "4/3" };
            return Err(format!("seed {seed}: {l} leaves < n≥3/3 + {extra}"));
        }
    }
    Ok(format!("{count} graphs meet the bound"))
}

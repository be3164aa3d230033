use super::{Graph, VertexId};
use crate::error::{Error, Result};
use std::fmt::Write as _;

/// Parses the DIMACS-like text format: `c` comments, one `p <n> <m>` header,
/// then `e <u> <v>` lines with 1-based ids. Library ids are `id - 1`.
pub fn parse_graph(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse { line: 0, message: e.to_string() })?;
    let mut header: Option<(usize, usize)> = None;
    let mut g = Graph::new();
    let mut seen_edges = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        let perr = |message: &str| Error::Parse { line, message: message.to_string() };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(perr("duplicate header"));
                }
                let rest: Vec<&str> = toks.collect();
                // tolerate a format word such as "p edge 5 7"
                let nums: Vec<&str> = match rest.len() {
                    2 => rest,
                    3 if rest[0].parse::<usize>().is_err() => rest[1..].to_vec(),
                    _ => return Err(perr("header must be `p <n> <m>`")),
                };
                let n = nums[0].parse::<usize>().map_err(|_| perr("bad vertex count"))?;
                let m = nums[1].parse::<usize>().map_err(|_| perr("bad edge count"))?;
                header = Some((n, m));
                g = Graph::with_vertices(n);
            }
            "e" => {
                let Some((n, _)) = header else { return Err(perr("edge before header")) };
                let ends: Vec<&str> = toks.collect();
                if ends.len() != 2 {
                    return Err(perr("edge line must be `e <u> <v>`"));
                }
                let mut ids = [0usize; 2];
                for (slot, t) in ids.iter_mut().zip(&ends) {
                    let x = t.parse::<i64>().map_err(|_| perr("bad vertex id"))?;
                    if x < 1 || x as usize > n {
                        return Err(Error::VertexRange { line, vertex: x, n });
                    }
                    *slot = x as usize - 1;
                }
                if ids[0] == ids[1] {
                    return Err(Error::LoopInInput { line });
                }
                g.add_edge(ids[0], ids[1])?;
                seen_edges += 1;
            }
            other => return Err(perr(&format!("unknown line type `{other}`"))),
        }
    }
    let Some((_, m)) = header else {
        return Err(Error::Parse { line: 0, message: "missing `p` header".into() });
    };
    if seen_edges != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header announces {m} edges but {seen_edges} were given"),
        });
    }
    Ok(g)
}

/// Serialises in the text format. Live vertices are renumbered `1..n` in id order.
pub fn write_graph(g: &Graph) -> String {
    let mut map = vec![0usize; g.id_bound()];
    for (i, v) in g.vertices().enumerate() {
        map[v] = i + 1;
    }
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (_, u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", map[u], map[v]);
    }
    out
}

/// Graphviz export with 1-based node names; one `--` line per edge so parallel edges stay visible.
pub fn to_dot(g: &Graph, highlight: &[VertexId]) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if highlight.contains(&v) {
            let _ = writeln!(out, "  {} [style=filled, fillcolor=lightblue];", v + 1);
        } else {
            let _ = writeln!(out, "  {};", v + 1);
        }
    }
    for (_, u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

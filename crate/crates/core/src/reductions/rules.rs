//! Rule templates: where each rule matches and what it rewrites.
//!
//! Role vectors list the matched vertices in a fixed order per rule. "Black"
//! below means degree exactly 3 and a goober has degree at most 2.

use super::RuleId;
use crate::graph::{bridges_and_cut_vertices, Graph, VertexId};
use crate::patterns::{find_2terminal_blossoms, find_2terminal_diamonds};

/// One endpoint of an added edge: an existing vertex or the i-th new vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Old(VertexId),
    New(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    pub remove_vertices: Vec<VertexId>,
    /// Edges removed between surviving vertices.
    pub remove_edges: Vec<(VertexId, VertexId)>,
    pub new_vertices: usize,
    pub add_edges: Vec<(End, End)>,
}

fn black(g: &Graph, v: VertexId) -> bool {
    g.degree(v) == 3
}

/// Distinct neighbours when `v` has no parallel edges or loops.
fn simple_nbrs(g: &Graph, v: VertexId) -> Option<Vec<VertexId>> {
    let ns = g.neighbor_set(v);
    (ns.len() == g.degree(v)).then_some(ns)
}

/// The single neighbour of `v` outside `known`, when `N(v) = known ∪ {x}`.
fn third(g: &Graph, v: VertexId, known: &[VertexId]) -> Option<VertexId> {
    let ns = simple_nbrs(g, v)?;
    if ns.len() != known.len() + 1 || known.iter().any(|k| !ns.contains(k)) {
        return None;
    }
    ns.into_iter().find(|x| !known.contains(x))
}

fn distinct(vs: &[VertexId]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Checks that `roles` still fit the template of `rule`; returns a reason otherwise.
pub fn check_template(g: &Graph, rule: RuleId, r: &[VertexId]) -> Result<(), String> {
    let need = role_count(rule);
    if r.len() != need {
        return Err(format!("expected {need} roles, got {}", r.len()));
    }
    if let Some(v) = r.iter().find(|&&v| !g.contains(v)) {
        return Err(format!("vertex {v} is absent"));
    }
    let ok = match rule {
        RuleId::L1 | RuleId::L6 => {
            let [gb, u, v, a, b] = [r[0], r[1], r[2], r[3], r[4]];
            let same = rule == RuleId::L6;
            g.degree(gb) == 2
                && third(g, gb, &[u]) == Some(v)
                && black(g, u)
                && black(g, v)
                && third(g, u, &[gb, v]) == Some(a)
                && third(g, v, &[gb, u]) == Some(b)
                && distinct(&[gb, u, v, a])
                && distinct(&[gb, u, v, b])
                && if same { a == b && g.degree(a) > 2 } else { a != b || g.degree(a) <= 2 }
        }
        RuleId::L2 => {
            let [u, v] = [r[0], r[1]];
            u != v && g.has_edge(u, v) && g.degree(u) <= 2 && g.degree(v) <= 2
        }
        RuleId::L3 | RuleId::L5 => {
            let [u, v, g1, g2, a, b] = [r[0], r[1], r[2], r[3], r[4], r[5]];
            let same = rule == RuleId::L5;
            distinct(&[u, v, g1, g2])
                && black(g, u)
                && black(g, v)
                && !g.has_edge(u, v)
                && g.degree(g1) == 2
                && g.degree(g2) == 2
                && third(g, g1, &[u]) == Some(v)
                && third(g, g2, &[u]) == Some(v)
                && third(g, u, &[g1, g2]) == Some(a)
                && third(g, v, &[g1, g2]) == Some(b)
                && ![u, v, g1, g2].contains(&a)
                && ![u, v, g1, g2].contains(&b)
                && if same { a == b && g.degree(a) > 2 } else { a != b || g.degree(a) <= 2 }
        }
        RuleId::L4 => {
            let [gb, x, y, p, w] = [r[0], r[1], r[2], r[3], r[4]];
            distinct(&[gb, x, y, p, w])
                && g.degree(gb) == 2
                && third(g, gb, &[x]) == Some(y)
                && black(g, x)
                && black(g, y)
                && black(g, p)
                && third(g, x, &[gb, y]) == Some(p)
                && third(g, y, &[gb, x]) == Some(p)
                && third(g, p, &[x, y]) == Some(w)
        }
        RuleId::L7 => {
            let [u, v, t1, t2, t3, a, b, c] = [r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7]];
            distinct(&[u, v, t1, t2, t3, a, b, c])
                && black(g, u)
                && black(g, v)
                && [t1, t2, t3].iter().all(|&t| black(g, t))
                && third(g, u, &[t1, t2]) == Some(t3)
                && third(g, v, &[t1, t2]) == Some(t3)
                && third(g, t1, &[u, v]) == Some(a)
                && third(g, t2, &[u, v]) == Some(b)
                && third(g, t3, &[u, v]) == Some(c)
        }
        RuleId::R1 => {
            let [v, x, y, p, w] = [r[0], r[1], r[2], r[3], r[4]];
            distinct(&[v, x, y, p, w])
                && g.degree(v) >= 4
                && black(g, x)
                && black(g, y)
                && black(g, p)
                && third(g, x, &[v, y]) == Some(p)
                && third(g, y, &[v, x]) == Some(p)
                && third(g, p, &[x, y]) == Some(w)
                && g.multiplicity(v, x) == 1
                && g.multiplicity(v, y) == 1
        }
        RuleId::R2 => {
            let [u, x, y, v] = [r[0], r[1], r[2], r[3]];
            distinct(&[u, x, y, v])
                && g.degree(u) >= 4
                && g.degree(v) >= 4
                && black(g, x)
                && black(g, y)
                && third(g, x, &[u, y]) == Some(v)
                && third(g, y, &[u, x]) == Some(v)
        }
        RuleId::R3 => r3_template(g, r),
        RuleId::R4 => {
            let [v, p1, q1, r1, s1, p, q, rr, s] = [r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8]];
            distinct(&[v, p1, q1, r1, s1, p, q, rr, s])
                && g.degree(v) == 4
                && simple_nbrs(g, v).is_some()
                && [p1, q1, r1, s1].iter().all(|&x| black(g, x))
                && third(g, p1, &[v, q1]) == Some(p)
                && third(g, q1, &[v, p1]) == Some(q)
                && third(g, r1, &[v, s1]) == Some(rr)
                && third(g, s1, &[v, r1]) == Some(s)
        }
        RuleId::R5 => {
            let [u, v] = [r[0], r[1]];
            u != v && g.multiplicity(u, v) == 1 && g.degree(u) >= 4 && g.degree(v) >= 4
        }
        RuleId::F1 => {
            let [u, x, y, v] = [r[0], r[1], r[2], r[3]];
            distinct(&[u, x, y, v])
                && black(g, x)
                && black(g, y)
                && third(g, x, &[u, y]) == Some(v)
                && third(g, y, &[u, x]) == Some(v)
                && g.degree(u) > 2
                && g.degree(v) > 2
        }
        RuleId::F2 => find_2terminal_blossoms(g).iter().any(|m| m.vertices == r),
    };
    if ok {
        Ok(())
    } else {
        Err("roles do not fit the template".into())
    }
}

pub fn role_count(rule: RuleId) -> usize {
    match rule {
        RuleId::L1 | RuleId::L6 => 5,
        RuleId::L2 | RuleId::R5 => 2,
        RuleId::L3 | RuleId::L5 => 6,
        RuleId::L4 | RuleId::R1 => 5,
        RuleId::L7 => 8,
        RuleId::R2 | RuleId::F1 => 4,
        RuleId::R3 => R3_ROLES,
        RuleId::R4 => 9,
        RuleId::F2 => 7,
    }
}

/// All role vectors fitting the template, in canonical order.
pub fn find_matches(g: &Graph, rule: RuleId) -> Vec<Vec<VertexId>> {
    let mut out: Vec<Vec<VertexId>> = match rule {
        RuleId::L1 | RuleId::L6 => goober_triangles(g),
        RuleId::L2 => {
            let mut v: Vec<Vec<VertexId>> = g
                .edges()
                .filter(|&(_, a, b)| a != b && g.degree(a) <= 2 && g.degree(b) <= 2)
                .map(|(_, a, b)| vec![a.min(b), a.max(b)])
                .collect();
            v.dedup();
            v
        }
        RuleId::L3 | RuleId::L5 => goober_squares(g),
        RuleId::L4 => goober_tipped_diamonds(g),
        RuleId::L7 => k23s(g),
        RuleId::R1 => diamonds_with_black_tip(g),
        RuleId::R2 => inner_pairs(g)
            .into_iter()
            .filter(|r| g.degree(r[0]) >= 4 && g.degree(r[3]) >= 4)
            .collect(),
        RuleId::R3 => r3_matches(g),
        RuleId::R4 => bow_ties(g),
        RuleId::R5 => {
            let bridges = bridges_and_cut_vertices(g).bridges;
            g.edges()
                .filter(|&(e, a, b)| a != b && g.degree(a) >= 4 && g.degree(b) >= 4 && !bridges.contains(&e))
                .map(|(_, a, b)| vec![a.min(b), a.max(b)])
                .collect()
        }
        RuleId::F1 => find_2terminal_diamonds(g).into_iter().map(|m| m.vertices).collect(),
        RuleId::F2 => find_2terminal_blossoms(g).into_iter().map(|m| m.vertices).collect(),
    };
    out.retain(|r| check_template(g, rule, r).is_ok());
    out.sort();
    out.dedup();
    out
}

fn goober_triangles(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for gb in g.vertices().filter(|&v| g.degree(v) == 2) {
        let ns = g.neighbor_set(gb);
        if ns.len() != 2 {
            continue;
        }
        let (u, v) = (ns[0], ns[1]);
        if let (Some(a), Some(b)) = (third(g, u, &[gb, v]), third(g, v, &[gb, u])) {
            out.push(vec![gb, u, v, a, b]);
        }
    }
    out
}

fn goober_squares(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for g1 in g.vertices().filter(|&v| g.degree(v) == 2) {
        let ns = g.neighbor_set(g1);
        if ns.len() != 2 {
            continue;
        }
        let (u, v) = (ns[0], ns[1]);
        for g2 in g.neighbor_set(u) {
            if g2 <= g1 || g.degree(g2) != 2 || g.neighbor_set(g2) != ns {
                continue;
            }
            if let (Some(a), Some(b)) = (third(g, u, &[g1, g2]), third(g, v, &[g1, g2])) {
                out.push(vec![u, v, g1, g2, a, b]);
            }
        }
    }
    out
}

fn goober_tipped_diamonds(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for gb in g.vertices().filter(|&v| g.degree(v) == 2) {
        let ns = g.neighbor_set(gb);
        if ns.len() != 2 {
            continue;
        }
        let (x, y) = (ns[0], ns[1]);
        if let Some(p) = third(g, x, &[gb, y]) {
            if let Some(w) = third(g, p, &[x, y]) {
                out.push(vec![gb, x, y, p, w]);
            }
        }
    }
    out
}

fn k23s(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for u in g.vertices().filter(|&v| black(g, v)) {
        let Some(ts) = simple_nbrs(g, u) else { continue };
        for v in g.neighbor_set(ts[0]) {
            if v <= u || !black(g, v) || g.neighbor_set(v) != ts {
                continue;
            }
            let outs: Vec<Option<VertexId>> = ts.iter().map(|&t| third(g, t, &[u, v])).collect();
            if let [Some(a), Some(b), Some(c)] = outs[..] {
                out.push(vec![u, v, ts[0], ts[1], ts[2], a, b, c]);
            }
        }
    }
    out
}

/// Diamonds `[tip, x, y, tip]` whose inner vertices are black and see only the diamond.
fn inner_pairs(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for (_, x, y) in g.edges() {
        let (x, y) = (x.min(y), x.max(y));
        if x == y || !black(g, x) || !black(g, y) {
            continue;
        }
        let Some(nx) = simple_nbrs(g, x) else { continue };
        let Some(ny) = simple_nbrs(g, y) else { continue };
        let tx: Vec<VertexId> = nx.into_iter().filter(|&z| z != y).collect();
        let ty: Vec<VertexId> = ny.into_iter().filter(|&z| z != x).collect();
        if tx.len() == 2 && tx == ty {
            out.push(vec![tx[0], x, y, tx[1]]);
            out.push(vec![tx[1], x, y, tx[0]]);
        }
    }
    out
}

fn diamonds_with_black_tip(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for r in inner_pairs(g) {
        let [v, x, y, p] = [r[0], r[1], r[2], r[3]];
        if g.degree(v) >= 4 {
            if let Some(w) = third(g, p, &[x, y]) {
                out.push(vec![v, x, y, p, w]);
            }
        }
    }
    out
}

fn bow_ties(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 4) {
        let Some(ns) = simple_nbrs(g, v) else { continue };
        // the three ways to split four neighbours into two pairs
        for (i, j, k, l) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
            let (p1, q1, r1, s1) = (ns[i], ns[j], ns[k], ns[l]);
            let outs = [third(g, p1, &[v, q1]), third(g, q1, &[v, p1]), third(g, r1, &[v, s1]), third(g, s1, &[v, r1])];
            if let [Some(p), Some(q), Some(r), Some(s)] = outs {
                out.push(vec![v, p1, q1, r1, s1, p, q, r, s]);
            }
        }
    }
    out
}

pub const R3_ROLES: usize = 5;

/// Triangle `[w, x, y, u, v]` with apex `w` and black `x`, `y`, where `x ~ u` and
/// `y ~ v` leave the triangle. The rewrite replaces `x`, `y` by the edge `wu`.
fn r3_template(g: &Graph, r: &[VertexId]) -> bool {
    let [w, x, y, u, v] = [r[0], r[1], r[2], r[3], r[4]];
    distinct(&[w, x, y, u, v])
        && g.degree(w) >= 3
        && black(g, x)
        && black(g, y)
        && third(g, x, &[w, y]) == Some(u)
        && third(g, y, &[w, x]) == Some(v)
        && g.multiplicity(w, x) == 1
        && g.multiplicity(w, y) == 1
        && !g.has_edge(w, u)
}

fn r3_matches(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) >= 3) {
        let ns = g.neighbor_set(v);
        for &x in &ns {
            for &y in &ns {
                if x >= y || !g.has_edge(x, y) {
                    continue;
                }
                for (a, b) in [(x, y), (y, x)] {
                    if let (Some(u), Some(w)) = (third(g, a, &[v, b]), third(g, b, &[v, a])) {
                        out.push(vec![v, a, b, u, w]);
                    }
                }
            }
        }
    }
    out
}

/// The rewrite action of `rule` on matched roles.
pub fn rewrite(rule: RuleId, r: &[VertexId]) -> Rewrite {
    use End::{New, Old};
    let rw = |remove_vertices: Vec<VertexId>, new_vertices: usize, add_edges: Vec<(End, End)>| Rewrite {
        remove_vertices,
        remove_edges: Vec::new(),
        new_vertices,
        add_edges,
    };
    match rule {
        RuleId::L1 => rw(vec![r[0], r[1], r[2]], 1, vec![(New(0), Old(r[3])), (New(0), Old(r[4]))]),
        RuleId::L6 => rw(vec![r[0], r[1], r[2]], 1, vec![(New(0), Old(r[3]))]),
        RuleId::L2 => Rewrite {
            remove_vertices: vec![],
            remove_edges: vec![(r[0], r[1])],
            new_vertices: 0,
            add_edges: vec![],
        },
        RuleId::L3 => rw(vec![r[0], r[1], r[2], r[3]], 1, vec![(New(0), Old(r[4])), (New(0), Old(r[5]))]),
        RuleId::L5 => rw(vec![r[0], r[1], r[2], r[3]], 2, vec![(New(0), Old(r[4])), (New(1), Old(r[5]))]),
        RuleId::L4 => rw(vec![r[0], r[1], r[2], r[3]], 1, vec![(New(0), Old(r[4]))]),
        RuleId::L7 => rw(
            vec![r[0], r[1]],
            0,
            vec![(Old(r[2]), Old(r[3])), (Old(r[3]), Old(r[4])), (Old(r[2]), Old(r[4]))],
        ),
        RuleId::R1 => rw(vec![r[1], r[2], r[3]], 1, vec![(New(0), Old(r[0])), (New(0), Old(r[4]))]),
        RuleId::R2 | RuleId::F1 => rw(vec![r[1], r[2]], 1, vec![(New(0), Old(r[0])), (New(0), Old(r[3]))]),
        RuleId::R3 => rw(vec![r[1], r[2]], 0, vec![(Old(r[0]), Old(r[3]))]),
        RuleId::R4 => rw(
            vec![r[0], r[1], r[2], r[3], r[4]],
            2,
            vec![(New(0), Old(r[5])), (New(0), Old(r[6])), (New(1), Old(r[7])), (New(1), Old(r[8]))],
        ),
        RuleId::R5 => Rewrite {
            remove_vertices: vec![],
            remove_edges: vec![(r[0], r[1])],
            new_vertices: 0,
            add_edges: vec![],
        },
        // a 5-cycle through c1 and c2: c1-g-c2 and c1-h1-h2-c2
        RuleId::F2 => rw(
            vec![r[0], r[1], r[2], r[3], r[4]],
            3,
            vec![
                (Old(r[5]), New(0)),
                (New(0), Old(r[6])),
                (Old(r[5]), New(1)),
                (New(1), New(2)),
                (New(2), Old(r[6])),
            ],
        ),
    }
}

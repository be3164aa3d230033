//! Detection of the forbidden structures and the invariant check built on them.

use crate::graph::{connected_components, Graph, VertexId};
use serde::{Serialize, Serializer};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    Diamond,
    CubicDiamond,
    Necklace(usize),
    TwoNecklace(usize),
    Blossom,
    TwoBlossom,
    TwoTerminalDiamond,
    TwoTerminalBlossom,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Diamond => write!(f, "diamond"),
            PatternKind::CubicDiamond => write!(f, "cubic-diamond"),
            PatternKind::Necklace(k) => write!(f, "necklace({k})"),
            PatternKind::TwoNecklace(k) => write!(f, "2-necklace({k})"),
            PatternKind::Blossom => write!(f, "blossom"),
            PatternKind::TwoBlossom => write!(f, "2-blossom"),
            PatternKind::TwoTerminalDiamond => write!(f, "2-terminal-diamond"),
            PatternKind::TwoTerminalBlossom => write!(f, "2-terminal-blossom"),
        }
    }
}

impl Serialize for PatternKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A located structure. `vertices` follow the canonical role order of the kind:
/// diamonds `[tip, inner, inner, tip]`; necklaces `[c1, x1, y1, t1, x2, y2, t2, .., c2]`;
/// blossoms `[b, a1, a2, a3, a4, c1, c2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PatternMatch {
    pub kind: PatternKind,
    pub vertices: Vec<VertexId>,
    pub terminals: Vec<VertexId>,
}

impl PatternMatch {
    /// Copy with every id shifted by `offset`, for 1-based output.
    pub fn shifted(&self, offset: usize) -> PatternMatch {
        PatternMatch {
            kind: self.kind,
            vertices: self.vertices.iter().map(|v| v + offset).collect(),
            terminals: self.terminals.iter().map(|v| v + offset).collect(),
        }
    }

    /// Structure edges implied by the role order.
    pub fn structure_edges(&self) -> Vec<(VertexId, VertexId)> {
        let v = &self.vertices;
        match self.kind {
            PatternKind::Diamond | PatternKind::CubicDiamond | PatternKind::TwoTerminalDiamond => {
                diamond_edges(v[0], v[1], v[2], v[3]).to_vec()
            }
            PatternKind::Necklace(k) | PatternKind::TwoNecklace(k) => {
                let mut es = Vec::new();
                for i in 0..k {
                    let base = 3 * i;
                    es.extend(diamond_edges(v[base], v[base + 1], v[base + 2], v[base + 3]));
                }
                es
            }
            PatternKind::Blossom | PatternKind::TwoBlossom | PatternKind::TwoTerminalBlossom => {
                blossom_edges(&[v[0], v[1], v[2], v[3], v[4], v[5], v[6]]).to_vec()
            }
        }
    }
}

fn diamond_edges(p: VertexId, x: VertexId, y: VertexId, q: VertexId) -> [(VertexId, VertexId); 5] {
    [(p, x), (p, y), (x, y), (x, q), (y, q)]
}

/// Canonical blossom wiring over roles `[b, a1, a2, a3, a4, c1, c2]`.
pub fn blossom_edges(r: &[VertexId; 7]) -> [(VertexId, VertexId); 10] {
    let [b, a1, a2, a3, a4, c1, c2] = *r;
    [(b, a1), (b, a2), (b, a3), (b, a4), (a1, a2), (a3, a4), (c1, a1), (c1, a4), (c2, a2), (c2, a3)]
}

/// Re-verifies a match edge by edge against `g`, including the terminal conditions of its kind.
pub fn verify_match(g: &Graph, m: &PatternMatch) -> bool {
    let vs = &m.vertices;
    if vs.iter().any(|&v| !g.contains(v)) {
        return false;
    }
    let distinct: HashSet<_> = vs.iter().collect();
    if distinct.len() != vs.len() {
        return false;
    }
    let es = m.structure_edges();
    if es.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let mut dh = std::collections::HashMap::new();
    for &(u, v) in &es {
        *dh.entry(u).or_insert(0usize) += 1;
        *dh.entry(v).or_insert(0usize) += 1;
    }
    let terminals: Vec<VertexId> = vs.iter().copied().filter(|&v| dh[&v] < g.degree(v)).collect();
    let mut t_sorted = terminals.clone();
    t_sorted.sort_unstable();
    let mut claimed = m.terminals.clone();
    claimed.sort_unstable();
    if t_sorted != claimed {
        return false;
    }
    match m.kind {
        PatternKind::Diamond => !g.has_edge(vs[0], vs[3]),
        PatternKind::CubicDiamond => !g.has_edge(vs[0], vs[3]) && vs.iter().all(|&v| g.degree(v) == 3),
        PatternKind::TwoTerminalDiamond => claimed == sorted2(vs[0], vs[3]),
        PatternKind::Necklace(_) => true,
        PatternKind::TwoNecklace(_) | PatternKind::TwoBlossom => {
            let (c1, c2) = if matches!(m.kind, PatternKind::TwoBlossom) {
                (vs[5], vs[6])
            } else {
                (vs[0], vs[vs.len() - 1])
            };
            claimed == sorted2(c1, c2) && g.degree(c1) == 3 && g.degree(c2) == 3
        }
        PatternKind::Blossom => true,
        PatternKind::TwoTerminalBlossom => claimed == sorted2(vs[5], vs[6]),
    }
}

fn sorted2(a: VertexId, b: VertexId) -> Vec<VertexId> {
    vec![a.min(b), a.max(b)]
}

fn common_neighbors(g: &Graph, x: VertexId, y: VertexId) -> Vec<VertexId> {
    let ny = g.neighbor_set(y);
    g.neighbor_set(x).into_iter().filter(|v| *v != y && ny.binary_search(v).is_ok()).collect()
}

/// Vertices within distance `r` of `seeds`.
pub fn ball(g: &Graph, seeds: &[VertexId], r: usize) -> Vec<bool> {
    let mut dist = vec![usize::MAX; g.id_bound()];
    let mut frontier: Vec<VertexId> = Vec::new();
    for &s in seeds {
        if g.contains(s) && dist[s] == usize::MAX {
            dist[s] = 0;
            frontier.push(s);
        }
    }
    for d in 1..=r {
        let mut next = Vec::new();
        for v in frontier {
            for u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = d;
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    dist.into_iter().map(|d| d != usize::MAX).collect()
}

/// All induced K4−e subgraphs, as `[p, x, y, q]` with inner `x < y` and tips `p < q`.
pub fn find_diamonds(g: &Graph) -> Vec<PatternMatch> {
    diamonds_where(g, None, |_, _| true, PatternKind::Diamond)
}

fn diamonds_where(
    g: &Graph,
    near: Option<&[bool]>,
    keep: impl Fn(&Graph, [VertexId; 4]) -> bool,
    kind: PatternKind,
) -> Vec<PatternMatch> {
    let mut out = Vec::new();
    for (e, x, y) in g.edges() {
        let (x, y) = (x.min(y), x.max(y));
        // parallel copies of xy would report the same diamond twice
        if x == y || g.edge_between(x, y) != Some(e) {
            continue;
        }
        if let Some(mask) = near {
            if !mask[x] && !mask[y] {
                continue;
            }
        }
        let cn = common_neighbors(g, x, y);
        for i in 0..cn.len() {
            for j in i + 1..cn.len() {
                let (p, q) = (cn[i], cn[j]);
                if g.has_edge(p, q) {
                    continue;
                }
                if keep(g, [p, x, y, q]) {
                    let terminals = [p, x, y, q].into_iter().filter(|&v| g.degree(v) > diamond_role_degree(v, p, q)).collect();
                    out.push(PatternMatch { kind, vertices: vec![p, x, y, q], terminals });
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn diamond_role_degree(v: VertexId, p: VertexId, q: VertexId) -> usize {
    if v == p || v == q {
        2
    } else {
        3
    }
}

/// Induced diamonds whose four vertices all have degree 3 in `g`.
pub fn find_cubic_diamonds(g: &Graph) -> Vec<PatternMatch> {
    diamonds_where(g, None, |g, vs| vs.iter().all(|&v| g.degree(v) == 3), PatternKind::CubicDiamond)
}

/// A diamond whose inner vertices have no edges leaving it.
#[derive(Debug, Clone, Copy)]
struct Unit {
    p: VertexId,
    x: VertexId,
    y: VertexId,
    q: VertexId,
}

fn units(g: &Graph, near: Option<&[bool]>) -> Vec<Unit> {
    let mut out = Vec::new();
    for (_, x, y) in g.edges() {
        let (x, y) = (x.min(y), x.max(y));
        if x == y || g.degree(x) != 3 || g.degree(y) != 3 || g.multiplicity(x, y) != 1 {
            continue;
        }
        if let Some(mask) = near {
            if !mask[x] && !mask[y] {
                continue;
            }
        }
        let nx: Vec<VertexId> = g.neighbors(x).filter(|&v| v != y).collect();
        let mut ny: Vec<VertexId> = g.neighbors(y).filter(|&v| v != x).collect();
        let mut nx_s = nx.clone();
        nx_s.sort_unstable();
        ny.sort_unstable();
        if nx_s.len() != 2 || nx_s != ny || nx_s[0] == nx_s[1] || nx_s.contains(&x) || nx_s.contains(&y) {
            continue;
        }
        out.push(Unit { p: nx_s[0], x, y, q: nx_s[1] });
    }
    out
}

/// 2-terminal diamonds: diamonds whose inner vertices have degree 3 and whose tips both
/// carry further edges.
pub fn find_2terminal_diamonds(g: &Graph) -> Vec<PatternMatch> {
    let mut out: Vec<PatternMatch> = units(g, None)
        .into_iter()
        .filter(|u| g.degree(u.p) > 2 && g.degree(u.q) > 2 && !tips_share_parallel(g, u))
        .map(|u| PatternMatch {
            kind: PatternKind::TwoTerminalDiamond,
            vertices: vec![u.p, u.x, u.y, u.q],
            terminals: vec![u.p, u.q],
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn tips_share_parallel(g: &Graph, u: &Unit) -> bool {
    g.multiplicity(u.p, u.x) > 1 || g.multiplicity(u.p, u.y) > 1 || g.multiplicity(u.q, u.x) > 1 || g.multiplicity(u.q, u.y) > 1
}

fn chains(g: &Graph, near: Option<&[bool]>) -> Vec<Vec<Unit>> {
    let all = units(g, None);
    // glue vertices: degree 4 and tip of exactly two units
    let mut tip_units: std::collections::HashMap<VertexId, Vec<usize>> = std::collections::HashMap::new();
    for (i, u) in all.iter().enumerate() {
        tip_units.entry(u.p).or_default().push(i);
        tip_units.entry(u.q).or_default().push(i);
    }
    let glue = |t: VertexId| -> Option<&Vec<usize>> {
        let us = tip_units.get(&t)?;
        (g.degree(t) == 4 && us.len() == 2 && us[0] != us[1]).then_some(us)
    };
    let mut seen = vec![false; all.len()];
    let mut out = Vec::new();
    let seeds: Vec<usize> = match near {
        None => (0..all.len()).collect(),
        Some(mask) => (0..all.len())
            .filter(|&i| {
                let u = all[i];
                mask[u.p] || mask[u.x] || mask[u.y] || mask[u.q]
            })
            .collect(),
    };
    for s in seeds {
        if seen[s] {
            continue;
        }
        // walk left from s until the end tip
        let mut cur = s;
        let mut left_tip = all[s].p;
        let mut guard = 0;
        while let Some(us) = glue(left_tip) {
            let nxt = if us[0] == cur { us[1] } else { us[0] };
            if nxt == s || guard > all.len() {
                break;
            }
            guard += 1;
            cur = nxt;
            left_tip = if all[cur].p == left_tip { all[cur].q } else { all[cur].p };
        }
        // now walk right from `cur` starting at `left_tip`
        let mut chain = Vec::new();
        let mut tip = left_tip;
        let start = cur;
        loop {
            let u = all[cur];
            seen[cur] = true;
            let (a, b) = if u.p == tip { (u.p, u.q) } else { (u.q, u.p) };
            chain.push(Unit { p: a, x: u.x, y: u.y, q: b });
            tip = b;
            match glue(tip) {
                Some(us) => {
                    let nxt = if us[0] == cur { us[1] } else { us[0] };
                    if nxt == start || seen[nxt] {
                        break;
                    }
                    cur = nxt;
                }
                None => break,
            }
        }
        let closed = chain.first().map(|u| u.p) == chain.last().map(|u| u.q) && glue(chain[0].p).is_some();
        if !closed {
            out.push(chain);
        }
    }
    out
}

fn necklace_match(chain: &[Unit], kind_of: impl Fn(usize) -> PatternKind, terminals: Vec<VertexId>) -> PatternMatch {
    let mut chain: Vec<Unit> = chain.to_vec();
    if chain[0].p > chain[chain.len() - 1].q {
        chain.reverse();
        for u in chain.iter_mut() {
            std::mem::swap(&mut u.p, &mut u.q);
        }
    }
    let mut vs = vec![chain[0].p];
    for u in &chain {
        vs.push(u.x.min(u.y));
        vs.push(u.x.max(u.y));
        vs.push(u.q);
    }
    let mut terminals = terminals;
    terminals.sort_unstable();
    PatternMatch { kind: kind_of(chain.len()), vertices: vs, terminals }
}

/// Maximal diamond necklaces; terminals are end tips with edges leaving the necklace.
pub fn find_necklaces(g: &Graph) -> Vec<PatternMatch> {
    let mut out: Vec<PatternMatch> = chains(g, None)
        .into_iter()
        .map(|c| {
            let (a, b) = (c[0].p, c[c.len() - 1].q);
            let ts = [a, b].into_iter().filter(|&t| g.degree(t) > 2).collect::<BTreeSet<_>>().into_iter().collect();
            necklace_match(&c, PatternKind::Necklace, ts)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Maximal necklaces whose only terminals are the two end tips, both of degree 3.
pub fn find_2necklaces(g: &Graph) -> Vec<PatternMatch> {
    find_2necklaces_near(g, None)
}

pub fn find_2necklaces_near(g: &Graph, near: Option<&[bool]>) -> Vec<PatternMatch> {
    let mut out: Vec<PatternMatch> = chains(g, near)
        .into_iter()
        .filter(|c| {
            let (a, b) = (c[0].p, c[c.len() - 1].q);
            a != b && g.degree(a) == 3 && g.degree(b) == 3
        })
        .map(|c| {
            let (a, b) = (c[0].p, c[c.len() - 1].q);
            necklace_match(&c, PatternKind::TwoNecklace, vec![a, b])
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The four automorphic relabelings of a blossom role vector.
fn blossom_images(r: [VertexId; 7]) -> [[VertexId; 7]; 4] {
    let [b, a1, a2, a3, a4, c1, c2] = r;
    [
        r,
        [b, a4, a3, a2, a1, c1, c2],
        [b, a2, a1, a4, a3, c2, c1],
        [b, a3, a4, a1, a2, c2, c1],
    ]
}

fn canonical_blossom(r: [VertexId; 7]) -> [VertexId; 7] {
    blossom_images(r).into_iter().min().expect("nonempty")
}

/// Every blossom subgraph centred at a vertex in `centers`, canonicalised.
fn blossoms_at(g: &Graph, centers: impl Iterator<Item = VertexId>) -> BTreeSet<[VertexId; 7]> {
    let mut found = BTreeSet::new();
    for b in centers {
        let nb = g.neighbor_set(b);
        if nb.len() < 4 {
            continue;
        }
        // triangle edges at b
        let mut tri = Vec::new();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    tri.push((nb[i], nb[j]));
                }
            }
        }
        for i in 0..tri.len() {
            for j in i + 1..tri.len() {
                let (s, t) = (tri[i], tri[j]);
                if s.0 == t.0 || s.0 == t.1 || s.1 == t.0 || s.1 == t.1 {
                    continue;
                }
                // c1 joins a1 (first triangle) with a4 (second); c2 joins a2 with a3
                for (a1, a2) in [(s.0, s.1), (s.1, s.0)] {
                    for (a4, a3) in [(t.0, t.1), (t.1, t.0)] {
                        let used = [b, a1, a2, a3, a4];
                        let c1s: Vec<VertexId> =
                            common_neighbors(g, a1, a4).into_iter().filter(|c| !used.contains(c)).collect();
                        let c2s: Vec<VertexId> =
                            common_neighbors(g, a2, a3).into_iter().filter(|c| !used.contains(c)).collect();
                        for &c1 in &c1s {
                            for &c2 in &c2s {
                                if c1 != c2 {
                                    found.insert(canonical_blossom([b, a1, a2, a3, a4, c1, c2]));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    found
}

fn blossom_terminals(g: &Graph, r: &[VertexId; 7]) -> Vec<VertexId> {
    let role_deg = [4, 3, 3, 3, 3, 2, 2];
    let mut ts: Vec<VertexId> = r.iter().zip(role_deg).filter(|&(&v, d)| g.degree(v) > d).map(|(&v, _)| v).collect();
    ts.sort_unstable();
    ts
}

/// All blossom subgraphs with any terminals.
pub fn find_blossoms(g: &Graph) -> Vec<PatternMatch> {
    blossoms_at(g, g.vertices())
        .into_iter()
        .map(|r| PatternMatch { kind: PatternKind::Blossom, vertices: r.to_vec(), terminals: blossom_terminals(g, &r) })
        .collect()
}

fn connectors_only(g: &Graph, r: &[VertexId; 7]) -> bool {
    g.degree(r[0]) == 4 && r[1..5].iter().all(|&a| g.degree(a) == 3) && g.multiplicity(r[1], r[2]) == 1
}

/// Blossoms whose only terminals are c1, c2, both of degree 3.
pub fn find_2blossoms(g: &Graph) -> Vec<PatternMatch> {
    find_2blossoms_near(g, None)
}

pub fn find_2blossoms_near(g: &Graph, near: Option<&[bool]>) -> Vec<PatternMatch> {
    let centers: Vec<VertexId> = g
        .vertices()
        .filter(|&v| g.degree(v) == 4 && near.is_none_or(|m| m[v]))
        .collect();
    blossoms_at(g, centers.into_iter())
        .into_iter()
        .filter(|r| connectors_only(g, r) && g.degree(r[5]) == 3 && g.degree(r[6]) == 3)
        .map(|r| PatternMatch { kind: PatternKind::TwoBlossom, vertices: r.to_vec(), terminals: sorted2(r[5], r[6]) })
        .collect()
}

/// Blossoms whose only terminals are c1, c2, with any degree above 2.
pub fn find_2terminal_blossoms(g: &Graph) -> Vec<PatternMatch> {
    let centers: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 4).collect();
    blossoms_at(g, centers.into_iter())
        .into_iter()
        .filter(|r| connectors_only(g, r) && g.degree(r[5]) > 2 && g.degree(r[6]) > 2)
        .map(|r| PatternMatch {
            kind: PatternKind::TwoTerminalBlossom,
            vertices: r.to_vec(),
            terminals: sorted2(r[5], r[6]),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoTerminalKind {
    Diamond,
    Blossom,
}

pub fn find_2terminal(g: &Graph, kind: TwoTerminalKind) -> Vec<PatternMatch> {
    match kind {
        TwoTerminalKind::Diamond => find_2terminal_diamonds(g),
        TwoTerminalKind::Blossom => find_2terminal_blossoms(g),
    }
}

/// Which clause of the invariant failed, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum Violation {
    ComponentWithoutGoober { component: Vec<VertexId> },
    NotSimple { component: Vec<VertexId> },
    TwoNecklace { witness: PatternMatch },
    TwoBlossom { witness: PatternMatch },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantVerdict {
    pub holds: bool,
    pub violation: Option<Violation>,
}

fn is_k2_plus_e(g: &Graph, comp: &[VertexId]) -> bool {
    comp.len() == 2 && g.multiplicity(comp[0], comp[1]) == 2 && g.degree(comp[0]) == 2 && g.degree(comp[1]) == 2
}

/// Checks connectivity-or-goobers, simplicity-or-K2+e, and the absence of
/// 2-necklaces and 2-blossoms.
pub fn check_invariant(g: &Graph) -> InvariantVerdict {
    let comps = connected_components(g);
    let fail = |v: Violation| InvariantVerdict { holds: false, violation: Some(v) };
    if comps.len() > 1 {
        if let Some(c) = comps.iter().find(|c| c.iter().all(|&v| g.degree(v) > 2)) {
            return fail(Violation::ComponentWithoutGoober { component: c.clone() });
        }
    }
    for c in &comps {
        if is_k2_plus_e(g, c) {
            continue;
        }
        let simple = c.iter().all(|&v| {
            let ns: Vec<VertexId> = g.neighbors(v).collect();
            let set = g.neighbor_set(v);
            ns.len() == set.len() && !ns.contains(&v)
        });
        if !simple {
            return fail(Violation::NotSimple { component: c.clone() });
        }
    }
    if let Some(m) = find_2necklaces(g).into_iter().next() {
        return fail(Violation::TwoNecklace { witness: m });
    }
    if let Some(m) = find_2blossoms(g).into_iter().next() {
        return fail(Violation::TwoBlossom { witness: m });
    }
    InvariantVerdict { holds: true, violation: None }
}

//! Leaf potential of partial forests and a greedy spanning-tree builder driven by it.
//!
//! All potentials are kept doubled so that they stay integral.

use crate::error::{Error, Result};
use crate::graph::{connected_components, is_connected, EdgeId, Graph, SubgraphF, VertexId};
use crate::patterns::check_invariant;
use crate::reductions::{reduce_to_irreducible, unwind_trace};
use crate::tree::{edge_ids, leaf_count, TreeEdges};
use serde::Serialize;
use std::collections::{HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PotentialReport {
    pub leaves: usize,
    pub dead_leaves: usize,
    pub nongoob: usize,
    pub cc: usize,
    /// 2P = 5ℓ + ℓ_d − 2·nongoob − 12·cc.
    pub twice_value: i64,
}

/// Formats a doubled quantity as a decimal with at most one `.5`.
pub fn half_string(twice: i64) -> String {
    let sign = if twice < 0 { "-" } else { "" };
    let a = twice.unsigned_abs();
    if a.is_multiple_of(2) {
        format!("{sign}{}", a / 2)
    } else {
        format!("{sign}{}.5", a / 2)
    }
}

impl fmt::Display for PotentialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P = {} (leaves {}, dead {}, nongoob {}, cc {})",
            half_string(self.twice_value),
            self.leaves,
            self.dead_leaves,
            self.nongoob,
            self.cc
        )
    }
}

/// Changes (Δnongoob, Δℓ, Δℓ_d) of an extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct DeltaTriple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl DeltaTriple {
    /// 2Δ = 5y + z − 2x.
    pub fn twice_value(&self) -> i64 {
        5 * self.y + self.z - 2 * self.x
    }
}

pub fn leaf_potential(g: &Graph, f: &SubgraphF) -> PotentialReport {
    let leaves = f.leaves().len();
    let dead_leaves = f.dead_leaves(g).len();
    let nongoob = f.nongoob(g);
    let cc = f.cc();
    let twice_value = 5 * leaves as i64 + dead_leaves as i64 - 2 * nongoob as i64 - 12 * cc as i64;
    PotentialReport { leaves, dead_leaves, nongoob, cc, twice_value }
}

/// A growth step: optionally a new root vertex, then edges each joining a
/// vertex already present to a new one.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Extension {
    pub new_root: Option<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Augmentation {
    /// Expansion of a boundary vertex that is not a leaf.
    ExpandBoundary,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
}

/// Δ of an extension and whether it opens a new component, computed locally.
pub fn extension_delta(g: &Graph, f: &SubgraphF, ext: &Extension) -> (DeltaTriple, bool) {
    let mut new: HashSet<VertexId> = HashSet::new();
    let mut extra: HashMap<VertexId, usize> = HashMap::new();
    if let Some(r) = ext.new_root {
        new.insert(r);
    }
    for &e in &ext.edges {
        let (u, v) = g.endpoints(e).expect("host edge");
        let child = if f.contains_vertex(u) || (new.contains(&u) && !new.contains(&v)) { v } else { u };
        new.insert(child);
        *extra.entry(u).or_insert(0) += 1;
        *extra.entry(v).or_insert(0) += 1;
    }
    let in_after = |x: VertexId| f.contains_vertex(x) || new.contains(&x);
    let mut affected: HashSet<VertexId> = new.clone();
    affected.extend(extra.keys().copied());
    for &x in &new {
        affected.extend(g.neighbors(x).filter(|&w| f.contains_vertex(w)));
    }
    let mut d = DeltaTriple { x: new.iter().filter(|&&v| g.degree(v) >= 3).count() as i64, ..Default::default() };
    for &a in &affected {
        let leaf_before = f.contains_vertex(a) && f.degree(a) == 1;
        let dead_before = leaf_before && g.neighbors(a).all(|w| f.contains_vertex(w));
        let deg_after = if f.contains_vertex(a) { f.degree(a) } else { 0 } + extra.get(&a).copied().unwrap_or(0);
        let leaf_after = in_after(a) && deg_after == 1;
        let dead_after = leaf_after && g.neighbors(a).all(in_after);
        d.y += leaf_after as i64 - leaf_before as i64;
        d.z += dead_after as i64 - dead_before as i64;
    }
    (d, ext.new_root.is_some())
}

/// 2ΔP of an extension, including the charge for a new component.
pub fn extension_twice_gain(g: &Graph, f: &SubgraphF, ext: &Extension) -> i64 {
    let (d, opens) = extension_delta(g, f, ext);
    d.twice_value() - if opens { 12 } else { 0 }
}

pub fn apply_extension(g: &Graph, f: &SubgraphF, ext: &Extension) -> SubgraphF {
    let mut out = f.clone();
    if let Some(r) = ext.new_root {
        out.add_vertex(g, r);
    }
    out.add_edges(g, &ext.edges);
    out
}

/// Edges from `v` to each distinct neighbour outside `present`.
fn star_edges(g: &Graph, v: VertexId, present: &dyn Fn(VertexId) -> bool) -> Vec<(EdgeId, VertexId)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &e in g.incident(v) {
        let u = g.other_end(e, v);
        if u != v && !present(u) && seen.insert(u) {
            out.push((e, u));
        }
    }
    out
}

fn expansion(g: &Graph, f: &SubgraphF, v: VertexId) -> Extension {
    let new_root = (!f.contains_vertex(v)).then_some(v);
    let edges = star_edges(g, v, &|u| f.contains_vertex(u) || u == v).into_iter().map(|(e, _)| e).collect();
    Extension { new_root, edges }
}

/// V(F) ∪ N[v] with the edges from `v` to its new neighbours.
pub fn expand(g: &Graph, f: &SubgraphF, v: VertexId) -> SubgraphF {
    apply_extension(g, f, &expansion(g, f, v))
}

/// Builds an extension incrementally while tracking which vertices it covers.
struct Builder<'a> {
    g: &'a Graph,
    f: &'a SubgraphF,
    taken: HashSet<VertexId>,
    ext: Extension,
}

impl<'a> Builder<'a> {
    fn new(g: &'a Graph, f: &'a SubgraphF) -> Self {
        Builder { g, f, taken: HashSet::new(), ext: Extension::default() }
    }

    fn present(&self, u: VertexId) -> bool {
        self.f.contains_vertex(u) || self.taken.contains(&u)
    }

    fn attach(&mut self, e: EdgeId, child: VertexId) {
        self.taken.insert(child);
        self.ext.edges.push(e);
    }

    /// Attaches every not-yet-present neighbour of `v` to `v`; returns them.
    fn grow(&mut self, v: VertexId) -> Vec<VertexId> {
        let es = star_edges(self.g, v, &|u| self.present(u) || u == v);
        for &(e, u) in &es {
            self.attach(e, u);
        }
        es.into_iter().map(|(_, u)| u).collect()
    }
}

fn first_edge(g: &Graph, u: VertexId, v: VertexId) -> EdgeId {
    g.edge_between(u, v).expect("adjacent")
}

/// Candidate augmentations in a fixed order; each keeps the component count.
fn augmentation_candidates(g: &Graph, f: &SubgraphF) -> Vec<(Augmentation, Extension)> {
    let mut out = Vec::new();
    let boundary = f.boundary(g);
    let outside = |u: VertexId| !f.contains_vertex(u);
    for &u in &boundary {
        if f.degree(u) != 1 {
            out.push((Augmentation::ExpandBoundary, expansion(g, f, u)));
        }
    }
    for &u in &boundary {
        for x in g.neighbor_set(u).into_iter().filter(|&x| outside(x) && g.degree(x) <= 2) {
            let mut b = Builder::new(g, f);
            b.attach(first_edge(g, u, x), x);
            b.grow(x);
            out.push((Augmentation::A1, b.ext));
        }
    }
    for &u in &boundary {
        if g.neighbor_set(u).into_iter().filter(|&x| outside(x)).count() >= 2 {
            out.push((Augmentation::A2, expansion(g, f, u)));
        }
    }
    for &u in &boundary {
        for v in g.neighbor_set(u).into_iter().filter(|&v| outside(v)) {
            let kind = match g.degree(v) {
                d if d >= 4 => Augmentation::A3,
                3 => Augmentation::A4,
                _ => continue,
            };
            let mut b = Builder::new(g, f);
            b.attach(first_edge(g, u, v), v);
            let kids = b.grow(v);
            if kids.is_empty() {
                continue;
            }
            let base = b.ext.clone();
            out.push((kind, base));
            // A5: also expand the child with the most fresh neighbours
            let best = kids
                .iter()
                .copied()
                .map(|w| (g.neighbor_set(w).into_iter().filter(|&x| !b.present(x)).count(), w))
                .filter(|&(c, _)| c >= 2)
                .max_by_key(|&(c, w)| (c, std::cmp::Reverse(w)));
            if let Some((_, w)) = best {
                b.grow(w);
                out.push((Augmentation::A5, b.ext));
            }
        }
    }
    for &u in &boundary {
        for w in g.neighbor_set(u).into_iter().filter(|&w| outside(w)) {
            for v in g.neighbor_set(w).into_iter().filter(|&v| outside(v) && v != w && g.degree(v) >= 4) {
                let mut b = Builder::new(g, f);
                b.attach(first_edge(g, u, w), w);
                b.attach(first_edge(g, w, v), v);
                b.grow(v);
                out.push((Augmentation::A6, b.ext.clone()));
                b.grow(w);
                out.push((Augmentation::A7, b.ext));
            }
        }
    }
    out
}

/// The first augmentation with non-negative gain, if any.
pub fn try_augment(g: &Graph, f: &SubgraphF) -> Option<(SubgraphF, Augmentation)> {
    if f.vertex_count() == 0 || f.is_spanning(g) {
        return None;
    }
    augmentation_candidates(g, f)
        .into_iter()
        .find(|(_, ext)| !ext.edges.is_empty() && extension_twice_gain(g, f, ext) >= 0)
        .map(|(kind, ext)| (apply_extension(g, f, &ext), kind))
}

/// Best extension by exact gain when no augmentation applies; always makes progress.
fn fallback_extension(g: &Graph, f: &SubgraphF) -> Extension {
    let mut cands: Vec<Extension> = augmentation_candidates(g, f).into_iter().map(|(_, e)| e).collect();
    let boundary = f.boundary(g);
    for &u in &boundary {
        cands.push(expansion(g, f, u));
        for x in g.neighbor_set(u).into_iter().filter(|&x| !f.contains_vertex(x)) {
            cands.push(Extension { new_root: None, edges: vec![first_edge(g, u, x)] });
        }
    }
    // new components start near the boundary when possible
    let near: HashSet<VertexId> = if f.vertex_count() == 0 {
        g.vertices().collect()
    } else {
        let mut s: HashSet<VertexId> = HashSet::new();
        for &u in &boundary {
            for w in g.neighbors(u).filter(|&w| !f.contains_vertex(w)) {
                s.insert(w);
                s.extend(g.neighbors(w).filter(|&x| !f.contains_vertex(x)));
            }
        }
        s.extend(g.vertices().filter(|&v| !f.contains_vertex(v) && g.degree(v) >= 4));
        if s.is_empty() {
            s.extend(g.vertices().filter(|&v| !f.contains_vertex(v)));
        }
        s
    };
    let mut near: Vec<VertexId> = near.into_iter().collect();
    near.sort_unstable();
    for v in near {
        cands.push(expansion(g, f, v));
    }
    cands
        .into_iter()
        .filter(|e| !e.edges.is_empty() || e.new_root.is_some())
        .enumerate()
        .max_by_key(|(i, e)| (extension_twice_gain(g, f, e), std::cmp::Reverse(*i)))
        .map(|(_, e)| e)
        .expect("a non-spanning subgraph always has a candidate")
}

/// Grows a spanning forest of `g` (one tree per component) by potential-guided steps.
fn grow_forest(g: &Graph) -> TreeEdges {
    let mut f = SubgraphF::empty(g);
    while !f.is_spanning(g) {
        f = match try_augment(g, &f) {
            Some((next, _)) => next,
            None => apply_extension(g, &f, &fallback_extension(g, &f)),
        };
    }
    let mut parent: Vec<usize> = (0..g.id_bound()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut deg = vec![0usize; g.id_bound()];
    let mut tree: TreeEdges = Vec::new();
    for e in f.edges() {
        let (u, v) = g.endpoints(e).expect("host edge");
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
        deg[u] += 1;
        deg[v] += 1;
        tree.push((u, v));
    }
    // join trees inside each component, preferring endpoints that are not leaves
    loop {
        let mut best: Option<(usize, (VertexId, VertexId))> = None;
        for (_, u, v) in g.edges() {
            if find(&mut parent, u) == find(&mut parent, v) {
                continue;
            }
            let cost = (deg[u] == 1) as usize + (deg[v] == 1) as usize;
            if best.is_none_or(|(c, _)| cost < c) {
                best = Some((cost, (u, v)));
            }
        }
        let Some((_, (u, v))) = best else { break };
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
        deg[u] += 1;
        deg[v] += 1;
        tree.push((u, v));
    }
    tree
}

/// Repeats leaf-increasing edge swaps until none exists.
pub fn improve_by_swaps(g: &Graph, tree: &mut TreeEdges) {
    if g.m().saturating_mul(g.n()) > 20_000_000 {
        return;
    }
    let mut multiset: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (_, u, v) in g.edges() {
        *multiset.entry((u.min(v), u.max(v))).or_insert(0) += 1;
    }
    'outer: for _ in 0..g.n().max(1) {
        let mut adj: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
        let mut in_tree: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for &(u, v) in tree.iter() {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
            *in_tree.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
        let deg = |x: VertexId, adj: &HashMap<VertexId, Vec<VertexId>>| adj.get(&x).map_or(0, |a| a.len());
        let mut keys: Vec<_> = multiset.iter().map(|(&k, &c)| (k, c)).collect();
        keys.sort_unstable();
        for ((a, b), c) in keys {
            if a == b || in_tree.get(&(a, b)).copied().unwrap_or(0) >= c {
                continue;
            }
            let Some(path) = tree_path(&adj, a, b) else { continue };
            for w in path.windows(2) {
                let (x, y) = (w[0], w[1]);
                let mut changed: HashMap<VertexId, i64> = HashMap::new();
                *changed.entry(a).or_insert(0) += 1;
                *changed.entry(b).or_insert(0) += 1;
                *changed.entry(x).or_insert(0) -= 1;
                *changed.entry(y).or_insert(0) -= 1;
                let gain: i64 = changed
                    .iter()
                    .map(|(&v, &dd)| {
                        let before = deg(v, &adj) as i64;
                        ((before + dd == 1) as i64) - ((before == 1) as i64)
                    })
                    .sum();
                if gain > 0 {
                    let pos = tree.iter().position(|&(p, q)| (p, q) == (x, y) || (p, q) == (y, x)).expect("path edge");
                    tree.swap_remove(pos);
                    tree.push((a, b));
                    continue 'outer;
                }
            }
        }
        break;
    }
}

fn tree_path(adj: &HashMap<VertexId, Vec<VertexId>>, a: VertexId, b: VertexId) -> Option<Vec<VertexId>> {
    let mut prev: HashMap<VertexId, VertexId> = HashMap::new();
    let mut stack = vec![a];
    prev.insert(a, a);
    while let Some(x) = stack.pop() {
        if x == b {
            break;
        }
        for &y in adj.get(&x).map(|v| v.as_slice()).unwrap_or(&[]) {
            if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(y) {
                e.insert(x);
                stack.push(y);
            }
        }
    }
    prev.get(&b)?;
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = prev[&cur];
        path.push(cur);
    }
    Some(path)
}

/// Heuristic maximum-leaf spanning tree. Grows a forest on the reduced graph and
/// lifts it back before a final swap pass.
pub fn greedy_spanning_tree(g: &Graph) -> Result<(TreeEdges, PotentialReport)> {
    if g.n() < 2 {
        return Err(Error::TooSmall { required: 2, found: g.n() });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let (h, trace) = if check_invariant(g).holds { reduce_to_irreducible(g)? } else { (g.clone(), Vec::new()) };
    let forest = grow_forest(&h);
    let (_, mut tree) = unwind_trace(&h, &trace, &forest)?;
    improve_by_swaps(g, &mut tree);
    let ids = edge_ids(g, &tree)?;
    let all: Vec<VertexId> = g.vertices().collect();
    let f = SubgraphF::from_parts(g, &all, &ids)?;
    debug_assert_eq!(connected_components(g).len(), 1);
    debug_assert_eq!(leaf_count(&tree), f.leaves().len());
    Ok((tree, leaf_potential(g, &f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::tree::verify_spanning_tree;

    #[test]
    fn empty_and_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(leaf_potential(&p4, &SubgraphF::empty(&p4)).twice_value, 0);
        let all = SubgraphF::from_parts(&p4, &[0, 1, 2, 3], &[0, 1, 2]).unwrap();
        let r = leaf_potential(&p4, &all);
        assert_eq!((r.leaves, r.dead_leaves, r.nongoob, r.cc, r.twice_value), (2, 2, 0, 1, 0));
    }

    #[test]
    fn spanning_forest_formula() {
        let q = generators::q3();
        let (t, r) = greedy_spanning_tree(&q).unwrap();
        assert_eq!(r.twice_value, 2 * (3 * leaf_count(&t) as i64 - q.n_ge3() as i64 - 6));
    }

    #[test]
    fn expanding_a_degree_five_vertex() {
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        let f = SubgraphF::empty(&star);
        let ext = expansion(&star, &f, 0);
        let (d, opens) = extension_delta(&star, &f, &ext);
        // only the centre is a non-goober here; every leaf is dead
        assert!(opens);
        assert_eq!((d.x, d.y, d.z), (1, 5, 5));
        let mut big = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        for i in 1..6 {
            let j = if i == 5 { 1 } else { i + 1 };
            big.add_edge(i, j).unwrap();
        }
        let f = SubgraphF::empty(&big);
        let (d, _) = extension_delta(&big, &f, &expansion(&big, &f, 0));
        // the wheel is covered at once, so the new leaves are dead
        assert_eq!((d.x, d.y, d.z), (6, 5, 5));
        assert_eq!(d.twice_value(), 18);
        // with a fresh neighbour behind every rim vertex none of them is dead
        for i in 1..6 {
            let w = big.add_vertex();
            big.add_edge(i, w).unwrap();
        }
        let f = SubgraphF::empty(&big);
        let (d, _) = extension_delta(&big, &f, &expansion(&big, &f, 0));
        assert_eq!((d.x, d.y, d.z), (6, 5, 0));
        assert_eq!(d.twice_value(), 13);
    }

    #[test]
    fn expanding_an_inner_vertex_changes_nothing() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let f = SubgraphF::from_parts(&g, &[0, 1, 2], &[0, 1]).unwrap();
        assert_eq!(expand(&g, &f, 1), f);
    }

    #[test]
    fn goober_next_to_f_triggers_a1() {
        // triangle 0-1-2 with a path 2-3-4 and 4 back to 0
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)]);
        let f = SubgraphF::from_parts(&g, &[0, 1, 2], &[0, 1]).unwrap();
        let (next, kind) = try_augment(&g, &f).unwrap();
        assert!(matches!(kind, Augmentation::ExpandBoundary | Augmentation::A1));
        assert!(leaf_potential(&g, &next).twice_value >= leaf_potential(&g, &f).twice_value);
        assert_eq!(next.cc(), f.cc());
    }

    #[test]
    fn known_optima() {
        let star = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]);
        for (g, want) in [(star, 6), (generators::q3(), 4), (generators::g7(), 4)] {
            let (t, _) = greedy_spanning_tree(&g).unwrap();
            verify_spanning_tree(&g, &t).unwrap();
            assert_eq!(leaf_count(&t), want);
        }
    }

    #[test]
    fn half_strings() {
        assert_eq!(half_string(13), "6.5");
        assert_eq!(half_string(-3), "-1.5");
        assert_eq!(half_string(-4), "-2");
    }
}

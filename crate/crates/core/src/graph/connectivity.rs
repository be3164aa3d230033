use super::{EdgeId, Graph, VertexId};
use std::collections::BTreeSet;

/// Components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.id_bound()];
    let mut comps = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || connected_components(g).len() == 1
}

/// Vertex ids of the component containing `s`.
pub fn component_of(g: &Graph, s: VertexId) -> Vec<VertexId> {
    let mut seen = vec![false; g.id_bound()];
    seen[s] = true;
    let mut stack = vec![s];
    let mut comp = Vec::new();
    while let Some(v) = stack.pop() {
        comp.push(v);
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    comp.sort_unstable();
    comp
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BridgeReport {
    pub bridges: BTreeSet<EdgeId>,
    pub cut_vertices: BTreeSet<VertexId>,
}

/// Iterative lowpoint computation. Parallel edges are distinguished by id,
/// so a doubled edge never counts as a bridge; loops are skipped.
pub fn bridges_and_cut_vertices(g: &Graph) -> BridgeReport {
    let nb = g.id_bound();
    let mut disc = vec![usize::MAX; nb];
    let mut low = vec![0usize; nb];
    let mut report = BridgeReport::default();
    let mut timer = 0;

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, edge used to enter it, next incident index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, parent_edge, ref mut idx)) = stack.last_mut() {
            let inc = g.incident(v);
            if *idx < inc.len() {
                let e = inc[*idx];
                *idx += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                let u = g.other_end(e, v);
                if u == v {
                    continue;
                }
                if disc[u] == usize::MAX {
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let (Some(pe), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        report.bridges.insert(pe);
                    }
                    if p != root && low[v] >= disc[p] {
                        report.cut_vertices.insert(p);
                    }
                }
            }
        }
        if root_children >= 2 {
            report.cut_vertices.insert(root);
        }
    }
    report
}

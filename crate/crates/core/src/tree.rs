//! Spanning trees and forests as plain endpoint lists.

use crate::error::{Error, Result};
use crate::graph::{connected_components, EdgeId, Graph, VertexId};
use std::collections::{HashMap, HashSet};

pub type TreeEdges = Vec<(VertexId, VertexId)>;

pub fn normalize(edges: &mut TreeEdges) {
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
}

/// Degree of every vertex mentioned by the edge list.
pub fn degrees(edges: &[(VertexId, VertexId)]) -> HashMap<VertexId, usize> {
    let mut d = HashMap::new();
    for &(u, v) in edges {
        *d.entry(u).or_insert(0) += 1;
        *d.entry(v).or_insert(0) += 1;
    }
    d
}

/// ℓ(T): number of degree-1 vertices.
pub fn leaf_count(edges: &[(VertexId, VertexId)]) -> usize {
    degrees(edges).values().filter(|&&d| d == 1).count()
}

pub fn leaf_set(edges: &[(VertexId, VertexId)]) -> Vec<VertexId> {
    let mut l: Vec<VertexId> = degrees(edges).into_iter().filter(|&(_, d)| d == 1).map(|(v, _)| v).collect();
    l.sort_unstable();
    l
}

/// Checks that `edges` is a spanning forest of `g` with exactly one tree per component.
pub fn verify_spanning_forest(g: &Graph, edges: &[(VertexId, VertexId)]) -> Result<()> {
    let mut parent: Vec<usize> = (0..g.id_bound()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut used: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for &(u, v) in edges {
        if !g.contains(u) || !g.contains(v) {
            return Err(Error::NotSpanning(format!("edge {u}-{v} has a missing endpoint")));
        }
        let key = (u.min(v), u.max(v));
        let c = used.entry(key).or_insert(0);
        *c += 1;
        if *c > g.multiplicity(u, v) {
            return Err(Error::NotSpanning(format!("edge {u}-{v} is not in the graph")));
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return Err(Error::NotSpanning(format!("edge {u}-{v} closes a cycle")));
        }
        parent[a] = b;
    }
    let comps = connected_components(g);
    if edges.len() + comps.len() != g.n() {
        return Err(Error::NotSpanning(format!(
            "{} edges cannot span {} vertices in {} components",
            edges.len(),
            g.n(),
            comps.len()
        )));
    }
    Ok(())
}

pub fn verify_spanning_tree(g: &Graph, edges: &[(VertexId, VertexId)]) -> Result<()> {
    verify_spanning_forest(g, edges)?;
    if connected_components(g).len() > 1 {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Number of tree components that have at least one edge.
pub fn nontrivial_components(edges: &[(VertexId, VertexId)]) -> usize {
    let d = degrees(edges);
    // forest: components = vertices - edges
    d.len() - edges.len()
}

/// Host edge ids for an endpoint list, honouring multiplicity.
pub fn edge_ids(g: &Graph, edges: &[(VertexId, VertexId)]) -> Result<Vec<EdgeId>> {
    let mut used: HashSet<EdgeId> = HashSet::new();
    let mut out = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if !g.contains(u) || !g.contains(v) {
            return Err(Error::NotSpanning(format!("edge {u}-{v} has a missing endpoint")));
        }
        let e = g
            .incident(u)
            .iter()
            .copied()
            .find(|&e| g.other_end(e, u) == v && !used.contains(&e))
            .ok_or_else(|| Error::NotSpanning(format!("edge {u}-{v} is not in the graph")))?;
        used.insert(e);
        out.push(e);
    }
    Ok(out)
}

/// Breadth-first spanning forest, used as a neutral starting point.
pub fn bfs_forest(g: &Graph) -> TreeEdges {
    let mut seen = vec![false; g.id_bound()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    out.push((v.min(u), v.max(u)));
                    queue.push_back(u);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_leaves() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let t = bfs_forest(&g);
        verify_spanning_tree(&g, &t).unwrap();
        assert_eq!(leaf_count(&t), 3);
    }

    #[test]
    fn rejects_cycles_and_foreign_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(verify_spanning_tree(&g, &[(0, 1), (1, 2), (2, 0)]).is_err());
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(verify_spanning_tree(&p, &[(0, 2), (0, 1)]).is_err());
        assert!(verify_spanning_tree(&p, &[(0, 1)]).is_err());
    }

    #[test]
    fn forest_over_components() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]);
        let f = bfs_forest(&g);
        verify_spanning_forest(&g, &f).unwrap();
        assert!(verify_spanning_tree(&g, &f).is_err());
        assert_eq!(nontrivial_components(&f), 2);
    }
}

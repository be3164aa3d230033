//! Multigraph with stable vertex and edge ids.
//!
//! Removing a vertex or an edge leaves a hole in the id space; nothing is
//! renumbered, so matches and trace records taken before a mutation keep
//! pointing at the same objects afterwards.

mod connectivity;
mod io;
mod subgraph;
mod suppress;

pub use connectivity::{bridges_and_cut_vertices, component_of, connected_components, is_connected, BridgeReport};
pub use io::{parse_graph, to_dot, write_graph};
pub use subgraph::{outside_subgraph, SubgraphF};
pub use suppress::{suppress, SEdge, SuppressedGraph};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Degree class of a vertex, always judged in the whole graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexClass {
    Goober,
    Degree3,
    HighDegree,
}

impl VertexClass {
    pub fn of_degree(d: usize) -> Self {
        match d {
            0..=2 => VertexClass::Goober,
            3 => VertexClass::Degree3,
            _ => VertexClass::HighDegree,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Graph {
    alive: Vec<bool>,
    edges: Vec<Option<(VertexId, VertexId)>>,
    // incident edge ids; a loop is listed twice
    adj: Vec<Vec<EdgeId>>,
    n: usize,
    m: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with vertices `0..n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        Graph { alive: vec![true; n], edges: Vec::new(), adj: vec![Vec::new(); n], n, m: 0 }
    }

    /// Builds a graph on `0..n` from an edge list.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v).expect("endpoint out of range");
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// One past the largest vertex id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.alive.len()
    }

    pub fn edge_id_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.alive.push(true);
        self.adj.push(Vec::new());
        self.n += 1;
        self.alive.len() - 1
    }

    /// Revives or allocates a specific id. Used when replaying traces.
    pub fn add_vertex_with_id(&mut self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            return Err(Error::Contract(format!("vertex {v} already exists")));
        }
        if v >= self.alive.len() {
            self.alive.resize(v + 1, false);
            self.adj.resize(v + 1, Vec::new());
        }
        self.alive[v] = true;
        self.n += 1;
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        for x in [u, v] {
            if !self.contains(x) {
                return Err(Error::NoSuchVertex(x));
            }
        }
        let e = self.edges.len();
        self.edges.push(Some((u, v)));
        self.adj[u].push(e);
        self.adj[v].push(e);
        self.m += 1;
        Ok(e)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        let (u, v) = self.edges.get(e).copied().flatten().ok_or(Error::NoSuchEdge(e))?;
        self.edges[e] = None;
        if let Some(p) = self.adj[u].iter().position(|&x| x == e) {
            self.adj[u].swap_remove(p);
        }
        if let Some(p) = self.adj[v].iter().position(|&x| x == e) {
            self.adj[v].swap_remove(p);
        }
        self.m -= 1;
        Ok((u, v))
    }

    /// Removes one edge between `u` and `v` (the one with the smallest id).
    pub fn remove_edge_between(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let e = self
            .edge_between(u, v)
            .ok_or_else(|| Error::Contract(format!("no edge between {u} and {v}")))?;
        self.remove_edge(e)?;
        Ok(e)
    }

    /// Removes `v` and its incident edges, returning the removed edges as endpoint pairs.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<Vec<(VertexId, VertexId)>> {
        if !self.contains(v) {
            return Err(Error::NoSuchVertex(v));
        }
        let mut inc = self.adj[v].clone();
        inc.sort_unstable();
        inc.dedup();
        let mut removed = Vec::with_capacity(inc.len());
        for e in inc {
            removed.push(self.remove_edge(e)?);
        }
        self.alive[v] = false;
        self.n -= 1;
        Ok(removed)
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(e).copied().flatten()
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e).expect("dead edge");
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(v).map_or(0, Vec::len)
    }

    pub fn class(&self, v: VertexId) -> VertexClass {
        VertexClass::of_degree(self.degree(v))
    }

    pub fn is_goober(&self, v: VertexId) -> bool {
        self.degree(v) <= 2
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v]
    }

    /// Neighbours with multiplicity; a loop yields `v` twice.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(move |&e| self.other_end(e, v))
    }

    /// Distinct neighbours other than `v` itself, sorted.
    pub fn neighbor_set(&self, v: VertexId) -> Vec<VertexId> {
        let mut ns: Vec<VertexId> = self.neighbors(v).filter(|&u| u != v).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i)
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().enumerate().filter_map(|(i, e)| e.map(|(u, v)| (i, u, v)))
    }

    /// Sorted list of normalised endpoint pairs, one entry per edge.
    pub fn edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut es: Vec<_> = self.edges().map(|(_, u, v)| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es
    }

    /// Equality of vertex sets and edge multisets, ignoring edge ids.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.vertices().eq(other.vertices()) && self.edge_multiset() == other.edge_multiset()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if !self.contains(u) || !self.contains(v) {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.adj[a].iter().copied().filter(|&e| self.other_end(e, a) == b).min()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        if !self.contains(u) || !self.contains(v) {
            return 0;
        }
        let c = self.adj[u].iter().filter(|&&e| self.other_end(e, u) == v).count();
        if u == v {
            c / 2
        } else {
            c
        }
    }

    pub fn has_loops(&self) -> bool {
        self.edges().any(|(_, u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        let es = self.edge_multiset();
        es.iter().all(|&(u, v)| u != v) && es.windows(2).all(|w| w[0] != w[1])
    }

    /// V≥3(G).
    pub fn high_vertices(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.degree(v) >= 3).collect()
    }

    /// n≥3(G).
    pub fn n_ge3(&self) -> usize {
        self.vertices().filter(|&v| self.degree(v) >= 3).count()
    }

    /// L(G), the degree-1 vertices.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).max()
    }

    /// Subgraph induced by `keep`, with the same vertex ids.
    pub fn induced(&self, keep: &[VertexId]) -> Graph {
        let mut mask = vec![false; self.id_bound()];
        for &v in keep {
            if self.contains(v) {
                mask[v] = true;
            }
        }
        let mut g = Graph {
            alive: mask.clone(),
            edges: Vec::new(),
            adj: vec![Vec::new(); self.id_bound()],
            n: mask.iter().filter(|&&b| b).count(),
            m: 0,
        };
        for (_, u, v) in self.edges() {
            if mask[u] && mask[v] {
                g.add_edge(u, v).expect("endpoints kept");
            }
        }
        g
    }

    /// Copy with vertices renumbered to `0..n` in increasing id order, plus the old ids.
    pub fn compacted(&self) -> (Graph, Vec<VertexId>) {
        let old: Vec<VertexId> = self.vertices().collect();
        let mut map = vec![usize::MAX; self.id_bound()];
        for (i, &v) in old.iter().enumerate() {
            map[v] = i;
        }
        let mut g = Graph::with_vertices(old.len());
        for (_, u, v) in self.edges() {
            g.add_edge(map[u], map[v]).expect("mapped");
        }
        (g, old)
    }

    /// Adjacency bitmasks for graphs with at most 64 live vertices, indexed like `compacted`.
    pub fn adjacency_masks(&self) -> Option<(Vec<u64>, Vec<VertexId>)> {
        let old: Vec<VertexId> = self.vertices().collect();
        if old.len() > 64 {
            return None;
        }
        let mut map = vec![usize::MAX; self.id_bound()];
        for (i, &v) in old.iter().enumerate() {
            map[v] = i;
        }
        let mut masks = vec![0u64; old.len()];
        for (_, u, v) in self.edges() {
            if u != v {
                masks[map[u]] |= 1 << map[v];
                masks[map[v]] |= 1 << map[u];
            }
        }
        Some((masks, old))
    }
}

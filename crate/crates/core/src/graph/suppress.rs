use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};
use serde::Serialize;

/// An edge of S(G) standing for a path (or, for loops, a cycle) of the host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SEdge {
    pub u: VertexId,
    pub v: VertexId,
    /// Suppressed degree-2 vertices in walk order from `u` to `v`.
    pub internal: Vec<VertexId>,
    /// Host edges along the walk, in order.
    pub host_edges: Vec<EdgeId>,
}

impl SEdge {
    pub fn internal_count(&self) -> usize {
        self.internal.len()
    }

    pub fn cost(&self) -> usize {
        self.internal.len().min(2)
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuppressedGraph {
    /// Host ids of L(G) ∪ V≥3(G), sorted.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<SEdge>,
    #[serde(skip)]
    index: Vec<usize>,
    #[serde(skip)]
    incident: Vec<Vec<usize>>,
}

impl SuppressedGraph {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Position of a host vertex in `vertices`.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.index.get(v).copied().filter(|&i| i != usize::MAX)
    }

    /// S-edge indices at the vertex with local index `i`; loops listed twice.
    pub fn incident(&self, i: usize) -> &[usize] {
        &self.incident[i]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.index_of(v).map_or(0, |i| self.incident[i].len())
    }

    fn build_index(&mut self, id_bound: usize) {
        self.index = vec![usize::MAX; id_bound];
        for (i, &v) in self.vertices.iter().enumerate() {
            self.index[v] = i;
        }
        self.incident = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            self.incident[self.index[e.u]].push(k);
            self.incident[self.index[e.v]].push(k);
        }
    }

    /// Rebuilds the host graph (same vertex ids) from the back-map.
    pub fn expand(&self, id_bound: usize) -> Graph {
        let mut g = Graph::with_vertices(id_bound);
        let mut live = vec![false; id_bound];
        for &v in &self.vertices {
            live[v] = true;
        }
        for e in &self.edges {
            for &x in &e.internal {
                live[x] = true;
            }
            let mut walk = vec![e.u];
            walk.extend(&e.internal);
            walk.push(e.v);
            for w in walk.windows(2) {
                g.add_edge(w[0], w[1]).expect("ids in range");
            }
        }
        for (v, &l) in live.iter().enumerate() {
            if !l {
                g.remove_vertex(v).expect("isolated placeholder");
            }
        }
        g
    }
}

/// Suppresses every degree-2 vertex. Returns an empty graph when V≥3(G) is empty.
pub fn suppress(g: &Graph) -> Result<SuppressedGraph> {
    if g.n_ge3() == 0 {
        return Ok(SuppressedGraph::default());
    }
    let anchors: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) != 2).collect();
    let mut used = vec![false; g.edge_id_bound()];
    let mut edges = Vec::new();
    for &a in &anchors {
        for &e0 in g.incident(a) {
            if used[e0] {
                continue;
            }
            let mut host_edges = vec![e0];
            let mut internal = Vec::new();
            used[e0] = true;
            let mut prev_edge = e0;
            let mut cur = g.other_end(e0, a);
            while g.degree(cur) == 2 {
                internal.push(cur);
                let inc = g.incident(cur);
                let next = if inc[0] == prev_edge { inc[1] } else { inc[0] };
                if used[next] {
                    break;
                }
                used[next] = true;
                host_edges.push(next);
                prev_edge = next;
                cur = g.other_end(next, cur);
            }
            edges.push(SEdge { u: a, v: cur, internal, host_edges });
        }
    }
    if let Some((e, u, _)) = g.edges().find(|&(e, _, _)| !used[e]) {
        let _ = e;
        return Err(Error::PureCycle(u));
    }
    let mut s = SuppressedGraph { vertices: anchors, edges, index: Vec::new(), incident: Vec::new() };
    s.build_index(g.id_bound());
    Ok(s)
}

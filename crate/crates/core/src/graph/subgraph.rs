use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// A subgraph F of a host graph, tracked by vertex and edge membership.
///
/// The host is not borrowed; callers pass it to every query. Cached values
/// are refreshed on each mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphF {
    in_v: Vec<bool>,
    in_e: Vec<bool>,
    deg: Vec<usize>,
    n: usize,
    m: usize,
    cc: usize,
}

impl SubgraphF {
    pub fn empty(host: &Graph) -> Self {
        SubgraphF {
            in_v: vec![false; host.id_bound()],
            in_e: vec![false; host.edge_id_bound()],
            deg: vec![0; host.id_bound()],
            n: 0,
            m: 0,
            cc: 0,
        }
    }

    pub fn from_parts(host: &Graph, vertices: &[VertexId], edges: &[EdgeId]) -> Result<Self> {
        let mut f = SubgraphF::empty(host);
        for &v in vertices {
            if !host.contains(v) {
                return Err(Error::NoSuchVertex(v));
            }
            f.mark_vertex(v);
        }
        for &e in edges {
            let (u, v) = host.endpoints(e).ok_or(Error::NoSuchEdge(e))?;
            f.mark_vertex(u);
            f.mark_vertex(v);
            if !f.in_e[e] {
                f.in_e[e] = true;
                f.m += 1;
                f.deg[u] += 1;
                f.deg[v] += 1;
            }
        }
        f.refresh(host);
        Ok(f)
    }

    fn mark_vertex(&mut self, v: VertexId) {
        if !self.in_v[v] {
            self.in_v[v] = true;
            self.n += 1;
        }
    }

    fn refresh(&mut self, host: &Graph) {
        let mut parent: Vec<usize> = (0..self.in_v.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut cc = self.n;
        for (e, u, v) in host.edges() {
            if self.in_e[e] {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    cc -= 1;
                }
            }
        }
        self.cc = cc;
    }

    pub fn add_vertex(&mut self, host: &Graph, v: VertexId) {
        self.mark_vertex(v);
        self.refresh(host);
    }

    pub fn add_edge(&mut self, host: &Graph, e: EdgeId) {
        if self.in_e[e] {
            return;
        }
        let (u, v) = host.endpoints(e).expect("host edge");
        self.mark_vertex(u);
        self.mark_vertex(v);
        self.in_e[e] = true;
        self.m += 1;
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.refresh(host);
    }

    /// Adds several edges with a single cache refresh.
    pub fn add_edges(&mut self, host: &Graph, es: &[EdgeId]) {
        for &e in es {
            if self.in_e[e] {
                continue;
            }
            let (u, v) = host.endpoints(e).expect("host edge");
            self.mark_vertex(u);
            self.mark_vertex(v);
            self.in_e[e] = true;
            self.m += 1;
            self.deg[u] += 1;
            self.deg[v] += 1;
        }
        self.refresh(host);
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.in_v.get(v).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.in_e.get(e).copied().unwrap_or(false)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn cc(&self) -> usize {
        self.cc
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.deg[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.in_v.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.in_e.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn is_spanning(&self, host: &Graph) -> bool {
        self.n == host.n()
    }

    pub fn leaves(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.deg[v] == 1).collect()
    }

    /// Leaves of F with no host neighbour outside V(F).
    pub fn dead_leaves(&self, host: &Graph) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| self.deg[v] == 1 && host.neighbors(v).all(|u| self.in_v[u]))
            .collect()
    }

    /// V(F) ∩ V(F^C): vertices of F with a host neighbour outside F.
    pub fn boundary(&self, host: &Graph) -> Vec<VertexId> {
        self.vertices().filter(|&v| host.neighbors(v).any(|u| !self.in_v[u])).collect()
    }

    pub fn nongoob(&self, host: &Graph) -> usize {
        self.vertices().filter(|&v| host.degree(v) >= 3).count()
    }
}

/// F^C: the edge-induced graph on host edges with at least one endpoint outside V(F).
/// Vertex ids are kept; vertices not covered by such an edge are absent.
pub fn outside_subgraph(g: &Graph, f: &SubgraphF) -> Result<Graph> {
    if f.is_spanning(g) {
        return Err(Error::Contract("F spans the graph; F^C is undefined".into()));
    }
    let mut out = Graph::with_vertices(g.id_bound());
    let mut keep = vec![false; g.id_bound()];
    for (_, u, v) in g.edges() {
        if !f.contains_vertex(u) || !f.contains_vertex(v) {
            out.add_edge(u, v)?;
            keep[u] = true;
            keep[v] = true;
        }
    }
    for (v, &kept) in keep.iter().enumerate() {
        if !kept {
            out.remove_vertex(v)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outside_of_empty_is_whole_graph() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let f = SubgraphF::empty(&g);
        assert!(outside_subgraph(&g, &f).unwrap().same_structure(&g));
        let a = SubgraphF::from_parts(&g, &[0], &[]).unwrap();
        assert!(outside_subgraph(&g, &a).unwrap().same_structure(&g));
        assert_eq!(a.cc(), 1);
    }

    #[test]
    fn spanning_f_is_rejected() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let f = SubgraphF::from_parts(&g, &[], &[0]).unwrap();
        assert!(outside_subgraph(&g, &f).is_err());
    }

    #[test]
    fn caches_track_mutation() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let mut f = SubgraphF::from_parts(&g, &[0, 3], &[]).unwrap();
        assert_eq!(f.cc(), 2);
        f.add_edge(&g, 0);
        f.add_edge(&g, 2);
        assert_eq!(f.cc(), 2);
        assert_eq!(f.leaves(), vec![0, 1, 2, 3]);
        assert!(f.dead_leaves(&g).contains(&0));
        f.add_edge(&g, 1);
        assert_eq!(f.cc(), 1);
        assert_eq!(f.dead_leaves(&g), vec![0, 3]);
    }
}

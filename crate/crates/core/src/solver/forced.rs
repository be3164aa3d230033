use crate::error::{Error, Result};
use crate::graph::{SuppressedGraph, VertexId};
use crate::tree::TreeEdges;

/// Vertices of S(G) that must be leaves, with a leaf target.
#[derive(Debug, Clone)]
pub struct ForcedLeafQuery<'a> {
    pub s: &'a SuppressedGraph,
    /// Host ids; must lie in V(S) and have host degree at least 3.
    pub l: Vec<VertexId>,
    pub k: usize,
}

impl<'a> ForcedLeafQuery<'a> {
    pub fn new(s: &'a SuppressedGraph, l: Vec<VertexId>, k: usize) -> Result<Self> {
        for &v in &l {
            match s.index_of(v) {
                None => return Err(Error::Argument(format!("vertex {v} is not in S(G)"))),
                Some(_) if s.degree(v) < 3 => {
                    return Err(Error::Argument(format!("vertex {v} has degree {} in G", s.degree(v))))
                }
                _ => {}
            }
        }
        Ok(ForcedLeafQuery { s, l, k })
    }
}

/// True iff some spanning tree has every vertex of L as a leaf.
pub fn forced_leaf_feasible(q: &ForcedLeafQuery) -> bool {
    achievable_leaves(q).is_some()
}

/// Best value of |L| + |L(T) ∖ V≥3(G)| over spanning trees T with L ⊆ L(T).
/// Always `None` for an empty S(G), i.e. paths and cycles.
pub fn achievable_leaves(q: &ForcedLeafQuery) -> Option<usize> {
    let mut ws = Workspace::new(q.s);
    let mut local: Vec<usize> = q.l.iter().map(|&v| q.s.index_of(v).expect("validated")).collect();
    local.sort_unstable();
    local.dedup();
    ws.evaluate(&local)
}

/// Reusable buffers and the cost-sorted edge order for repeated evaluations.
pub(crate) struct Workspace<'a> {
    s: &'a SuppressedGraph,
    order: Vec<usize>,
    in_l: Vec<bool>,
    parent: Vec<usize>,
    leaves_g: usize,
}

impl<'a> Workspace<'a> {
    pub(crate) fn new(s: &'a SuppressedGraph) -> Self {
        let mut order: Vec<usize> = (0..s.edges.len()).collect();
        order.sort_by_key(|&i| s.edges[i].cost());
        let leaves_g = (0..s.vertices.len()).filter(|&i| s.incident(i).len() == 1).count();
        Workspace { s, order, in_l: vec![false; s.vertices.len()], parent: vec![0; s.vertices.len()], leaves_g }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// `l` holds local indices into `s.vertices`.
    pub(crate) fn evaluate(&mut self, l: &[usize]) -> Option<usize> {
        for &i in l {
            self.in_l[i] = true;
        }
        let r = self.evaluate_marked(l);
        for &i in l {
            self.in_l[i] = false;
        }
        r
    }

    fn evaluate_marked(&mut self, l: &[usize]) -> Option<usize> {
        let s = self.s;
        let nv = s.vertices.len();
        if l.len() >= nv {
            return None;
        }
        let mut gain = 0usize;
        // forced leaves: no loops, no costly L–L edges, at least one edge out of L
        for &u in l {
            let mut best: Option<usize> = None;
            let mut sum = 0;
            for &ei in s.incident(u) {
                let e = &s.edges[ei];
                if e.is_loop() {
                    return None;
                }
                let w = s.index_of(e.other(s.vertices[u])).expect("S vertex");
                let c = e.cost();
                if self.in_l[w] {
                    if c >= 1 {
                        return None;
                    }
                    continue;
                }
                sum += c.min(1);
                best = Some(best.map_or(c, |b: usize| b.min(c)));
            }
            let b = best?;
            gain += sum - b.min(1);
        }
        // minimum-cost spanning tree of S − L
        for i in 0..nv {
            self.parent[i] = i;
        }
        let mut comps = nv - l.len();
        for idx in 0..self.order.len() {
            let e = &s.edges[self.order[idx]];
            let a = s.index_of(e.u).expect("S vertex");
            let b = s.index_of(e.v).expect("S vertex");
            if self.in_l[a] || self.in_l[b] {
                continue;
            }
            let c = e.cost();
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                gain += c;
            } else {
                self.parent[ra] = rb;
                comps -= 1;
            }
        }
        if comps != 1 {
            return None;
        }
        Some(l.len() + self.leaves_g + gain)
    }
}

/// A spanning tree of the host realising `achievable_leaves` for local forced set `l`.
pub(crate) fn forced_witness(s: &SuppressedGraph, l: &[usize]) -> Option<TreeEdges> {
    let nv = s.vertices.len();
    let mut in_l = vec![false; nv];
    for &i in l {
        in_l[i] = true;
    }
    let mut order: Vec<usize> = (0..s.edges.len()).collect();
    order.sort_by_key(|&i| s.edges[i].cost());
    let local = |v: VertexId| s.index_of(v).expect("S vertex");
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut in_tree = vec![false; s.edges.len()];
    let mut attached = vec![false; nv];
    for &k in &order {
        let e = &s.edges[k];
        let (a, b) = (local(e.u), local(e.v));
        match (in_l[a], in_l[b]) {
            (false, false) => {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    in_tree[k] = true;
                }
            }
            (true, true) => {
                if e.cost() >= 1 || a == b {
                    return None;
                }
            }
            (la, _) => {
                let u = if la { a } else { b };
                if !attached[u] {
                    attached[u] = true;
                    in_tree[k] = true;
                }
            }
        }
    }
    if l.iter().any(|&u| !attached[u]) {
        return None;
    }
    let mut out = TreeEdges::new();
    for (k, e) in s.edges.iter().enumerate() {
        let mut walk = vec![e.u];
        walk.extend(&e.internal);
        walk.push(e.v);
        let steps: Vec<(VertexId, VertexId)> = walk.windows(2).map(|w| (w[0], w[1])).collect();
        let i = e.internal.len();
        if in_tree[k] {
            out.extend(steps);
        } else if i > 0 {
            let (lu, lv) = (in_l[local(e.u)], in_l[local(e.v)]);
            match (lu, lv) {
                (false, false) if i == 1 => out.push(steps[0]),
                (false, false) => out.extend(steps.iter().enumerate().filter(|&(j, _)| j != 1).map(|(_, &p)| p)),
                (true, false) => out.extend(&steps[1..]),
                (false, true) => out.extend(&steps[..i]),
                (true, true) => {}
            }
        }
    }
    Some(out)
}

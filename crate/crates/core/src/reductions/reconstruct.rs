use super::ReductionStep;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexId};
use crate::tree::{verify_spanning_forest, TreeEdges};
use std::collections::HashMap;

const MAX_REGION_EDGES: usize = 24;

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.0[a] = b;
        true
    }
}

/// Lifts a spanning forest of the post-graph `post` back across `step`.
///
/// Tree edges outside the rewritten region are kept; the region is completed by
/// the leaf-maximal choice among the removed edges of the pre-graph.
pub fn reconstruct_tree(post: &Graph, step: &ReductionStep, t_prime: &[(VertexId, VertexId)]) -> Result<TreeEdges> {
    verify_spanning_forest(post, t_prime)?;
    let mut pre = post.clone();
    step.invert(&mut pre)?;

    let mut pending: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for &(u, v) in &step.added_edges {
        *pending.entry((u.min(v), u.max(v))).or_insert(0) += 1;
    }
    let mut keep: TreeEdges = Vec::with_capacity(t_prime.len());
    for &(u, v) in t_prime {
        if step.added_vertices.contains(&u) || step.added_vertices.contains(&v) {
            continue;
        }
        if let Some(c) = pending.get_mut(&(u.min(v), u.max(v))) {
            if *c > 0 {
                *c -= 1;
                continue;
            }
        }
        keep.push((u, v));
    }

    let cand = &step.removed_edges;
    if cand.len() > MAX_REGION_EDGES {
        return Err(Error::Trace(format!("region of {} edges is too large to complete", cand.len())));
    }
    let target = pre.n() - connected_components(&pre).len();
    let need = target
        .checked_sub(keep.len())
        .filter(|&r| r <= cand.len())
        .ok_or_else(|| Error::Trace(format!("{} reconstruction: kept edges do not fit", step.rule)))?;

    let mut base = Dsu((0..pre.id_bound()).collect());
    let mut base_deg = vec![0usize; pre.id_bound()];
    for &(u, v) in &keep {
        base.union(u, v);
        base_deg[u] += 1;
        base_deg[v] += 1;
    }
    let mut region: Vec<VertexId> = cand.iter().flat_map(|&(u, v)| [u, v]).collect();
    region.sort_unstable();
    region.dedup();
    let outside_leaves = base_deg
        .iter()
        .enumerate()
        .filter(|&(v, &d)| d == 1 && region.binary_search(&v).is_err())
        .count();

    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut chosen: Vec<usize> = Vec::with_capacity(need);
    let mut search = Search { cand, region: &region, base_deg: &base_deg, best: &mut best, outside_leaves };
    search.go(0, need, &mut chosen, &base);
    let (_, pick) = best.ok_or_else(|| Error::Trace(format!("{} reconstruction found no spanning forest", step.rule)))?;
    let mut out = keep;
    out.extend(pick.iter().map(|&i| cand[i]));
    debug_assert!(verify_spanning_forest(&pre, &out).is_ok());
    Ok(out)
}

struct Search<'a> {
    cand: &'a [(VertexId, VertexId)],
    region: &'a [VertexId],
    base_deg: &'a [usize],
    best: &'a mut Option<(usize, Vec<usize>)>,
    outside_leaves: usize,
}

impl Search<'_> {
    fn go(&mut self, from: usize, left: usize, chosen: &mut Vec<usize>, base: &Dsu) {
        if left == 0 {
            let mut deg: HashMap<VertexId, usize> = HashMap::new();
            for &i in chosen.iter() {
                let (u, v) = self.cand[i];
                *deg.entry(u).or_insert(0) += 1;
                *deg.entry(v).or_insert(0) += 1;
            }
            let mut leaves = self.outside_leaves;
            for &v in self.region {
                if self.base_deg[v] + deg.get(&v).copied().unwrap_or(0) == 1 {
                    leaves += 1;
                }
            }
            if self.best.as_ref().is_none_or(|(b, _)| leaves > *b) {
                *self.best = Some((leaves, chosen.clone()));
            }
            return;
        }
        if self.cand.len() - from < left {
            return;
        }
        for i in from..self.cand.len() {
            if self.cand.len() - i < left {
                break;
            }
            let (u, v) = self.cand[i];
            let mut d = Dsu(base.0.clone());
            if !d.union(u, v) {
                continue;
            }
            chosen.push(i);
            self.go(i + 1, left - 1, chosen, &d);
            chosen.pop();
        }
    }
}

/// Lifts a spanning forest of the fully reduced graph back through a whole trace.
pub fn unwind_trace(reduced: &Graph, steps: &[ReductionStep], tree: &[(VertexId, VertexId)]) -> Result<(Graph, TreeEdges)> {
    let mut g = reduced.clone();
    let mut t: TreeEdges = tree.to_vec();
    for step in steps.iter().rev() {
        t = reconstruct_tree(&g, step, &t)?;
        step.invert(&mut g)?;
    }
    Ok((g, t))
}

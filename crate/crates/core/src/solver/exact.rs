use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::tree::TreeEdges;

pub const DEFAULT_CAP: usize = 30;

/// Maximum number of leaves over all spanning trees, with a witness tree.
///
/// For n ≥ 3 this is n minus the size of a minimum connected dominating set.
/// Internal-set sizes are tried upward from a degree-sum lower bound and
/// connected sets are enumerated without repetition.
pub fn exact_max_leaves(g: &Graph) -> Result<(usize, TreeEdges)> {
    exact_max_leaves_capped(g, DEFAULT_CAP)
}

pub fn exact_max_leaves_capped(g: &Graph, cap: usize) -> Result<(usize, TreeEdges)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { required: 2, found: n });
    }
    if n > cap.min(64) {
        return Err(Error::Capacity { n, cap: cap.min(64) });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let (adj, ids) = g.adjacency_masks().expect("n <= 64");
    if n == 2 {
        return Ok((2, vec![(ids[0], ids[1])]));
    }
    let d = min_cds(&adj);
    let tree = tree_from_cds(&adj, d);
    let tree: TreeEdges = tree.into_iter().map(|(a, b)| (ids[a].min(ids[b]), ids[a].max(ids[b]))).collect();
    Ok((n - d.count_ones() as usize, tree))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Smallest size allowed by Σ deg_T over internal vertices = n + s − 2.
fn size_lower_bound(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut degs: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut sum = 0;
    for s in 1..=n {
        sum += degs[s - 1];
        if sum + 2 >= n + s {
            return s;
        }
    }
    n
}

fn min_cds(adj: &[u64]) -> u64 {
    let n = adj.len();
    let all = full_mask(n);
    let maxdeg = adj.iter().map(|m| m.count_ones()).max().unwrap_or(0) as usize;
    for s in size_lower_bound(adj)..=n {
        let mut search = Search { adj, all, target: s, maxdeg, found: None };
        for (v, &nv) in adj.iter().enumerate() {
            let above = all & !full_mask(v + 1);
            let sub = 1u64 << v;
            search.extend(sub, nv | sub, nv & above, above);
            if let Some(d) = search.found {
                return d;
            }
        }
    }
    all
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    target: usize,
    maxdeg: usize,
    found: Option<u64>,
}

impl Search<'_> {
    // Enumerates each connected set with minimum vertex `root` once:
    // `ext` holds candidates, `allowed` the ids above the root.
    fn extend(&mut self, sub: u64, dom: u64, mut ext: u64, allowed: u64) {
        if self.found.is_some() {
            return;
        }
        let size = sub.count_ones() as usize;
        if size == self.target {
            if dom == self.all {
                self.found = Some(sub);
            }
            return;
        }
        let remaining = self.target - size;
        let undominated = (self.all & !dom).count_ones() as usize;
        if undominated > remaining * self.maxdeg {
            return;
        }
        let excl_base = sub | dom;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let new_ext = ext | (self.adj[w] & allowed & !excl_base);
            self.extend(sub | (1 << w), dom | self.adj[w] | (1 << w), new_ext, allowed);
            if self.found.is_some() {
                return;
            }
        }
    }
}

fn tree_from_cds(adj: &[u64], d: u64) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut edges = Vec::with_capacity(n - 1);
    let root = d.trailing_zeros() as usize;
    let mut reached = 1u64 << root;
    let mut queue = vec![root];
    while let Some(v) = queue.pop() {
        let mut nb = adj[v] & d & !reached;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            reached |= 1 << u;
            edges.push((v, u));
            queue.push(u);
        }
    }
    for (u, &nu) in adj.iter().enumerate() {
        if reached >> u & 1 == 0 {
            let p = (nu & d).trailing_zeros() as usize;
            edges.push((p, u));
        }
    }
    edges
}

#![allow(dead_code)]

use leafspan::graph::{Graph, VertexId};
use rand::Rng;

/// Connectivity of the vertex set `mask` under adjacency masks.
pub fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

/// Brute-force max leaves: n minus the smallest connected dominating set.
pub fn brute_max_leaves(g: &Graph) -> usize {
    let (adj, _) = g.adjacency_masks().expect("small simple graph");
    let n = adj.len();
    if n == 2 {
        return 2;
    }
    let full = (1u64 << n) - 1;
    let mut best = 0;
    for mask in 1..=full {
        let dominated = (0..n).filter(|&v| mask >> v & 1 == 1).fold(mask, |acc, v| acc | adj[v]);
        if dominated == full && mask_connected(&adj, mask) {
            best = best.max(n - mask.count_ones() as usize);
        }
    }
    best
}

/// Largest |L| + |D| over sets D of degree-at-most-2 vertices whose complement
/// with L is a nonempty connected set dominating L and D. `None` when no such
/// set exists. Assumes a connected simple graph with at least three vertices.
pub fn forced_leaf_oracle(g: &Graph, l: &[VertexId]) -> Option<usize> {
    let (adj, ids) = g.adjacency_masks().expect("small simple graph");
    let n = adj.len();
    let local = |v: VertexId| ids.iter().position(|&x| x == v).expect("vertex present");
    let l_mask = l.iter().fold(0u64, |acc, &v| acc | 1 << local(v));
    let low: Vec<usize> = (0..n).filter(|&i| g.degree(ids[i]) <= 2).collect();
    let full = (1u64 << n) - 1;
    let mut best: Option<usize> = None;
    for sub in 0u64..(1 << low.len()) {
        let d_mask = low.iter().enumerate().filter(|&(j, _)| sub >> j & 1 == 1).fold(0u64, |acc, (_, &i)| acc | 1 << i);
        let lam = l_mask | d_mask;
        let inner = full & !lam;
        if !mask_connected(&adj, inner) {
            continue;
        }
        let dominated = (0..n).all(|v| lam >> v & 1 == 0 || adj[v] & inner != 0);
        if dominated {
            let val = lam.count_ones() as usize;
            best = Some(best.map_or(val, |b: usize| b.max(val)));
        }
    }
    best
}

/// Adds two fresh inner vertices forming a diamond with tips `c1` and `c2`.
pub fn plant_diamond(g: &mut Graph, c1: VertexId, c2: VertexId) {
    let x = g.add_vertex();
    let y = g.add_vertex();
    for (u, v) in [(c1, x), (c1, y), (x, y), (x, c2), (y, c2)] {
        g.add_edge(u, v).unwrap();
    }
}

/// Adds a five-vertex blossom body hanging between connectors `c1` and `c2`.
pub fn plant_blossom(g: &mut Graph, c1: VertexId, c2: VertexId) {
    let b = g.add_vertex();
    let a: Vec<VertexId> = (0..4).map(|_| g.add_vertex()).collect();
    for &ai in &a {
        g.add_edge(b, ai).unwrap();
    }
    for (u, v) in [(a[0], a[1]), (a[2], a[3]), (c1, a[0]), (c1, a[3]), (c2, a[1]), (c2, a[2])] {
        g.add_edge(u, v).unwrap();
    }
}

/// Two distinct vertices of `g`.
pub fn two_vertices(g: &Graph, rng: &mut impl Rng) -> (VertexId, VertexId) {
    let vs: Vec<VertexId> = g.vertices().collect();
    let i = rng.gen_range(0..vs.len());
    let mut j = rng.gen_range(0..vs.len() - 1);
    if j >= i {
        j += 1;
    }
    (vs[i], vs[j])
}

pub fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Isomorphism of small simple graphs by backtracking over vertex maps.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let (Some((aa, _)), Some((bb, _))) = (a.adjacency_masks(), b.adjacency_masks()) else { return false };
    if aa.len() != bb.len() || a.m() != b.m() {
        return false;
    }
    fn extend(aa: &[u64], bb: &[u64], map: &mut Vec<usize>, used: u64) -> bool {
        let i = map.len();
        if i == aa.len() {
            return true;
        }
        for j in 0..bb.len() {
            if used >> j & 1 == 1 || aa[i].count_ones() != bb[j].count_ones() {
                continue;
            }
            let fits = map.iter().enumerate().all(|(p, &q)| (aa[i] >> p & 1) == (bb[j] >> q & 1));
            if fits {
                map.push(j);
                if extend(aa, bb, map, used | 1 << j) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(&aa, &bb, &mut Vec::new(), 0)
}

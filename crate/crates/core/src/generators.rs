//! Named graph families and random invariant-satisfying graphs.

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph, VertexId};
use crate::patterns::{check_invariant, Violation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Role ids of the canonical blossom and of G7.
pub const G7_B: VertexId = 0;
pub const G7_A1: VertexId = 1;
pub const G7_A2: VertexId = 2;
pub const G7_A3: VertexId = 3;
pub const G7_A4: VertexId = 4;
pub const G7_C1: VertexId = 5;
pub const G7_C2: VertexId = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Necklace { k: usize },
    NecklaceRing { k: usize },
    Blossom,
    G7,
    Q3,
    Flower,
    Flowerbed { i: usize },
    Random { n: usize, min_degree: usize, seed: u64 },
}

pub fn generate(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Necklace { k } => necklace(k),
        FamilySpec::NecklaceRing { k } => necklace_ring(k),
        FamilySpec::Blossom => Ok(blossom()),
        FamilySpec::G7 => Ok(g7()),
        FamilySpec::Q3 => Ok(q3()),
        FamilySpec::Flower => Ok(flower()),
        FamilySpec::Flowerbed { i } => flowerbed(i),
        FamilySpec::Random { n, min_degree, seed } => random_invariant_graph(n, min_degree, seed),
    }
}

pub fn q3() -> Graph {
    let mut es = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            let u = v ^ bit;
            if v < u {
                es.push((v, u));
            }
        }
    }
    Graph::from_edges(8, &es)
}

pub const BLOSSOM_EDGES: [(VertexId, VertexId); 10] = [
    (G7_B, G7_A1),
    (G7_B, G7_A2),
    (G7_B, G7_A3),
    (G7_B, G7_A4),
    (G7_A1, G7_A2),
    (G7_A3, G7_A4),
    (G7_C1, G7_A1),
    (G7_C1, G7_A4),
    (G7_C2, G7_A2),
    (G7_C2, G7_A3),
];

pub fn blossom() -> Graph {
    Graph::from_edges(7, &BLOSSOM_EDGES)
}

/// Blossom plus c1c2 and a1a4.
pub fn g7() -> Graph {
    let mut g = blossom();
    g.add_edge(G7_C1, G7_C2).expect("roles exist");
    g.add_edge(G7_A1, G7_A4).expect("roles exist");
    g
}

/// N_k as a graph together with its two degree-2 end vertices.
pub fn necklace_with_ends(k: usize) -> (Graph, VertexId, VertexId) {
    assert!(k >= 1);
    let mut g = Graph::with_vertices(1);
    let c1 = 0;
    let mut tip = c1;
    for _ in 0..k {
        let x = g.add_vertex();
        let y = g.add_vertex();
        let q = g.add_vertex();
        for (a, b) in [(tip, x), (tip, y), (x, y), (x, q), (y, q)] {
            g.add_edge(a, b).expect("fresh ids");
        }
        tip = q;
    }
    (g, c1, tip)
}

pub fn necklace(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Argument("necklace needs k >= 1".into()));
    }
    Ok(necklace_with_ends(k).0)
}

/// k diamonds in a ring, consecutive tips joined by an edge; cubic with n = 4k.
pub fn necklace_ring(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::Argument("necklace ring needs k >= 2".into()));
    }
    let mut g = Graph::with_vertices(4 * k);
    for i in 0..k {
        let (p, x, y, q) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        for (a, b) in [(p, x), (p, y), (x, y), (x, q), (y, q)] {
            g.add_edge(a, b)?;
        }
        g.add_edge(q, (4 * (i + 1)) % (4 * k))?;
    }
    Ok(g)
}

/// Offsets of the flower roles beyond the blossom.
pub const FLOWER_F1: VertexId = 7;
pub const FLOWER_F2: VertexId = 8;
pub const FLOWER_H: VertexId = 9;
pub const FLOWER_S: VertexId = 10;
pub const FLOWER_G1: VertexId = 11;
pub const FLOWER_G2: VertexId = 12;

fn add_flower(g: &mut Graph) -> (VertexId, VertexId) {
    let base = g.id_bound();
    for _ in 0..13 {
        g.add_vertex();
    }
    let r = |v: VertexId| base + v;
    for &(a, b) in BLOSSOM_EDGES.iter() {
        g.add_edge(r(a), r(b)).expect("fresh ids");
    }
    let extra = [
        (G7_C1, FLOWER_F1),
        (G7_C2, FLOWER_F2),
        (FLOWER_F1, FLOWER_F2),
        (FLOWER_F1, FLOWER_H),
        (FLOWER_F2, FLOWER_H),
        (FLOWER_H, FLOWER_S),
        (FLOWER_S, FLOWER_G1),
        (FLOWER_S, FLOWER_G2),
        (FLOWER_G1, FLOWER_G2),
    ];
    for (a, b) in extra {
        g.add_edge(r(a), r(b)).expect("fresh ids");
    }
    (r(FLOWER_G1), r(FLOWER_G2))
}

/// A single 13-vertex flower; g1 and g2 are left at degree 2.
pub fn flower() -> Graph {
    let mut g = Graph::new();
    add_flower(&mut g);
    g
}

/// i flowers joined by a cycle of length 2i through their g-vertices.
pub fn flowerbed(i: usize) -> Result<Graph> {
    if i < 2 {
        return Err(Error::Argument("flowerbed needs i >= 2".into()));
    }
    let mut g = Graph::new();
    let gs: Vec<(VertexId, VertexId)> = (0..i).map(|_| add_flower(&mut g)).collect();
    for j in 0..i {
        g.add_edge(gs[j].1, gs[(j + 1) % i].0)?;
    }
    Ok(g)
}

/// Random connected simple graph on `n` vertices with roughly `extra` edges beyond a tree.
pub fn random_connected_graph(n: usize, extra: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::with_vertices(n);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).expect("ids");
    }
    let max_m = n * (n - 1) / 2;
    let mut tries = 0;
    while g.m() < max_m && g.m() < n - 1 + extra && tries < 50 * (extra + 1) {
        tries += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).expect("ids");
        }
    }
    g
}

fn raise_min_degree(g: &mut Graph, target: usize, rng: &mut impl Rng) -> bool {
    let n = g.id_bound();
    for _ in 0..20 * n * target.max(1) {
        let low: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) < target).collect();
        let Some(&v) = low.choose(rng) else { return true };
        let mut cands: Vec<VertexId> = g.vertices().filter(|&u| u != v && !g.has_edge(u, v)).collect();
        // prefer other deficient vertices so degrees stay low overall
        let deficient: Vec<VertexId> = cands.iter().copied().filter(|&u| g.degree(u) < target).collect();
        if !deficient.is_empty() {
            cands = deficient;
        }
        let Some(&u) = cands.choose(rng) else { return false };
        g.add_edge(u, v).expect("ids");
    }
    g.vertices().all(|v| g.degree(v) >= target)
}

/// Adds an edge out of the witness structure from one of its inner vertices.
fn repair(g: &mut Graph, violation: &Violation, rng: &mut impl Rng) -> bool {
    let inner: Vec<VertexId> = match violation {
        Violation::TwoNecklace { witness } => witness.vertices[1..witness.vertices.len() - 1].to_vec(),
        Violation::TwoBlossom { witness } => witness.vertices[..5].to_vec(),
        _ => return false,
    };
    let Some(&v) = inner.choose(rng) else { return false };
    let cands: Vec<VertexId> = g.vertices().filter(|&u| u != v && !g.has_edge(u, v)).collect();
    let Some(&u) = cands.choose(rng) else { return false };
    g.add_edge(u, v).expect("ids");
    true
}

/// Connected simple graph satisfying the invariant, deterministic per seed.
/// With `min_degree >= 3` every vertex gets degree at least 3; smaller targets
/// produce sparser graphs that usually contain degree-1 or degree-2 vertices.
pub fn random_invariant_graph(n: usize, min_degree: usize, seed: u64) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Argument("random graphs need n >= 4".into()));
    }
    if min_degree >= n {
        return Err(Error::Argument(format!("minimum degree {min_degree} impossible on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 200;
    let mut last = String::new();
    for _ in 0..budget {
        let extra = if min_degree >= 3 { rng.gen_range(0..=n / 2) } else { rng.gen_range(0..=n / 3) };
        let mut g = random_connected_graph(n, extra, &mut rng);
        if !raise_min_degree(&mut g, min_degree, &mut rng) {
            last = "could not reach the minimum degree".into();
            continue;
        }
        for _ in 0..4 * n {
            let verdict = check_invariant(&g);
            match verdict.violation {
                None => {
                    debug_assert!(is_connected(&g));
                    return Ok(g);
                }
                Some(v) => {
                    last = format!("{v:?}");
                    if !repair(&mut g, &v, &mut rng) {
                        break;
                    }
                }
            }
        }
    }
    Err(Error::SamplingExhausted { attempts: budget, detail: last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bridges_and_cut_vertices, connected_components};
    use crate::patterns::{find_2blossoms, find_2necklaces, find_cubic_diamonds};

    #[test]
    fn cube_is_cubic_bipartite() {
        let g = q3();
        assert_eq!((g.n(), g.m()), (8, 12));
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(g.edges().all(|(_, u, v)| (u.count_ones() + v.count_ones()) % 2 == 1));
    }

    #[test]
    fn g7_degrees() {
        let g = g7();
        let mut ds: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(ds, vec![4, 4, 4, 3, 3, 3, 3]);
        assert_eq!(g.n_ge3(), 7);
        assert_eq!(connected_components(&g).len(), 1);
    }

    #[test]
    fn necklace_shapes() {
        let n2 = necklace(2).unwrap();
        assert_eq!(n2.n(), 7);
        assert_eq!(n2.vertices().filter(|&v| n2.degree(v) == 2).count(), 2);
        let ring = necklace_ring(3).unwrap();
        assert_eq!(ring.n(), 12);
        assert!(ring.vertices().all(|v| ring.degree(v) == 3));
        assert_eq!(find_cubic_diamonds(&ring).len(), 3);
        assert!(necklace(0).is_err());
    }

    #[test]
    fn flowerbed_contract() {
        let r5 = flowerbed(5).unwrap();
        assert_eq!(r5.n(), 65);
        let r2 = flowerbed(2).unwrap();
        assert_eq!(r2.n(), 26);
        assert_eq!(r2.min_degree(), Some(3));
        let high: Vec<VertexId> = r2.vertices().filter(|&v| r2.degree(v) != 3).collect();
        assert_eq!(high, vec![G7_B, 13 + G7_B]);
        assert!(high.iter().all(|&v| r2.degree(v) == 4));
        let cuts = bridges_and_cut_vertices(&r2).cut_vertices;
        assert!(cuts.contains(&FLOWER_H) && cuts.contains(&FLOWER_S));
        let mut h = r2.clone();
        h.remove_vertex(FLOWER_F1).unwrap();
        h.remove_vertex(FLOWER_F2).unwrap();
        assert_eq!(connected_components(&h).len(), 2);
        assert_eq!(find_2blossoms(&r2).len(), 2);
        assert!(find_2necklaces(&r2).is_empty());
        assert!(flowerbed(1).is_err());
    }

    #[test]
    fn flower_with_pendant_has_h_and_s_as_cuts() {
        let mut f = flower();
        let p = f.add_vertex();
        f.add_edge(FLOWER_G1, p).unwrap();
        let cuts = bridges_and_cut_vertices(&f).cut_vertices;
        assert!(cuts.contains(&FLOWER_H) && cuts.contains(&FLOWER_S));
    }

    #[test]
    fn random_graphs_satisfy_invariant() {
        for seed in 0..100 {
            let g = random_invariant_graph(12, 3, seed).unwrap();
            assert!(is_connected(&g));
            assert!(g.is_simple());
            assert!(g.min_degree().unwrap() >= 3);
            assert!(check_invariant(&g).holds);
        }
        let a = random_invariant_graph(9, 2, 7).unwrap();
        let b = random_invariant_graph(9, 2, 7).unwrap();
        assert!(a.same_structure(&b));
        assert!(random_invariant_graph(3, 1, 0).is_err());
    }
}

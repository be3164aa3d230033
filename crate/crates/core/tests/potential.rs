use leafspan::generators::{self, random_connected_graph, random_invariant_graph};
use leafspan::graph::{Graph, SubgraphF, VertexId};
use leafspan::potential::{
    apply_extension, expand, extension_delta, extension_twice_gain, greedy_spanning_tree, leaf_potential, try_augment,
    Extension,
};
use leafspan::solver::exact_max_leaves;
use leafspan::tree::{edge_ids, leaf_count, verify_spanning_tree};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random subtree of `g` grown from a random root.
fn random_subtree(g: &Graph, rng: &mut impl Rng, size: usize) -> SubgraphF {
    let vs: Vec<VertexId> = g.vertices().collect();
    let root = vs[rng.gen_range(0..vs.len())];
    let mut f = SubgraphF::empty(g);
    f.add_vertex(g, root);
    for _ in 0..size {
        let frontier: Vec<_> = g.edges().filter(|&(_, u, v)| f.contains_vertex(u) != f.contains_vertex(v)).collect();
        if frontier.is_empty() {
            break;
        }
        let (e, _, _) = frontier[rng.gen_range(0..frontier.len())];
        f.add_edge(g, e);
    }
    f
}

#[test]
fn greedy_meets_the_bound_on_named_graphs() {
    for g in [generators::g7(), generators::q3(), generators::flowerbed(2).unwrap()] {
        let (t, report) = greedy_spanning_tree(&g).unwrap();
        verify_spanning_tree(&g, &t).unwrap();
        assert_eq!(report.leaves, leaf_count(&t));
        assert!(3 * leaf_count(&t) >= g.n_ge3() + 4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_returns_a_spanning_tree(seed in any::<u64>(), n in 2usize..40, extra in 0usize..30) {
        let g = random_connected_graph(n, extra, &mut ChaCha8Rng::seed_from_u64(seed));
        let (t, report) = greedy_spanning_tree(&g).unwrap();
        verify_spanning_tree(&g, &t).unwrap();
        prop_assert_eq!(report.leaves, leaf_count(&t));
        prop_assert_eq!(report.cc, 1);
        if n <= 14 {
            prop_assert!(leaf_count(&t) <= exact_max_leaves(&g).unwrap().0);
        }
    }

    #[test]
    fn greedy_meets_the_lower_bound_on_invariant_graphs(seed in 0u64..100_000, n in 6usize..=16, d in 1usize..=3) {
        let g = random_invariant_graph(n, d, seed).unwrap();
        let (t, _) = greedy_spanning_tree(&g).unwrap();
        let plus = if g.min_degree().unwrap() >= 3 { 4 } else { 6 };
        prop_assert!(3 * leaf_count(&t) >= g.n_ge3() + plus, "{} leaves, n3 {}", leaf_count(&t), g.n_ge3());
    }

    #[test]
    fn local_delta_agrees_with_recomputation(seed in any::<u64>(), n in 4usize..20, extra in 0usize..20, size in 0usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(n, extra, &mut rng);
        let f = random_subtree(&g, &mut rng, size);
        let before = leaf_potential(&g, &f);
        for v in f.vertices().collect::<Vec<_>>() {
            let edges: Vec<_> = g.incident(v).iter().copied().filter(|&e| !f.contains_vertex(g.other_end(e, v))).collect();
            let mut seen = Vec::new();
            let edges: Vec<_> = edges.into_iter().filter(|&e| {
                let w = g.other_end(e, v);
                let fresh = !seen.contains(&w);
                seen.push(w);
                fresh
            }).collect();
            if edges.is_empty() {
                continue;
            }
            let ext = Extension { new_root: None, edges };
            let (d, opens) = extension_delta(&g, &f, &ext);
            prop_assert!(!opens);
            let after = leaf_potential(&g, &apply_extension(&g, &f, &ext));
            prop_assert_eq!(d.x, after.nongoob as i64 - before.nongoob as i64);
            prop_assert_eq!(d.y, after.leaves as i64 - before.leaves as i64);
            prop_assert_eq!(d.z, after.dead_leaves as i64 - before.dead_leaves as i64);
            prop_assert_eq!(extension_twice_gain(&g, &f, &ext), after.twice_value - before.twice_value);
            prop_assert_eq!(&expand(&g, &f, v), &apply_extension(&g, &f, &ext));
        }
    }

    #[test]
    fn augmentations_never_lower_the_potential(seed in any::<u64>(), n in 4usize..24, extra in 0usize..24, size in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(n, extra, &mut rng);
        let mut f = random_subtree(&g, &mut rng, size);
        for _ in 0..n {
            let before = leaf_potential(&g, &f).twice_value;
            let Some((next, _)) = try_augment(&g, &f) else { break };
            prop_assert!(leaf_potential(&g, &next).twice_value >= before);
            prop_assert!(next.vertex_count() > f.vertex_count());
            f = next;
        }
    }
}

#[test]
fn spanning_potential_follows_the_leaf_count() {
    let g = generators::flowerbed(2).unwrap();
    let (t, _) = greedy_spanning_tree(&g).unwrap();
    let ids = edge_ids(&g, &t).unwrap();
    let all: Vec<VertexId> = g.vertices().collect();
    let f = SubgraphF::from_parts(&g, &all, &ids).unwrap();
    let r = leaf_potential(&g, &f);
    assert_eq!(r.dead_leaves, r.leaves);
    assert_eq!(r.twice_value, 6 * leaf_count(&t) as i64 - 2 * g.n_ge3() as i64 - 12);
}

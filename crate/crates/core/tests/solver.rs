mod common;

use common::{binom, brute_max_leaves, forced_leaf_oracle};
use leafspan::generators::{self, random_connected_graph};
use leafspan::graph::{suppress, Graph, VertexId};
use leafspan::solver::{
    achievable_leaves, exact_max_leaves, exact_max_leaves_capped, fpt_decide, fpt_decide_with, Answer, Colex, FptOptions,
    ForcedLeafQuery,
};
use leafspan::tree::{leaf_count, verify_spanning_tree};
use leafspan::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_from(seed: u64, n: usize, extra: usize) -> Graph {
    random_connected_graph(n, extra, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[test]
fn named_optima() {
    assert_eq!(exact_max_leaves(&generators::g7()).unwrap().0, 4);
    assert_eq!(exact_max_leaves(&generators::q3()).unwrap().0, 4);
    assert_eq!(exact_max_leaves(&generators::necklace_ring(3).unwrap()).unwrap().0, 5);
    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
    assert_eq!(exact_max_leaves(&star).unwrap().0, 4);
}

#[test]
fn exact_solver_rejects_bad_input() {
    assert!(matches!(exact_max_leaves(&Graph::with_vertices(1)), Err(Error::TooSmall { .. })));
    assert_eq!(exact_max_leaves(&Graph::from_edges(4, &[(0, 1), (2, 3)])).unwrap_err(), Error::Disconnected);
    let big = generators::flowerbed(3).unwrap();
    assert!(matches!(exact_max_leaves_capped(&big, 30), Err(Error::Capacity { .. })));
}

#[test]
fn colex_covers_every_subset_once() {
    for n in 0..9 {
        for k in 0..=n {
            let all: Vec<Vec<usize>> = Colex::new(n, k).collect();
            assert_eq!(all.len() as u64, binom(n as u64, k as u64));
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
    }
}

#[test]
fn witness_is_optional() {
    let g = generators::q3();
    let v = fpt_decide_with(&g, 4, FptOptions { threads: Some(2), witness: false }).unwrap();
    assert_eq!((v.answer, v.witness), (Answer::Yes, None));
}

#[test]
fn multigraph_input_is_rejected() {
    let mut g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
    g.add_edge(0, 1).unwrap();
    assert!(matches!(fpt_decide(&g, 2), Err(Error::Argument(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_matches_brute_force(seed in any::<u64>(), n in 2usize..=10, extra in 0usize..12) {
        let g = graph_from(seed, n, extra);
        let (best, t) = exact_max_leaves(&g).unwrap();
        verify_spanning_tree(&g, &t).unwrap();
        prop_assert_eq!(leaf_count(&t), best);
        prop_assert_eq!(best, brute_max_leaves(&g));
    }

    #[test]
    fn fpt_matches_brute_force(seed in any::<u64>(), n in 2usize..=11, extra in 0usize..10) {
        let g = graph_from(seed, n, extra);
        let best = brute_max_leaves(&g);
        for k in 1..=n {
            let v = fpt_decide(&g, k).unwrap();
            prop_assert_eq!(v.answer == Answer::Yes, best >= k, "k = {}", k);
            if let Some(t) = v.witness {
                verify_spanning_tree(&g, &t).unwrap();
                prop_assert!(leaf_count(&t) >= k);
            }
            let k2 = v.stats.k_after_preprocess as u64;
            prop_assert!(v.stats.subsets_enumerated <= k2.max(1) * binom(3 * k2, k2));
        }
    }

    #[test]
    fn forced_leaf_value_matches_exhaustive_search(seed in any::<u64>(), n in 3usize..=10, extra in 0usize..8, pick in any::<u64>()) {
        let g = graph_from(seed, n, extra);
        let high: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
        prop_assume!(!high.is_empty());
        let l: Vec<VertexId> = high.iter().copied().enumerate().filter(|&(i, _)| pick >> i & 1 == 1).map(|(_, v)| v).take(4).collect();
        let s = suppress(&g).unwrap();
        let q = ForcedLeafQuery::new(&s, l.clone(), 0).unwrap();
        prop_assert_eq!(achievable_leaves(&q), forced_leaf_oracle(&g, &l));
    }

    #[test]
    fn thread_count_does_not_change_the_verdict(seed in any::<u64>(), n in 6usize..=12, k in 3usize..7) {
        let g = graph_from(seed, n, n / 2);
        let one = fpt_decide_with(&g, k, FptOptions { threads: Some(1), witness: true }).unwrap();
        let four = fpt_decide_with(&g, k, FptOptions { threads: Some(4), witness: true }).unwrap();
        prop_assert_eq!(one, four);
    }
}

#[test]
fn forced_query_validates_its_set() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
    let s = suppress(&g).unwrap();
    assert!(ForcedLeafQuery::new(&s, vec![1], 0).is_err());
    assert!(ForcedLeafQuery::new(&s, vec![0], 0).is_ok());
}

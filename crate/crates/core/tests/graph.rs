use leafspan::generators::{self, random_connected_graph};
use leafspan::graph::{bridges_and_cut_vertices, connected_components, is_connected, parse_graph, suppress, write_graph, Graph};
use leafspan::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn components_without(g: &Graph, edge: Option<usize>, vertex: Option<usize>) -> usize {
    let mut h = g.clone();
    if let Some(e) = edge {
        h.remove_edge(e).unwrap();
    }
    if let Some(v) = vertex {
        h.remove_vertex(v).unwrap();
    }
    connected_components(&h).len()
}

#[test]
fn parse_reports_line_numbers() {
    assert!(matches!(parse_graph(b"p 3 1\ne 1 4\n"), Err(Error::VertexRange { line: 2, vertex: 4, n: 3 })));
    assert!(matches!(parse_graph(b"c hi\np 2 1\ne 2 2\n"), Err(Error::LoopInInput { line: 3 })));
    assert!(matches!(parse_graph(b"e 1 2\n"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(parse_graph(b"p 2 2\ne 1 2\n"), Err(Error::Parse { line: 0, .. })));
    assert!(matches!(parse_graph(b"p 2 1\nx 1 2\n"), Err(Error::Parse { line: 2, .. })));
    let g = parse_graph(b"c parallel edges are kept\np edge 2 2\ne 1 2\ne 2 1\n").unwrap();
    assert_eq!((g.n(), g.m(), g.multiplicity(0, 1)), (2, 2, 2));
}

#[test]
fn suppressing_a_theta_graph() {
    // two degree-3 vertices joined by paths with 0, 1 and 3 inner vertices
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 5), (5, 1)]);
    let s = suppress(&g).unwrap();
    assert_eq!(s.vertices, vec![0, 1]);
    let mut costs: Vec<(usize, usize)> = s.edges.iter().map(|e| (e.internal_count(), e.cost())).collect();
    costs.sort_unstable();
    assert_eq!(costs, vec![(0, 0), (1, 1), (3, 2)]);
    assert!(s.expand(g.id_bound()).same_structure(&g));
}

#[test]
fn pure_cycle_components_cannot_be_suppressed() {
    let mut g = generators::q3();
    let a = g.add_vertex();
    let b = g.add_vertex();
    let c = g.add_vertex();
    for (u, v) in [(a, b), (b, c), (c, a)] {
        g.add_edge(u, v).unwrap();
    }
    assert!(matches!(suppress(&g), Err(Error::PureCycle(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 1usize..30, extra in 0usize..30) {
        let g = random_connected_graph(n, extra, &mut ChaCha8Rng::seed_from_u64(seed));
        let back = parse_graph(write_graph(&g).as_bytes()).unwrap();
        prop_assert!(back.same_structure(&g));
    }

    #[test]
    fn bridges_and_cut_vertices_match_deletion(seed in any::<u64>(), n in 2usize..16, extra in 0usize..8) {
        let mut g = random_connected_graph(n, extra, &mut ChaCha8Rng::seed_from_u64(seed));
        if n > 3 {
            g.add_edge(0, 1).unwrap();
        }
        let report = bridges_and_cut_vertices(&g);
        let base = connected_components(&g).len();
        for (e, _, _) in g.edges() {
            prop_assert_eq!(report.bridges.contains(&e), components_without(&g, Some(e), None) > base);
        }
        for v in g.vertices() {
            prop_assert_eq!(report.cut_vertices.contains(&v), components_without(&g, None, Some(v)) > base);
        }
    }

    #[test]
    fn suppression_keeps_degrees_and_paths(seed in any::<u64>(), n in 3usize..25, extra in 0usize..6) {
        let g = random_connected_graph(n, extra, &mut ChaCha8Rng::seed_from_u64(seed));
        let s = suppress(&g).unwrap();
        if g.n_ge3() == 0 {
            prop_assert!(s.is_empty());
            return Ok(());
        }
        for &v in &s.vertices {
            prop_assert!(g.degree(v) != 2);
            prop_assert_eq!(s.degree(v), g.degree(v));
        }
        let inner: usize = s.edges.iter().map(|e| e.internal_count()).sum();
        prop_assert_eq!(inner + s.vertices.len(), g.n());
        prop_assert_eq!(s.edges.iter().map(|e| e.host_edges.len()).sum::<usize>(), g.m());
        for e in &s.edges {
            prop_assert!(e.internal.iter().all(|&x| g.degree(x) == 2));
            prop_assert_eq!(e.cost(), e.internal_count().min(2));
        }
        prop_assert!(s.expand(g.id_bound()).same_structure(&g));
        prop_assert!(is_connected(&g));
    }
}

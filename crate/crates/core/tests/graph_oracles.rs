use powergraph::graph::stoer_wagner;
use powergraph::{EdgeSet, Error, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(density)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Smallest vertex set whose removal disconnects the graph or leaves one vertex.
fn kappa_by_subsets(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    let mut best = n - 1;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let removed: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let rest = g.remove_vertices(&removed).unwrap();
        if rest.vertex_count() >= 2 && !rest.is_connected() {
            best = size;
        }
    }
    best
}

/// Smallest edge set whose removal disconnects the graph.
fn kappa_prime_by_subsets(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edge_set().into_iter().collect();
    if g.vertex_count() < 2 || !g.is_connected() {
        return 0;
    }
    let mut best = edges.len();
    for mask in 0u32..(1 << edges.len()) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let cut: EdgeSet = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if !g.remove_edges(&cut).unwrap().is_connected() {
            best = size;
        }
    }
    best
}

#[test]
fn connectivity_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..300 {
        let n = rng.gen_range(1..=9);
        let density = rng.gen_range(0.2..0.95);
        let g = random_graph(&mut rng, n, density);
        let k = kappa_by_subsets(&g);
        assert_eq!(g.vertex_connectivity(), k, "round {round}");
        assert_eq!(g.vertex_connectivity_twin_reduced(), k, "round {round}");
        if g.edge_count() <= 14 {
            let kp = kappa_prime_by_subsets(&g);
            assert_eq!(g.edge_connectivity(), kp, "round {round}");
            assert_eq!(g.edge_connectivity_by_flows(), kp, "round {round}");
        }
    }
}

#[test]
fn routes_agree_on_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..120 {
        let n = rng.gen_range(2..=60);
        let density = rng.gen_range(0.05..0.9);
        let g = random_graph(&mut rng, n, density);
        let (k, kp) = (g.vertex_connectivity(), g.edge_connectivity());
        assert_eq!(kp, g.edge_connectivity_by_flows(), "round {round}");
        assert_eq!(k, g.vertex_connectivity_twin_reduced(), "round {round}");
        // Whitney
        let delta = g.min_degree().unwrap().0;
        assert!(k <= kp && kp <= delta, "round {round}: {k} {kp} {delta}");
        if let Some(cut) = g.min_edge_cut() {
            assert_eq!(cut.len(), kp);
            if kp > 0 {
                assert!(g.is_disconnecting(&cut).unwrap());
            }
        }
        if let Some(sep) = g.minimum_separating_set() {
            if g.is_connected() {
                assert_eq!(sep.len(), k, "round {round}");
                assert!(g.is_separating(&sep).unwrap(), "round {round}");
            }
        }
    }
}

#[test]
fn diameter_two_graphs_have_edge_connectivity_equal_to_min_degree() {
    // a universal vertex forces diameter at most 2
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.gen_range(2..=40);
        let density = rng.gen_range(0.0..0.7);
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        edges.extend((1..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(density)));
        let g = Graph::from_edges(n, edges).unwrap();
        assert_eq!(g.edge_connectivity(), g.min_degree().unwrap().0);
    }
}

#[test]
fn stoer_wagner_weighted_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let mut w = vec![vec![0u64; n]; n];
        for (u, v) in (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))) {
            let x = if rng.gen_bool(0.6) { rng.gen_range(1..10) } else { 0 };
            w[u][v] = x;
            w[v][u] = x;
        }
        let brute = (1u32..(1 << n) - 1)
            .map(|mask| {
                let side = |v: usize| mask >> v & 1 == 1;
                (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| side(u) && !side(v)).map(|(u, v)| w[u][v]).sum::<u64>()
            })
            .min()
            .unwrap();
        let (cut, side) = stoer_wagner(&w);
        assert_eq!(cut, brute);
        let crossing: u64 = side.iter().flat_map(|&u| (0..n).filter(|v| !side.contains(v)).map(move |v| (u, v))).map(|(u, v)| w[u][v]).sum();
        assert_eq!(crossing, cut);
    }
}

#[test]
fn small_named_graphs() {
    let petersen = Graph::from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )
    .unwrap();
    assert_eq!((petersen.vertex_connectivity(), petersen.edge_connectivity()), (3, 3));
    let path = Graph::path(5);
    assert_eq!((path.vertex_connectivity(), path.edge_connectivity()), (1, 1));
    let two_triangles = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    assert_eq!(two_triangles.vertex_connectivity(), 1);
    assert_eq!(two_triangles.minimum_separating_set().unwrap().to_vec(), vec![2]);
    assert_eq!(two_triangles.edge_connectivity(), 2);
}

#[test]
fn validation_errors() {
    assert_eq!(Graph::from_edges(3, [(0, 0)]).unwrap_err(), Error::SelfLoop(0));
    assert!(matches!(Graph::from_edges(3, [(0, 5)]), Err(Error::VertexOutOfRange { .. })));
    let g = Graph::path(3);
    assert_eq!(g.is_disconnecting(&[(0, 2)].into_iter().collect()).unwrap_err(), Error::NotAnEdge(0, 2));
    assert!(g.is_separating(&[7].into_iter().collect()).is_err());
    assert!(Graph::empty(0).min_degree().is_err());
}

#[test]
fn dot_output_is_deterministic() {
    let g = Graph::path(3).with_labels(vec!["e".into(), "a".into(), "a^2".into()]).unwrap();
    let dot = g.to_dot("p3");
    assert_eq!(dot, g.to_dot("p3"));
    assert!(dot.starts_with("graph \"p3\" {"));
    assert!(dot.contains("[label=\"a^2\"]"));
    assert_eq!(dot.matches("--").count(), 2);
}

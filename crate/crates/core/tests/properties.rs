//! Randomized cross-checks between independent implementations and
//! structural invariants of the formulas.

use proptest::prelude::*;

use fankit::*;

/// Random graph strategy: n vertices, each pair present with the given bias.
fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn blossom_matches_branching_oracle(g in graph_strategy(7)) {
        prop_assert_eq!(g.matching_number(), g.matching_number_naive());
    }

    #[test]
    fn fan_detector_matches_naive(g in graph_strategy(8), k in 1usize..=3, r in 2usize..=4) {
        let spec = FanSpec::new(k, r).unwrap();
        prop_assume!(spec.vertex_count() <= g.n());
        let fast = find_fan(&g, spec).is_some();
        let naive = naive_fan_check(&g, spec).unwrap();
        prop_assert_eq!(fast, naive);
    }

    #[test]
    fn fan_detection_monotone_under_edge_addition(g in graph_strategy(8)) {
        // adding an edge never destroys a fan
        let spec = FanSpec::new(2, 3).unwrap();
        prop_assume!(g.n() >= spec.vertex_count());
        if find_fan(&g, spec).is_some() {
            let comp = g.complement();
            if let Some(&(u, v)) = comp.edges().first() {
                let mut edges = g.edges();
                edges.push((u, v));
                let bigger = Graph::from_edges(g.n(), &edges).unwrap();
                prop_assert!(find_fan(&bigger, spec).is_some());
            }
        }
    }

    #[test]
    fn rainbow_reduction_on_distinct_colors(g in graph_strategy(8), k in 1usize..=2, r in 3usize..=4) {
        // under an all-distinct coloring of K_n, a rainbow fan exists in the
        // host graph iff a fan does
        let spec = FanSpec::new(k, r).unwrap();
        prop_assume!(spec.vertex_count() <= g.n());
        let col = EdgeColoring::all_distinct(g.n());
        let rainbow = find_rainbow_fan(&col, Some(&g), spec).unwrap().is_some();
        let plain = find_fan(&g, spec).is_some();
        prop_assert_eq!(rainbow, plain);
    }

    #[test]
    fn turan_count_matches_construction(n in 1usize..=200, p in 1usize..=8) {
        let expected = turan_count(n, p);
        if n <= 120 {
            let g = Graph::turan(n, p).unwrap();
            prop_assert_eq!(g.edge_count(), expected);
        }
        // epsilon identity: 2p*t_p(n) + l(p-l) = (p-1)n^2, l = n mod p
        let l = n % p;
        prop_assert_eq!(2 * p * expected + l * (p - l), (p - 1) * n * n);
    }

    #[test]
    fn bounded_formula_is_monotone(nu in 1usize..=9, delta in 1usize..=9) {
        let f = f_bounded(BoundedPair::new(nu, delta).unwrap());
        prop_assert!(f >= nu * delta);
        prop_assert!(f <= nu * delta + nu);
        if nu > 1 {
            prop_assert!(f >= f_bounded(BoundedPair::new(nu - 1, delta).unwrap()));
        }
        if delta > 1 {
            prop_assert!(f >= f_bounded(BoundedPair::new(nu, delta - 1).unwrap()));
        }
    }

    #[test]
    fn bounded_family_attains_formula(m in 1usize..=8) {
        let g = extremal_bounded_graph(m);
        prop_assert_eq!(g.edge_count(), f_bounded(BoundedPair::new(m, m).unwrap()));
        prop_assert!(g.max_degree() <= m);
        prop_assert!(g.matching_number() <= m);
    }

    #[test]
    fn extremal_construction_is_fan_free(k in 1usize..=3, r in 3usize..=4, n in 6usize..=13) {
        let spec = FanSpec::new(k, r).unwrap();
        if let Ok(g) = construct_extremal_fan_free(n, spec) {
            prop_assert!(find_fan(&g, spec).is_none());
        }
    }

    #[test]
    fn deficiency_domination_monotone_in_b(g in graph_strategy(8), b in 0usize..=3) {
        let n = g.n();
        let half = n / 2;
        let x = VertexSet::range(0..half);
        let y = VertexSet::range(half..n);
        if dominates_with_deficiency(&g, &x, &y, b).unwrap() {
            prop_assert!(dominates_with_deficiency(&g, &x, &y, b + 1).unwrap());
        }
    }

    #[test]
    fn graph_text_round_trip(g in graph_strategy(12)) {
        let text = io::write_graph(&g);
        let back = io::read_graph(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.n(), g.n());
    }

    #[test]
    fn coloring_text_round_trip(n in 2usize..=8, seed in any::<u64>()) {
        let pairs = n * (n - 1) / 2;
        let mut state = seed;
        let colors: Vec<u32> = (0..pairs).map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) % 3) as u32
        }).collect();
        let mut seen = colors.clone();
        seen.sort_unstable();
        seen.dedup();
        prop_assume!(seen.len() == 3 || pairs < 3);
        prop_assume!(seen.iter().copied().eq(0..seen.len() as u32));
        let col = EdgeColoring::new(n, seen.len() as u32, colors).unwrap();
        let text = io::write_coloring(&col);
        let back = io::read_coloring(&text).unwrap();
        prop_assert_eq!(io::write_coloring(&back), text);
    }
}

#[test]
fn representative_subgraph_preserves_color_classes() {
    // the representative subgraph has exactly one edge per color, each of
    // that color
    let col = lower_bound_coloring(9, FanSpec::new(1, 3).unwrap()).unwrap();
    let rep = representative_subgraph(&col).unwrap();
    assert_eq!(rep.edge_count() as u32, col.num_colors());
    let mut seen = std::collections::HashSet::new();
    for (u, v) in rep.edges() {
        assert!(seen.insert(col.color(u, v)));
    }
}

use proptest::prelude::*;

use ecckit::cli::{format_graph, parse_graph, GraphFormat};
use ecckit::gen::satisfies_theorem1;
use ecckit::*;

fn alpha_two(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, d, seed)| gen_alpha_two(&GenSpec::new(GenKind::Alpha2, n, d, seed)).unwrap())
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut rows = vec![vec![false; n]; n];
            for u in 0..n {
                for v in u + 1..n {
                    let b = it.next().unwrap();
                    rows[u][v] = b;
                    rows[v][u] = b;
                }
            }
            Graph::from_fn(n, |u, v| rows[u][v]).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generator_output_has_alpha_two(g in alpha_two(24)) {
        prop_assert!(g.is_alpha_two());
        prop_assert_eq!(g.independence_number().unwrap(), 2);
    }

    #[test]
    fn theorem1_generator_meets_hypotheses(n in 6usize..=20, d in 0.0f64..=1.0, seed in any::<u64>()) {
        let (g, (u, v)) = gen_theorem1_instance(&GenSpec::new(GenKind::Theorem1, n, d, seed)).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert!(satisfies_theorem1(&g, u, v));
    }

    #[test]
    fn dispatch_is_valid_and_bounded(g in alpha_two(14)) {
        let d = cover_dispatch(&g).unwrap();
        prop_assert!(verify_cover(&g, &d.cover).valid);
        if d.report.route != Route::Fallback {
            let (bound, _) = route_bound(d.report.route, g.n(), d.report.dominating_edges.len());
            prop_assert!(d.cover.len() <= bound, "route {} size {} bound {}", d.report.route, d.cover.len(), bound);
        }
    }

    #[test]
    fn exact_is_a_lower_bound(g in alpha_two(9)) {
        let d = cover_dispatch(&g).unwrap();
        let e = exact_ecc(&g, ExactConfig::default()).unwrap();
        prop_assert!(e.ecc <= d.cover.len());
        prop_assert!(e.ecc <= g.n());
        prop_assert!(verify_cover(&g, &e.witness).valid);
    }

    #[test]
    fn w_vertex_covers(g in alpha_two(14)) {
        let n = g.n();
        let c = cover_w_vertices(&g).unwrap();
        prop_assert!(c.iter().all(|k| g.is_clique(k.iter())));
        let mut seen: Vec<usize> = c.iter().flat_map(|k| k.iter()).collect();
        seen.sort_unstable();
        seen.dedup();
        prop_assert_eq!(seen.len(), n);
        prop_assert!(c.len() <= (n + 1).div_ceil(2));
        if n >= 4 && !ecckit::graph::is_five_cycle(&g) {
            let c = cover_w_vertices_improved(&g).unwrap();
            prop_assert!(c.len() <= n.div_ceil(2));
        }
    }

    #[test]
    fn complement_is_an_involution(g in any_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn relabelling_preserves_structure(g in alpha_two(10), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert!(h.is_alpha_two());
        prop_assert_eq!(dominating_edges(&h).len(), dominating_edges(&g).len());
        prop_assert_eq!(h.diameter(), g.diameter());
    }

    #[test]
    fn file_formats_round_trip(g in any_graph(12)) {
        for f in [GraphFormat::Edgelist, GraphFormat::Dimacs] {
            prop_assert_eq!(parse_graph(&format_graph(&g, f), f).unwrap(), g.clone());
        }
    }

    #[test]
    fn dropping_a_needed_clique_breaks_the_cover(g in alpha_two(10)) {
        let e = exact_ecc(&g, ExactConfig::default()).unwrap();
        // A minimum cover has no redundant member.
        for skip in 0..e.witness.len() {
            let rest = CliqueCover::new(e.witness.cliques.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, c)| c.clone()));
            prop_assert!(!verify_cover(&g, &rest).valid);
        }
    }
}

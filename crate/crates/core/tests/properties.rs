use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grundy_core::oracle::{self, grundy_number_exact};
use grundy_core::*;

fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    generate(&GraphFamily::Gnp { n, p }, seed).unwrap().graph
}

fn k_tree(n: usize, k: usize, seed: u64) -> Graph {
    generate(&GraphFamily::KTree { n, k }, seed).unwrap().graph
}

prop_compose! {
    fn any_graph(max_n: usize)(n in 0..=max_n, p in 0.0f64..=1.0, seed in any::<u64>()) -> Graph {
        gnp(n, p, seed)
    }
}

proptest! {
    #[test]
    fn dimacs_round_trip(g in any_graph(40)) {
        prop_assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in any_graph(25)) {
        let c = g.complement();
        prop_assert!(c.validate());
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn first_fit_is_always_grundy(g in any_graph(30), seed in any::<u64>()) {
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let c = first_fit_color(&g, &order).unwrap();
        prop_assert!(is_proper(&g, &c).unwrap());
        prop_assert!(is_grundy_coloring(&g, &c).unwrap());
        prop_assert!(c.num_colors() <= g.max_degree() + 1);
        prop_assert_eq!(c.num_colors(), c.max_color());
    }

    #[test]
    fn chordal_peel_is_verified(n in 1usize..40, k in 1usize..5, seed in any::<u64>()) {
        prop_assume!(n > k);
        let g = k_tree(n, k, seed);
        let peo = perfect_elimination_order(&g).unwrap();
        prop_assert!(verify_peo(&g, &peo).unwrap());
        let waves = elimination_waves(&g).unwrap();
        let flat: Vec<Vertex> = waves.concat();
        prop_assert!(verify_peo(&g, &EliminationOrder::new(flat)).unwrap());
    }

    #[test]
    fn chordality_is_hereditary(n in 2usize..30, k in 1usize..4, seed in any::<u64>()) {
        prop_assume!(n > k);
        let g = k_tree(n, k, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut keep: Vec<Vertex> = g.vertices().collect();
        keep.shuffle(&mut rng);
        keep.truncate(n / 2);
        let (h, _) = g.induced_subgraph(&keep).unwrap();
        prop_assert!(is_chordal(&h));
    }

    #[test]
    fn pruned_grundy_matches_exhaustive(g in any_graph(6)) {
        let limits = OracleLimits::default();
        let a = oracle::grundy_number_with(&g, &limits, oracle::GrundySearch::Exhaustive).unwrap();
        let b = oracle::grundy_number_with(&g, &limits, oracle::GrundySearch::Pruned).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn gamma_dominates_any_first_fit(g in any_graph(7), seed in any::<u64>()) {
        let gamma = grundy_number_exact(&g, &OracleLimits::default()).unwrap();
        let witness = first_fit_color(&g, &gamma.order).unwrap();
        prop_assert_eq!(witness.num_colors(), gamma.gamma);
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(first_fit_color(&g, &order).unwrap().num_colors() <= gamma.gamma);
    }
}

#[test]
fn k_trees_are_chordal() {
    for n in 2..=50 {
        for k in 1..=4usize.min(n - 1) {
            for seed in 0..20 {
                let g = k_tree(n, k, seed);
                assert!(is_chordal(&g), "ktree n={n} k={k} seed={seed}");
                assert_eq!(max_clique_chordal(&g).unwrap().size, k + 1);
            }
        }
    }
}

#[test]
fn apply_change_preserves_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut g = k_tree(15, 2, 1);
    for _ in 0..300 {
        let change = g.random_change(&mut rng);
        g.apply_change(&change).unwrap();
        assert!(g.validate());
    }
}

#[test]
fn two_non_adjacent_simplicial_vertices() {
    let check = |g: &Graph| {
        if g.n() == 0 || g.edge_count() == g.n() * (g.n() - 1) / 2 {
            return;
        }
        let simp = simplicial_vertices(g);
        assert!(
            simp.iter()
                .enumerate()
                .any(|(i, &u)| simp[i + 1..].iter().any(|&v| !g.has_edge(u, v))),
            "{g:?}"
        );
    };
    for n in 0..=6 {
        all_labeled_graphs(n)
            .filter(is_chordal)
            .for_each(|g| check(&g));
    }
    for seed in 0..50 {
        check(&k_tree(20, 1 + seed as usize % 4, seed));
    }
}

#[test]
fn chordal_coloring_is_optimal() {
    let limits = OracleLimits::default();
    for seed in 0..40 {
        let n = 2 + seed as usize % 29;
        let k = 1 + seed as usize % 3;
        if n <= k {
            continue;
        }
        let g = k_tree(n, k, seed);
        let (c, _) = greedy_grundy_chordal(&g, Direction::ReversePeo).unwrap();
        let omega = max_clique_chordal(&g).unwrap().size;
        assert_eq!(c.num_colors(), omega);
        if n <= limits.max_n_coloring {
            assert_eq!(oracle::chromatic_number_exact(&g, &limits).unwrap(), omega);
        }
    }
}

#[test]
fn greedy_sandwich_on_small_chordal_graphs() {
    let limits = OracleLimits::default();
    for n in 1..=6 {
        for g in all_labeled_graphs(n).filter(is_chordal) {
            let chi = oracle::chromatic_number_exact(&g, &limits).unwrap();
            for dir in [Direction::Peo, Direction::ReversePeo] {
                let (c, _) = greedy_grundy_chordal(&g, dir).unwrap();
                assert!(is_grundy_coloring(&g, &c).unwrap());
                assert!(chi <= c.num_colors() && c.num_colors() <= g.max_degree() + 1);
            }
        }
    }
    for seed in 0..60 {
        let g = generate(
            &GraphFamily::PartialKTree {
                n: 9,
                k: 2,
                keep: 0.8,
            },
            seed,
        )
        .unwrap()
        .graph;
        if !is_chordal(&g) {
            continue;
        }
        let chi = oracle::chromatic_number_exact(&g, &limits).unwrap();
        let (c, _) = greedy_grundy_chordal(&g, Direction::Peo).unwrap();
        assert!(chi <= c.num_colors() && c.num_colors() <= g.max_degree() + 1);
    }
}

#[test]
fn stability_bound_and_chi_le_gamma() {
    let limits = OracleLimits::default();
    let mut graphs: Vec<Graph> = (0..=5).flat_map(all_labeled_graphs).collect();
    graphs.extend((0..200).map(|s| gnp(6 + s as usize % 2, 0.5, s)));
    for g in &graphs {
        let gamma = grundy_number_exact(g, &limits).unwrap().gamma;
        let alpha = oracle::independence_number_exact(g, &limits).unwrap();
        let chi = oracle::chromatic_number_exact(g, &limits).unwrap();
        assert!(gamma + alpha <= g.n() + 1, "{g:?}");
        assert!(chi <= gamma, "{g:?}");
    }
}

#[test]
fn grundy_is_monotone_under_induced_subgraphs() {
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..60 {
        let g = gnp(3 + seed as usize % 6, 0.5, seed);
        let gamma = grundy_number_exact(&g, &limits).unwrap().gamma;
        let mut keep: Vec<Vertex> = g.vertices().collect();
        keep.shuffle(&mut rng);
        keep.truncate(1 + seed as usize % g.n());
        let (h, _) = g.induced_subgraph(&keep).unwrap();
        assert!(grundy_number_exact(&h, &limits).unwrap().gamma <= gamma);
    }
}

#[test]
fn partial_k_tree_log_bound() {
    let limits = OracleLimits::default();
    for seed in 0..40 {
        let k = 1 + seed as usize % 2;
        let n = k + 1 + seed as usize % (9 - k);
        let g = generate(&GraphFamily::PartialKTree { n, k, keep: 0.75 }, seed)
            .unwrap()
            .graph;
        let gamma = grundy_number_exact(&g, &limits).unwrap().gamma;
        assert!(gamma as f64 <= 1.0 + k as f64 * (n as f64).log2() + 1e-9);
    }
}

#[test]
fn recoloring_stays_grundy_under_random_changes() {
    for seed in 0..10 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = k_tree(8 + seed as usize, 2, seed);
        let (mut c, _) = greedy_grundy_chordal(&g, Direction::Peo).unwrap();
        for _ in 0..50 {
            let change = g.random_change(&mut rng);
            let out = recolor_after_change(&g, &c, &change).unwrap();
            assert!(is_proper(&out.graph, &out.coloring).unwrap());
            assert!(is_grundy_coloring(&out.graph, &out.coloring).unwrap());
            g = out.graph;
            c = out.coloring;
        }
    }
}

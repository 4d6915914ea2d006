//! Property tests for the structural contracts: BFS metrics, geodesic
//! steps, walk distributions, generator shapes, and file round trips, each
//! checked against randomized inputs (and, for distances, an independent
//! Floyd-Warshall oracle).

use proptest::prelude::*;

use copchase::analysis::walks::walk_distributions;
use copchase::engine::{play_game, trial_rng, PolicyFactory};
use copchase::generators::{
    complete_bipartite, cycle, funnel, ladder_basement, lollipop, path, random_connected,
    random_tree,
};
use copchase::io::{read_edge_list, read_json, write_edge_list, write_json};
use copchase::{GameConfig, GeodesicTie, Graph, PolicySpec};

/// Arbitrary-ish connected graph: the seeded generator gives a uniform
/// handle over shapes without hand-rolling a strategy.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..24, 0usize..4, any::<u64>()).prop_map(|(n, p_idx, seed)| {
        let p = [0.1, 0.25, 0.5, 0.9][p_idx];
        random_connected(n, p, seed).expect("valid parameters")
    })
}

/// Distances by Floyd-Warshall, written independently of the BFS code.
fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    const INF: usize = usize::MAX / 2;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bfs_distances_match_floyd_warshall(g in arb_graph()) {
        let oracle = floyd_warshall(&g);
        let mut max = 0;
        for (u, row) in oracle.iter().enumerate() {
            for (v, &duv) in row.iter().enumerate() {
                prop_assert_eq!(g.dist(u, v), duv);
                max = max.max(duv);
            }
        }
        prop_assert_eq!(g.diameter(), max);
    }

    #[test]
    fn distances_are_edge_lipschitz(g in arb_graph()) {
        for s in 0..g.n() {
            let d = g.dist_from(s);
            for (u, v) in g.edges() {
                prop_assert!(d[u].abs_diff(d[v]) <= 1);
            }
        }
    }

    #[test]
    fn geodesic_steps_reduce_distance_by_one(
        g in arb_graph(),
        from_pick in any::<prop::sample::Index>(),
        target_pick in any::<prop::sample::Index>(),
        tie_idx in 0usize..2,
        seed in any::<u64>(),
    ) {
        let from = from_pick.index(g.n());
        let target = target_pick.index(g.n());
        prop_assume!(from != target);
        let tie = [GeodesicTie::Lex, GeodesicTie::Random][tie_idx];
        let mut rng = trial_rng(seed, 0);
        let step = g.geodesic_step(from, target, tie, &mut rng);
        prop_assert!(g.has_edge(from, step));
        prop_assert_eq!(g.dist(step, target), g.dist(from, target) - 1);
    }

    #[test]
    fn walk_distributions_are_probability_rows(
        g in arb_graph(),
        source_pick in any::<prop::sample::Index>(),
        t_max in 0usize..8,
    ) {
        let source = source_pick.index(g.n());
        let rows = walk_distributions(&g, source, t_max);
        prop_assert_eq!(rows.len(), t_max + 1);
        let d = g.dist_from(source);
        for (t, row) in rows.iter().enumerate() {
            let sum: f64 = row.iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-12, "row {t} sums to {sum}");
            for (v, &p) in row.iter().enumerate() {
                prop_assert!(p >= 0.0);
                // The walk cannot outrun the metric.
                if p > 0.0 {
                    prop_assert!(d[v] <= t);
                }
            }
        }
    }

    #[test]
    fn edge_list_and_json_round_trip(g in arb_graph()) {
        let mut text = Vec::new();
        write_edge_list(&g, &mut text).unwrap();
        let back = read_edge_list(text.as_slice()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());

        let mut blob = Vec::new();
        write_json(&g, &mut blob).unwrap();
        let back = read_json(blob.as_slice()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn every_policy_produces_a_legal_capture(
        g in arb_graph(),
        cop_pick in any::<prop::sample::Index>(),
        drunk_pick in any::<prop::sample::Index>(),
        policy_idx in 0usize..7,
        seed in any::<u64>(),
    ) {
        let cop = cop_pick.index(g.n());
        let drunk = drunk_pick.index(g.n());
        let spec = PolicySpec::parse(PolicySpec::NAMES[policy_idx]).unwrap();
        let factory = PolicyFactory::new(spec, &g);
        let config = GameConfig::new(cop, drunk).with_trajectory().with_move_cap(2_000_000);
        let mut rng = trial_rng(seed, 0);
        let out = play_game(&g, &factory, &config, &mut rng).unwrap();
        let capture = out.capture_time.expect("small chases end within the cap");
        let traj = out.trajectory.unwrap();
        prop_assert_eq!(traj.len() as u64, capture + 1);
        prop_assert_eq!(traj[0], (cop, drunk));
        let (xf, yf) = *traj.last().unwrap();
        prop_assert_eq!(xf, yf);
        for (i, w) in traj.windows(2).enumerate() {
            let ((xp, yp), (x, y)) = (w[0], w[1]);
            prop_assert!(g.has_edge(xp, x), "cop move {i} must follow an edge");
            prop_assert!(y == yp || g.has_edge(yp, y));
            if i + 2 < traj.len() {
                prop_assert!(x != y, "capture must end the game immediately");
            }
        }
    }
}

/// Shape formulas for the deterministic families, over the small-size sweep
/// (not proptest: the domains are tiny and exact).
#[test]
fn family_shapes_are_exact() {
    for n in 2..=40 {
        let g = path(n).unwrap();
        assert_eq!((g.n(), g.edge_count()), (n, n - 1));
        assert_eq!(g.diameter(), n - 1);
    }
    for n in 3..=40 {
        let g = cycle(n).unwrap();
        assert_eq!((g.n(), g.edge_count()), (n, n));
        assert_eq!(g.diameter(), n / 2);
        assert_eq!(g.regularity(), Some(2));
    }
    for (a, b) in [(1, 1), (2, 3), (4, 6), (10, 10)] {
        let g = complete_bipartite(a, b).unwrap();
        assert_eq!((g.n(), g.edge_count()), (a + b, a * b));
        if a >= 2 && b >= 2 {
            assert_eq!(g.girth(), Some(4));
        }
    }
    for n in [10, 20, 40, 64] {
        let g = lollipop(n, 1.0).unwrap();
        assert_eq!(g.n(), n);
        let g = funnel(n).unwrap();
        assert_eq!(g.n(), n);
    }
    for n in [12, 20, 40, 64] {
        let g = ladder_basement(n).unwrap();
        assert_eq!(g.n(), n);
    }
    for n in 2..=30 {
        for seed in 0..3 {
            let g = random_tree(n, seed).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, n - 1));
            assert_eq!(g.girth(), None);
        }
    }
}

mod common;

use common::{dag, floyd_warshall, Matrix};
use dagdiam::cover::{build_cover, greedy_hitting_set, truncated_in_ball, truncated_out_ball};
use dagdiam::graph::topological_sort;
use dagdiam::{Distance, TopoOrder};
use proptest::prelude::*;

/// The ball around `v` (center excluded) in rank order, with distances.
fn oracle_ball(fw: &Matrix, order: &TopoOrder, v: usize, radius: u64, out: bool) -> Vec<(usize, u64)> {
    order
        .order()
        .iter()
        .filter(|&&u| u != v)
        .filter_map(|&u| {
            let d = if out { fw[v][u] } else { fw[u][v] };
            d.filter(|&d| d <= radius).map(|d| (u, d))
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cover_matches_oracle_balls(
        seed: u64,
        n in 2usize..50,
        extra in 0usize..80,
        weight in 1u64..4,
        d_out in 0u64..8,
        d_in in 0u64..8,
        k in 1usize..8,
    ) {
        let (g, _) = dag(seed, n, extra, weight);
        let order = topological_sort(&g).unwrap();
        let cover = build_cover(&g, &order, Distance::finite(d_out), Distance::finite(d_in), k);
        let k = cover.k();
        let fw = floyd_warshall(&g);
        let in_s = |u: usize| cover.in_hitting_set(u);

        for v in 0..n {
            let ball = oracle_ball(&fw, &order, v, d_out, true);
            if ball.len() >= k {
                prop_assert!(ball[..k].iter().any(|&(u, _)| in_s(u)), "out-ball of {} not hit", v);
            }
            let cut = ball.iter().position(|&(u, _)| in_s(u)).map_or(ball.len(), |i| i + 1);
            prop_assert_eq!(cover.out_nbhd(v), &ball[..cut]);
            prop_assert!(cover.out_nbhd(v).len() <= k);

            let ball = oracle_ball(&fw, &order, v, d_in, false);
            if ball.len() >= k {
                prop_assert!(ball[ball.len() - k..].iter().any(|&(u, _)| in_s(u)), "in-ball of {} not hit", v);
            }
            let cut = ball.iter().rposition(|&(u, _)| in_s(u)).unwrap_or(0);
            prop_assert_eq!(cover.in_nbhd(v), &ball[cut..]);
            prop_assert!(cover.in_nbhd(v).len() <= k);
        }

        let bound = 4.0 * (n as f64 / k as f64) * (n as f64).ln();
        prop_assert!(cover.hitting_set().len() as f64 <= bound);
    }

    #[test]
    fn truncated_balls_keep_extreme_ranks(seed: u64, n in 2usize..40, extra in 0usize..60, radius in 0u64..10, k in 1usize..10) {
        let (g, _) = dag(seed, n, extra, 3);
        let order = topological_sort(&g).unwrap();
        let fw = floyd_warshall(&g);
        for v in 0..n {
            let out = oracle_ball(&fw, &order, v, radius, true);
            prop_assert_eq!(truncated_out_ball(&g, &order, v, Distance::finite(radius), k), out[..k.min(out.len())].to_vec());
            let inn = oracle_ball(&fw, &order, v, radius, false);
            prop_assert_eq!(truncated_in_ball(&g, &order, v, Distance::finite(radius), k), inn[inn.len().saturating_sub(k)..].to_vec());
        }
    }

    #[test]
    fn greedy_set_hits_everything(sets in prop::collection::vec(prop::collection::btree_set(0usize..30, 1..8), 0..40)) {
        let sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let chosen = greedy_hitting_set(&sets, 30);
        prop_assert!(chosen.windows(2).all(|w| w[0] < w[1]));
        for s in &sets {
            prop_assert!(s.iter().any(|x| chosen.binary_search(x).is_ok()));
        }
    }
}

#[test]
fn infinite_radius_covers_reachability() {
    let (g, _) = dag(7, 20, 15, 1);
    let order = topological_sort(&g).unwrap();
    let fw = floyd_warshall(&g);
    let cover = build_cover(&g, &order, Distance::INFINITE, Distance::INFINITE, 20);
    for v in 0..20 {
        let reach = (0..20).filter(|&u| u != v && fw[v][u].is_some()).count();
        assert_eq!(cover.out_nbhd(v).len(), reach);
    }
    assert!(cover.hitting_set().is_empty());
}

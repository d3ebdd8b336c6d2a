mod common;

use common::{bichrom_diameter, dag, fits, floyd_warshall};
use dagdiam::bichromatic::{
    approx_bichrom, bichrom_finite, bichrom_tester, dag_bichrom_finite, max_red_blue_weight,
    separated_tester_dense, separated_tester_sparse, small_outset, BichromError, BichromVerdict,
    SeparatedView, SmallOutset,
};
use dagdiam::generators::{gen_random_dag, gen_random_digraph, RandomDagParams, Spine};
use dagdiam::graph::topological_sort;
use dagdiam::{Color, ColorAssignment, DiGraph, Distance};
use proptest::prelude::*;

fn separated_dag(seed: u64, n: usize, extra: usize, weight: u64, red: f64) -> (DiGraph, ColorAssignment) {
    let mut p = RandomDagParams::new(n, (n - 1 + extra).min(n * (n - 1) / 2));
    p.max_weight = weight;
    p.separated = true;
    p.red_fraction = red;
    p.spine = Spine::HamiltonianPath;
    gen_random_dag(&p, seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursive_tester_is_one_sided(seed: u64, n in 2usize..40, extra in 0usize..100, weight in 1u64..10) {
        let (g, colors) = dag(seed, n, extra, weight);
        prop_assume!(colors.has_both());
        let dstar = bichrom_diameter(&floyd_warshall(&g), &colors);
        let m_rb = max_red_blue_weight(&g, &colors);
        for d in 0..=(weight * n as u64) {
            match bichrom_tester(&g, &colors, d).unwrap() {
                BichromVerdict::Pass => prop_assert!(fits(dstar, 2 * d + m_rb)),
                BichromVerdict::Fail { witness } => {
                    prop_assert!(!fits(dstar, d));
                    if let Some((u, v)) = witness {
                        prop_assert_ne!(colors.get(u), colors.get(v));
                    }
                }
                BichromVerdict::Infinite { .. } => prop_assert_eq!(dstar, None),
            }
        }
    }

    #[test]
    fn separated_testers_are_one_sided(
        seed: u64,
        n in 2usize..40,
        extra in 0usize..200,
        weight in 1u64..6,
        red in 0.1f64..0.9,
    ) {
        let (g, colors) = separated_dag(seed, n, extra, weight, red);
        let view = SeparatedView::new(&g, &colors).unwrap();
        let dstar = bichrom_diameter(&floyd_warshall(&g), &colors);
        for d in 0..=(weight * n as u64) {
            for verdict in [separated_tester_sparse(&view, d), separated_tester_dense(&view, d)] {
                match verdict {
                    BichromVerdict::Pass => prop_assert!(fits(dstar, 2 * d)),
                    BichromVerdict::Fail { .. } => prop_assert!(!fits(dstar, d)),
                    BichromVerdict::Infinite { .. } => prop_assert!(false, "separated testers never report Infinite"),
                }
            }
        }
    }

    #[test]
    fn small_outset_certifies_large_balls(
        seed: u64,
        n in 2usize..40,
        extra in 0usize..150,
        d in 0u64..8,
        k in 1usize..6,
    ) {
        let (g, colors) = separated_dag(seed, n, extra, 2, 0.5);
        let view = SeparatedView::new(&g, &colors).unwrap();
        let fw = floyd_warshall(&g);
        let first = view.first_color();
        match small_outset(&view, d, k) {
            SmallOutset::Fail { witness: (u, v) } => {
                prop_assert_ne!(colors.get(u), colors.get(v));
                prop_assert!(!fits(common::min_dist(&fw, u, v), d));
            }
            SmallOutset::Small(small) => {
                for &a in &small {
                    prop_assert_eq!(colors.get(a), first);
                    let near = (0..n).filter(|&u| u != a && colors.get(u) == first && fits(fw[a][u], d)).count();
                    prop_assert!(near <= k);
                }
                for a in (0..n).filter(|&a| colors.get(a) == first && !small.contains(&a)) {
                    for b in (0..n).filter(|&b| colors.get(b) != first) {
                        prop_assert!(fits(fw[a][b], 2 * d));
                    }
                }
            }
        }
    }

    #[test]
    fn estimate_envelope(seed: u64, n in 2usize..40, extra in 0usize..100, weight in 1u64..11) {
        let (g, colors) = dag(seed, n, extra, weight);
        prop_assume!(colors.has_both());
        let dstar = bichrom_diameter(&floyd_warshall(&g), &colors);
        let est = approx_bichrom(&g, &colors).unwrap();
        prop_assert_eq!(est.m_rb, max_red_blue_weight(&g, &colors));
        match dstar {
            None => prop_assert_eq!(est.value, Distance::INFINITE),
            Some(x) => {
                let (lower, value) = (est.lower.value().unwrap(), est.value.value().unwrap());
                prop_assert!(lower <= x && x <= value);
                prop_assert!(value <= 2 * x + est.m_rb);
                prop_assert!(value <= 2 * lower + est.m_rb);
            }
        }
    }

    #[test]
    fn finiteness_matches_oracle(seed: u64, n in 2usize..16, m in 0usize..80) {
        let m = m.min(n * (n - 1));
        let (g, colors) = gen_random_digraph(n, m, 0.5, seed).unwrap();
        prop_assume!(colors.has_both());
        let finite = bichrom_diameter(&floyd_warshall(&g), &colors).is_some();
        prop_assert_eq!(bichrom_finite(&g, &colors).unwrap(), finite);
    }

    #[test]
    fn finiteness_detectors_agree_on_dags(seed: u64, n in 2usize..40, extra in 0usize..60) {
        let (g, colors) = dag(seed, n, extra, 1);
        prop_assume!(colors.has_both());
        let order = topological_sort(&g).unwrap();
        let finite = bichrom_diameter(&floyd_warshall(&g), &colors).is_some();
        prop_assert_eq!(dag_bichrom_finite(&g, &colors, &order).unwrap(), finite);
        prop_assert_eq!(bichrom_finite(&g, &colors).unwrap(), finite);
    }
}

#[test]
fn single_edge_estimate() {
    let g = DiGraph::new(2, [(0, 1, 5)]).unwrap();
    let colors = ColorAssignment::new(vec![Color::Red, Color::Blue]);
    let est = approx_bichrom(&g, &colors).unwrap();
    assert_eq!(est.lower, Distance::finite(5));
    assert_eq!(est.value, Distance::finite(15));
}

#[test]
fn errors() {
    let g = DiGraph::from_unweighted(2, &[(0, 1)]).unwrap();
    let red = ColorAssignment::uniform(2, Color::Red);
    assert_eq!(approx_bichrom(&g, &red).unwrap_err(), BichromError::MissingColor);
    assert_eq!(bichrom_finite(&g, &red).unwrap_err(), BichromError::MissingColor);
    let cyclic = DiGraph::from_unweighted(2, &[(0, 1), (1, 0)]).unwrap();
    let both = ColorAssignment::new(vec![Color::Red, Color::Blue]);
    assert_eq!(bichrom_tester(&cyclic, &both, 1).unwrap_err(), BichromError::NotADag);
    assert!(bichrom_finite(&cyclic, &both).unwrap());
}

#[test]
fn view_finds_separating_order_on_trees() {
    for seed in 0..200 {
        let mut p = RandomDagParams::new(30, 40);
        p.separated = true;
        let (g, colors) = gen_random_dag(&p, seed).unwrap();
        let view = SeparatedView::new(&g, &colors).unwrap();
        for r in 0..g.n() {
            assert_eq!(colors.get(view.vertex(r)) == view.first_color(), r < view.boundary());
        }
        let mut bad = colors.clone();
        let (a, b) = g.edges().map(|(u, v, _)| (u, v)).next().unwrap();
        bad.set(a, Color::Blue);
        bad.set(b, Color::Red);
        if bad.has_both() && g.edges().any(|(u, v, _)| bad.get(u) == Color::Red && bad.get(v) == Color::Blue) {
            assert_eq!(SeparatedView::new(&g, &bad).unwrap_err(), BichromError::NotSeparated);
        }
    }
}

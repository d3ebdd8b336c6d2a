//! Helpers shared by the integration tests. The distance oracle here is a
//! plain Floyd–Warshall, kept independent of the library's search code.
#![allow(dead_code)]

use dagdiam::generators::{gen_random_dag, RandomDagParams, Spine};
use dagdiam::{Color, ColorAssignment, DiGraph};

/// `None` means unreachable.
pub type Matrix = Vec<Vec<Option<u64>>>;

pub fn floyd_warshall(g: &DiGraph) -> Matrix {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
    }
    for (u, v, w) in g.edges() {
        d[u][v] = Some(d[u][v].map_or(w, |x: u64| x.min(w)));
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    let via = ik + kj;
                    if d[i][j].is_none_or(|x| via < x) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
    }
    d
}

pub fn min_dist(d: &Matrix, u: usize, v: usize) -> Option<u64> {
    match (d[u][v], d[v][u]) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

/// Max min-distance over all pairs; `None` is infinite.
pub fn min_diameter(d: &Matrix) -> Option<u64> {
    let n = d.len();
    let mut best = 0;
    for u in 0..n {
        for v in u + 1..n {
            best = best.max(min_dist(d, u, v)?);
        }
    }
    Some(best)
}

/// Max min-distance over red/blue pairs; `None` is infinite.
pub fn bichrom_diameter(d: &Matrix, colors: &ColorAssignment) -> Option<u64> {
    let n = d.len();
    let mut best = 0;
    for u in 0..n {
        for v in 0..n {
            if colors.get(u) == Color::Red && colors.get(v) == Color::Blue {
                best = best.max(min_dist(d, u, v)?);
            }
        }
    }
    Some(best)
}

pub fn fits(x: Option<u64>, bound: u64) -> bool {
    x.is_some_and(|x| x <= bound)
}

/// A weakly connected DAG whose shape is driven by `seed`.
pub fn dag(seed: u64, n: usize, extra: usize, max_weight: u64) -> (DiGraph, ColorAssignment) {
    let m = (n - 1 + extra).min(n * (n - 1) / 2);
    let mut p = RandomDagParams::new(n, m);
    p.max_weight = max_weight;
    p.spine = if seed.is_multiple_of(3) {
        Spine::RandomTree
    } else {
        Spine::HamiltonianPath
    };
    gen_random_dag(&p, seed).unwrap()
}

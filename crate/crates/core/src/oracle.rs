//! Exhaustive ground truth: all-pairs shortest paths by repeated single-source search.

use thiserror::Error;

use crate::graph::{sssp, Color, ColorAssignment, DiGraph, Direction, Distance};

/// Largest graph the oracle accepts; it is quadratic in memory by design.
pub const ORACLE_MAX_N: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle refuses graphs with {0} vertices (limit {ORACLE_MAX_N})")]
    TooLarge(usize),
    #[error("both colors must be present")]
    MissingColor,
}

/// Row-major `n × n` table of `d(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    #[inline]
    pub fn min_distance(&self, u: usize, v: usize) -> Distance {
        self.get(u, v).min(self.get(v, u))
    }
}

pub fn apsp(g: &DiGraph) -> Result<DistanceMatrix, OracleError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(OracleError::TooLarge(n));
    }
    let mut data = Vec::with_capacity(n * n);
    for u in 0..n {
        data.extend(sssp(g, u, Direction::Out));
    }
    Ok(DistanceMatrix { n, data })
}

/// Maximum over unordered pairs of `min(d(u,v), d(v,u))`; zero when `n < 2`.
pub fn exact_min_diameter(g: &DiGraph) -> Result<Distance, OracleError> {
    let d = apsp(g)?;
    let mut best = Distance::ZERO;
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            best = best.max(d.min_distance(u, v));
        }
    }
    Ok(best)
}

/// Maximum min-distance over red/blue pairs.
pub fn exact_bichrom_min_diameter(
    g: &DiGraph,
    colors: &ColorAssignment,
) -> Result<Distance, OracleError> {
    assert_eq!(colors.len(), g.n(), "color assignment length mismatch");
    if !colors.has_both() {
        return Err(OracleError::MissingColor);
    }
    let d = apsp(g)?;
    let mut best = Distance::ZERO;
    for u in 0..d.n() {
        if colors.get(u) != Color::Red {
            continue;
        }
        for v in 0..d.n() {
            if colors.get(v) == Color::Blue {
                best = best.max(d.min_distance(u, v));
            }
        }
    }
    Ok(best)
}

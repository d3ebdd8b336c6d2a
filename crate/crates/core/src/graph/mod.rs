//! Directed graphs with nonnegative integer weights, stored in CSR form with
//! both adjacency directions materialized.

mod color;
mod distance;
mod order;
mod paths;
mod transform;

pub use color::{Color, ColorAssignment};
pub use distance::Distance;
pub use order::{induced_closed_subgraph, topological_sort, TopoOrder};
pub use paths::{
    bounded_ball, is_weakly_connected, min_distance_profile, min_eccentricity, sssp,
};
pub use transform::{scc_condense, subdivide, Condensation, Origin, SubdivisionMap};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has {0} vertices, more than the supported maximum")]
    TooManyVertices(usize),
    #[error("graph contains a cycle")]
    NotADag,
    #[error("operation requires an unweighted graph")]
    WeightedInput,
}

/// Traversal direction: `Out` follows edges forward, `In` follows them backward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Out,
    In,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Out => Direction::In,
            Direction::In => Direction::Out,
        }
    }
}

/// One adjacency entry: the vertex at the other end of an edge and the edge weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Neighbor {
    vertex: u32,
    pub weight: u64,
}

impl Neighbor {
    #[inline]
    pub fn vertex(&self) -> usize {
        self.vertex as usize
    }
}

/// Immutable directed graph.
///
/// Adjacency lists in both directions are sorted by neighbor id. Parallel
/// edges and self-loops are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    out_offsets: Vec<usize>,
    out_adj: Vec<Neighbor>,
    in_offsets: Vec<usize>,
    in_adj: Vec<Neighbor>,
    weighted: bool,
    max_weight: u64,
}

impl DiGraph {
    /// Builds a graph from `(tail, head, weight)` triples.
    ///
    /// The graph is flagged unweighted when every weight equals 1.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        if n > u32::MAX as usize {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut triples: Vec<(u32, u32, u64)> = Vec::new();
        for (u, v, w) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            triples.push((u as u32, v as u32, w));
        }
        triples.sort_unstable_by_key(|&(u, v, _)| (u, v));
        if let Some(pair) = triples
            .windows(2)
            .find(|p| p[0].0 == p[1].0 && p[0].1 == p[1].1)
        {
            return Err(GraphError::DuplicateEdge(pair[0].0 as usize, pair[0].1 as usize));
        }
        Ok(Self::from_sorted(n, &triples))
    }

    /// Convenience constructor for unit-weight edge lists.
    pub fn from_unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, 1)))
    }

    /// `triples` must be sorted by (tail, head) and free of duplicates.
    fn from_sorted(n: usize, triples: &[(u32, u32, u64)]) -> Self {
        let m = triples.len();
        let mut out_offsets = vec![0usize; n + 1];
        let mut in_offsets = vec![0usize; n + 1];
        for &(u, v, _) in triples {
            out_offsets[u as usize + 1] += 1;
            in_offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let mut out_adj = Vec::with_capacity(m);
        let mut in_adj = vec![Neighbor { vertex: 0, weight: 0 }; m];
        let mut in_fill = in_offsets.clone();
        let mut weighted = false;
        let mut max_weight = 0;
        // Tails are visited in increasing order, so every in-list ends up sorted.
        for &(u, v, w) in triples {
            out_adj.push(Neighbor { vertex: v, weight: w });
            let slot = &mut in_fill[v as usize];
            in_adj[*slot] = Neighbor { vertex: u, weight: w };
            *slot += 1;
            weighted |= w != 1;
            max_weight = max_weight.max(w);
        }
        DiGraph {
            n,
            out_offsets,
            out_adj,
            in_offsets,
            in_adj,
            weighted,
            max_weight,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.out_adj.len()
    }

    /// False when every edge has weight 1.
    #[inline]
    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Largest edge weight, 0 for an edgeless graph.
    #[inline]
    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[Neighbor] {
        &self.out_adj[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[Neighbor] {
        &self.in_adj[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    #[inline]
    pub fn neighbors(&self, v: usize, dir: Direction) -> &[Neighbor] {
        match dir {
            Direction::Out => self.out_neighbors(v),
            Direction::In => self.in_neighbors(v),
        }
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_offsets[v + 1] - self.in_offsets[v]
    }

    /// Weight of the edge `u -> v`, if present.
    pub fn edge_weight(&self, u: usize, v: usize) -> Option<u64> {
        let adj = self.out_neighbors(u);
        adj.binary_search_by_key(&(v as u32), |nb| nb.vertex)
            .ok()
            .map(|i| adj[i].weight)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_weight(u, v).is_some()
    }

    /// All edges as `(tail, head, weight)`, ordered by tail then head.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.out_neighbors(u)
                .iter()
                .map(move |nb| (u, nb.vertex(), nb.weight))
        })
    }

    /// The same graph with every edge reversed.
    pub fn reversed(&self) -> DiGraph {
        DiGraph {
            n: self.n,
            out_offsets: self.in_offsets.clone(),
            out_adj: self.in_adj.clone(),
            in_offsets: self.out_offsets.clone(),
            in_adj: self.out_adj.clone(),
            weighted: self.weighted,
            max_weight: self.max_weight,
        }
    }

    /// Relabels vertices: vertex `v` becomes `new_id[v]`. `new_id` must be a permutation.
    pub fn permuted(&self, new_id: &[usize]) -> DiGraph {
        assert_eq!(new_id.len(), self.n, "permutation length mismatch");
        let mut triples: Vec<(u32, u32, u64)> = self
            .edges()
            .map(|(u, v, w)| (new_id[u] as u32, new_id[v] as u32, w))
            .collect();
        triples.sort_unstable_by_key(|&(u, v, _)| (u, v));
        Self::from_sorted(self.n, &triples)
    }

    /// Subgraph induced by `vertices`; new id `i` corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> DiGraph {
        let mut local = vec![u32::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i as u32;
        }
        let mut triples = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for nb in self.out_neighbors(v) {
                let j = local[nb.vertex()];
                if j != u32::MAX {
                    triples.push((i as u32, j, nb.weight));
                }
            }
        }
        triples.sort_unstable_by_key(|&(u, v, _)| (u, v));
        Self::from_sorted(vertices.len(), &triples)
    }

    /// Subgraph induced by the id range `lo..hi`, shifted so `lo` becomes 0.
    pub(crate) fn range_subgraph(&self, lo: usize, hi: usize) -> DiGraph {
        let mut triples = Vec::new();
        for u in lo..hi {
            for nb in self.out_neighbors(u) {
                let v = nb.vertex();
                if v >= lo && v < hi {
                    triples.push(((u - lo) as u32, (v - lo) as u32, nb.weight));
                }
            }
        }
        Self::from_sorted(hi - lo, &triples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_populates_both_directions() {
        let g = DiGraph::new(2, [(0, 1, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.in_neighbors(1).len(), 1);
        assert_eq!(g.in_neighbors(1)[0].vertex(), 0);
        assert_eq!(g.in_neighbors(1)[0].weight, 1);
        assert!(!g.is_weighted());
    }

    #[test]
    fn rejects_duplicates_loops_and_range_errors() {
        assert_eq!(
            DiGraph::new(3, [(0, 1, 1), (0, 1, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(DiGraph::new(3, [(2, 2, 1)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            DiGraph::new(3, [(0, 3, 1)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn directed_path_has_sink() {
        let g = DiGraph::from_unweighted(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.out_degree(3), 0);
        assert_eq!(g.in_degree(0), 0);
    }

    #[test]
    fn weighted_flag_and_max_weight() {
        let g = DiGraph::new(3, [(0, 1, 1), (1, 2, 7)]).unwrap();
        assert!(g.is_weighted());
        assert_eq!(g.max_weight(), 7);
        assert_eq!(g.edge_weight(1, 2), Some(7));
        assert_eq!(g.edge_weight(2, 1), None);
    }

    #[test]
    fn reversal_swaps_adjacency() {
        let g = DiGraph::new(3, [(0, 1, 2), (0, 2, 3)]).unwrap();
        let r = g.reversed();
        assert!(r.has_edge(1, 0));
        assert!(r.has_edge(2, 0));
        assert_eq!(r.edge_weight(2, 0), Some(3));
        assert_eq!(r.reversed(), g);
    }
}

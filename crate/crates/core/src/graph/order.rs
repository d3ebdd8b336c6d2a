use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{DiGraph, GraphError};

/// A topological permutation together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoOrder {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl TopoOrder {
    /// Wraps a permutation without checking it against any graph.
    ///
    /// Panics if `order` is not a permutation of `0..order.len()`.
    pub fn from_order(order: Vec<usize>) -> Self {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (rank, &v) in order.iter().enumerate() {
            assert!(v < n && pos[v] == usize::MAX, "not a permutation");
            pos[v] = rank;
        }
        TopoOrder { order, pos }
    }

    pub fn identity(n: usize) -> Self {
        TopoOrder {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertices in rank order.
    #[inline]
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Rank of every vertex.
    #[inline]
    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    #[inline]
    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn vertex_at(&self, rank: usize) -> usize {
        self.order[rank]
    }

    pub fn is_identity(&self) -> bool {
        self.order.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// True when every edge of `g` goes from a lower to a higher rank.
    pub fn is_valid_for(&self, g: &DiGraph) -> bool {
        self.len() == g.n() && g.edges().all(|(u, v, _)| self.pos[u] < self.pos[v])
    }
}

/// Kahn's algorithm with a min-id ready queue, so the result is unique for a given graph.
pub fn topological_sort(g: &DiGraph) -> Result<TopoOrder, GraphError> {
    let n = g.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for nb in g.out_neighbors(v) {
            let u = nb.vertex();
            indeg[u] -= 1;
            if indeg[u] == 0 {
                ready.push(Reverse(u));
            }
        }
    }
    if order.len() < n {
        return Err(GraphError::NotADag);
    }
    Ok(TopoOrder::from_order(order))
}

/// Subgraph induced by the ranks `lo..=hi` of `order`.
///
/// New vertex `i` is the vertex of rank `lo + i`, so the identity is a valid
/// topological order of the result. The returned map sends new ids back to old.
pub fn induced_closed_subgraph(
    g: &DiGraph,
    order: &TopoOrder,
    lo: usize,
    hi: usize,
) -> (DiGraph, Vec<usize>) {
    assert!(lo <= hi && hi < order.len(), "rank range out of bounds");
    let map = order.order()[lo..=hi].to_vec();
    (g.induced(&map), map)
}

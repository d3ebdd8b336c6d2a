use super::{Color, ColorAssignment, DiGraph, GraphError, TopoOrder};

/// Where a vertex of the subdivided graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    Original(usize),
    /// Midpoint of the original edge `(x, y)`.
    EdgeMid(usize, usize),
}

/// The graph obtained by replacing every edge `x -> y` by `x -> v_xy -> y`.
///
/// Original vertices keep their ids; the midpoint of the `e`-th edge (in
/// `DiGraph::edges` order) gets id `n + e`.
#[derive(Debug, Clone)]
pub struct SubdivisionMap {
    pub graph: DiGraph,
    n_original: usize,
    origin: Vec<Origin>,
}

impl SubdivisionMap {
    pub fn n_original(&self) -> usize {
        self.n_original
    }

    #[inline]
    pub fn origin(&self, v: usize) -> Origin {
        self.origin[v]
    }

    #[inline]
    pub fn is_original(&self, v: usize) -> bool {
        v < self.n_original
    }

    /// Extends a topological order of the original graph by placing each
    /// midpoint `v_xy` directly after its tail `x`.
    pub fn extend_order(&self, order: &TopoOrder) -> TopoOrder {
        assert_eq!(order.len(), self.n_original);
        let mut ext = Vec::with_capacity(self.graph.n());
        for &v in order.order() {
            ext.push(v);
            // Out-neighbors of an original vertex in G' are exactly its midpoints.
            ext.extend(self.graph.out_neighbors(v).iter().map(|nb| nb.vertex()));
        }
        TopoOrder::from_order(ext)
    }
}

/// Subdivides every edge of an unweighted graph; distances between original
/// vertices double.
pub fn subdivide(g: &DiGraph) -> Result<SubdivisionMap, GraphError> {
    if g.is_weighted() {
        return Err(GraphError::WeightedInput);
    }
    let n = g.n();
    let mut origin: Vec<Origin> = (0..n).map(Origin::Original).collect();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (e, (x, y, _)) in g.edges().enumerate() {
        let mid = n + e;
        origin.push(Origin::EdgeMid(x, y));
        edges.push((x, mid, 1));
        edges.push((mid, y, 1));
    }
    let graph = DiGraph::new(n + g.m(), edges)?;
    Ok(SubdivisionMap {
        graph,
        n_original: n,
        origin,
    })
}

/// Strongly-connected-component condensation of a colored digraph.
#[derive(Debug, Clone)]
pub struct Condensation {
    /// Unit-weight DAG; node ids follow a topological order of the components.
    pub graph: DiGraph,
    pub colors: ColorAssignment,
    /// Component index of each original vertex, components in topological order.
    pub component: Vec<usize>,
    /// Node carrying each original vertex: its component's node, or for a
    /// mixed component the red or blue half matching the vertex color.
    pub node_of: Vec<usize>,
}

/// Condenses strongly connected components.
///
/// A monochromatic component becomes one node of its color. A mixed component
/// becomes a red node receiving all entering edges followed by a blue node
/// emitting all leaving edges, joined by one edge. Parallel edges are merged.
pub fn scc_condense(g: &DiGraph, colors: &ColorAssignment) -> Condensation {
    let n = g.n();
    assert_eq!(colors.len(), n, "color assignment length mismatch");
    let component = kosaraju(g);
    let comps = component.iter().map(|&c| c + 1).max().unwrap_or(0);

    let mut has = vec![(false, false); comps];
    for v in 0..n {
        match colors.get(v) {
            Color::Red => has[component[v]].0 = true,
            Color::Blue => has[component[v]].1 = true,
        }
    }
    // in_node receives entering edges, out_node emits leaving ones.
    let mut in_node = vec![0; comps];
    let mut out_node = vec![0; comps];
    let mut node_colors = Vec::new();
    let mut edges = Vec::new();
    for c in 0..comps {
        let id = node_colors.len();
        match has[c] {
            (true, true) => {
                node_colors.extend([Color::Red, Color::Blue]);
                in_node[c] = id;
                out_node[c] = id + 1;
                edges.push((id, id + 1));
            }
            (true, false) => {
                node_colors.push(Color::Red);
                in_node[c] = id;
                out_node[c] = id;
            }
            _ => {
                node_colors.push(Color::Blue);
                in_node[c] = id;
                out_node[c] = id;
            }
        }
    }
    for (u, v, _) in g.edges() {
        let (cu, cv) = (component[u], component[v]);
        if cu != cv {
            edges.push((out_node[cu], in_node[cv]));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let node_of = (0..n)
        .map(|v| {
            let c = component[v];
            match colors.get(v) {
                Color::Red => in_node[c],
                Color::Blue => out_node[c],
            }
        })
        .collect();
    let graph = DiGraph::new(node_colors.len(), edges.into_iter().map(|(u, v)| (u, v, 1)))
        .expect("condensation edges are distinct and loop-free");
    Condensation {
        graph,
        colors: ColorAssignment::new(node_colors),
        component,
        node_of,
    }
}

/// Iterative Kosaraju. Components are numbered so every edge between
/// different components goes from a smaller to a larger index.
fn kosaraju(g: &DiGraph) -> Vec<usize> {
    let n = g.n();
    let mut visited = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        stack.push((root, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let adj = g.out_neighbors(v);
            if let Some(nb) = adj.get(*next) {
                *next += 1;
                let u = nb.vertex();
                if !visited[u] {
                    visited[u] = true;
                    stack.push((u, 0));
                }
            } else {
                finish.push(v);
                stack.pop();
            }
        }
    }

    let mut component = vec![usize::MAX; n];
    let mut count = 0;
    let mut work = Vec::new();
    for &root in finish.iter().rev() {
        if component[root] != usize::MAX {
            continue;
        }
        component[root] = count;
        work.push(root);
        while let Some(v) = work.pop() {
            for nb in g.in_neighbors(v) {
                let u = nb.vertex();
                if component[u] == usize::MAX {
                    component[u] = count;
                    work.push(u);
                }
            }
        }
        count += 1;
    }
    component
}

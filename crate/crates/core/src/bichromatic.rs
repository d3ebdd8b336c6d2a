//! Bichromatic min-diameter of DAGs: an almost-2-approximation and exact
//! finiteness detection.
//!
//! The approximation works on *separated* pieces first, where every vertex of
//! one color precedes every vertex of the other in topological order. The
//! general tester picks a middle vertex, takes the maximal monochromatic runs
//! `A < B < C` around it, tests `A ∪ B` and `B ∪ C` as separated DAGs, checks
//! the eccentricities of the run endpoints and their outer neighbors, and
//! recurses on what lies left and right of `B`.
//!
//! Internally every routine works on a ranked graph (vertex id = rank) and
//! maps witnesses back to caller ids at the boundary.

use thiserror::Error;

use crate::cover::build_ranked;
use crate::graph::{
    bounded_ball, scc_condense, sssp, topological_sort, Color, ColorAssignment, DiGraph,
    Direction, Distance, GraphError, TopoOrder,
};
use crate::util::{floor_root, Marks};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BichromError {
    #[error("both colors must be present")]
    MissingColor,
    #[error("graph contains a cycle")]
    NotADag,
    #[error("colors are not separated by the topological order")]
    NotSeparated,
    #[error("order is not a topological order of the graph")]
    InvalidOrder,
}

impl From<GraphError> for BichromError {
    fn from(_: GraphError) -> Self {
        BichromError::NotADag
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BichromVerdict {
    Pass,
    /// The witness, when present, is a red/blue pair at min-distance above the threshold.
    Fail { witness: Option<(usize, usize)> },
    /// Some red/blue pair is mutually unreachable.
    Infinite { witness: Option<(usize, usize)> },
}

impl BichromVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, BichromVerdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, BichromVerdict::Fail { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BichromVerdict::Infinite { .. })
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        match *self {
            BichromVerdict::Pass => None,
            BichromVerdict::Fail { witness } | BichromVerdict::Infinite { witness } => witness,
        }
    }

    fn fail(u: usize, v: usize) -> Self {
        BichromVerdict::Fail {
            witness: Some((u.min(v), u.max(v))),
        }
    }

    fn infinite(u: usize, v: usize) -> Self {
        BichromVerdict::Infinite {
            witness: Some((u.min(v), u.max(v))),
        }
    }

    fn map_witness(self, f: impl Fn(usize) -> usize) -> Self {
        let pair = |(u, v): (usize, usize)| {
            let (a, b) = (f(u), f(v));
            (a.min(b), a.max(b))
        };
        match self {
            BichromVerdict::Pass => BichromVerdict::Pass,
            BichromVerdict::Fail { witness } => BichromVerdict::Fail {
                witness: witness.map(pair),
            },
            BichromVerdict::Infinite { witness } => BichromVerdict::Infinite {
                witness: witness.map(pair),
            },
        }
    }
}

/// A DAG whose colors are split by a single rank boundary.
///
/// Stored relabeled by rank; `vertex` maps a rank back to the caller's id.
#[derive(Debug, Clone)]
pub struct SeparatedView {
    graph: DiGraph,
    order: TopoOrder,
    boundary: usize,
    first: Color,
}

impl SeparatedView {
    /// Finds a topological order that puts one color entirely first.
    ///
    /// Such an order exists exactly when no edge runs from the later color
    /// back to the earlier one; it is then a stable partition of any
    /// topological order.
    pub fn new(g: &DiGraph, colors: &ColorAssignment) -> Result<Self, BichromError> {
        assert_eq!(colors.len(), g.n(), "color assignment length mismatch");
        let sorted = topological_sort(g)?;
        for first in [Color::Red, Color::Blue] {
            let backwards = g
                .edges()
                .any(|(u, v, _)| colors.get(u) != first && colors.get(v) == first);
            if !backwards {
                let (mut order, rest): (Vec<usize>, Vec<usize>) =
                    sorted.order().iter().partition(|&&v| colors.get(v) == first);
                order.extend(rest);
                return Self::with_order(g, colors, TopoOrder::from_order(order));
            }
        }
        Err(BichromError::NotSeparated)
    }

    /// Uses a caller-supplied order; it must be topological and separate the colors.
    pub fn with_order(
        g: &DiGraph,
        colors: &ColorAssignment,
        order: TopoOrder,
    ) -> Result<Self, BichromError> {
        assert_eq!(colors.len(), g.n(), "color assignment length mismatch");
        if order.len() != g.n() || !order.is_valid_for(g) {
            return Err(BichromError::InvalidOrder);
        }
        let ranked: Vec<Color> = order.order().iter().map(|&v| colors.get(v)).collect();
        let (boundary, first) = split_point(&ranked).ok_or(BichromError::NotSeparated)?;
        let graph = if order.is_identity() {
            g.clone()
        } else {
            g.permuted(order.positions())
        };
        Ok(SeparatedView {
            graph,
            order,
            boundary,
            first,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// First rank holding the second color (`n` when only one color is present).
    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// Color of the ranks before the boundary.
    pub fn first_color(&self) -> Color {
        self.first
    }

    /// The graph relabeled by rank.
    pub fn ranked_graph(&self) -> &DiGraph {
        &self.graph
    }

    /// Caller id of the vertex at `rank`.
    pub fn vertex(&self, rank: usize) -> usize {
        self.order.vertex_at(rank)
    }

    /// The view of the reversed graph, ranks flipped so it stays separated.
    pub fn reversed(&self) -> SeparatedView {
        let n = self.n();
        let flip: Vec<usize> = (0..n).rev().collect();
        let graph = self.graph.reversed().permuted(&flip);
        let order = TopoOrder::from_order((0..n).rev().map(|r| self.order.vertex_at(r)).collect());
        SeparatedView {
            graph,
            order,
            boundary: n - self.boundary,
            first: if self.boundary == n {
                self.first
            } else {
                self.first.opposite()
            },
        }
    }
}

/// Boundary and first color when `ranked` is constant on both sides of one cut.
fn split_point(ranked: &[Color]) -> Option<(usize, Color)> {
    let Some(&first) = ranked.first() else {
        return Some((0, Color::Red));
    };
    let boundary = ranked.iter().position(|&c| c != first).unwrap_or(ranked.len());
    ranked[boundary..]
        .iter()
        .all(|&c| c != first)
        .then_some((boundary, first))
}

/// Outcome of the small-outset filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmallOutset {
    /// A cover vertex is farther than the threshold from some opposite-color vertex.
    Fail { witness: (usize, usize) },
    /// First-color vertices with at most `k` same-color vertices within the threshold.
    Small(Vec<usize>),
}

/// Splits the first color class into vertices with few same-color vertices
/// within `d` and vertices already certified within `2d` of every vertex of
/// the other color.
pub fn small_outset(view: &SeparatedView, d: u64, k: usize) -> SmallOutset {
    match small_outset_ranked(&view.graph, view.boundary, d, k) {
        Ok(small) => SmallOutset::Small(small.into_iter().map(|r| view.vertex(r)).collect()),
        Err((u, v)) => {
            let (a, b) = (view.vertex(u), view.vertex(v));
            SmallOutset::Fail {
                witness: (a.min(b), a.max(b)),
            }
        }
    }
}

fn small_outset_ranked(
    g: &DiGraph,
    boundary: usize,
    d: u64,
    k: usize,
) -> Result<Vec<usize>, (usize, usize)> {
    let n = g.n();
    if boundary == 0 || boundary == n {
        return Ok((0..boundary).collect());
    }
    let radius = Distance::finite(d);
    let cover = build_ranked(g, radius, radius, k, None);
    // Across the boundary only one direction can have a path, so a single
    // search per cover vertex gives its min-distances to the other side.
    for &s in cover.hitting_set() {
        let witness = if s < boundary {
            farthest_beyond(&sssp(g, s, Direction::Out), boundary..n, d)
        } else {
            farthest_beyond(&sssp(g, s, Direction::In), 0..boundary, d)
        };
        if let Some(u) = witness {
            return Err((s, u));
        }
    }
    // A truncated out-list is rank sorted, so when it is cut by an S member on
    // the far side it still holds every same-side vertex of the ball.
    Ok((0..boundary)
        .filter(|&a| cover.out_hit(a).is_none_or(|s| s >= boundary))
        .collect())
}

/// First vertex of `range` whose distance exceeds `d`.
fn farthest_beyond(dist: &[Distance], mut range: std::ops::Range<usize>, d: u64) -> Option<usize> {
    range.find(|&u| !dist[u].within(d))
}

/// Separated tester for sparse graphs. Pass means every cross pair is within
/// `2d`; Fail means some cross pair is farther than `d`.
pub fn separated_tester_sparse(view: &SeparatedView, d: u64) -> BichromVerdict {
    sparse_ranked(&view.graph, view.boundary, d).map_witness(|r| view.vertex(r))
}

/// Separated tester for dense graphs, with the same contract as the sparse one.
pub fn separated_tester_dense(view: &SeparatedView, d: u64) -> BichromVerdict {
    dense_ranked(&view.graph, view.boundary, d).map_witness(|r| view.vertex(r))
}

fn sparse_ranked(g: &DiGraph, boundary: usize, d: u64) -> BichromVerdict {
    let (n, m) = (g.n(), g.m());
    if boundary == 0 || boundary == n {
        return BichromVerdict::Pass;
    }
    let k = if m == 0 {
        n
    } else {
        floor_root((n as u128).pow(2), m as u128, 3)
    };
    let delta = floor_root((m as u128).pow(2), n as u128, 3).max(1);
    let small = match small_outset_ranked(g, boundary, d, k) {
        Ok(small) => small,
        Err((u, v)) => return BichromVerdict::fail(u, v),
    };

    let mut in_t = vec![false; boundary];
    for t in 0..boundary {
        if g.out_degree(t) >= delta {
            in_t[t] = true;
            if let Some(b) = farthest_beyond(&sssp(g, t, Direction::Out), boundary..n, d) {
                return BichromVerdict::fail(t, b);
            }
        }
    }

    for a in small {
        let ball = bounded_ball(g, a, d, Direction::Out, |u| u < boundary);
        if ball.iter().any(|&(v, _)| in_t[v]) {
            continue;
        }
        if let Some(b) = farthest_beyond(&sssp(g, a, Direction::Out), boundary..n, d) {
            return BichromVerdict::fail(a, b);
        }
        let mut exits: Vec<usize> = ball
            .iter()
            .flat_map(|&(v, _)| g.out_neighbors(v))
            .map(|nb| nb.vertex())
            .filter(|&x| x >= boundary)
            .collect();
        exits.sort_unstable();
        exits.dedup();
        for x in exits {
            if let Some(u) = farthest_beyond(&sssp(g, x, Direction::In), 0..boundary, d) {
                return BichromVerdict::fail(u, x);
            }
        }
        // Every shortest path out of `a` leaves its same-color ball through one
        // of the exits just checked, so any vertex reaches any far vertex
        // within d + d.
        return BichromVerdict::Pass;
    }
    BichromVerdict::Pass
}

fn dense_ranked(g: &DiGraph, boundary: usize, d: u64) -> BichromVerdict {
    let (n, m) = (g.n(), g.m());
    if boundary == 0 || boundary == n {
        return BichromVerdict::Pass;
    }
    let k = floor_root(m as u128, n as u128, 2);
    let small_a = match small_outset_ranked(g, boundary, d, k) {
        Ok(small) => small,
        Err((u, v)) => return BichromVerdict::fail(u, v),
    };
    let flip: Vec<usize> = (0..n).rev().collect();
    let rev = g.reversed().permuted(&flip);
    let small_b: Vec<usize> = match small_outset_ranked(&rev, n - boundary, d, k) {
        Ok(small) => small.into_iter().map(|r| n - 1 - r).collect(),
        Err((u, v)) => return BichromVerdict::fail(n - 1 - u, n - 1 - v),
    };

    // Far side of each small `b`, including `b` itself.
    let near_b: Vec<Vec<usize>> = small_b
        .iter()
        .map(|&b| {
            bounded_ball(g, b, d, Direction::In, |u| u >= boundary)
                .into_iter()
                .map(|(u, _)| u)
                .collect()
        })
        .collect();

    let mut exits = Marks::new(n);
    for &a in &small_a {
        // Blue boundary of the red out-neighborhood, kept within distance d of a.
        exits.clear();
        for (v, dv) in bounded_ball(g, a, d, Direction::Out, |u| u < boundary) {
            for nb in g.out_neighbors(v) {
                let x = nb.vertex();
                if x >= boundary && dv.checked_add(nb.weight).is_some_and(|t| t <= d) {
                    exits.mark(x);
                }
            }
        }
        for (&b, near) in small_b.iter().zip(&near_b) {
            if !near.iter().any(|&x| exits.is_marked(x)) {
                return BichromVerdict::fail(a, b);
            }
        }
    }
    BichromVerdict::Pass
}

/// Largest weight on an edge joining the two colors, 0 if there is none.
pub fn max_red_blue_weight(g: &DiGraph, colors: &ColorAssignment) -> u64 {
    g.edges()
        .filter(|&(u, v, _)| colors.get(u) != colors.get(v))
        .map(|(_, _, w)| w)
        .max()
        .unwrap_or(0)
}

fn is_dense(n: usize, m: usize) -> bool {
    (m as u128).pow(5) > (n as u128).pow(7)
}

/// Decides that the bichromatic min-diameter is greater than `d` (Fail), at
/// most `2d + M` with `M` the largest red-blue edge weight (Pass), or infinite.
pub fn bichrom_tester(
    g: &DiGraph,
    colors: &ColorAssignment,
    d: u64,
) -> Result<BichromVerdict, BichromError> {
    assert_eq!(colors.len(), g.n(), "color assignment length mismatch");
    if !colors.has_both() {
        return Err(BichromError::MissingColor);
    }
    let order = topological_sort(g)?;
    let h = g.permuted(order.positions());
    let ranked: Vec<Color> = order.order().iter().map(|&v| colors.get(v)).collect();
    Ok(tester_ranked(&h, &ranked, d).map_witness(|r| order.vertex_at(r)))
}

fn tester_ranked(h: &DiGraph, colors: &[Color], d: u64) -> BichromVerdict {
    // Explicit work list: the split can be lopsided, so recursion depth is unbounded.
    let mut work = vec![(0, h.n())];
    while let Some((lo, hi)) = work.pop() {
        let sub = h.range_subgraph(lo, hi);
        let verdict = match split_level(&sub, &colors[lo..hi], d) {
            Ok(children) => {
                work.extend(children.into_iter().flatten().map(|(a, b)| (lo + a, lo + b)));
                continue;
            }
            Err(v) => v,
        };
        return verdict.map_witness(|r| lo + r);
    }
    BichromVerdict::Pass
}

type Children = [Option<(usize, usize)>; 2];

/// One level of the recursive tester. Returns the rank ranges still to test,
/// or a non-Pass verdict in local ranks.
fn split_level(g: &DiGraph, colors: &[Color], d: u64) -> Result<Children, BichromVerdict> {
    let (n, m) = (g.n(), g.m());
    let reds = colors.iter().filter(|&&c| c == Color::Red).count();
    let blues = n - reds;
    if reds == 0 || blues == 0 {
        return Ok([None, None]);
    }
    if reds.min(blues) == 1 {
        let lone_color = if reds == 1 { Color::Red } else { Color::Blue };
        let v = colors.iter().position(|&c| c == lone_color).unwrap();
        check_vertex(g, colors, v, d)?;
        return Ok([None, None]);
    }

    let dense = is_dense(n, m);
    let mid = if dense {
        n.div_ceil(2) - 1
    } else {
        edge_median(g)
    };
    let run_start = |mut i: usize| {
        while i > 0 && colors[i - 1] == colors[i] {
            i -= 1;
        }
        i
    };
    let run_end = |mut i: usize| {
        while i + 1 < n && colors[i + 1] == colors[i] {
            i += 1;
        }
        i
    };
    let (b0, b1) = (run_start(mid), run_end(mid));
    let a = (b0 > 0).then(|| (run_start(b0 - 1), b0 - 1));
    let c = (b1 + 1 < n).then(|| (b1 + 1, run_end(b1 + 1)));
    let l = a.and_then(|(a0, _)| a0.checked_sub(1));
    let r = c.and_then(|(_, c1)| (c1 + 1 < n).then_some(c1 + 1));

    // Consecutive vertices of different colors can only be joined by a direct edge.
    let pairs = [
        l.zip(a.map(|(a0, _)| a0)),
        a.map(|(_, a1)| (a1, b0)),
        c.map(|(c0, _)| (b1, c0)),
        c.map(|(_, c1)| c1).zip(r),
    ];
    for (u, v) in pairs.into_iter().flatten() {
        if !g.has_edge(u, v) {
            return Err(BichromVerdict::infinite(u, v));
        }
    }

    let separated = |lo: usize, boundary: usize, hi: usize| -> Result<(), BichromVerdict> {
        let piece = g.range_subgraph(lo, hi + 1);
        let verdict = if dense {
            dense_ranked(&piece, boundary - lo, d)
        } else {
            sparse_ranked(&piece, boundary - lo, d)
        };
        match verdict {
            BichromVerdict::Pass => Ok(()),
            other => Err(other.map_witness(|x| lo + x)),
        }
    };
    if let Some((a0, _)) = a {
        separated(a0, b0, b1)?;
    }
    if let Some((c0, c1)) = c {
        separated(b0, c0, c1)?;
    }

    let mut probes: Vec<usize> = [l, a.map(|x| x.0), a.map(|x| x.1), Some(b0), Some(b1)]
        .into_iter()
        .chain([c.map(|x| x.0), c.map(|x| x.1), r])
        .flatten()
        .collect();
    probes.sort_unstable();
    probes.dedup();
    for v in probes {
        check_vertex(g, colors, v, d)?;
    }

    Ok([
        (b0 > 0).then_some((0, b0)),
        (b1 + 1 < n).then_some((b1 + 1, n)),
    ])
}

/// Smallest rank `j` such that at least half of the edges end at or before `j`.
fn edge_median(g: &DiGraph) -> usize {
    let m = g.m();
    let mut seen = 0;
    for j in 0..g.n() {
        seen += g.in_degree(j);
        if 2 * seen >= m {
            return j;
        }
    }
    g.n() - 1
}

/// Fails when some opposite-color vertex is farther than `d` from `v` in both directions.
fn check_vertex(g: &DiGraph, colors: &[Color], v: usize, d: u64) -> Result<(), BichromVerdict> {
    let out = sssp(g, v, Direction::Out);
    let inn = sssp(g, v, Direction::In);
    let mut worst: Option<(usize, Distance)> = None;
    for u in (0..g.n()).filter(|&u| colors[u] != colors[v]) {
        let dm = out[u].min(inn[u]);
        if !dm.within(d) && worst.is_none_or(|(_, w)| dm > w) {
            worst = Some((u, dm));
        }
    }
    match worst {
        None => Ok(()),
        Some((u, dm)) if dm.is_infinite() => Err(BichromVerdict::infinite(v, u)),
        Some((u, _)) => Err(BichromVerdict::fail(v, u)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BichromEstimate {
    /// Upper estimate; at most `2 * lower + m_rb`.
    pub value: Distance,
    pub lower: Distance,
    /// Largest red-blue edge weight.
    pub m_rb: u64,
    /// Every threshold tried by the binary search and its outcome.
    pub probes: Vec<(u64, BichromVerdict)>,
}

/// Binary search over the threshold with [`bichrom_tester`].
pub fn approx_bichrom(
    g: &DiGraph,
    colors: &ColorAssignment,
) -> Result<BichromEstimate, BichromError> {
    assert_eq!(colors.len(), g.n(), "color assignment length mismatch");
    if !colors.has_both() {
        return Err(BichromError::MissingColor);
    }
    let order = topological_sort(g)?;
    let h = g.permuted(order.positions());
    let ranked: Vec<Color> = order.order().iter().map(|&v| colors.get(v)).collect();
    let m_rb = max_red_blue_weight(g, colors);

    // Finite min-distances follow simple paths, so they never exceed this.
    let cap = g.max_weight().saturating_mul(g.n() as u64 - 1);
    let sentinel = cap.saturating_add(1);
    let infinite = |probes| BichromEstimate {
        value: Distance::INFINITE,
        lower: Distance::INFINITE,
        m_rb,
        probes,
    };
    // Thresholds below `lo` failed; `hi` passed or is the sentinel.
    let (mut lo, mut hi) = (0u64, sentinel);
    let mut probes = Vec::new();
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let verdict = tester_ranked(&h, &ranked, mid).map_witness(|r| order.vertex_at(r));
        probes.push((mid, verdict));
        match verdict {
            BichromVerdict::Pass => hi = mid,
            BichromVerdict::Fail { .. } => lo = mid + 1,
            BichromVerdict::Infinite { .. } => return Ok(infinite(probes)),
        }
    }
    if hi == sentinel {
        return Ok(infinite(probes));
    }
    Ok(BichromEstimate {
        value: Distance::finite(2 * hi + m_rb),
        lower: Distance::finite(hi),
        m_rb,
        probes,
    })
}

/// Whether every red/blue pair of a DAG is joined by a path in some direction.
///
/// Runs in linear time over windows of consecutive monochromatic runs.
pub fn dag_bichrom_finite(
    g: &DiGraph,
    colors: &ColorAssignment,
    order: &TopoOrder,
) -> Result<bool, BichromError> {
    assert_eq!(colors.len(), g.n(), "color assignment length mismatch");
    if !colors.has_both() {
        return Err(BichromError::MissingColor);
    }
    if order.len() != g.n() || !order.is_valid_for(g) {
        return Err(BichromError::InvalidOrder);
    }
    let n = g.n();
    let adj = RankAdjacency::new(g, order);
    let red: Vec<bool> = order.order().iter().map(|&v| colors.get(v) == Color::Red).collect();

    let mut runs = Vec::new();
    let mut start = 0;
    for r in 1..=n {
        if r == n || red[r] != red[start] {
            runs.push((start, r - 1));
            start = r;
        }
    }

    let mut sources = Marks::new(n);
    let mut seen = Marks::new(n);
    let mut stack = Vec::new();
    // Flood from `seeds` along `dir`, staying inside lo..=hi.
    let mut flood = |seen: &mut Marks, seeds: &[usize], lo: usize, hi: usize, dir: Direction| {
        seen.clear();
        for &s in seeds {
            seen.mark(s);
            stack.push(s);
        }
        while let Some(v) = stack.pop() {
            for &u in adj.neighbors(v, dir) {
                let u = u as usize;
                if (lo..=hi).contains(&u) && !seen.is_marked(u) {
                    seen.mark(u);
                    stack.push(u);
                }
            }
        }
    };

    let mut linked = Vec::new();
    for w in runs.windows(2) {
        let ((s, e), (s2, e2)) = (w[0], w[1]);
        // Sources of the next run: every vertex there is reachable from one.
        sources.clear();
        let mut n_sources = 0;
        for b in s2..=e2 {
            if !adj.neighbors(b, Direction::In).iter().any(|&p| p as usize >= s2) {
                sources.mark(b);
                n_sources += 1;
            }
        }
        linked.clear();
        linked.extend((s..=e).filter(|&a| {
            let hits = adj.neighbors(a, Direction::Out);
            hits.iter().filter(|&&x| sources.is_marked(x as usize)).count() == n_sources
        }));
        // The right-most run vertex that cannot reach `linked` has no edge to
        // some source and no other way to get there.
        flood(&mut seen, &linked, s, e, Direction::In);
        if (s..=e).any(|a| !seen.is_marked(a)) {
            return Ok(false);
        }

        let lo = s.saturating_sub(1);
        let hi = (e2 + 1).min(n - 1);
        if s > 0 {
            flood(&mut seen, &[s - 1], lo, hi, Direction::Out);
            if (lo..=hi).any(|r| red[r] == red[s] && !seen.is_marked(r)) {
                return Ok(false);
            }
        }
        if e2 + 1 < n {
            flood(&mut seen, &[e2 + 1], lo, hi, Direction::In);
            if (lo..=hi).any(|r| red[r] != red[s] && !seen.is_marked(r)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compact adjacency indexed by topological rank, built by counting sort.
///
/// The windowed floods then touch neighboring ranks in neighboring memory.
struct RankAdjacency {
    out_start: Vec<u32>,
    out: Vec<u32>,
    in_start: Vec<u32>,
    inn: Vec<u32>,
}

impl RankAdjacency {
    fn new(g: &DiGraph, order: &TopoOrder) -> Self {
        let pos = order.positions();
        let build = |dir: Direction| {
            let mut start = Vec::with_capacity(g.n() + 1);
            start.push(0u32);
            for &v in order.order() {
                start.push(start.last().unwrap() + g.neighbors(v, dir).len() as u32);
            }
            let mut flat = vec![0u32; g.m()];
            for (v, &r) in pos.iter().enumerate() {
                let at = start[r] as usize;
                for (slot, nb) in flat[at..].iter_mut().zip(g.neighbors(v, dir)) {
                    *slot = pos[nb.vertex()] as u32;
                }
            }
            (start, flat)
        };
        let (out_start, out) = build(Direction::Out);
        let (in_start, inn) = build(Direction::In);
        RankAdjacency { out_start, out, in_start, inn }
    }

    fn neighbors(&self, r: usize, dir: Direction) -> &[u32] {
        let (start, flat) = match dir {
            Direction::Out => (&self.out_start, &self.out),
            Direction::In => (&self.in_start, &self.inn),
        };
        &flat[start[r] as usize..start[r + 1] as usize]
    }
}

/// Finiteness for arbitrary digraphs via the condensation.
pub fn bichrom_finite(g: &DiGraph, colors: &ColorAssignment) -> Result<bool, BichromError> {
    assert_eq!(colors.len(), g.n(), "color assignment length mismatch");
    if !colors.has_both() {
        return Err(BichromError::MissingColor);
    }
    let cond = scc_condense(g, colors);
    let order = TopoOrder::identity(cond.graph.n());
    debug_assert!(order.is_valid_for(&cond.graph));
    dag_bichrom_finite(&cond.graph, &cond.colors, &order)
}

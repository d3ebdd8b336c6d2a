//! Min-diameter approximation for unweighted DAGs.
//!
//! A tester decides, for a threshold `D`, either that the min-diameter exceeds
//! `D` (Fail) or that it is at most `⌈3D/2⌉` (Pass); the exact-3/2 variant
//! tightens Pass to `⌊3D/2⌋` by working on the edge-subdivided graph. A
//! binary search over `D` turns either tester into an estimate.
//!
//! The tester sorts the graph, builds a neighborhood cover, checks the
//! eccentricity of every cover vertex, then cuts the vertex ranks into
//! equal intervals and grows a middle block ("amoeba") outwards: each step
//! compares the interval just left of the block against the one just right of
//! it and swallows whichever side the directional test certifies. Once every
//! left/right pair is certified the two halves are handled recursively.

use std::iter;

use thiserror::Error;

use crate::cover::{build_cover, build_ranked, NeighborhoodCover};
use crate::graph::{
    min_distance_profile, sssp, subdivide, topological_sort, DiGraph, Direction, Distance,
    GraphError, Origin, SubdivisionMap, TopoOrder,
};
use crate::util::{floor_root, Marks};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinDiamError {
    #[error("graph contains a cycle")]
    NotADag,
    #[error("min-diameter approximation needs an unweighted graph")]
    WeightedInput,
    #[error("need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("cover thresholds {found:?} do not match the required {expected:?}")]
    CoverMismatch {
        expected: (Distance, Distance),
        found: (Distance, Distance),
    },
}

impl From<GraphError> for MinDiamError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::WeightedInput => MinDiamError::WeightedInput,
            _ => MinDiamError::NotADag,
        }
    }
}

/// Which interval the directional tester certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass { side: Option<Side> },
    /// The witness pair, when present, has min-distance greater than the threshold.
    Fail { witness: Option<(usize, usize)> },
}

impl Verdict {
    pub const PASS: Verdict = Verdict::Pass { side: None };

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    fn fail(u: usize, v: usize) -> Verdict {
        Verdict::Fail {
            witness: Some((u.min(v), u.max(v))),
        }
    }

    fn map_witness(self, f: impl Fn(usize) -> usize) -> Verdict {
        match self {
            Verdict::Fail {
                witness: Some((u, v)),
            } => Verdict::Fail {
                witness: Some((f(u), f(v))),
            },
            other => other,
        }
    }
}

/// The ranks `start..end` of a topological order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start <= end);
        Interval { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn ranks(&self) -> std::ops::Range<usize> {
        self.start..self.end
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Pass bound `⌈3D/2⌉`.
    Half,
    /// Pass bound `⌊3D/2⌋`, via the subdivided graph.
    Exact32,
}

impl Mode {
    /// Largest min-diameter a Pass at threshold `d` allows.
    pub fn pass_bound(self, d: u64) -> u64 {
        match self {
            Mode::Half => (3 * d).div_ceil(2),
            Mode::Exact32 => 3 * d / 2,
        }
    }
}

/// Cover size cap, interval length and recursion floor. Computed once from
/// the input size and reused at every recursion level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TesterParams {
    pub k: usize,
    pub interval_size: usize,
    /// Subgraphs with at most this many vertices are checked exactly.
    pub base_case_threshold: usize,
}

impl TesterParams {
    /// `k = m^{1/4}` for `Half`, `k = m^{3/4} / n^{1/2}` for `Exact32`.
    pub fn for_mode(mode: Mode, n: usize, m: usize) -> Self {
        let k = match mode {
            Mode::Half => floor_root(m as u128, 1, 4),
            Mode::Exact32 => floor_root((m as u128).pow(3), (n.max(1) as u128).pow(2), 4),
        };
        Self::with_k(mode, n, m, k)
    }

    /// Parameters for a fixed `k`; the interval size follows from it.
    pub fn with_k(mode: Mode, n: usize, m: usize, k: usize) -> Self {
        let k = k.clamp(1, n.max(1));
        let interval_size = match mode {
            Mode::Half => k * k,
            Mode::Exact32 => n * k * k / m.max(1),
        };
        TesterParams {
            k,
            interval_size: interval_size.max(1),
            base_case_threshold: (4 * k * k).max(16),
        }
    }

    fn normalized(self) -> Self {
        TesterParams {
            k: self.k.max(1),
            interval_size: self.interval_size.max(1),
            base_case_threshold: self.base_case_threshold.max(1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDiamEstimate {
    pub value: Distance,
    pub lower: Distance,
    pub upper: Distance,
    pub mode: Mode,
    /// Every threshold tried by the binary search and its outcome.
    pub probes: Vec<(u64, Verdict)>,
}

/// Memoized eccentricity checks within one recursion level.
///
/// Each check is a pair of depth-bounded BFS runs sharing one mark array.
/// That is only valid because the graph is acyclic, so no vertex is both an
/// ancestor and a descendant of the center.
struct Ecc<'g> {
    g: &'g DiGraph,
    d: u64,
    memo: Vec<Option<Option<usize>>>,
    seen: Marks,
    queue: Vec<usize>,
}

impl<'g> Ecc<'g> {
    fn new(g: &'g DiGraph, d: u64) -> Self {
        Ecc {
            g,
            d,
            memo: vec![None; g.n()],
            seen: Marks::new(g.n()),
            queue: Vec::new(),
        }
    }

    /// Some vertex whose min-distance to `v` exceeds the threshold.
    fn violator(&mut self, v: usize) -> Option<usize> {
        if let Some(known) = self.memo[v] {
            return known;
        }
        let n = self.g.n();
        self.seen.clear();
        self.seen.mark(v);
        let mut reached = 1;
        for dir in [Direction::Out, Direction::In] {
            self.queue.clear();
            self.queue.push(v);
            let (mut head, mut depth) = (0, 0);
            while head < self.queue.len() && depth < self.d {
                let level_end = self.queue.len();
                depth += 1;
                while head < level_end {
                    let x = self.queue[head];
                    head += 1;
                    for nb in self.g.neighbors(x, dir) {
                        let u = nb.vertex();
                        if !self.seen.is_marked(u) {
                            self.seen.mark(u);
                            self.queue.push(u);
                        }
                    }
                }
            }
            reached += self.queue.len() - 1;
        }
        let bad = (reached < n).then(|| (0..n).find(|&u| !self.seen.is_marked(u)).unwrap());
        self.memo[v] = Some(bad);
        bad
    }

    fn check(&mut self, v: usize) -> Result<(), Verdict> {
        match self.violator(v) {
            Some(u) => Err(Verdict::fail(v, u)),
            None => Ok(()),
        }
    }
}

fn half_thresholds(d: u64) -> (Distance, Distance) {
    (Distance::finite(d / 2), Distance::finite(d.div_ceil(2)))
}

fn check_half_cover(cover: &NeighborhoodCover, d: u64) -> Result<(), MinDiamError> {
    let expected = half_thresholds(d);
    let found = (cover.d_out(), cover.d_in());
    if expected != found {
        return Err(MinDiamError::CoverMismatch { expected, found });
    }
    Ok(())
}

/// Marks `center` and its truncated out-neighborhood.
fn mark_closed(marks: &mut Marks, center: usize, nbhd: &[(usize, u64)]) {
    marks.clear();
    marks.mark(center);
    for &(u, _) in nbhd {
        marks.mark(u);
    }
}

fn meets_marked(marks: &Marks, center: usize, nbhd: &[(usize, u64)]) -> bool {
    marks.is_marked(center) || nbhd.iter().any(|&(u, _)| marks.is_marked(u))
}

fn all_pairs_half(
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    cover: &NeighborhoodCover,
    marks: &mut Marks,
) -> Verdict {
    for ra in a.ranks() {
        let x = order.vertex_at(ra);
        mark_closed(marks, x, cover.out_nbhd(x));
        let out_cut = cover.out_hit(x).map(|s| order.pos(s));
        for rb in b.ranks() {
            let y = order.vertex_at(rb);
            // A common vertex is a midpoint of a path of length at most D.
            if meets_marked(marks, y, cover.in_nbhd(y)) {
                continue;
            }
            // Through the in-cover vertex of y, which x reaches within D.
            if cover.in_hit(y).is_some_and(|s| ra < order.pos(s)) {
                continue;
            }
            // Through the out-cover vertex of x, which reaches y within D.
            if out_cut.is_some_and(|s| rb > s) {
                continue;
            }
            return Verdict::fail(x, y);
        }
    }
    Verdict::PASS
}

fn directional_half(
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    cover: &NeighborhoodCover,
    ecc: &mut Ecc,
) -> Verdict {
    if a.is_empty() || b.is_empty() {
        return Verdict::Pass { side: Some(Side::A) };
    }
    let last_b = b.end - 1;
    for ra in a.ranks() {
        let x = order.vertex_at(ra);
        let escapes = cover.out_hit(x).is_none_or(|s| order.pos(s) > last_b);
        if escapes {
            // The truncated ball holds every ball member up to B, so every
            // midpoint of a short path from x into B is checked here.
            let members = iter::once(x).chain(cover.out_nbhd(x).iter().map(|&(u, _)| u));
            for v in members {
                if let Err(fail) = ecc.check(v) {
                    return fail;
                }
            }
            return Verdict::Pass { side: Some(Side::B) };
        }
    }
    Verdict::Pass { side: Some(Side::A) }
}

/// Compares every `a ∈ A` with every `b ∈ B` through the cover.
///
/// The cover must use thresholds `(⌊D/2⌋, ⌈D/2⌉)` and every hitting-set
/// vertex must have eccentricity at most `D`. Pass certifies
/// `d(a, b) ≤ ⌈3D/2⌉` for all pairs; Fail certifies min-diameter `> D`.
pub fn all_pairs_tester(
    g: &DiGraph,
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    d: u64,
    cover: &NeighborhoodCover,
) -> Result<Verdict, MinDiamError> {
    check_half_cover(cover, d)?;
    let mut marks = Marks::new(g.n());
    Ok(all_pairs_half(order, a, b, cover, &mut marks))
}

/// Certifies one of the two intervals against everything beyond the other.
///
/// Pass with side `A`: every `a ∈ A` reaches every vertex right of `B` within
/// `⌈3D/2⌉`. Pass with side `B`: every vertex left of `A` reaches every
/// `b ∈ B` within `⌈3D/2⌉`. Fail certifies min-diameter `> D`.
pub fn directional_tester(
    g: &DiGraph,
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    d: u64,
    cover: &NeighborhoodCover,
) -> Result<Verdict, MinDiamError> {
    check_half_cover(cover, d)?;
    let mut ecc = Ecc::new(g, d);
    Ok(directional_half(order, a, b, cover, &mut ecc))
}

/// A cover of the subdivided graph with threshold `D` in doubled units.
///
/// Neighborhoods are stored for original vertices only and are expressed in
/// ranks of the extended order, where each edge midpoint sits right after
/// its tail.
#[derive(Debug, Clone)]
pub struct ExactCover {
    sub: SubdivisionMap,
    ext: TopoOrder,
    cover: NeighborhoodCover,
    d: u64,
}

impl ExactCover {
    pub fn threshold(&self) -> u64 {
        self.d
    }

    pub fn subdivision(&self) -> &SubdivisionMap {
        &self.sub
    }

    /// Original vertices whose eccentricity must be verified: hitting-set
    /// vertices that are original, and both endpoints of hitting-set midpoints.
    pub fn t_set(&self) -> Vec<usize> {
        let mut t = Vec::new();
        for &r in self.cover.hitting_set() {
            match self.origin_at(r) {
                Origin::Original(v) => t.push(v),
                Origin::EdgeMid(x, y) => t.extend([x, y]),
            }
        }
        t.sort_unstable();
        t.dedup();
        t
    }

    fn origin_at(&self, rank: usize) -> Origin {
        self.sub.origin(self.ext.vertex_at(rank))
    }

    fn rank_of(&self, v: usize) -> usize {
        self.ext.pos(v)
    }
}

/// Builds the subdivided-graph cover used by the exact-3/2 testers.
pub fn build_exact_cover(
    g: &DiGraph,
    order: &TopoOrder,
    d: u64,
    k: usize,
) -> Result<ExactCover, MinDiamError> {
    let sub = subdivide(g)?;
    let ext = sub.extend_order(order);
    let ranked = sub.graph.permuted(ext.positions());
    let centers: Vec<bool> = ext.order().iter().map(|&v| sub.is_original(v)).collect();
    let radius = Distance::finite(d);
    let cover = build_ranked(&ranked, radius, radius, k, Some(&centers));
    Ok(ExactCover { sub, ext, cover, d })
}

fn all_pairs_exact(
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    xc: &ExactCover,
    marks: &mut Marks,
) -> Verdict {
    let cover = &xc.cover;
    for ra in a.ranks() {
        let x = order.vertex_at(ra);
        let rx = xc.rank_of(x);
        mark_closed(marks, rx, cover.out_nbhd(rx));
        let out_cut = cover.out_hit(rx);
        for rb in b.ranks() {
            let y = order.vertex_at(rb);
            let ry = xc.rank_of(y);
            if meets_marked(marks, ry, cover.in_nbhd(ry)) {
                continue;
            }
            if cover.in_hit(ry).is_some_and(|s| rx < s) {
                continue;
            }
            if out_cut.is_some_and(|s| ry > s) {
                continue;
            }
            return Verdict::fail(x, y);
        }
    }
    Verdict::PASS
}

fn directional_exact(
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    xc: &ExactCover,
    ecc: &mut Ecc,
) -> Verdict {
    if a.is_empty() || b.is_empty() {
        return Verdict::Pass { side: Some(Side::A) };
    }
    let cover = &xc.cover;
    let last_b = xc.rank_of(order.vertex_at(b.end - 1));
    for ra in a.ranks() {
        let rx = xc.rank_of(order.vertex_at(ra));
        if cover.out_hit(rx).is_none_or(|s| s > last_b) {
            let members = iter::once(rx).chain(cover.out_nbhd(rx).iter().map(|&(u, _)| u));
            for r in members {
                // A midpoint is entered from its tail, so the path continues from the head.
                let v = match xc.origin_at(r) {
                    Origin::Original(v) => v,
                    Origin::EdgeMid(_, head) => head,
                };
                if let Err(fail) = ecc.check(v) {
                    return fail;
                }
            }
            return Verdict::Pass { side: Some(Side::B) };
        }
    }
    Verdict::Pass { side: Some(Side::A) }
}

fn check_exact_cover(xc: &ExactCover, d: u64) -> Result<(), MinDiamError> {
    if xc.d != d {
        let t = |x: u64| (Distance::finite(x), Distance::finite(x));
        return Err(MinDiamError::CoverMismatch {
            expected: t(d),
            found: t(xc.d),
        });
    }
    Ok(())
}

/// Exact-3/2 analogue of [`all_pairs_tester`]; Pass certifies `⌊3D/2⌋`.
///
/// Every vertex of [`ExactCover::t_set`] must have eccentricity at most `D`.
pub fn all_pairs_tester_exact32(
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    d: u64,
    cover: &ExactCover,
) -> Result<Verdict, MinDiamError> {
    check_exact_cover(cover, d)?;
    let mut marks = Marks::new(cover.ext.len());
    Ok(all_pairs_exact(order, a, b, cover, &mut marks))
}

/// Exact-3/2 analogue of [`directional_tester`]; Pass certifies `⌊3D/2⌋`.
pub fn directional_tester_exact32(
    g: &DiGraph,
    order: &TopoOrder,
    a: Interval,
    b: Interval,
    d: u64,
    cover: &ExactCover,
) -> Result<Verdict, MinDiamError> {
    check_exact_cover(cover, d)?;
    let mut ecc = Ecc::new(g, d);
    Ok(directional_exact(order, a, b, cover, &mut ecc))
}

enum LevelCover {
    Half(NeighborhoodCover),
    Exact(ExactCover),
}

/// Exact check of a ranked DAG: every pair `u < v` needs `d(u, v) ≤ D`.
fn exact_check(h: &DiGraph, d: u64) -> Verdict {
    for u in 0..h.n() {
        let dist = sssp(h, u, Direction::Out);
        if let Some(v) = (u + 1..h.n()).find(|&v| !dist[v].within(d)) {
            return Verdict::fail(u, v);
        }
    }
    Verdict::PASS
}

/// Tester on a graph whose ids are topological ranks.
fn full_ranked(h: &DiGraph, d: u64, params: &TesterParams, mode: Mode) -> Verdict {
    let n = h.n();
    if n <= 1 {
        return Verdict::PASS;
    }
    if n <= params.base_case_threshold {
        return exact_check(h, d);
    }
    let split = match split_level(h, d, params, mode) {
        Ok(split) => split,
        Err(fail) => return fail,
    };
    let left = full_ranked(&h.range_subgraph(0, split), d, params, mode);
    if left.is_fail() {
        return left;
    }
    full_ranked(&h.range_subgraph(split, n), d, params, mode).map_witness(|v| v + split)
}

/// Certifies every pair across the split of one level; returns the split rank.
fn split_level(h: &DiGraph, d: u64, params: &TesterParams, mode: Mode) -> Result<usize, Verdict> {
    let n = h.n();
    let order = TopoOrder::identity(n);
    let mut ecc = Ecc::new(h, d);
    let (cover, mut marks) = match mode {
        Mode::Half => {
            let (d_out, d_in) = half_thresholds(d);
            let cover = build_cover(h, &order, d_out, d_in, params.k);
            for &s in cover.hitting_set() {
                ecc.check(s)?;
            }
            (LevelCover::Half(cover), Marks::new(n))
        }
        Mode::Exact32 => {
            let xc = build_exact_cover(h, &order, d, params.k).expect("ranked unweighted DAG");
            for t in xc.t_set() {
                ecc.check(t)?;
            }
            let size = xc.ext.len();
            (LevelCover::Exact(xc), Marks::new(size))
        }
    };

    let p = if n < 2 * params.interval_size {
        n / 2
    } else {
        params.interval_size
    };
    let q = n / p;
    let theta = q / 2;
    let split = theta * p;
    let interval = |i: usize| Interval::new(i * p, if i + 1 == q { n } else { (i + 1) * p });

    // Intervals theta-1-i.. and ..j are engulfed: certified against the whole opposite half.
    let (mut i, mut j) = (theta, theta);
    while i > 0 && j < q {
        let (a, b) = (interval(i - 1), interval(j));
        let (pairs, side) = match &cover {
            LevelCover::Half(c) => (
                all_pairs_half(&order, a, b, c, &mut marks),
                directional_half(&order, a, b, c, &mut ecc),
            ),
            LevelCover::Exact(xc) => (
                all_pairs_exact(&order, a, b, xc, &mut marks),
                directional_exact(&order, a, b, xc, &mut ecc),
            ),
        };
        if pairs.is_fail() {
            return Err(pairs);
        }
        match side {
            Verdict::Pass { side: Some(Side::B) } => {
                debug_check_engulfed(h, b.ranks(), 0..split, mode.pass_bound(d));
                j += 1;
            }
            Verdict::Pass { .. } => {
                debug_check_engulfed(h, a.ranks(), split..n, mode.pass_bound(d));
                i -= 1;
            }
            fail => return Err(fail),
        }
    }
    Ok(split)
}

/// Debug-build check, on small graphs, that an engulfed interval really is
/// within the pass bound of every vertex in the opposite half.
fn debug_check_engulfed(
    h: &DiGraph,
    engulfed: std::ops::Range<usize>,
    opposite: std::ops::Range<usize>,
    bound: u64,
) {
    if !cfg!(debug_assertions) || h.n() > 40 {
        return;
    }
    for x in engulfed {
        let profile = min_distance_profile(h, x);
        for y in opposite.clone() {
            assert!(
                profile[y].within(bound),
                "engulfed vertex {x} is {} from {y}, above {bound}",
                profile[y]
            );
        }
    }
}

fn prepare(g: &DiGraph) -> Result<(TopoOrder, DiGraph), MinDiamError> {
    if g.is_weighted() {
        return Err(MinDiamError::WeightedInput);
    }
    let order = topological_sort(g)?;
    let ranked = g.permuted(order.positions());
    Ok((order, ranked))
}

fn run_tester(
    g: &DiGraph,
    d: u64,
    params: &TesterParams,
    mode: Mode,
) -> Result<Verdict, MinDiamError> {
    let (order, ranked) = prepare(g)?;
    Ok(full_ranked(&ranked, d, &params.normalized(), mode).map_witness(|r| order.vertex_at(r)))
}

/// Full tester: Pass means min-diameter `≤ ⌈3D/2⌉`, Fail means `> D`.
pub fn full_tester(g: &DiGraph, d: u64, params: &TesterParams) -> Result<Verdict, MinDiamError> {
    run_tester(g, d, params, Mode::Half)
}

/// Full exact-3/2 tester: Pass means min-diameter `≤ ⌊3D/2⌋`, Fail means `> D`.
pub fn full_tester_exact32(
    g: &DiGraph,
    d: u64,
    params: &TesterParams,
) -> Result<Verdict, MinDiamError> {
    run_tester(g, d, params, Mode::Exact32)
}

/// Binary search over the threshold with the tester of `mode`.
///
/// Only the final Fail/Pass pair matters, so the testers need not be
/// monotone in `D`. `params` defaults to [`TesterParams::for_mode`].
pub fn approx_mindiam(
    g: &DiGraph,
    mode: Mode,
    params: Option<TesterParams>,
) -> Result<MinDiamEstimate, MinDiamError> {
    let n = g.n();
    if n < 2 {
        return Err(MinDiamError::TooFewVertices(n));
    }
    let (order, ranked) = prepare(g)?;
    let params = params
        .unwrap_or_else(|| TesterParams::for_mode(mode, n, g.m()))
        .normalized();

    // Invariant: the min-diameter exceeds `lo` and, unless `hi == n`, a Pass at `hi` was seen.
    let (mut lo, mut hi) = (0usize, n);
    let mut probes = Vec::new();
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let verdict = full_ranked(&ranked, mid as u64, &params, mode)
            .map_witness(|r| order.vertex_at(r));
        probes.push((mid as u64, verdict));
        if verdict.is_pass() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if hi == n {
        // Fail at n - 1: no finite distance in an unweighted graph is that large.
        return Ok(MinDiamEstimate {
            value: Distance::INFINITE,
            lower: Distance::INFINITE,
            upper: Distance::INFINITE,
            mode,
            probes,
        });
    }
    // A Pass proves the min-diameter finite, hence at most n - 1.
    let value = Distance::finite(mode.pass_bound(hi as u64).min(n as u64 - 1));
    Ok(MinDiamEstimate {
        value,
        lower: Distance::finite(hi as u64),
        upper: value,
        mode,
        probes,
    })
}

/// Estimate `v` with `D* ≤ v ≤ ⌈3D*/2⌉`.
pub fn approx_mindiam_half(g: &DiGraph) -> Result<MinDiamEstimate, MinDiamError> {
    approx_mindiam(g, Mode::Half, None)
}

/// Estimate `v` with `D* ≤ v ≤ 3D*/2`.
pub fn approx_mindiam_exact32(g: &DiGraph) -> Result<MinDiamEstimate, MinDiamError> {
    approx_mindiam(g, Mode::Exact32, None)
}

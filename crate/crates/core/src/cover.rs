//! Greedy hitting sets and neighborhood covers built from rank-truncated balls.
//!
//! For a DAG with topological order π, the out-ball of `v` truncated to size
//! `k` keeps the `k` members of smallest rank; the in-ball keeps the `k` of
//! largest rank. A cover is a set `S` hitting every truncated ball that
//! reached size `k`, together with each ball cut at its first `S` member.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{DiGraph, Direction, Distance, TopoOrder};

/// Greedy hitting set: repeatedly take the vertex in the most unhit sets,
/// smallest id on ties. Returns the chosen vertices sorted.
///
/// Empty input sets are ignored.
pub fn greedy_hitting_set(sets: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut count = vec![0usize; n];
    for set in sets {
        for &v in set {
            count[v] += 1;
        }
    }
    let mut offsets = vec![0usize; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + count[v];
    }
    let mut fill = offsets.clone();
    let mut incidence = vec![0usize; offsets[n]];
    for (i, set) in sets.iter().enumerate() {
        for &v in set {
            incidence[fill[v]] = i;
            fill[v] += 1;
        }
    }

    let mut hit = vec![false; sets.len()];
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = (0..n)
        .filter(|&v| count[v] > 0)
        .map(|v| (count[v], Reverse(v)))
        .collect();
    let mut chosen = Vec::new();
    // Counts only decrease, so a popped entry whose key is current is a true maximum.
    while let Some((c, Reverse(v))) = heap.pop() {
        if c != count[v] {
            if count[v] > 0 {
                heap.push((count[v], Reverse(v)));
            }
            continue;
        }
        chosen.push(v);
        for &i in &incidence[offsets[v]..offsets[v + 1]] {
            if hit[i] {
                continue;
            }
            hit[i] = true;
            for &u in &sets[i] {
                count[u] -= 1;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Reusable state for truncated-ball expansion on a graph whose ids are ranks.
///
/// Expansion pops candidates in rank order (ascending for out-balls,
/// descending for in-balls). In a DAG every shortest path into a vertex runs
/// through vertices of smaller rank that are no farther away, so by the time
/// a vertex is popped every predecessor on its shortest path has already been
/// expanded and its tentative distance is exact. Each expanded vertex keeps a
/// cursor into its rank-sorted adjacency; a heap keyed by the rank under each
/// cursor yields the next candidate.
#[derive(Default)]
pub(crate) struct BallBuilder {
    heap: BinaryHeap<Reverse<(u32, u32)>>,
    sources: Vec<(u32, u64, usize)>,
}

impl BallBuilder {
    /// Members other than `v` at distance at most `radius`, truncated to the
    /// `k` extreme ranks, returned in ascending id order.
    pub(crate) fn ball(
        &mut self,
        g: &DiGraph,
        v: usize,
        radius: u64,
        k: usize,
        dir: Direction,
        out: &mut Vec<(usize, u64)>,
    ) {
        out.clear();
        self.heap.clear();
        self.sources.clear();
        if k == 0 {
            return;
        }
        self.sources.push((v as u32, 0, 0));
        self.advance(g, 0, radius, dir);
        while out.len() < k {
            let Some(&Reverse((key, _))) = self.heap.peek() else { break };
            let mut best = u64::MAX;
            while let Some(&Reverse((top, idx))) = self.heap.peek() {
                if top != key {
                    break;
                }
                self.heap.pop();
                let (src, d, cursor) = self.sources[idx as usize];
                let nb = entry(g, src as usize, dir, cursor);
                best = best.min(d + nb.weight);
                self.sources[idx as usize].2 += 1;
                self.advance(g, idx as usize, radius, dir);
            }
            let u = decode(g, key, dir);
            out.push((u, best));
            if out.len() < k {
                self.sources.push((u as u32, best, 0));
                self.advance(g, self.sources.len() - 1, radius, dir);
            }
        }
        if dir == Direction::In {
            out.reverse();
        }
    }

    /// Moves the cursor of source `idx` to its next in-radius entry and queues it.
    fn advance(&mut self, g: &DiGraph, idx: usize, radius: u64, dir: Direction) {
        let (src, d, mut cursor) = self.sources[idx];
        let len = g.neighbors(src as usize, dir).len();
        while cursor < len {
            let nb = entry(g, src as usize, dir, cursor);
            if d.checked_add(nb.weight).is_some_and(|x| x <= radius) {
                self.heap.push(Reverse((encode(g, nb.vertex(), dir), idx as u32)));
                break;
            }
            cursor += 1;
        }
        self.sources[idx].2 = cursor;
    }
}

#[inline]
fn entry(g: &DiGraph, v: usize, dir: Direction, cursor: usize) -> crate::graph::Neighbor {
    let adj = g.neighbors(v, dir);
    match dir {
        Direction::Out => adj[cursor],
        Direction::In => adj[adj.len() - 1 - cursor],
    }
}

#[inline]
fn encode(g: &DiGraph, v: usize, dir: Direction) -> u32 {
    match dir {
        Direction::Out => v as u32,
        Direction::In => (g.n() - 1 - v) as u32,
    }
}

#[inline]
fn decode(g: &DiGraph, key: u32, dir: Direction) -> usize {
    match dir {
        Direction::Out => key as usize,
        Direction::In => g.n() - 1 - key as usize,
    }
}

fn radius_of(d: Distance) -> u64 {
    d.value().unwrap_or(u64::MAX - 1)
}

/// Relabels `g` so ids are ranks; returns `None` when the order is already the identity.
fn ranked(g: &DiGraph, order: &TopoOrder) -> Option<DiGraph> {
    (!order.is_identity()).then(|| g.permuted(order.positions()))
}

fn truncated_ball(
    g: &DiGraph,
    order: &TopoOrder,
    v: usize,
    d: Distance,
    k: usize,
    dir: Direction,
) -> Vec<(usize, u64)> {
    let relabeled = ranked(g, order);
    let h = relabeled.as_ref().unwrap_or(g);
    let mut out = Vec::new();
    BallBuilder::default().ball(h, order.pos(v), radius_of(d), k, dir, &mut out);
    out.iter().map(|&(r, dist)| (order.vertex_at(r), dist)).collect()
}

/// The out-ball of `v` within distance `d` (center excluded), truncated to
/// its `k` left-most members. Returned in topological order with exact distances.
pub fn truncated_out_ball(
    g: &DiGraph,
    order: &TopoOrder,
    v: usize,
    d: Distance,
    k: usize,
) -> Vec<(usize, u64)> {
    truncated_ball(g, order, v, d, k, Direction::Out)
}

/// The in-ball of `v` within distance `d` (center excluded), truncated to
/// its `k` right-most members. Returned in topological order.
pub fn truncated_in_ball(
    g: &DiGraph,
    order: &TopoOrder,
    v: usize,
    d: Distance,
    k: usize,
) -> Vec<(usize, u64)> {
    truncated_ball(g, order, v, d, k, Direction::In)
}

/// Hitting set plus truncated neighborhoods.
///
/// Neighborhood lists exclude their center and are in topological order. An
/// out-list that meets `S` ends at its left-most `S` member; an in-list that
/// meets `S` starts at its right-most `S` member.
#[derive(Debug, Clone)]
pub struct NeighborhoodCover {
    k: usize,
    d_out: Distance,
    d_in: Distance,
    hitting_set: Vec<usize>,
    in_set: Vec<bool>,
    out_offsets: Vec<usize>,
    out_items: Vec<(usize, u64)>,
    in_offsets: Vec<usize>,
    in_items: Vec<(usize, u64)>,
}

impl NeighborhoodCover {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d_out(&self) -> Distance {
        self.d_out
    }

    pub fn d_in(&self) -> Distance {
        self.d_in
    }

    /// The hitting set, sorted by vertex id.
    pub fn hitting_set(&self) -> &[usize] {
        &self.hitting_set
    }

    #[inline]
    pub fn in_hitting_set(&self, v: usize) -> bool {
        self.in_set[v]
    }

    #[inline]
    pub fn out_nbhd(&self, v: usize) -> &[(usize, u64)] {
        &self.out_items[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    #[inline]
    pub fn in_nbhd(&self, v: usize) -> &[(usize, u64)] {
        &self.in_items[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    /// The `S` member cutting the out-neighborhood of `v`, if any.
    #[inline]
    pub fn out_hit(&self, v: usize) -> Option<usize> {
        self.out_nbhd(v)
            .last()
            .map(|&(u, _)| u)
            .filter(|&u| self.in_set[u])
    }

    /// The `S` member cutting the in-neighborhood of `v`, if any.
    #[inline]
    pub fn in_hit(&self, v: usize) -> Option<usize> {
        self.in_nbhd(v)
            .first()
            .map(|&(u, _)| u)
            .filter(|&u| self.in_set[u])
    }

    /// Number of vertices with stored neighborhoods.
    pub fn n(&self) -> usize {
        self.in_set.len()
    }
}

/// Builds a cover of `g` under `order`. `k` is clamped to `[1, n]`.
pub fn build_cover(
    g: &DiGraph,
    order: &TopoOrder,
    d_out: Distance,
    d_in: Distance,
    k: usize,
) -> NeighborhoodCover {
    let relabeled = ranked(g, order);
    let h = relabeled.as_ref().unwrap_or(g);
    let mut cover = build_ranked(h, d_out, d_in, k, None);
    if relabeled.is_some() {
        let back = |items: &mut Vec<(usize, u64)>| {
            for item in items.iter_mut() {
                item.0 = order.vertex_at(item.0);
            }
        };
        back(&mut cover.out_items);
        back(&mut cover.in_items);
        cover.hitting_set = cover.hitting_set.iter().map(|&r| order.vertex_at(r)).collect();
        cover.hitting_set.sort_unstable();
        cover.in_set = vec![false; g.n()];
        for &s in &cover.hitting_set {
            cover.in_set[s] = true;
        }
        // Neighborhoods are indexed by rank; reindex them by vertex.
        let reindex = |offsets: &[usize], items: &[(usize, u64)]| {
            let mut new_offsets = vec![0usize; g.n() + 1];
            let mut new_items = Vec::with_capacity(items.len());
            for v in 0..g.n() {
                let r = order.pos(v);
                new_items.extend_from_slice(&items[offsets[r]..offsets[r + 1]]);
                new_offsets[v + 1] = new_items.len();
            }
            (new_offsets, new_items)
        };
        (cover.out_offsets, cover.out_items) = reindex(&cover.out_offsets, &cover.out_items);
        (cover.in_offsets, cover.in_items) = reindex(&cover.in_offsets, &cover.in_items);
    }
    cover
}

/// Cover of a graph whose ids are already ranks.
///
/// With `centers`, only the listed vertices get neighborhoods and only their
/// balls need to be hit; every other vertex has empty lists.
pub(crate) fn build_ranked(
    g: &DiGraph,
    d_out: Distance,
    d_in: Distance,
    k: usize,
    centers: Option<&[bool]>,
) -> NeighborhoodCover {
    let n = g.n();
    let k = k.clamp(1, n.max(1));
    let mut builder = BallBuilder::default();
    let mut scratch = Vec::new();
    let mut collect = |dir: Direction, radius: u64| {
        let mut offsets = vec![0usize; n + 1];
        let mut items = Vec::new();
        for v in 0..n {
            if centers.is_none_or(|c| c[v]) {
                builder.ball(g, v, radius, k, dir, &mut scratch);
                items.extend_from_slice(&scratch);
            }
            offsets[v + 1] = items.len();
        }
        (offsets, items)
    };
    let (out_offsets, out_items) = collect(Direction::Out, radius_of(d_out));
    let (in_offsets, in_items) = collect(Direction::In, radius_of(d_in));

    let mut full: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        for (offsets, items) in [(&out_offsets, &out_items), (&in_offsets, &in_items)] {
            let ball = &items[offsets[v]..offsets[v + 1]];
            if ball.len() == k {
                full.push(ball.iter().map(|&(u, _)| u).collect());
            }
        }
    }
    let hitting_set = greedy_hitting_set(&full, n);
    let mut in_set = vec![false; n];
    for &s in &hitting_set {
        in_set[s] = true;
    }

    let truncate = |offsets: &[usize], items: &[(usize, u64)], dir: Direction| {
        let mut new_offsets = vec![0usize; n + 1];
        let mut new_items = Vec::with_capacity(items.len());
        for v in 0..n {
            let ball = &items[offsets[v]..offsets[v + 1]];
            match dir {
                Direction::Out => {
                    let end = ball.iter().position(|&(u, _)| in_set[u]).map_or(ball.len(), |i| i + 1);
                    new_items.extend_from_slice(&ball[..end]);
                }
                Direction::In => {
                    let start = ball.iter().rposition(|&(u, _)| in_set[u]).unwrap_or(0);
                    new_items.extend_from_slice(&ball[start..]);
                }
            }
            new_offsets[v + 1] = new_items.len();
        }
        (new_offsets, new_items)
    };
    let (out_offsets, out_items) = truncate(&out_offsets, &out_items, Direction::Out);
    let (in_offsets, in_items) = truncate(&in_offsets, &in_items, Direction::In);

    NeighborhoodCover {
        k,
        d_out,
        d_in,
        hitting_set,
        in_set,
        out_offsets,
        out_items,
        in_offsets,
        in_items,
    }
}

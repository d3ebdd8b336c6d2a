use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use super::{DiGraph, Direction, Distance};

/// Single-source distances from `source` (`Out`) or into `source` (`In`).
///
/// BFS on unweighted graphs, Dijkstra otherwise.
pub fn sssp(g: &DiGraph, source: usize, dir: Direction) -> Vec<Distance> {
    let mut dist = vec![Distance::INFINITE; g.n()];
    dist[source] = Distance::ZERO;
    if !g.is_weighted() {
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].plus(1);
            for nb in g.neighbors(v, dir) {
                let u = nb.vertex();
                if dist[u].is_infinite() {
                    dist[u] = next;
                    queue.push_back(u);
                }
            }
        }
        return dist;
    }
    let mut heap = BinaryHeap::from([Reverse((0u64, source))]);
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v].raw() {
            continue;
        }
        for nb in g.neighbors(v, dir) {
            let cand = Distance::finite(d).plus(nb.weight);
            let u = nb.vertex();
            if cand < dist[u] {
                dist[u] = cand;
                heap.push(Reverse((cand.raw(), u)));
            }
        }
    }
    dist
}

/// `min(d(v,u), d(u,v))` for every `u`, with 0 at `v` itself.
pub fn min_distance_profile(g: &DiGraph, v: usize) -> Vec<Distance> {
    let out = sssp(g, v, Direction::Out);
    let inn = sssp(g, v, Direction::In);
    out.into_iter().zip(inn).map(|(a, b)| a.min(b)).collect()
}

/// Largest min-distance from `v` to any other vertex.
pub fn min_eccentricity(g: &DiGraph, v: usize) -> Distance {
    min_distance_profile(g, v)
        .into_iter()
        .max()
        .unwrap_or(Distance::ZERO)
}

/// Vertices within distance `radius` of `source` in direction `dir`, walking
/// only through vertices accepted by `allow` (the source is always included).
///
/// Returns `(vertex, distance)` sorted by vertex id. Work is proportional to
/// the edges scanned from inside the ball rather than to the graph size.
pub fn bounded_ball(
    g: &DiGraph,
    source: usize,
    radius: u64,
    dir: Direction,
    allow: impl Fn(usize) -> bool,
) -> Vec<(usize, u64)> {
    let mut best: HashMap<usize, u64> = HashMap::from([(source, 0)]);
    let mut heap = BinaryHeap::from([Reverse((0u64, source))]);
    while let Some(Reverse((d, v))) = heap.pop() {
        if best[&v] < d {
            continue;
        }
        for nb in g.neighbors(v, dir) {
            let u = nb.vertex();
            if !allow(u) {
                continue;
            }
            let Some(cand) = d.checked_add(nb.weight) else { continue };
            if cand > radius {
                continue;
            }
            let entry = best.entry(u).or_insert(u64::MAX);
            if cand < *entry {
                *entry = cand;
                heap.push(Reverse((cand, u)));
            }
        }
    }
    let mut ball: Vec<(usize, u64)> = best.into_iter().collect();
    ball.sort_unstable();
    ball
}

/// True when the underlying undirected graph is connected (vacuously for n ≤ 1).
pub fn is_weakly_connected(g: &DiGraph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for nb in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
            let u = nb.vertex();
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

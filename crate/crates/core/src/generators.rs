//! Seeded instance generators: orthogonal-vectors instances, the lower-bound
//! gadget graphs built from them, and random DAGs and digraphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Color, ColorAssignment, DiGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("vector dimension {0} is unsupported (need 2..=62)")]
    BadDimension(usize),
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two sets of Boolean vectors, bit `j` of a `u64` being coordinate `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvInstance {
    pub dim: usize,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub planted: bool,
}

#[inline]
pub fn orthogonal(x: u64, y: u64) -> bool {
    x & y == 0
}

impl OvInstance {
    /// `⌈2 log₂ n⌉`, at least 2.
    pub fn default_dim(n: usize) -> usize {
        let mut d = 0;
        while (1u128 << d) < (n as u128) * (n as u128) {
            d += 1;
        }
        d.max(2)
    }

    pub fn has_orthogonal_pair(&self) -> bool {
        self.a
            .iter()
            .any(|&x| self.b.iter().any(|&y| orthogonal(x, y)))
    }

    /// Merges both sets into one of dimension `dim + 2`: coordinates
    /// `dim, dim+1` are `10` on `A` and `01` on `B`, so only cross pairs can
    /// be orthogonal. `A` comes first.
    pub fn single_set(&self) -> (Vec<u64>, usize) {
        let tag_a = 1u64 << self.dim;
        let tag_b = 1u64 << (self.dim + 1);
        let set = self
            .a
            .iter()
            .map(|&x| x | tag_a)
            .chain(self.b.iter().map(|&y| y | tag_b))
            .collect();
        (set, self.dim + 2)
    }
}

/// `n` vectors per side in dimension `d`.
///
/// Every vector has coordinates 0 and 1 set, except that a planted instance
/// replaces one vector of each side by a complementary pair: `a*` has
/// coordinate 0 and not 1, `b*` is its complement. That pair is then the only
/// orthogonal one.
pub fn gen_ov(n: usize, d: usize, planted: bool, seed: u64) -> Result<OvInstance, GenError> {
    if !(2..=62).contains(&d) {
        return Err(GenError::BadDimension(d));
    }
    if n == 0 {
        return Err(GenError::InfeasibleParams("n must be positive".into()));
    }
    let mut rng = rng(seed);
    let full = (1u64 << d) - 1;
    let vector = |rng: &mut ChaCha8Rng| (rng.gen::<u64>() & full) | 0b11;
    let mut a: Vec<u64> = (0..n).map(|_| vector(&mut rng)).collect();
    let mut b: Vec<u64> = (0..n).map(|_| vector(&mut rng)).collect();
    if planted {
        let star = (rng.gen::<u64>() & full & !0b11) | 0b01;
        let ia = rng.gen_range(0..n);
        let ib = rng.gen_range(0..n);
        a[ia] = star;
        b[ib] = !star & full;
    }
    Ok(OvInstance {
        dim: d,
        a,
        b,
        planted,
    })
}

/// Coordinates that are 1 in at least one of `vectors`.
fn used_indices(vectors: &[u64], dim: usize) -> Vec<usize> {
    let union = vectors.iter().fold(0u64, |acc, &v| acc | v);
    (0..dim).filter(|&j| union >> j & 1 == 1).collect()
}

/// A lower-bound gadget and the min-diameter values it is built to have.
#[derive(Debug, Clone)]
pub struct GadgetGraph {
    pub graph: DiGraph,
    pub colors: Option<ColorAssignment>,
    pub certificate: Certificate,
}

/// With an orthogonal pair the (bichromatic) min-diameter is at least
/// `yes_bound`; without one it is at most `no_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub yes_bound: u64,
    pub no_bound: u64,
    pub t: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    MinDiam,
    BichromDag,
    BichromUnweighted,
    BichromWeighted,
}

/// Builds the gadget of `kind`; `t` is ignored by the unweighted bichromatic one.
pub fn gen_gadget(kind: GadgetKind, ov: &OvInstance, t: usize) -> Result<GadgetGraph, GenError> {
    match kind {
        GadgetKind::MinDiam => gen_mindiam_lb(ov, t),
        GadgetKind::BichromDag => gen_bichrom_dag_lb(ov, t),
        GadgetKind::BichromUnweighted => Ok(gen_bichrom_unweighted_lb(ov)),
        GadgetKind::BichromWeighted => gen_bichrom_weighted_lb(ov, t),
    }
}

fn need_t(t: usize) -> Result<(), GenError> {
    if t == 0 {
        return Err(GenError::InfeasibleParams("t must be at least 1".into()));
    }
    Ok(())
}

/// Cyclic min-diameter gadget over the single-set form of `ov`.
///
/// Layers `A_1..A_t` each hold one vertex per vector, followed by one index
/// vertex per used coordinate. Edges: `a_1 -> x_j -> a_t` when `a[j] = 1`,
/// `a_i -> a_{i-1}`, and every `A_2 -> I`. Vertex `a_i` of vector `s` has id
/// `(i-1)·|set| + s`.
pub fn gen_mindiam_lb(ov: &OvInstance, t: usize) -> Result<GadgetGraph, GenError> {
    need_t(t)?;
    let (set, dim) = ov.single_set();
    let n = set.len();
    if t >= usize::BITS as usize || n < 1usize << t {
        return Err(GenError::InfeasibleParams(format!(
            "need at least 2^t = 2^{t} vectors, have {n}"
        )));
    }
    let index = used_indices(&set, dim);
    let layer = |i: usize, s: usize| (i - 1) * n + s;
    let x = |pos: usize| t * n + pos;
    let mut edges = Vec::new();
    for (s, &vec) in set.iter().enumerate() {
        for (pos, &j) in index.iter().enumerate() {
            if vec >> j & 1 == 1 {
                edges.push((layer(1, s), x(pos), 1));
                edges.push((x(pos), layer(t, s), 1));
            }
        }
        for i in 2..=t {
            edges.push((layer(i, s), layer(i - 1, s), 1));
        }
    }
    if t >= 2 {
        for s in 0..n {
            for pos in 0..index.len() {
                edges.push((layer(2, s), x(pos), 1));
            }
        }
    }
    let graph = DiGraph::new(t * n + index.len(), edges).expect("gadget edges are distinct");
    Ok(GadgetGraph {
        graph,
        colors: None,
        certificate: Certificate {
            yes_bound: 2 * t as u64 + 1,
            no_bound: t as u64 + 1,
            t: Some(t),
        },
    })
}

/// Layered bichromatic DAG gadget.
///
/// Red `A`; blue `B_1..B_t` and index layers `I_1..I_{t+1}`. `A` is complete
/// to `I_1`; `I_i -> I_{i+1}` and `B_i -> B_{i+1}` are matchings; `a -> v_{t+1,j}`
/// when `a[j] = 1` and `v_{t+1,j} -> b_1` when `b[j] = 1`. The index chain has
/// `t + 1` layers so an orthogonal pair needs a path of length exactly `2t + 1`.
///
/// Ids: `A`, then `B_1..B_t`, then `I_1..I_{t+1}`.
pub fn gen_bichrom_dag_lb(ov: &OvInstance, t: usize) -> Result<GadgetGraph, GenError> {
    need_t(t)?;
    let (na, nb) = (ov.a.len(), ov.b.len());
    let all: Vec<u64> = ov.a.iter().chain(&ov.b).copied().collect();
    let index = used_indices(&all, ov.dim);
    let ni = index.len();
    let bv = |i: usize, s: usize| na + (i - 1) * nb + s;
    let iv = |i: usize, pos: usize| na + t * nb + (i - 1) * ni + pos;
    let top = t + 1;
    let mut edges = Vec::new();
    for (s, &a) in ov.a.iter().enumerate() {
        for pos in 0..ni {
            edges.push((s, iv(1, pos), 1));
        }
        for (pos, &j) in index.iter().enumerate() {
            if a >> j & 1 == 1 {
                edges.push((s, iv(top, pos), 1));
            }
        }
    }
    for i in 1..top {
        for pos in 0..ni {
            edges.push((iv(i, pos), iv(i + 1, pos), 1));
        }
    }
    for (s, &b) in ov.b.iter().enumerate() {
        for i in 1..t {
            edges.push((bv(i, s), bv(i + 1, s), 1));
        }
        for (pos, &j) in index.iter().enumerate() {
            if b >> j & 1 == 1 {
                edges.push((iv(top, pos), bv(1, s), 1));
            }
        }
    }
    let n = na + t * nb + top * ni;
    let graph = DiGraph::new(n, edges).expect("gadget edges are distinct");
    let colors = ColorAssignment::from_fn(n, |v| if v < na { Color::Red } else { Color::Blue });
    Ok(GadgetGraph {
        graph,
        colors: Some(colors),
        certificate: Certificate {
            yes_bound: 2 * t as u64 + 1,
            no_bound: t as u64 + 1,
            t: Some(t),
        },
    })
}

/// Unweighted bichromatic gadget: red `A`, blue `B`, `I` and a hub `x`.
///
/// `a -> i` when `a[i] = 1`, `i -> b` when `b[i] = 1`, `I -> x`, `x -> A`.
/// Ids: `A`, `B`, `I`, then `x`.
pub fn gen_bichrom_unweighted_lb(ov: &OvInstance) -> GadgetGraph {
    let (na, nb) = (ov.a.len(), ov.b.len());
    let all: Vec<u64> = ov.a.iter().chain(&ov.b).copied().collect();
    let index = used_indices(&all, ov.dim);
    let iv = |pos: usize| na + nb + pos;
    let hub = na + nb + index.len();
    let mut edges = Vec::new();
    for (pos, &j) in index.iter().enumerate() {
        for (s, &a) in ov.a.iter().enumerate() {
            if a >> j & 1 == 1 {
                edges.push((s, iv(pos), 1));
            }
        }
        for (s, &b) in ov.b.iter().enumerate() {
            if b >> j & 1 == 1 {
                edges.push((iv(pos), na + s, 1));
            }
        }
        edges.push((iv(pos), hub, 1));
    }
    for s in 0..na {
        edges.push((hub, s, 1));
    }
    let n = hub + 1;
    let graph = DiGraph::new(n, edges).expect("gadget edges are distinct");
    let colors = ColorAssignment::from_fn(n, |v| if v < na { Color::Red } else { Color::Blue });
    GadgetGraph {
        graph,
        colors: Some(colors),
        certificate: Certificate {
            yes_bound: 5,
            no_bound: 2,
            t: None,
        },
    }
}

/// Weighted bichromatic gadget: red `A`, blue `B` and `I`.
///
/// `a -> i` with weight `t` when `a[i] = 1`, `i -> b` with weight 1 when
/// `b[i] = 1`, and every `i -> a` with weight `t + 1`. Ids: `A`, `B`, `I`.
pub fn gen_bichrom_weighted_lb(ov: &OvInstance, t: usize) -> Result<GadgetGraph, GenError> {
    need_t(t)?;
    let (na, nb) = (ov.a.len(), ov.b.len());
    let all: Vec<u64> = ov.a.iter().chain(&ov.b).copied().collect();
    let index = used_indices(&all, ov.dim);
    let iv = |pos: usize| na + nb + pos;
    let w = t as u64;
    let mut edges = Vec::new();
    for (pos, &j) in index.iter().enumerate() {
        for (s, &a) in ov.a.iter().enumerate() {
            if a >> j & 1 == 1 {
                edges.push((s, iv(pos), w));
            }
            edges.push((iv(pos), s, w + 1));
        }
        for (s, &b) in ov.b.iter().enumerate() {
            if b >> j & 1 == 1 {
                edges.push((iv(pos), na + s, 1));
            }
        }
    }
    let n = na + nb + index.len();
    let graph = DiGraph::new(n, edges).expect("gadget edges are distinct");
    let colors = ColorAssignment::from_fn(n, |v| if v < na { Color::Red } else { Color::Blue });
    Ok(GadgetGraph {
        graph,
        colors: Some(colors),
        certificate: Certificate {
            yes_bound: 3 * w + 2,
            no_bound: w + 1,
            t: Some(t),
        },
    })
}

/// Spanning structure that makes a random DAG weakly connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spine {
    /// Each vertex hangs off a uniformly random earlier one.
    RandomTree,
    /// Consecutive vertices of the hidden order are joined, so the
    /// min-diameter is finite.
    HamiltonianPath,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomDagParams {
    pub n: usize,
    pub m: usize,
    /// Weights are uniform in `1..=max_weight`.
    pub max_weight: u64,
    pub red_fraction: f64,
    /// Color the first vertices of the hidden order red and the rest blue.
    pub separated: bool,
    pub spine: Spine,
}

impl RandomDagParams {
    pub fn new(n: usize, m: usize) -> Self {
        RandomDagParams {
            n,
            m,
            max_weight: 1,
            red_fraction: 0.5,
            separated: false,
            spine: Spine::RandomTree,
        }
    }
}

fn random_colors(
    rng: &mut ChaCha8Rng,
    ranked: &[usize],
    red_fraction: f64,
    separated: bool,
) -> ColorAssignment {
    let n = ranked.len();
    let mut colors = ColorAssignment::uniform(n, Color::Blue);
    if separated {
        let reds = ((red_fraction * n as f64).round() as usize).clamp(1.min(n), n.saturating_sub(1).max(1));
        for &v in &ranked[..reds.min(n)] {
            colors.set(v, Color::Red);
        }
        return colors;
    }
    for v in 0..n {
        if rng.gen_bool(red_fraction.clamp(0.0, 1.0)) {
            colors.set(v, Color::Red);
        }
    }
    if n >= 2 && !colors.has_both() {
        let v = rng.gen_range(0..n);
        let c = colors.get(v).opposite();
        colors.set(v, c);
    }
    colors
}

/// Adds `extra` distinct pairs from `candidates` (a predicate over ordered
/// pairs), sampling by rejection when sparse and by enumeration when dense.
fn sample_pairs(
    rng: &mut ChaCha8Rng,
    taken: &mut HashSet<(usize, usize)>,
    extra: usize,
    total: usize,
    draw: impl Fn(&mut ChaCha8Rng) -> (usize, usize),
    enumerate: impl Fn() -> Vec<(usize, usize)>,
) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(extra);
    if extra == 0 {
        return out;
    }
    if 2 * (taken.len() + extra) >= total {
        let mut all: Vec<_> = enumerate().into_iter().filter(|p| !taken.contains(p)).collect();
        all.shuffle(rng);
        out.extend(all.into_iter().take(extra));
        taken.extend(out.iter().copied());
        return out;
    }
    while out.len() < extra {
        let p = draw(rng);
        if taken.insert(p) {
            out.push(p);
        }
    }
    out
}

/// Random weakly connected DAG with exactly `m` edges, oriented along a
/// hidden random vertex order, together with a coloring.
pub fn gen_random_dag(
    params: &RandomDagParams,
    seed: u64,
) -> Result<(DiGraph, ColorAssignment), GenError> {
    let RandomDagParams { n, m, max_weight, .. } = *params;
    let max_pairs = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max_pairs {
        return Err(GenError::InfeasibleParams(format!(
            "a weakly connected DAG on {n} vertices needs {}..={max_pairs} edges, got {m}",
            n.saturating_sub(1)
        )));
    }
    if max_weight == 0 {
        return Err(GenError::InfeasibleParams("max_weight must be positive".into()));
    }
    let mut rng = rng(seed);
    let mut ranked: Vec<usize> = (0..n).collect();
    ranked.shuffle(&mut rng);

    // Pairs are (earlier rank, later rank).
    let mut taken = HashSet::with_capacity(m);
    for i in 1..n {
        let j = match params.spine {
            Spine::RandomTree => rng.gen_range(0..i),
            Spine::HamiltonianPath => i - 1,
        };
        taken.insert((j, i));
    }
    let mut pairs: Vec<(usize, usize)> = taken.iter().copied().collect();
    pairs.sort_unstable();
    let draw = |rng: &mut ChaCha8Rng| {
        let x = rng.gen_range(0..n);
        let mut y = rng.gen_range(0..n - 1);
        if y >= x {
            y += 1;
        }
        (x.min(y), x.max(y))
    };
    let enumerate = || (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.extend(sample_pairs(&mut rng, &mut taken, m + 1 - n, max_pairs, draw, enumerate));

    let edges: Vec<(usize, usize, u64)> = pairs
        .into_iter()
        .map(|(i, j)| (ranked[i], ranked[j], rng.gen_range(1..=max_weight)))
        .collect();
    let graph = DiGraph::new(n, edges).expect("sampled pairs are distinct");
    let colors = random_colors(&mut rng, &ranked, params.red_fraction, params.separated);
    Ok((graph, colors))
}

/// Random digraph with `m` distinct edges (cycles allowed) and a random
/// coloring with both colors present. A random spanning tree with random
/// edge directions is included when `m ≥ n - 1`.
pub fn gen_random_digraph(
    n: usize,
    m: usize,
    red_fraction: f64,
    seed: u64,
) -> Result<(DiGraph, ColorAssignment), GenError> {
    let max_pairs = n * n.saturating_sub(1);
    if n == 0 || m > max_pairs {
        return Err(GenError::InfeasibleParams(format!(
            "a digraph on {n} vertices has at most {max_pairs} edges, got {m}"
        )));
    }
    let mut rng = rng(seed);
    let mut taken = HashSet::with_capacity(m);
    if m + 1 >= n {
        for i in 1..n {
            let j = rng.gen_range(0..i);
            taken.insert(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
        }
    }
    let mut pairs: Vec<(usize, usize)> = taken.iter().copied().collect();
    pairs.sort_unstable();
    let draw = |rng: &mut ChaCha8Rng| {
        let x = rng.gen_range(0..n);
        let mut y = rng.gen_range(0..n - 1);
        if y >= x {
            y += 1;
        }
        (x, y)
    };
    let enumerate = || {
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect()
    };
    let extra = m - pairs.len();
    pairs.extend(sample_pairs(&mut rng, &mut taken, extra, max_pairs, draw, enumerate));
    let graph = DiGraph::new(n, pairs.into_iter().map(|(u, v)| (u, v, 1)))
        .expect("sampled pairs are distinct");
    let order: Vec<usize> = (0..n).collect();
    let colors = random_colors(&mut rng, &order, red_fraction, false);
    Ok((graph, colors))
}

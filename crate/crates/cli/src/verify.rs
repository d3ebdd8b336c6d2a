//! Oracle-vs-estimator sweep over a seeded corpus.

use dagdiam::bichromatic::{approx_bichrom, bichrom_finite, dag_bichrom_finite};
use dagdiam::generators::{gen_random_dag, gen_random_digraph, RandomDagParams, Spine};
use dagdiam::graph::topological_sort;
use dagdiam::mindiam::{approx_mindiam_exact32, approx_mindiam_half};
use dagdiam::oracle::{exact_bichrom_min_diameter, exact_min_diameter};
use dagdiam::{ColorAssignment, Distance};

use crate::report::Report;

const DEFAULT_SEEDS: &str = include_str!("../data/verify_seeds.txt");

pub(crate) fn parse_seeds(text: &str) -> Result<Vec<u64>, String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().map_err(|_| format!("bad seed `{l}`")))
        .collect()
}

pub(crate) fn default_seeds() -> Vec<u64> {
    parse_seeds(DEFAULT_SEEDS).expect("built-in seed list parses")
}

fn ensure_both(colors: &mut ColorAssignment) {
    if !colors.has_both() {
        let flipped = colors.get(0).opposite();
        colors.set(0, flipped);
    }
}

/// `lo ≤ truth ≤ value ≤ cap(truth)`, or everything infinite together.
fn enveloped(truth: Distance, lower: Distance, value: Distance, cap: impl Fn(u64) -> u64) -> bool {
    match truth.value() {
        None => value.is_infinite(),
        Some(x) => lower.within(x) && value.value().is_some_and(|v| x <= v && v <= cap(x)),
    }
}

/// Runs every estimator on the instances derived from `seeds` and returns
/// the report with the number of violations found.
pub(crate) fn verify(seeds: &[u64]) -> (Report, usize) {
    let mut report = Report::new();
    let mut violations = Vec::new();
    let mut checks = 0;
    for &seed in seeds {
        let n = 4 + (seed % 37) as usize;
        let m = (n - 1 + (seed as usize).wrapping_mul(7) % (2 * n)).min(n * (n - 1) / 2).min(150);

        let mut p = RandomDagParams::new(n, m);
        p.spine = if seed % 2 == 0 { Spine::HamiltonianPath } else { Spine::RandomTree };
        let (g, _) = gen_random_dag(&p, seed).expect("feasible parameters");
        let truth = exact_min_diameter(&g).expect("small graph");
        let half = approx_mindiam_half(&g).expect("unweighted DAG");
        let exact = approx_mindiam_exact32(&g).expect("unweighted DAG");
        checks += 2;
        if !enveloped(truth, half.lower, half.value, |x| (3 * x).div_ceil(2)) {
            violations.push(format!("seed={seed} half value={} oracle={truth}", half.value));
        }
        if !enveloped(truth, exact.lower, exact.value, |x| 3 * x / 2) {
            violations.push(format!("seed={seed} exact32 value={} oracle={truth}", exact.value));
        }

        p.max_weight = 1 + seed % 10;
        let (g, mut colors) = gen_random_dag(&p, seed ^ 0x5eed).expect("feasible parameters");
        ensure_both(&mut colors);
        let truth = exact_bichrom_min_diameter(&g, &colors).expect("small graph");
        let est = approx_bichrom(&g, &colors).expect("colored DAG");
        checks += 1;
        if !enveloped(truth, est.lower, est.value, |x| 2 * x + est.m_rb) {
            violations.push(format!("seed={seed} bichrom value={} lower={} oracle={truth}", est.value, est.lower));
        }

        let dn = 2 + (seed % 15) as usize;
        let dm = (seed as usize).wrapping_mul(13) % (dn * (dn - 1) + 1);
        let (g, mut colors) = gen_random_digraph(dn, dm, 0.5, seed).expect("feasible parameters");
        ensure_both(&mut colors);
        let truth = exact_bichrom_min_diameter(&g, &colors).expect("small graph").is_finite();
        let general = bichrom_finite(&g, &colors).expect("both colors");
        let on_dag = topological_sort(&g)
            .ok()
            .map(|order| dag_bichrom_finite(&g, &colors, &order).expect("valid order"));
        checks += 1;
        if general != truth || on_dag.is_some_and(|f| f != truth) {
            violations.push(format!("seed={seed} finite={general} oracle={truth}"));
        }
    }
    report
        .push("seeds", seeds.len())
        .push("checks", checks)
        .push("violations", violations.len());
    for v in &violations {
        report.push("violation", v);
    }
    (report, violations.len())
}

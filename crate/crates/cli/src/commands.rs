use std::fmt::Write as _;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dagdiam::bichromatic::{approx_bichrom, bichrom_finite, BichromVerdict};
use dagdiam::generators::{
    gen_gadget, gen_ov, gen_random_dag, gen_random_digraph, GadgetKind, OvInstance,
    RandomDagParams, Spine,
};
use dagdiam::mindiam::{approx_mindiam, Mode, TesterParams, Verdict};
use dagdiam::oracle::{exact_bichrom_min_diameter, exact_min_diameter};
use dagdiam::{ColorAssignment, DiGraph};
use thiserror::Error;

use crate::format::{parse, serialize, FormatError, GraphFile};
use crate::report::Report;
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "dagdiam", version, about = "Min-diameter approximation for DAGs")]
pub struct Cli {
    /// Give up after this many milliseconds (exit code 124).
    #[arg(long, global = true, value_name = "MS")]
    pub timeout_ms: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact min-diameter, or bichromatic min-diameter when the file has colors.
    Exact(Input),
    /// Approximate min-diameter of an unweighted DAG.
    Approx {
        #[arg(long, value_enum, default_value_t = ModeArg::Half)]
        mode: ModeArg,
        /// Override the neighborhood size of the cover.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Bichromatic min-diameter routines (the file must carry colors).
    #[command(subcommand)]
    Bichrom(BichromCommand),
    /// Write a generated instance to standard output.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check every estimator against the oracle on a seeded corpus.
    Verify {
        /// Seed list, one per line; defaults to the built-in regression list.
        #[arg(long)]
        seeds: Option<PathBuf>,
    },
    /// Time the estimators on one random DAG.
    Bench {
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 40_000)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SpineArg::Path)]
        spine: SpineArg,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file; standard input when absent or `-`.
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BichromCommand {
    /// (2, M)-style estimate of the bichromatic min-diameter.
    Approx(Input),
    /// Whether every red-blue pair is connected in some direction.
    Finite(Input),
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Lower-bound gadget built from an orthogonal-vectors instance.
    Gadget {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[command(flatten)]
        ov: OvArgs,
    },
    /// Random weakly connected DAG, or any digraph with `--cyclic`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        #[arg(long, default_value_t = 0.5)]
        red_fraction: f64,
        /// Color a prefix of the hidden order red and the rest blue.
        #[arg(long)]
        separated: bool,
        #[arg(long, value_enum, default_value_t = SpineArg::Tree)]
        spine: SpineArg,
        /// Allow cycles (unweighted; ignores the DAG-only flags).
        #[arg(long)]
        cyclic: bool,
        /// Omit color lines.
        #[arg(long)]
        uncolored: bool,
    },
    /// Orthogonal-vectors instance, one bit string per line.
    Ov(OvArgs),
}

#[derive(Debug, Args)]
pub struct OvArgs {
    /// Vectors per side.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Vector dimension; defaults to ⌈2 log₂ n⌉.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, overrides_with = "no_planted")]
    pub planted: bool,
    #[arg(long, overrides_with = "planted")]
    pub no_planted: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Half,
    Exact32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Mindiam,
    BichromDag,
    BichromUnweighted,
    BichromWeighted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpineArg {
    Tree,
    Path,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Half => Mode::Half,
            ModeArg::Exact32 => Mode::Exact32,
        }
    }
}

impl From<KindArg> for GadgetKind {
    fn from(k: KindArg) -> GadgetKind {
        match k {
            KindArg::Mindiam => GadgetKind::MinDiam,
            KindArg::BichromDag => GadgetKind::BichromDag,
            KindArg::BichromUnweighted => GadgetKind::BichromUnweighted,
            KindArg::BichromWeighted => GadgetKind::BichromWeighted,
        }
    }
}

impl From<SpineArg> for Spine {
    fn from(s: SpineArg) -> Spine {
        match s {
            SpineArg::Tree => Spine::RandomTree,
            SpineArg::Path => Spine::HamiltonianPath,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{name}: {source}")]
    Input { name: String, source: FormatError },
    #[error("{0}")]
    Data(String),
}

impl CliError {
    /// sysexits-style codes: 64 usage, 65 bad data, 74 I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Input { .. } | CliError::Data(_) => 65,
            CliError::Io { .. } => 74,
        }
    }
}

fn data(e: impl std::fmt::Display) -> CliError {
    CliError::Data(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Text for standard output and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: impl ToString) -> Self {
        Outcome {
            stdout: stdout.to_string(),
            code: 0,
        }
    }
}

fn read_input(input: &Input) -> Result<GraphFile, CliError> {
    let (name, text) = match input.file.as_deref() {
        None => ("<stdin>".to_string(), read_stdin()?),
        Some(p) if p == Path::new("-") => ("<stdin>".to_string(), read_stdin()?),
        Some(p) => (
            p.display().to_string(),
            std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?,
        ),
    };
    parse(&text).map_err(|e| CliError::Input { name, source: e })
}

fn read_stdin() -> Result<String, CliError> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|source| CliError::Io {
            path: "<stdin>".into(),
            source,
        })?;
    Ok(text)
}

fn colors_of(file: &GraphFile) -> Result<&ColorAssignment, CliError> {
    file.colors
        .as_ref()
        .ok_or_else(|| CliError::Data("graph has no color lines".into()))
}

fn millis(start: Instant) -> String {
    format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)
}

fn size(report: &mut Report, g: &DiGraph) {
    report.push("n", g.n()).push("m", g.m());
}

fn trace<V>(probes: &[(u64, V)], label: impl Fn(&V) -> &'static str) -> String {
    let parts: Vec<String> = probes.iter().map(|(d, v)| format!("{d}:{}", label(v))).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(",")
    }
}

fn mindiam_label(v: &Verdict) -> &'static str {
    if v.is_pass() {
        "pass"
    } else {
        "fail"
    }
}

fn bichrom_label(v: &BichromVerdict) -> &'static str {
    match v {
        BichromVerdict::Pass => "pass",
        BichromVerdict::Fail { .. } => "fail",
        BichromVerdict::Infinite { .. } => "inf",
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Exact(input) => exact(&read_input(&input)?),
        Command::Approx { mode, k, input } => approx(&read_input(&input)?, mode, k),
        Command::Bichrom(BichromCommand::Approx(input)) => bichrom_approx(&read_input(&input)?),
        Command::Bichrom(BichromCommand::Finite(input)) => finite(&read_input(&input)?),
        Command::Gen(what) => generate(what),
        Command::Verify { seeds } => {
            let seeds = match seeds {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    verify::parse_seeds(&text).map_err(usage)?
                }
                None => verify::default_seeds(),
            };
            let (report, violations) = verify::verify(&seeds);
            Ok(Outcome {
                stdout: report.to_string(),
                code: if violations == 0 { 0 } else { 2 },
            })
        }
        Command::Bench { n, m, seed, spine } => bench(n, m, seed, spine),
    }
}

fn exact(file: &GraphFile) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let g = &file.graph;
    let (problem, value) = match &file.colors {
        Some(c) => ("bichrom", exact_bichrom_min_diameter(g, c).map_err(data)?),
        None => ("mindiam", exact_min_diameter(g).map_err(data)?),
    };
    let mut r = Report::new();
    r.push("problem", problem).push("method", "exact");
    size(&mut r, g);
    r.push("value", value)
        .push("lower", value)
        .push("upper", value)
        .push("probes", 0)
        .push("wall_ms", millis(start));
    Ok(Outcome::ok(r))
}

fn approx(file: &GraphFile, mode: ModeArg, k: Option<usize>) -> Result<Outcome, CliError> {
    let g = &file.graph;
    if k == Some(0) {
        return Err(usage("--k must be positive"));
    }
    let start = Instant::now();
    let params = k.map(|k| TesterParams::with_k(mode.into(), g.n(), g.m(), k));
    let est = approx_mindiam(g, mode.into(), params).map_err(data)?;
    let mut r = Report::new();
    r.push("problem", "mindiam")
        .push("method", mode.to_possible_value().expect("named variant").get_name());
    size(&mut r, g);
    r.push("value", est.value)
        .push("lower", est.lower)
        .push("upper", est.upper)
        .push("probes", est.probes.len())
        .push("trace", trace(&est.probes, mindiam_label))
        .push("wall_ms", millis(start));
    Ok(Outcome::ok(r))
}

fn bichrom_approx(file: &GraphFile) -> Result<Outcome, CliError> {
    let colors = colors_of(file)?;
    let g = &file.graph;
    let start = Instant::now();
    let est = approx_bichrom(g, colors).map_err(data)?;
    let mut r = Report::new();
    r.push("problem", "bichrom").push("method", "approx");
    size(&mut r, g);
    r.push("value", est.value)
        .push("lower", est.lower)
        .push("upper", est.value)
        .push("m_rb", est.m_rb)
        .push("probes", est.probes.len())
        .push("trace", trace(&est.probes, bichrom_label))
        .push("wall_ms", millis(start));
    Ok(Outcome::ok(r))
}

fn finite(file: &GraphFile) -> Result<Outcome, CliError> {
    let colors = colors_of(file)?;
    let g = &file.graph;
    let start = Instant::now();
    let finite = bichrom_finite(g, colors).map_err(data)?;
    let mut r = Report::new();
    r.push("problem", "bichrom").push("method", "finite");
    size(&mut r, g);
    r.push("finite", finite).push("wall_ms", millis(start));
    Ok(Outcome::ok(r))
}

fn ov_instance(args: &OvArgs) -> Result<OvInstance, CliError> {
    let dim = args.dim.unwrap_or_else(|| OvInstance::default_dim(args.n));
    gen_ov(args.n, dim, !args.no_planted, args.seed).map_err(usage)
}

fn generate(what: GenCommand) -> Result<Outcome, CliError> {
    match what {
        GenCommand::Gadget { kind, t, ov } => {
            let inst = ov_instance(&ov)?;
            let gadget = gen_gadget(kind.into(), &inst, t).map_err(usage)?;
            let name = kind.to_possible_value().expect("named variant");
            let cert = gadget.certificate;
            let mut out = format!(
                "# gadget kind={} t={t} ov_n={} dim={} planted={} seed={}\n# certificate yes_bound={} no_bound={}\n",
                name.get_name(),
                ov.n,
                inst.dim,
                inst.planted,
                ov.seed,
                cert.yes_bound,
                cert.no_bound,
            );
            out.push_str(&serialize(&gadget.graph, gadget.colors.as_ref()));
            Ok(Outcome::ok(out))
        }
        GenCommand::Random {
            n,
            m,
            seed,
            max_weight,
            red_fraction,
            separated,
            spine,
            cyclic,
            uncolored,
        } => {
            if !(0.0..=1.0).contains(&red_fraction) {
                return Err(usage("--red-fraction must lie in [0, 1]"));
            }
            if max_weight == 0 {
                return Err(usage("--max-weight must be positive"));
            }
            let (g, colors) = if cyclic {
                gen_random_digraph(n, m, red_fraction, seed).map_err(usage)?
            } else {
                let mut p = RandomDagParams::new(n, m);
                p.max_weight = max_weight;
                p.red_fraction = red_fraction;
                p.separated = separated;
                p.spine = spine.into();
                gen_random_dag(&p, seed).map_err(usage)?
            };
            let mut out = format!("# random n={n} m={m} seed={seed}\n");
            out.push_str(&serialize(&g, (!uncolored).then_some(&colors)));
            Ok(Outcome::ok(out))
        }
        GenCommand::Ov(args) => {
            let inst = ov_instance(&args)?;
            let mut out = format!(
                "# ov n={} dim={} planted={} seed={}\n",
                args.n, inst.dim, inst.planted, args.seed
            );
            for (side, set) in [("a", &inst.a), ("b", &inst.b)] {
                for &x in set {
                    let bits: String = (0..inst.dim).map(|j| if x >> j & 1 == 1 { '1' } else { '0' }).collect();
                    let _ = writeln!(out, "{side} {bits}");
                }
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn bench(n: usize, m: usize, seed: u64, spine: SpineArg) -> Result<Outcome, CliError> {
    let mut p = RandomDagParams::new(n, m);
    p.spine = spine.into();
    let start = Instant::now();
    let (g, colors) = gen_random_dag(&p, seed).map_err(usage)?;
    let mut r = Report::new();
    size(&mut r, &g);
    r.push("gen_ms", millis(start));
    for (name, mode) in [("half", Mode::Half), ("exact32", Mode::Exact32)] {
        let start = Instant::now();
        let est = approx_mindiam(&g, mode, None).map_err(data)?;
        r.push(&format!("{name}_value"), est.value)
            .push(&format!("{name}_probes"), est.probes.len())
            .push(&format!("{name}_ms"), millis(start));
    }
    if colors.has_both() {
        let start = Instant::now();
        let est = approx_bichrom(&g, &colors).map_err(data)?;
        r.push("bichrom_value", est.value)
            .push("bichrom_probes", est.probes.len())
            .push("bichrom_ms", millis(start));
        let start = Instant::now();
        let finite = bichrom_finite(&g, &colors).map_err(data)?;
        r.push("finite", finite).push("finite_ms", millis(start));
    }
    Ok(Outcome::ok(r))
}

//! Command-line front end: reads graphs as planar code or text rotations,
//! runs the constructive algorithms, and emits self-checking witness
//! documents.

pub mod check;
pub mod text;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use chordfactor::classify::Witness;
use chordfactor::coloring::special_3coloring;
use chordfactor::factors::{
    same_cycle_2factor_bipartite, same_cycle_2factor_facial, separating_pm_preconditions,
    separating_pm_through_edge, two_factor_with_chord,
};
use chordfactor::io::{read_planar_code, write_planar_code, HEADER};
use chordfactor::oracle::{enumerate_triangulations, random_triangulation};
use chordfactor::suites::{run_suites, SuiteConfig, SUITES};
use chordfactor::{EdgeId, Error, NearTriangulation, PlaneGraph};

use check::{check_document, oracle_verdict, Question};
use text::{coloring_line, cycles_line, edge_label, edge_list, format_rotation, normalize, vertex_list, Document};

pub const MAX_BRUTE_ENV: &str = "CHORDFACTOR_MAX_BRUTE";

#[derive(Parser, Debug)]
#[command(name = "chordfactor", version, about = "Chorded 2-factors of planar cubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format of graph-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Cross-check negative answers by enumeration on graphs up to this size.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_brute: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(name = "planar_code")]
    PlanarCode,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Questions {
    Forced,
    Separating,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the dual of every input graph.
    Dual { input: Option<PathBuf> },
    /// Special 3-coloring of a triangulation with v_1 v_2 the given edge.
    Color {
        #[arg(long)]
        edge: Option<String>,
        input: Option<PathBuf>,
    },
    /// A 2-factor in which the edge is a chord.
    Chord {
        #[arg(long)]
        edge: Option<String>,
        input: Option<PathBuf>,
    },
    /// A separating perfect matching through the edge.
    Seppm {
        #[arg(long)]
        edge: Option<String>,
        input: Option<PathBuf>,
    },
    /// Forced-Hamiltonian and separating-matching verdicts for the edge.
    Classify {
        #[arg(long)]
        edge: Option<String>,
        #[arg(long, value_enum, default_value_t = Questions::Both)]
        question: Questions,
        input: Option<PathBuf>,
    },
    /// A 2-factor with both edges on one cycle.
    Samecycle {
        /// Two edges, as in `1-2,3-4`.
        #[arg(long)]
        edges: String,
        #[arg(long, conflicts_with = "facial")]
        bipartite: bool,
        #[arg(long)]
        facial: bool,
        input: Option<PathBuf>,
    },
    /// Random triangulations.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All triangulations on n vertices up to isomorphism.
    Enum {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite, or re-check a file of witness documents.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, required_unless_present = "witness", conflicts_with = "witness")]
        suite: Option<String>,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Use small limits instead of the full ones.
        #[arg(long)]
        quick: bool,
    },
}

/// How a run ended, when it did not fail on its input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Counterexample,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Counterexample => 1,
        }
    }
}

/// Runs a parsed command line.
pub fn run(mut cli: Cli) -> Result<Status> {
    if let Ok(v) = std::env::var(MAX_BRUTE_ENV) {
        cli.max_brute = v.trim().parse().with_context(|| format!("{MAX_BRUTE_ENV}={v:?} is not a number"))?;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            bail!("--jobs must be positive");
        }
        pool = pool.num_threads(j);
    }
    pool.build()?.install(|| dispatch(&cli))
}

fn dispatch(cli: &Cli) -> Result<Status> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    let status = match &cli.command {
        Command::Dual { input } => {
            let graphs = read_graphs(input.as_deref())?;
            let duals: Vec<_> = graphs.iter().map(|g| normalize(&g.dual())).collect::<Result<_>>()?;
            emit_graphs(&mut out, cli.format, "dual", &duals, |_| None)?
        }
        Command::Gen { n, count, seed } => {
            if *n < 4 {
                bail!("--n must be at least 4");
            }
            let graphs: Vec<_> =
                (0..*count as u64).map(|i| normalize(&random_triangulation(*n, seed + i))).collect::<Result<_>>()?;
            emit_graphs(&mut out, cli.format, "gen", &graphs, |i| Some(("seed", (seed + i as u64).to_string())))?
        }
        Command::Enum { n } => {
            let graphs: Vec<_> =
                enumerate_triangulations(*n)?.graphs().map(normalize).collect::<Result<_>>()?;
            emit_graphs(&mut out, cli.format, "enum", &graphs, |_| None)?
        }
        Command::Verify { suite, witness, quick } => match (suite, witness) {
            (Some(s), _) => verify_suites(&mut out, s, *quick)?,
            (None, Some(w)) => verify_witnesses(&mut out, w, cli.max_brute)?,
            (None, None) => bail!("either --suite or --witness is required"),
        },
        cmd => {
            if cli.format == Format::PlanarCode {
                bail!("witness documents are text only; --format planar_code applies to dual, gen and enum");
            }
            witnesses(&mut out, cmd, cli.max_brute)?
        }
    };
    out.flush()?;
    Ok(status)
}

/// Reads planar code (recognized by its header) or text rotations from a
/// file, or from standard input when `path` is absent or `-`.
pub fn read_graphs(path: Option<&Path>) -> Result<Vec<PlaneGraph>> {
    let mut bytes = Vec::new();
    match path {
        Some(p) if p != Path::new("-") => {
            bytes = fs::read(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            io::stdin().read_to_end(&mut bytes)?;
        }
    }
    parse_graphs(&bytes)
}

pub fn parse_graphs(bytes: &[u8]) -> Result<Vec<PlaneGraph>> {
    let graphs = if bytes.starts_with(HEADER) {
        read_planar_code(bytes)?
    } else {
        let text = std::str::from_utf8(bytes).context("input is neither planar code nor text")?;
        text::parse_documents(text)?
            .iter()
            .filter(|d| d.get("graph").is_some())
            .map(|d| d.graph())
            .collect::<Result<_>>()?
    };
    graphs.iter().map(normalize).collect()
}

fn emit_graphs(
    out: &mut dyn Write,
    format: Format,
    op: &str,
    graphs: &[PlaneGraph],
    extra: impl Fn(usize) -> Option<(&'static str, String)>,
) -> Result<Status> {
    match format {
        Format::PlanarCode => write_planar_code(out, graphs)?,
        Format::Text => {
            for (i, g) in graphs.iter().enumerate() {
                let mut d = Document::new(op);
                if let Some((k, v)) = extra(i) {
                    d.push(k, v);
                }
                d.push("graph", format_rotation(g));
                writeln!(out, "{d}")?;
            }
        }
    }
    Ok(Status::Verified)
}

/// Runs a witness-producing command on every input graph (and every edge
/// when none is given), in parallel, writing documents in input order.
fn witnesses(out: &mut dyn Write, cmd: &Command, max_brute: usize) -> Result<Status> {
    let input = match cmd {
        Command::Color { input, .. }
        | Command::Chord { input, .. }
        | Command::Seppm { input, .. }
        | Command::Classify { input, .. }
        | Command::Samecycle { input, .. } => input.as_deref(),
        _ => unreachable!("graph commands are handled by dispatch"),
    };
    let graphs = read_graphs(input)?;
    let mut items = Vec::new();
    for (gi, g) in graphs.iter().enumerate() {
        match cmd {
            Command::Color { edge: Some(s), .. } => items.push((gi, Target::Dart(text::parse_dart(g, s)?))),
            Command::Color { edge: None, .. } => items.extend(g.edges().map(|e| (gi, Target::Dart(2 * e)))),
            Command::Chord { edge, .. } | Command::Seppm { edge, .. } | Command::Classify { edge, .. } => match edge {
                Some(s) => items.push((gi, Target::Edge(text::parse_edge(g, s)?))),
                None => items.extend(g.edges().map(|e| (gi, Target::Edge(e)))),
            },
            Command::Samecycle { edges, .. } => {
                let list: Vec<EdgeId> =
                    edges.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| text::parse_edge(g, t)).collect::<Result<_>>()?;
                if list.len() != 2 || list[0] == list[1] {
                    bail!("--edges needs two distinct edges, as in 1-2,3-4");
                }
                items.push((gi, Target::Pair(list[0], list[1])));
            }
            _ => unreachable!(),
        }
    }
    let docs: Vec<Vec<Document>> = items
        .par_iter()
        .map(|&(gi, t)| produce(cmd, &graphs[gi], t, max_brute))
        .collect::<Result<_>>()?;
    let mut status = Status::Verified;
    for d in docs.iter().flatten() {
        writeln!(out, "{d}")?;
        if let Err(e) = check_document(d, max_brute) {
            eprintln!("counterexample: {e:#}");
            status = Status::Counterexample;
        }
    }
    Ok(status)
}

#[derive(Clone, Copy, Debug)]
enum Target {
    Dart(usize),
    Edge(EdgeId),
    Pair(EdgeId, EdgeId),
}

fn base(op: &str, g: &PlaneGraph) -> Document {
    let mut d = Document::new(op);
    d.push("graph", format_rotation(g));
    d
}

/// Internal failures are counterexamples to a construction; other errors are bad input.
fn counterexample(mut d: Document, err: Error) -> Result<Document> {
    match err {
        Error::Internal(m) => {
            d.push("verdict", "counterexample");
            d.push("reason", m);
            Ok(d)
        }
        e => Err(anyhow!(e)),
    }
}

fn produce(cmd: &Command, g: &PlaneGraph, t: Target, max_brute: usize) -> Result<Vec<Document>> {
    let doc = match (cmd, t) {
        (Command::Color { .. }, Target::Dart(dart)) => {
            let mut d = base("color", g);
            let nt = NearTriangulation::new(g.clone(), dart)?;
            d.push("boundary", vertex_list(nt.boundary()));
            match special_3coloring(&nt) {
                Ok(f) => {
                    d.push("coloring", coloring_line(g, &f));
                    d.push("verdict", "special-3coloring");
                    d
                }
                Err(e) => counterexample(d, e)?,
            }
        }
        (Command::Chord { .. }, Target::Edge(e)) => {
            let mut d = base("chord", g);
            d.push("edge", edge_label(g, e));
            match two_factor_with_chord(g, e) {
                Ok(w) => {
                    d.push("two_factor", edge_list(g, w.factor.edges()));
                    d.push("cycles", cycles_line(&w.factor));
                    d.push("verdict", "chorded-2factor");
                    d
                }
                Err(Error::InTwoEdgeCut(_)) => {
                    d.push("cut", edge_list(g, &g.edge_cut_status(e).edges));
                    d.push("verdict", "in-2-edge-cut");
                    d
                }
                Err(err) => counterexample(d, err)?,
            }
        }
        (Command::Seppm { .. }, Target::Edge(e)) => {
            let mut d = base("seppm", g);
            d.push("edge", edge_label(g, e));
            g.require_cubic()?;
            if separating_pm_preconditions(g, e).is_err() {
                let (u, v) = g.endpoints(e);
                let reason = if g.multiplicity(u, v) > 1 {
                    "the edge has a parallel edge"
                } else {
                    "removing its ends leaves a graph that is not 2-edge-connected"
                };
                d.push("reason", reason);
                d.push("verdict", "not-applicable");
                return Ok(vec![d]);
            }
            match separating_pm_through_edge(g, e) {
                Ok(m) => {
                    d.push("matching", edge_list(g, m.edges()));
                    d.push("cycles", cycles_line(&m.complement(g)?));
                    d.push("verdict", "separating-pm");
                    d
                }
                Err(err) => counterexample(d, err)?,
            }
        }
        (Command::Classify { question, .. }, Target::Edge(e)) => {
            let qs: &[Question] = match question {
                Questions::Forced => &[Question::Forced],
                Questions::Separating => &[Question::Separating],
                Questions::Both => &[Question::Forced, Question::Separating],
            };
            return qs.iter().map(|&q| classify_doc(g, e, q, max_brute)).collect();
        }
        (Command::Samecycle { bipartite, facial, .. }, Target::Pair(e1, e2)) => {
            let mut d = base("samecycle", g);
            d.push("edges", format!("{} {}", edge_label(g, e1), edge_label(g, e2)));
            let got = if *facial {
                d.push("method", "facial");
                same_cycle_2factor_facial(g, e1, e2)
            } else {
                match same_cycle_2factor_bipartite(g, e1, e2) {
                    Err(Error::NotBipartite) if !bipartite => {
                        d.push("method", "facial");
                        same_cycle_2factor_facial(g, e1, e2)
                    }
                    r => {
                        d.push("method", "bipartite");
                        r
                    }
                }
            };
            match got {
                Ok(w) => {
                    d.push("two_factor", edge_list(g, w.factor.edges()));
                    d.push("cycles", cycles_line(&w.factor));
                    d.push("verdict", "same-cycle");
                    d
                }
                Err(err) => counterexample(d, err)?,
            }
        }
        _ => unreachable!("targets match their commands"),
    };
    Ok(vec![doc])
}

fn classify_doc(g: &PlaneGraph, e: EdgeId, q: Question, max_brute: usize) -> Result<Document> {
    let mut d = base("classify", g);
    d.push("edge", edge_label(g, e));
    d.push("question", q.as_str());
    let r = match q.decide(g, e) {
        Ok(r) => r,
        Err(err) => return counterexample(d, err),
    };
    match &r.witness {
        Witness::TwoFactor(f) => {
            d.push("two_factor", edge_list(g, f.edges()));
            d.push("cycles", cycles_line(f));
        }
        Witness::Matching(m) => d.push("matching", edge_list(g, m.edges())),
        Witness::Decomposition(t) => {
            for line in t.lines() {
                d.push("trace", line);
            }
            if g.vertex_count() <= max_brute {
                let want = oracle_verdict(g, e, q)?;
                if want != r.verdict {
                    d.push("verdict", "counterexample");
                    d.push("reason", format!("algorithm says {}, enumeration says {want}", r.verdict));
                    return Ok(d);
                }
                d.push("oracle", "confirmed");
            }
        }
    }
    d.push("verdict", r.verdict.as_str());
    Ok(d)
}

fn verify_suites(out: &mut dyn Write, suite: &str, quick: bool) -> Result<Status> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    if let Some(bad) = names.iter().find(|n| !SUITES.contains(n)) {
        bail!("unknown suite {bad:?}; expected all or one of {}", SUITES.join(", "));
    }
    let cfg = if quick { SuiteConfig::quick() } else { SuiteConfig::default() };
    let mut status = Status::Verified;
    for r in run_suites(&names, &cfg)? {
        let verdict = if r.passed() { "pass" } else { "fail" };
        writeln!(out, "suite: {}", r.name)?;
        writeln!(out, "checked: {}", r.checked)?;
        writeln!(out, "failed: {}", r.failed)?;
        for n in &r.notes {
            writeln!(out, "note: {n}")?;
        }
        for f in &r.failures {
            writeln!(out, "failure: {f}")?;
        }
        writeln!(out, "seconds: {:.2}", r.elapsed.as_secs_f64())?;
        writeln!(out, "verdict: {verdict}\n")?;
        if !r.passed() {
            status = Status::Counterexample;
        }
    }
    Ok(status)
}

fn verify_witnesses(out: &mut dyn Write, path: &Path, max_brute: usize) -> Result<Status> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let docs = text::parse_documents(&text)?;
    let results: Vec<_> = docs.par_iter().map(|d| check_document(d, max_brute)).collect();
    let mut status = Status::Verified;
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(()) => writeln!(out, "document {}: ok", i + 1)?,
            Err(e) => {
                writeln!(out, "document {}: failed: {e:#}", i + 1)?;
                status = Status::Counterexample;
            }
        }
    }
    Ok(status)
}

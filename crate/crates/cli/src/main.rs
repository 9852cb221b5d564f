//! Command-line interface for the fraccover decision procedures.
//!
//! Every subcommand prints a JSON report to stdout and signals its verdict
//! through the exit code:
//!
//! * 0 — the check passed (covered / critical covered / hypotheses
//!   satisfied / construction verified sharp / sweep found nothing)
//! * 1 — the check ran fine and the answer is negative
//! * 2 — input, parse or io error
//! * 3 — a capacity limit was exceeded
//! * 4 — the structural test and the exhaustive search disagreed

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use fraccover::{
    build_remark1, build_remark2, check_corollary_form, check_hypotheses, crosscheck_coverage,
    crosscheck_critical, emit_graph, is_covered, is_critical_covered, parse_bound_values,
    read_graph_file, run_sweep, verify_sharpness, CheckerConfig, DegreeBounds, Error, Graph,
    OracleConfig, Params, SharpnessReport, SweepConfig, VertexSet, ViolationWitness,
    DEFAULT_INDEPENDENCE_LIMIT, DEFAULT_MAX_EDGES, DEFAULT_MAX_VERTICES,
};

#[derive(Parser)]
#[command(
    name = "fraccover",
    version,
    about = "Exact checks for fractional (g,f)-covered graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is fractional (g,f)-covered.
    CheckCovered(CheckCoveredArgs),
    /// Decide whether a graph stays covered after any n vertex deletions.
    CheckCritical(CheckCriticalArgs),
    /// Verify the sufficient conditions for parameters (a, b, d, n).
    CheckHypotheses(CheckHypothesesArgs),
    /// Build one of the two extremal constructions (and optionally verify
    /// its sharpness claims).
    GenExtremal(GenExtremalArgs),
    /// Hunt for counterexamples to the sufficient conditions on random and
    /// dense graphs.
    Sweep(SweepArgs),
}

#[derive(clap::Args)]
struct GraphWithBounds {
    /// Graph file: header `p m`, then m lines `u v`.
    #[arg(long)]
    graph: PathBuf,
    /// Lower bounds: a constant `k`, a list `k0,k1,...`, or `@file`.
    #[arg(long)]
    g: String,
    /// Upper bounds, same forms as --g.
    #[arg(long)]
    f: String,
}

impl GraphWithBounds {
    fn load(&self) -> Result<(Graph, DegreeBounds), Error> {
        let graph = read_graph_file(&self.graph)?;
        let p = graph.vertex_count();
        let g = parse_bound_values(&self.g, p)?;
        let f = parse_bound_values(&self.f, p)?;
        Ok((graph, DegreeBounds::new(g, f)?))
    }
}

#[derive(clap::Args)]
struct CheckCoveredArgs {
    #[command(flatten)]
    input: GraphWithBounds,
    /// Include the violating subset in the report when the answer is no.
    #[arg(long)]
    witness: bool,
    /// Re-decide with the independent exhaustive search and require
    /// agreement (exit 4 on divergence).
    #[arg(long)]
    oracle_crosscheck: bool,
    /// Enumeration size limit (the subset walk costs 2^p).
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Edge-count limit for the exhaustive search (only read with
    /// --oracle-crosscheck).
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,
}

#[derive(clap::Args)]
struct CheckCriticalArgs {
    #[command(flatten)]
    input: GraphWithBounds,
    /// Number of vertices an adversary may delete.
    #[arg(long)]
    n: usize,
    /// Include the violating subset in the report when the answer is no.
    #[arg(long)]
    witness: bool,
    /// Re-decide with the independent exhaustive search and require
    /// agreement (exit 4 on divergence).
    #[arg(long)]
    oracle_crosscheck: bool,
    /// Enumeration size limit (the subset walk costs 2^p).
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Edge-count limit for the exhaustive search (only read with
    /// --oracle-crosscheck).
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,
}

#[derive(clap::Args)]
struct CheckHypothesesArgs {
    #[command(flatten)]
    input: GraphWithBounds,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    #[arg(long)]
    d: i64,
    #[arg(long)]
    n: i64,
    /// Restrict to a specialized corollary form: 1 (d = 0), 2 (d = 0 and
    /// g = f), or 3 (n = 0).
    #[arg(long)]
    corollary: Option<u8>,
}

#[derive(clap::Args)]
struct GenExtremalArgs {
    /// Which construction: 1 (minimum-degree margin -1/(a+b-1)) or
    /// 2 (independence margin exactly 0).
    #[arg(long)]
    remark: u8,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    d: i64,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    t: i64,
    /// Write the graph file here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Re-derive and check every sharpness claim (exit 1 if any fails).
    #[arg(long)]
    verify: bool,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Vertex count for every candidate graph.
    #[arg(long)]
    p: usize,
    /// Random graphs drawn after the fixed dense family.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Edge probability for the random graphs.
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    #[arg(long)]
    d: i64,
    #[arg(long)]
    n: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

// ----------------------------------------------------------------------------
// Reports
// ----------------------------------------------------------------------------

#[derive(Serialize)]
struct CoveredReport {
    covered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ViolationWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct CriticalReport {
    critical_covered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    removed: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ViolationWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct ExtremalReport {
    remark: u8,
    a: i64,
    b: i64,
    d: i64,
    n: i64,
    t: i64,
    m: i64,
    vertex_count: usize,
    edge_count: usize,
    g: i64,
    f: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sharpness: Option<SharpnessReport>,
}

fn print_report<T: Serialize>(report: &T) {
    let text = serde_json::to_string_pretty(report).expect("reports always serialize");
    println!("{text}");
}

// ----------------------------------------------------------------------------
// Subcommand drivers (each returns the process exit code)
// ----------------------------------------------------------------------------

fn checker_config(max_vertices: usize) -> CheckerConfig {
    CheckerConfig {
        max_vertices,
        ..CheckerConfig::default()
    }
}

fn oracle_config(max_edges: usize) -> OracleConfig {
    OracleConfig {
        max_edges,
        ..OracleConfig::default()
    }
}

fn run_check_covered(args: &CheckCoveredArgs) -> Result<u8, Error> {
    let (graph, bounds) = args.input.load()?;
    let config = checker_config(args.max_vertices);
    let verdict = if args.oracle_crosscheck {
        crosscheck_coverage(&graph, &bounds, &config, &oracle_config(args.max_edges))?
    } else {
        is_covered(&graph, &bounds, &config)?
    };
    print_report(&CoveredReport {
        covered: verdict.covered,
        witness: verdict.witness.filter(|_| args.witness),
        oracle_agrees: args.oracle_crosscheck.then_some(true),
    });
    Ok(if verdict.covered { 0 } else { 1 })
}

fn run_check_critical(args: &CheckCriticalArgs) -> Result<u8, Error> {
    let (graph, bounds) = args.input.load()?;
    let config = checker_config(args.max_vertices);
    let verdict = if args.oracle_crosscheck {
        crosscheck_critical(
            &graph,
            &bounds,
            args.n,
            &config,
            &oracle_config(args.max_edges),
        )?
    } else {
        is_critical_covered(&graph, &bounds, args.n, &config)?
    };
    print_report(&CriticalReport {
        critical_covered: verdict.critical_covered,
        removed: verdict.removed,
        witness: verdict.witness.filter(|_| args.witness),
        oracle_agrees: args.oracle_crosscheck.then_some(true),
    });
    Ok(if verdict.critical_covered { 0 } else { 1 })
}

fn run_check_hypotheses(args: &CheckHypothesesArgs) -> Result<u8, Error> {
    let (graph, bounds) = args.input.load()?;
    let params = Params::new(args.a, args.b, args.d, args.n)?;
    if let Some(form) = args.corollary {
        check_corollary_form(form, &params, &bounds)?;
    }
    let report = check_hypotheses(&graph, &bounds, &params, DEFAULT_INDEPENDENCE_LIMIT)?;
    print_report(&report);
    Ok(if report.satisfied { 0 } else { 1 })
}

fn run_gen_extremal(args: &GenExtremalArgs) -> Result<u8, Error> {
    let built = match args.remark {
        1 => build_remark1(args.a, args.d, args.n, args.t)?,
        2 => build_remark2(args.a, args.d, args.n, args.t)?,
        other => {
            return Err(Error::input(format!(
                "unknown construction {other}; expected --remark 1 or 2"
            )))
        }
    };
    if let Some(path) = &args.out {
        std::fs::write(path, emit_graph(&built.graph))?;
    }
    let sharpness = if args.verify {
        Some(verify_sharpness(&built, &CheckerConfig::default())?)
    } else {
        None
    };
    let ok = sharpness.as_ref().map_or(true, |report| report.sharp);
    print_report(&ExtremalReport {
        remark: built.remark,
        a: built.params.a(),
        b: built.params.b(),
        d: built.params.d(),
        n: built.params.n(),
        t: built.t,
        m: built.m,
        vertex_count: built.graph.vertex_count(),
        edge_count: built.graph.edge_count(),
        g: built.params.a(),
        f: built.params.b(),
        out: args.out.as_ref().map(|p| p.display().to_string()),
        sharpness,
    });
    Ok(if ok { 0 } else { 1 })
}

fn run_sweep_command(args: &SweepArgs) -> Result<u8, Error> {
    let config = SweepConfig {
        vertex_count: args.p,
        samples: args.samples,
        edge_prob: args.edge_prob,
        params: Params::new(args.a, args.b, args.d, args.n)?,
        seed: args.seed,
    };
    let report = run_sweep(&config)?;
    if let Some(path) = &args.report {
        let text = serde_json::to_string_pretty(&report).expect("reports always serialize");
        std::fs::write(path, format!("{text}\n"))?;
    }
    print_report(&report);
    Ok(if report.counterexamples == 0 { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::CheckCovered(args) => run_check_covered(args),
        Command::CheckCritical(args) => run_check_critical(args),
        Command::CheckHypotheses(args) => run_check_hypotheses(args),
        Command::GenExtremal(args) => run_gen_extremal(args),
        Command::Sweep(args) => run_sweep_command(args),
    }
}

/// Error-class exit codes: input/parse/io 2, capacity 3, disagreement 4.
fn error_exit_code(error: &Error) -> u8 {
    match error {
        Error::Input(_) | Error::Parse { .. } | Error::Io(_) => 2,
        Error::Capacity(_) => 3,
        Error::Disagreement(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error_exit_code(&error))
        }
    }
}

//! Command-line front end: `solve`, `bench` and `verify`.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 verification
//! failure. Vertex ids on the command line and in all output are DIMACS ids
//! (1-based).

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bench::{
    parse_eps, parse_eps_grid, run_bench, run_query, verify_random, write_bench_csv, Algorithm,
    BenchConfig, Query, QueryReport, VerifyConfig, VerifySummary,
};
use crate::dimacs::load_bigraph;
use crate::graph::{BiGraph, VertexId};
use crate::heuristics::compute_heuristics;
use crate::pareto::ApproxFactor;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

const BENCH_HELP: &str = "\
CSV output, one row per query x eps x algorithm, in query order:
  query_id,source,target,algorithm,eps1,eps2,n_solutions,n_expanded,
  n_generated,time_ms,heuristic_ms,solution_costs
algorithm is boa, boa_eps or ppa. time_ms covers the search only;
heuristic_ms is the heuristic table time for the query's target.
solution_costs lists c1:c2 items joined by ';'.

When there is at least one row, a blank line and a summary table follow:
  summary_algorithm,eps1,eps2,queries,avg_n_solutions,avg_n_expanded,
  avg_time_ms,geomean_time_ms,min_time_ms,max_time_ms";

#[derive(Parser, Debug)]
#[command(
    name = "bicrit",
    version,
    about = "Exact and approximate bi-criteria shortest paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one query and print its report as JSON.
    Solve(SolveArgs),
    /// Run random queries over an eps grid and print CSV.
    #[command(after_help = BENCH_HELP)]
    Bench(BenchArgs),
    /// Check both engines against an exact oracle on random instances.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct MapArgs {
    /// DIMACS .gr file with the first cost (optionally gzipped).
    #[arg(long)]
    gr1: PathBuf,
    /// DIMACS .gr file with the second cost, same arcs in the same order.
    #[arg(long)]
    gr2: PathBuf,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    map: MapArgs,
    #[arg(long)]
    source: u64,
    #[arg(long)]
    target: u64,
    /// boa, boa-eps or ppa.
    #[arg(long)]
    alg: Algorithm,
    /// Sets both factors.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["eps1", "eps2"])]
    eps: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "eps2")]
    eps1: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "eps1")]
    eps2: Option<String>,
    /// Include the vertex sequence of every solution.
    #[arg(long)]
    paths: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    map: MapArgs,
    #[arg(long, default_value_t = 50)]
    queries: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(
        long,
        default_value = "0,0.01,0.025,0.05,0.1",
        allow_hyphen_values = true
    )]
    eps_grid: String,
    /// Comma-separated algorithms.
    #[arg(long, default_value = "boa-eps,ppa")]
    algs: String,
    /// Write CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Directory for cached heuristic tables.
    #[arg(long)]
    heuristic_cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "0,0.01,0.1,0.5,1.0", allow_hyphen_values = true)]
    eps_grid: String,
    #[arg(long, default_value_t = 50)]
    max_n: usize,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    #[arg(long, default_value_t = 10)]
    max_cost: u64,
    /// Label limit for the exact oracle; larger instances are skipped.
    #[arg(long, default_value_t = crate::oracle::DEFAULT_LABEL_BUDGET)]
    label_budget: usize,
}

enum Failure {
    Usage(String),
    Data(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidVertex { .. } | Error::InvalidApprox { .. } => {
                Failure::Usage(e.to_string())
            }
            Error::Io(ref io) if io.kind() == std::io::ErrorKind::NotFound => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Data(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a, out),
        Command::Bench(a) => bench(a, out),
        Command::Verify(a) => verify(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DATA
        }
        Err(Failure::Verify) => {
            let _ = writeln!(err, "verification failed");
            EXIT_VERIFY
        }
    }
}

fn load(map: &MapArgs) -> Result<BiGraph, Failure> {
    for p in [&map.gr1, &map.gr2] {
        if !p.exists() {
            return Err(Failure::Usage(format!("{}: no such file", p.display())));
        }
    }
    Ok(load_bigraph(&map.gr1, &map.gr2)?)
}

fn dimacs_vertex(g: &BiGraph, id: u64, flag: &str) -> Result<VertexId, Failure> {
    if id == 0 || id > g.vertex_count() as u64 {
        return Err(Failure::Usage(format!(
            "--{flag} {id} is not a vertex id (graph has vertices 1..={})",
            g.vertex_count()
        )));
    }
    Ok(VertexId((id - 1) as u32))
}

fn solve_eps(a: &SolveArgs) -> Result<ApproxFactor, Failure> {
    let parse = |s: &str| parse_eps(s).map_err(Failure::Usage);
    let eps = match (&a.eps, &a.eps1, &a.eps2) {
        (Some(e), _, _) => ApproxFactor::uniform(parse(e)?)?,
        (None, Some(e1), Some(e2)) => ApproxFactor::new(parse(e1)?, parse(e2)?)?,
        _ => ApproxFactor::EXACT,
    };
    if a.alg == Algorithm::Boa && !eps.is_exact() {
        return Err(Failure::Usage(
            "--alg boa is exact; use --alg boa-eps for eps > 0".into(),
        ));
    }
    Ok(eps)
}

#[derive(Serialize)]
struct SolveOutput {
    #[serde(flatten)]
    report: QueryReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    paths: Option<Vec<Vec<u64>>>,
}

fn solve(a: SolveArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let eps = solve_eps(&a)?;
    let g = load(&a.map)?;
    let source = dimacs_vertex(&g, a.source, "source")?;
    let target = dimacs_vertex(&g, a.target, "target")?;
    let t0 = std::time::Instant::now();
    let h = compute_heuristics(&g, target)?;
    let heuristic_ms = t0.elapsed().as_secs_f64() * 1e3;
    let (report, outcome) = run_query(
        &g,
        &h,
        a.alg,
        Query {
            id: 0,
            source,
            target,
        },
        eps,
        heuristic_ms,
    )?;
    let paths = a.paths.then(|| {
        (0..outcome.len())
            .map(|i| {
                outcome
                    .path(i)
                    .into_iter()
                    .map(|v| v.0 as u64 + 1)
                    .collect()
            })
            .collect()
    });
    serde_json::to_writer(&mut *out, &SolveOutput { report, paths })
        .map_err(|e| Failure::Data(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let eps_grid = parse_eps_grid(&a.eps_grid).map_err(Failure::Usage)?;
    let algorithms = a
        .algs
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Algorithm>, _>>()
        .map_err(Failure::Usage)?;
    if a.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let g = load(&a.map)?;
    let cfg = BenchConfig {
        queries: a.queries,
        seed: a.seed,
        eps_grid,
        algorithms,
        jobs: a.jobs,
        heuristic_cache: a.heuristic_cache,
    };
    let reports = run_bench(&g, &cfg)?;
    match &a.out {
        Some(path) => write_csv_file(path, &reports)?,
        None => write_bench_csv(&mut *out, &reports)?,
    }
    Ok(())
}

fn write_csv_file(path: &Path, reports: &[QueryReport]) -> Result<(), Failure> {
    let mut w = BufWriter::new(File::create(path)?);
    write_bench_csv(&mut w, reports)?;
    w.flush()?;
    Ok(())
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        instances: a.instances,
        seed: a.seed,
        eps_grid: parse_eps_grid(&a.eps_grid).map_err(Failure::Usage)?,
        max_n: a.max_n,
        max_degree: a.max_degree,
        max_cost: a.max_cost,
        label_budget: a.label_budget,
    };
    if cfg.max_n == 0 || cfg.max_cost == 0 {
        return Err(Failure::Usage(
            "--max-n and --max-cost must be positive".into(),
        ));
    }
    let summary = verify_random(&cfg)?;
    print_verify(&summary, out)?;
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn print_verify(s: &VerifySummary, out: &mut dyn Write) -> std::io::Result<()> {
    let checked = s.instances - s.skipped.len();
    writeln!(
        out,
        "instances: {} checked, {} skipped",
        checked,
        s.skipped.len()
    )?;
    for (i, why) in &s.skipped {
        writeln!(out, "  skipped instance {i}: {why}")?;
    }
    if !s.frontier_sizes.is_empty() {
        let max = s.frontier_sizes.iter().max().unwrap();
        let avg = s.frontier_sizes.iter().sum::<usize>() as f64 / s.frontier_sizes.len() as f64;
        writeln!(out, "exact frontier size: avg {avg:.2}, max {max}")?;
    }
    writeln!(
        out,
        "{:<8} {:>8} {:>6} {:>9} {:>9} {:>7} {:>8} {:>10}",
        "alg", "eps", "runs", "coverage", "non-dom", "exact", "members", "violations"
    )?;
    for c in &s.cells {
        let alg = c.algorithm.map_or("-", Algorithm::as_str);
        writeln!(
            out,
            "{:<8} {:>8} {:>6} {:>9} {:>9} {:>7} {:>8} {:>10}",
            alg,
            c.eps,
            c.runs,
            c.coverage_pass,
            c.non_domination_pass,
            c.exact_match,
            c.all_members,
            c.violations.total()
        )?;
    }
    for f in s.failures.iter().take(20) {
        writeln!(
            out,
            "FAIL instance {} (seed {}) {} eps {}: uncovered {:?} dominated {:?}{}",
            f.instance,
            f.instance_seed,
            f.algorithm,
            f.eps,
            f.uncovered
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            f.dominated
                .iter()
                .map(|(a, b)| format!("{a} by {b}"))
                .collect::<Vec<_>>(),
            if f.exact_mismatch {
                " exact mismatch"
            } else {
                ""
            }
        )?;
    }
    if s.failures.len() > 20 {
        writeln!(out, "... {} more failures", s.failures.len() - 20)?;
    }
    writeln!(out, "{}", if s.passed() { "PASS" } else { "FAIL" })
}

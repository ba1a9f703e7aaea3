//! Benchmark and verification drivers.
//!
//! A benchmark run samples seeded random `(source, target)` queries on one
//! graph, runs every algorithm at every approximation factor of a grid and
//! records one [`QueryReport`] per combination. Reports serialize as JSON
//! (single queries) or as CSV rows followed by per-`(algorithm, eps)`
//! summary rows.
//!
//! Vertex ids inside reports are DIMACS ids (1-based).

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boa::boa_search;
use crate::graph::{BiGraph, CostVec, VertexId};
use crate::heuristics::{compute_heuristics, HeuristicCache, HeuristicTable};
use crate::oracle::{
    check_approx_frontier, exact_frontier_with_budget, random_instance, FrontierSet,
};
use crate::pareto::ApproxFactor;
use crate::ppa::ppa_search;
use crate::stats::InvariantViolations;
use crate::{Error, Result, SearchOutcome};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// Exact BOA*; any requested factor is ignored.
    Boa,
    BoaEps,
    Ppa,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Boa => "boa",
            Algorithm::BoaEps => "boa_eps",
            Algorithm::Ppa => "ppa",
        }
    }

    /// Runs this algorithm on one query.
    pub fn run(
        self,
        g: &BiGraph,
        h: &HeuristicTable,
        source: VertexId,
        target: VertexId,
        eps: ApproxFactor,
    ) -> Result<SearchOutcome> {
        match self {
            Algorithm::Boa => boa_search(g, h, source, target, ApproxFactor::EXACT),
            Algorithm::BoaEps => boa_search(g, h, source, target, eps),
            Algorithm::Ppa => ppa_search(g, h, source, target, eps),
        }
    }

    fn effective_eps(self, eps: ApproxFactor) -> ApproxFactor {
        if self == Algorithm::Boa {
            ApproxFactor::EXACT
        } else {
            eps
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "boa" => Ok(Algorithm::Boa),
            "boa-eps" | "boa_eps" => Ok(Algorithm::BoaEps),
            "ppa" => Ok(Algorithm::Ppa),
            other => Err(format!(
                "unknown algorithm `{other}` (expected boa, boa-eps or ppa)"
            )),
        }
    }
}

/// One algorithm run on one query.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryReport {
    pub query_id: usize,
    pub source: u64,
    pub target: u64,
    pub algorithm: Algorithm,
    pub eps1: f64,
    pub eps2: f64,
    pub n_solutions: usize,
    pub n_expanded: u64,
    pub n_generated: u64,
    /// Search time only.
    pub time_ms: f64,
    /// Heuristic table computation (or cache load) time.
    pub heuristic_ms: f64,
    pub solution_costs: Vec<CostVec>,
}

pub const CSV_COLUMNS: [&str; 12] = [
    "query_id",
    "source",
    "target",
    "algorithm",
    "eps1",
    "eps2",
    "n_solutions",
    "n_expanded",
    "n_generated",
    "time_ms",
    "heuristic_ms",
    "solution_costs",
];

pub const SUMMARY_COLUMNS: [&str; 10] = [
    "summary_algorithm",
    "eps1",
    "eps2",
    "queries",
    "avg_n_solutions",
    "avg_n_expanded",
    "avg_time_ms",
    "geomean_time_ms",
    "min_time_ms",
    "max_time_ms",
];

/// One sampled `(source, target)` pair.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub id: usize,
    pub source: VertexId,
    pub target: VertexId,
}

/// Times the search and packages the outcome. Solution costs are listed in
/// the order the algorithm returned them.
pub fn run_query(
    g: &BiGraph,
    h: &HeuristicTable,
    algorithm: Algorithm,
    query: Query,
    eps: ApproxFactor,
    heuristic_ms: f64,
) -> Result<(QueryReport, SearchOutcome)> {
    let Query {
        id: query_id,
        source,
        target,
    } = query;
    let t0 = Instant::now();
    let outcome = algorithm.run(g, h, source, target, eps)?;
    let time_ms = t0.elapsed().as_secs_f64() * 1e3;
    let eps = algorithm.effective_eps(eps);
    let costs = outcome.costs();
    let report = QueryReport {
        query_id,
        source: source.0 as u64 + 1,
        target: target.0 as u64 + 1,
        algorithm,
        eps1: eps.eps1,
        eps2: eps.eps2,
        n_solutions: costs.len(),
        n_expanded: outcome.stats.expanded,
        n_generated: outcome.stats.generated,
        time_ms,
        heuristic_ms,
        solution_costs: costs,
    };
    Ok((report, outcome))
}

/// `c1:c2` items joined by `;`.
pub fn format_costs(costs: &[CostVec]) -> String {
    costs
        .iter()
        .map(|c| format!("{}:{}", c.c1, c.c2))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_costs(s: &str) -> std::result::Result<Vec<CostVec>, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|item| {
            let (a, b) = item
                .split_once(':')
                .ok_or_else(|| format!("bad cost `{item}`"))?;
            let a = a.parse().map_err(|_| format!("bad cost `{item}`"))?;
            let b = b.parse().map_err(|_| format!("bad cost `{item}`"))?;
            Ok(CostVec::new(a, b))
        })
        .collect()
}

/// Parses a comma-separated list of non-negative factors.
pub fn parse_eps_grid(s: &str) -> std::result::Result<Vec<f64>, String> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| parse_eps(x.trim()))
        .collect()
}

/// A non-negative decimal with at most six fractional digits.
pub fn parse_eps(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !v.is_finite() || v < 0.0 {
        return Err(format!(
            "approximation factor must be finite and non-negative, got `{s}`"
        ));
    }
    if let Some((_, frac)) = s.split_once('.') {
        if frac.trim_end_matches('0').len() > 6 {
            return Err(format!(
                "approximation factor `{s}` has more than 6 decimal places"
            ));
        }
    }
    Ok(v)
}

pub fn write_csv_header<W: Write>(out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    w.flush()?;
    Ok(())
}

pub fn write_csv_rows<W: Write>(out: W, reports: &[QueryReport]) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    for r in reports {
        w.write_record([
            r.query_id.to_string(),
            r.source.to_string(),
            r.target.to_string(),
            r.algorithm.to_string(),
            r.eps1.to_string(),
            r.eps2.to_string(),
            r.n_solutions.to_string(),
            r.n_expanded.to_string(),
            r.n_generated.to_string(),
            format!("{:.3}", r.time_ms),
            format!("{:.3}", r.heuristic_ms),
            format_costs(&r.solution_costs),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Aggregates over all queries of one `(algorithm, eps)` cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub algorithm: Algorithm,
    pub eps1: f64,
    pub eps2: f64,
    pub queries: usize,
    pub avg_n_solutions: f64,
    pub avg_n_expanded: f64,
    pub avg_time_ms: f64,
    /// Geometric mean with times floored at 1 microsecond.
    pub geomean_time_ms: f64,
    pub min_time_ms: f64,
    pub max_time_ms: f64,
}

/// One summary per distinct `(algorithm, eps1, eps2)`, in order of first
/// appearance.
pub fn summarize(reports: &[QueryReport]) -> Vec<Summary> {
    let mut keys: Vec<(Algorithm, f64, f64)> = Vec::new();
    for r in reports {
        let k = (r.algorithm, r.eps1, r.eps2);
        if !keys.contains(&k) {
            keys.push(k);
        }
    }
    keys.into_iter()
        .map(|(algorithm, eps1, eps2)| {
            let cell: Vec<&QueryReport> = reports
                .iter()
                .filter(|r| r.algorithm == algorithm && r.eps1 == eps1 && r.eps2 == eps2)
                .collect();
            let n = cell.len() as f64;
            let times = cell.iter().map(|r| r.time_ms);
            Summary {
                algorithm,
                eps1,
                eps2,
                queries: cell.len(),
                avg_n_solutions: cell.iter().map(|r| r.n_solutions as f64).sum::<f64>() / n,
                avg_n_expanded: cell.iter().map(|r| r.n_expanded as f64).sum::<f64>() / n,
                avg_time_ms: times.clone().sum::<f64>() / n,
                geomean_time_ms: (times.clone().map(|t| t.max(1e-3).ln()).sum::<f64>() / n).exp(),
                min_time_ms: times.clone().fold(f64::INFINITY, f64::min),
                max_time_ms: times.fold(0.0, f64::max),
            }
        })
        .collect()
}

/// Writes a blank separator line, the summary header and one row per cell.
/// Nothing is written for an empty slice.
pub fn write_summary<W: Write>(mut out: W, summaries: &[Summary]) -> Result<()> {
    if summaries.is_empty() {
        return Ok(());
    }
    writeln!(out)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_COLUMNS)?;
    for s in summaries {
        w.write_record([
            s.algorithm.to_string(),
            s.eps1.to_string(),
            s.eps2.to_string(),
            s.queries.to_string(),
            format!("{:.3}", s.avg_n_solutions),
            format!("{:.3}", s.avg_n_expanded),
            format!("{:.3}", s.avg_time_ms),
            format!("{:.3}", s.geomean_time_ms),
            format!("{:.3}", s.min_time_ms),
            format!("{:.3}", s.max_time_ms),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub queries: usize,
    pub seed: u64,
    pub eps_grid: Vec<f64>,
    pub algorithms: Vec<Algorithm>,
    /// Worker threads; queries still come out in order.
    pub jobs: usize,
    pub heuristic_cache: Option<PathBuf>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            queries: 50,
            seed: 1,
            eps_grid: vec![0.0, 0.01, 0.025, 0.05, 0.1],
            algorithms: vec![Algorithm::BoaEps, Algorithm::Ppa],
            jobs: 1,
            heuristic_cache: None,
        }
    }
}

const SAMPLE_ATTEMPTS: usize = 1000;

/// Draws query `query_id` from its own RNG stream: uniform vertex pairs,
/// rejected until the source reaches the target. Returns the pair, its
/// heuristic table and the time spent on heuristics.
fn sample_query(
    g: &BiGraph,
    seed: u64,
    query_id: usize,
    cache: Option<&HeuristicCache>,
) -> Result<(VertexId, VertexId, HeuristicTable, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(query_id as u64);
    let n = g.vertex_count() as u32;
    if n == 0 {
        return Err(Error::Generation(
            "cannot sample queries on an empty graph".into(),
        ));
    }
    for _ in 0..SAMPLE_ATTEMPTS {
        let source = VertexId(rng.gen_range(0..n));
        let target = VertexId(rng.gen_range(0..n));
        let t0 = Instant::now();
        let h = match cache {
            Some(c) => c.get_or_compute(g, target)?.0,
            None => compute_heuristics(g, target)?,
        };
        let heuristic_ms = t0.elapsed().as_secs_f64() * 1e3;
        if h.reaches_goal(source) {
            return Ok((source, target, h, heuristic_ms));
        }
    }
    Err(Error::Generation(format!(
        "query {query_id}: no reachable pair after {SAMPLE_ATTEMPTS} attempts"
    )))
}

/// Runs every `(query, eps, algorithm)` combination. Rows are ordered by
/// query, then eps, then algorithm.
pub fn run_bench(g: &BiGraph, cfg: &BenchConfig) -> Result<Vec<QueryReport>> {
    let cache = cfg
        .heuristic_cache
        .as_ref()
        .map(|dir| HeuristicCache::new(dir, g))
        .transpose()?;
    let one_query = |qid: usize| -> Result<Vec<QueryReport>> {
        let (source, target, h, heuristic_ms) = sample_query(g, cfg.seed, qid, cache.as_ref())?;
        let query = Query {
            id: qid,
            source,
            target,
        };
        let mut rows = Vec::with_capacity(cfg.eps_grid.len() * cfg.algorithms.len());
        for &e in &cfg.eps_grid {
            let eps = ApproxFactor::uniform(e)?;
            for &alg in &cfg.algorithms {
                rows.push(run_query(g, &h, alg, query, eps, heuristic_ms)?.0);
            }
        }
        Ok(rows)
    };

    let per_query: Vec<Vec<QueryReport>> = if cfg.jobs <= 1 {
        (0..cfg.queries).map(one_query).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::Generation(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..cfg.queries)
                .into_par_iter()
                .map(one_query)
                .collect::<Result<_>>()
        })?
    };
    Ok(per_query.into_iter().flatten().collect())
}

/// Writes the full benchmark CSV: header, rows, then the summary block.
pub fn write_bench_csv<W: Write>(mut out: W, reports: &[QueryReport]) -> Result<()> {
    write_csv_header(&mut out)?;
    write_csv_rows(&mut out, reports)?;
    write_summary(&mut out, &summarize(reports))?;
    Ok(())
}

/// Grid road network for demos and tests: `width x height` junctions with
/// two-way streets. Distances are uniform in `[50, 500]`; each street gets a
/// speed class, so travel time trades off against distance.
pub fn synthetic_grid(seed: u64, width: usize, height: usize) -> Result<BiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = |x: usize, y: usize| VertexId((y * width + x) as u32);
    let mut edges = Vec::new();
    let mut street = |rng: &mut ChaCha8Rng, a: VertexId, b: VertexId| {
        let dist: u64 = rng.gen_range(50..=500);
        let speed: u64 = [30, 50, 80, 110][rng.gen_range(0..4)];
        // time in tenths of a second at `speed` km/h over `dist` metres
        let time = (dist * 36 / speed).max(1);
        edges.push((a, b, CostVec::new(dist, time)));
        edges.push((b, a, CostVec::new(dist, time)));
    };
    for y in 0..height {
        for x in 0..width {
            if x + 1 < width {
                street(&mut rng, id(x, y), id(x + 1, y));
            }
            if y + 1 < height {
                street(&mut rng, id(x, y), id(x, y + 1));
            }
        }
    }
    BiGraph::from_edges(width * height, edges)
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub instances: usize,
    pub seed: u64,
    pub eps_grid: Vec<f64>,
    pub max_n: usize,
    pub max_degree: usize,
    pub max_cost: u64,
    pub label_budget: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            instances: 200,
            seed: 1,
            eps_grid: vec![0.0, 0.01, 0.1, 0.5, 1.0],
            max_n: 50,
            max_degree: 4,
            max_cost: 10,
            label_budget: crate::oracle::DEFAULT_LABEL_BUDGET,
        }
    }
}

/// Pass counts for one `(algorithm, eps)` cell of a verification run.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerifyCell {
    pub algorithm: Option<Algorithm>,
    pub eps: f64,
    pub runs: usize,
    pub coverage_pass: usize,
    pub non_domination_pass: usize,
    /// Runs where the cost set equals the exact frontier (hard only at eps 0).
    pub exact_match: usize,
    /// Runs where every returned cost lies on the exact frontier.
    pub all_members: usize,
    pub violations: InvariantViolations,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyFailure {
    pub instance: usize,
    pub instance_seed: u64,
    pub algorithm: Algorithm,
    pub eps: f64,
    pub uncovered: Vec<CostVec>,
    pub dominated: Vec<(CostVec, CostVec)>,
    pub exact_mismatch: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerifySummary {
    pub instances: usize,
    pub skipped: Vec<(usize, String)>,
    pub cells: Vec<VerifyCell>,
    pub failures: Vec<VerifyFailure>,
    /// Exact frontier sizes of the checked instances.
    pub frontier_sizes: Vec<usize>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cells.iter().all(|c| c.violations.total() == 0)
    }
}

pub fn instance_seed(base: u64, index: usize) -> u64 {
    base.wrapping_mul(1_000_003).wrapping_add(index as u64)
}

/// Generates random instances and checks BOA*-eps and PP-A* against the
/// exact frontier at every factor of the grid.
pub fn verify_random(cfg: &VerifyConfig) -> Result<VerifySummary> {
    let algs = [Algorithm::BoaEps, Algorithm::Ppa];
    let mut summary = VerifySummary {
        instances: cfg.instances,
        ..Default::default()
    };
    for &eps in &cfg.eps_grid {
        for alg in algs {
            summary.cells.push(VerifyCell {
                algorithm: Some(alg),
                eps,
                ..Default::default()
            });
        }
    }

    for i in 0..cfg.instances {
        let seed = instance_seed(cfg.seed, i);
        let inst = random_instance(seed, cfg.max_n, cfg.max_degree, cfg.max_cost)?;
        let exact = match exact_frontier_with_budget(
            &inst.graph,
            inst.start,
            inst.goal,
            cfg.label_budget,
        ) {
            Ok(f) => f,
            Err(e @ Error::LabelBudget { .. }) => {
                summary.skipped.push((i, e.to_string()));
                continue;
            }
            Err(e) => return Err(e),
        };
        summary.frontier_sizes.push(exact.len());
        let h = compute_heuristics(&inst.graph, inst.goal)?;

        for (e_idx, &e) in cfg.eps_grid.iter().enumerate() {
            let eps = ApproxFactor::uniform(e)?;
            for (a_idx, &alg) in algs.iter().enumerate() {
                let out = alg.run(&inst.graph, &h, inst.start, inst.goal, eps)?;
                let costs = out.costs();
                let report = check_approx_frontier(&costs, &exact, eps);
                let exact_match = costs.len() == exact.len()
                    && FrontierSet::from_costs(costs.iter().copied()) == exact;
                let cell = &mut summary.cells[e_idx * algs.len() + a_idx];
                cell.runs += 1;
                cell.coverage_pass += report.coverage_ok() as usize;
                cell.non_domination_pass += report.non_domination_ok() as usize;
                cell.exact_match += exact_match as usize;
                cell.all_members += report.all_members() as usize;
                cell.violations.absorb(&out.stats.violations);
                let exact_mismatch = e == 0.0 && !exact_match;
                if !report.passed() || exact_mismatch {
                    summary.failures.push(VerifyFailure {
                        instance: i,
                        instance_seed: seed,
                        algorithm: alg,
                        eps: e,
                        uncovered: report.uncovered,
                        dominated: report.dominated,
                        exact_mismatch,
                    });
                }
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names() {
        for (s, a) in [
            ("boa", Algorithm::Boa),
            ("boa-eps", Algorithm::BoaEps),
            ("boa_eps", Algorithm::BoaEps),
            ("ppa", Algorithm::Ppa),
        ] {
            assert_eq!(s.parse::<Algorithm>().unwrap(), a);
        }
        assert!("astar".parse::<Algorithm>().is_err());
        assert_eq!(
            serde_json::to_string(&Algorithm::BoaEps).unwrap(),
            "\"boa_eps\""
        );
    }

    #[test]
    fn eps_parsing() {
        assert_eq!(
            parse_eps_grid("0,0.01,0.025,0.05,0.1").unwrap(),
            vec![0.0, 0.01, 0.025, 0.05, 0.1]
        );
        assert!(parse_eps("-0.5").is_err());
        assert!(parse_eps("nan").is_err());
        assert!(parse_eps("0.1234567").is_err());
        assert_eq!(parse_eps("0.1234560").unwrap(), 0.123456);
    }

    #[test]
    fn cost_column_round_trip() {
        let costs = vec![CostVec::new(2, 8), CostVec::new(8, 2)];
        assert_eq!(format_costs(&costs), "2:8;8:2");
        assert_eq!(parse_costs("2:8;8:2").unwrap(), costs);
        assert_eq!(parse_costs("").unwrap(), vec![]);
        assert!(parse_costs("2-8").is_err());
    }

    #[test]
    fn zero_queries_is_header_only() {
        let g = synthetic_grid(1, 3, 3).unwrap();
        let reports = run_bench(
            &g,
            &BenchConfig {
                queries: 0,
                ..Default::default()
            },
        )
        .unwrap();
        let mut buf = Vec::new();
        write_bench_csv(&mut buf, &reports).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            format!("{}\n", CSV_COLUMNS.join(","))
        );
    }

    #[test]
    fn bench_rows_are_ordered_and_consistent() {
        let g = synthetic_grid(3, 6, 6).unwrap();
        let cfg = BenchConfig {
            queries: 4,
            seed: 9,
            ..Default::default()
        };
        let rows = run_bench(&g, &cfg).unwrap();
        assert_eq!(rows.len(), 4 * 5 * 2);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.query_id, i / 10);
            assert!(r.n_expanded <= r.n_generated);
            assert_eq!(r.n_solutions, r.solution_costs.len());
        }
        let parallel = run_bench(&g, &BenchConfig { jobs: 3, ..cfg }).unwrap();
        let strip = |rs: &[QueryReport]| -> Vec<_> {
            rs.iter()
                .map(|r| {
                    (
                        r.query_id,
                        r.source,
                        r.target,
                        r.algorithm,
                        r.solution_costs.clone(),
                        r.n_expanded,
                    )
                })
                .collect()
        };
        assert_eq!(strip(&rows), strip(&parallel));
    }

    #[test]
    fn summaries_group_cells() {
        let g = synthetic_grid(3, 5, 5).unwrap();
        let rows = run_bench(
            &g,
            &BenchConfig {
                queries: 3,
                ..Default::default()
            },
        )
        .unwrap();
        let s = summarize(&rows);
        assert_eq!(s.len(), 10);
        assert!(s.iter().all(|c| c.queries == 3
            && c.min_time_ms <= c.avg_time_ms
            && c.avg_time_ms <= c.max_time_ms));
    }

    #[test]
    fn synthetic_grid_shape() {
        let g = synthetic_grid(5, 4, 3).unwrap();
        assert_eq!(g.vertex_count(), 12);
        // (3 * 3 + 4 * 2) streets, both directions
        assert_eq!(g.edge_count(), 34);
    }

    #[test]
    fn small_verification_run_passes_at_zero() {
        let cfg = VerifyConfig {
            instances: 20,
            eps_grid: vec![0.0],
            ..Default::default()
        };
        let s = verify_random(&cfg).unwrap();
        assert!(s.passed(), "{:?}", s.failures);
        assert!(s.cells.iter().all(|c| c.exact_match == c.runs));
    }

    #[test]
    fn engines_cover_small_grid_frontiers() {
        use crate::oracle::exact_frontier;
        for seed in 0..20 {
            let g = synthetic_grid(seed, 5, 5).unwrap();
            let (s, t) = (VertexId(0), VertexId(24));
            let exact = exact_frontier(&g, s, t).unwrap();
            let h = compute_heuristics(&g, t).unwrap();
            for e in [0.0, 0.01, 0.05, 0.1, 0.5] {
                let eps = ApproxFactor::uniform(e).unwrap();
                for alg in [Algorithm::BoaEps, Algorithm::Ppa] {
                    let costs = alg.run(&g, &h, s, t, eps).unwrap().costs();
                    let report = check_approx_frontier(&costs, &exact, eps);
                    assert!(report.passed(), "seed {seed} {alg} eps {e}: {report:?}");
                }
            }
        }
    }
}

// Sweeps the approximation factor over random queries on a synthetic road
// grid and prints the benchmark CSV, summary block included.

use bicrit::bench::{run_bench, synthetic_grid, write_bench_csv, Algorithm, BenchConfig};

fn main() {
    let g = synthetic_grid(1, 40, 40).unwrap();
    let cfg = BenchConfig {
        queries: 3,
        seed: 2,
        eps_grid: vec![0.0, 0.01, 0.025, 0.05, 0.1],
        algorithms: vec![Algorithm::BoaEps, Algorithm::Ppa],
        ..Default::default()
    };
    let rows = run_bench(&g, &cfg).unwrap();
    write_bench_csv(std::io::stdout().lock(), &rows).unwrap();
}

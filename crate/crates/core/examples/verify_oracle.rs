// Cross-checks both engines against the exact label-correcting oracle on
// small random graphs.

use bicrit::bench::{verify_random, VerifyConfig};
use bicrit::oracle::{check_approx_frontier, exact_frontier, random_instance};
use bicrit::pareto::ApproxFactor;
use bicrit::{heuristics::compute_heuristics, ppa::ppa_search};

fn main() {
    let inst = random_instance(42, 50, 4, 10).unwrap();
    let exact = exact_frontier(&inst.graph, inst.start, inst.goal).unwrap();
    println!(
        "instance 42: {} vertices, exact frontier {:?}",
        inst.graph.vertex_count(),
        exact
            .costs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    let eps = ApproxFactor::uniform(0.1).unwrap();
    let h = compute_heuristics(&inst.graph, inst.goal).unwrap();
    let out = ppa_search(&inst.graph, &h, inst.start, inst.goal, eps).unwrap();
    let report = check_approx_frontier(&out.costs(), &exact, eps);
    println!("ppa at 0.1 passes: {}", report.passed());

    let summary = verify_random(&VerifyConfig {
        instances: 30,
        ..Default::default()
    })
    .unwrap();
    for c in &summary.cells {
        println!(
            "{} eps {}: coverage {}/{}",
            c.algorithm.unwrap(),
            c.eps,
            c.coverage_pass,
            c.runs
        );
    }
}

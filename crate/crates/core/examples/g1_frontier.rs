// Exact and approximate frontiers on a four-vertex diamond.
//
// Two routes trade distance against time, plus a direct edge that is worse
// on both. At eps = 3 one route covers the other.

use bicrit::boa::boa_search;
use bicrit::graph::{BiGraph, CostVec, VertexId};
use bicrit::heuristics::compute_heuristics;
use bicrit::pareto::ApproxFactor;
use bicrit::ppa::ppa_search;
use bicrit::SearchOutcome;

fn show(name: &str, out: &SearchOutcome) {
    println!(
        "{name}: {} solution(s), {} expanded",
        out.len(),
        out.stats.expanded
    );
    for i in 0..out.len() {
        let path: Vec<String> = out.path(i).iter().map(|v| v.0.to_string()).collect();
        println!("  cost {}  via {}", out.costs()[i], path.join(" -> "));
    }
}

fn main() {
    let e = |u, v, c1, c2| (VertexId(u), VertexId(v), CostVec::new(c1, c2));
    let g = BiGraph::from_edges(
        4,
        vec![
            e(0, 1, 1, 4),
            e(1, 3, 1, 4),
            e(0, 2, 4, 1),
            e(2, 3, 4, 1),
            e(0, 3, 9, 9),
        ],
    )
    .unwrap();
    let (s, t) = (VertexId(0), VertexId(3));
    let h = compute_heuristics(&g, t).unwrap();

    show(
        "boa",
        &boa_search(&g, &h, s, t, ApproxFactor::EXACT).unwrap(),
    );
    let eps = ApproxFactor::uniform(3.0).unwrap();
    show("boa-eps 3", &boa_search(&g, &h, s, t, eps).unwrap());
    let out = ppa_search(&g, &h, s, t, eps).unwrap();
    show("ppa 3", &out);
    for pp in &out.solution_pairs {
        println!("  pair tl {} br {}", pp.tl.g, pp.br.g);
    }
}

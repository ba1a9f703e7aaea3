// Per-criterion lower bounds to a goal, with an on-disk cache.

use bicrit::bench::synthetic_grid;
use bicrit::graph::VertexId;
use bicrit::heuristics::{compute_heuristics, HeuristicCache};

fn main() {
    let g = synthetic_grid(3, 30, 30).unwrap();
    let goal = VertexId(0);
    let h = compute_heuristics(&g, goal).unwrap();
    let far = VertexId(g.vertex_count() as u32 - 1);
    println!(
        "to {goal:?}: shortest distance {} m, fastest time {} ds",
        h.h1(far),
        h.h2(far)
    );

    let dir = tempfile::tempdir().unwrap();
    let cache = HeuristicCache::new(dir.path(), &g).unwrap();
    let (_, hit) = cache.get_or_compute(&g, goal).unwrap();
    let (cached, hit_again) = cache.get_or_compute(&g, goal).unwrap();
    println!("first lookup hit: {hit}, second lookup hit: {hit_again}");
    assert_eq!(cached.get(far), h.get(far));
}

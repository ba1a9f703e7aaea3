// The path-pair operations on their own: extend, merge and the
// boundedness test.

use bicrit::graph::{CostVec, VertexId};
use bicrit::pareto::{
    approx_dominates, extend, is_bounded, merge, ApproxFactor, PathArena, PathPair,
};

fn main() {
    let mut arena = PathArena::new();
    let root = arena.root(VertexId(0));
    let start = PathPair::trivial(&arena, root);

    let slow = extend(&start, VertexId(1), CostVec::new(10, 20), &mut arena);
    let fast = extend(&start, VertexId(1), CostVec::new(14, 15), &mut arena);
    let merged = merge(&slow, &fast);
    println!("merged pair: tl {} br {}", merged.tl.g, merged.br.g);

    for e in [0.1, 0.25, 0.5] {
        let eps = ApproxFactor::uniform(e).unwrap();
        println!("bounded at eps {e}: {}", is_bounded(&merged, eps));
    }

    let eps = ApproxFactor::uniform(0.4).unwrap();
    let interior = CostVec::new(12, 17);
    println!(
        "interior {interior} covered by tl: {}, by br: {}",
        approx_dominates(merged.tl.g, interior, eps),
        approx_dominates(merged.br.g, interior, eps)
    );

    let next = extend(&merged, VertexId(2), CostVec::new(3, 3), &mut arena);
    let route: Vec<u32> = arena.vertices(next.br.id).iter().map(|v| v.0).collect();
    println!(
        "extended: tl {} br {}, br route {route:?}",
        next.tl.g, next.br.g
    );
}

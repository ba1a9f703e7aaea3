//! Bi-objective A* over individual paths.
//!
//! With `eps = (0, 0)` this is exact BOA*; otherwise it is BOA*-eps, where
//! only the goal-bound test is relaxed by `(1 + eps2)`.
//!
//! OPEN is ordered lexicographically by `(f1, f2)` with FIFO tie-breaking.
//! A node at `u` is pruned when
//!
//! ```text
//! g2 >= g2min(u)   or   (1 + eps2) * f2 >= g2min(goal)
//! ```
//!
//! both when it is generated and when it is extracted. Under a consistent
//! heuristic this replaces a CLOSED list and all explicit solution
//! comparisons.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{BiGraph, CostVec, VertexId};
use crate::heuristics::HeuristicTable;
use crate::outcome::SearchOutcome;
use crate::pareto::{relaxed_ge, ApproxFactor, PathArena, PathId};
use crate::stats::{OrderMonitor, SearchStats};
use crate::{Error, Result};

/// Smallest expanded `g2` per vertex; starts at +infinity.
#[derive(Clone, Debug)]
pub struct GminTable {
    values: Vec<u64>,
}

impl GminTable {
    pub const INFINITY: u64 = u64::MAX;

    pub fn new(vertex_count: usize) -> Self {
        GminTable {
            values: vec![Self::INFINITY; vertex_count],
        }
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> u64 {
        self.values[v.index()]
    }

    /// Records an expansion with cost `g2` at `v`. The search only calls this
    /// for nodes that passed `g2 < g2min(v)`, so values never increase.
    #[inline]
    pub fn set(&mut self, v: VertexId, g2: u64) {
        debug_assert!(g2 < self.values[v.index()]);
        self.values[v.index()] = g2;
    }

    /// `(1 + eps2) * f2 >= g2min(goal)`; never true before a solution exists.
    #[inline]
    pub fn goal_bound_prunes(&self, goal: VertexId, f2: u64, eps2: f64) -> bool {
        let bound = self.get(goal);
        bound != Self::INFINITY && relaxed_ge(f2, eps2, bound)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BoaNode {
    pub path: PathId,
    pub f: CostVec,
}

pub(crate) fn check_query(
    g: &BiGraph,
    h: &HeuristicTable,
    start: VertexId,
    goal: VertexId,
) -> Result<()> {
    g.check_vertex(start)?;
    g.check_vertex(goal)?;
    if h.goal() != goal {
        return Err(Error::GoalMismatch {
            table_goal: h.goal().index(),
            goal: goal.index(),
        });
    }
    if h.len() != g.vertex_count() {
        return Err(Error::InvalidVertex {
            id: h.len(),
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// Runs BOA* (`eps` exact) or BOA*-eps. Solutions are returned in discovery
/// order; an unreachable goal yields an empty set.
pub fn boa_search(
    g: &BiGraph,
    h: &HeuristicTable,
    start: VertexId,
    goal: VertexId,
    eps: ApproxFactor,
) -> Result<SearchOutcome> {
    check_query(g, h, start, goal)?;

    let mut arena = PathArena::new();
    let mut stats = SearchStats::default();
    let mut solutions = Vec::new();
    let Some(h_start) = h.get(start) else {
        return Ok(SearchOutcome::new(arena, solutions, Vec::new(), stats));
    };

    let mut g2min = GminTable::new(g.vertex_count());
    let mut monitor = OrderMonitor::new(g.vertex_count());
    let mut open: BinaryHeap<Reverse<(u64, u64, u64, PathId)>> = BinaryHeap::new();
    let mut seq = 0u64;
    let mut push = |open: &mut BinaryHeap<_>, node: BoaNode| {
        open.push(Reverse((node.f.c1, node.f.c2, seq, node.path)));
        seq += 1;
    };

    let root = arena.root(start);
    stats.generated += 1;
    push(
        &mut open,
        BoaNode {
            path: root,
            f: h_start,
        },
    );

    while let Some(Reverse((f1, f2, _, id))) = open.pop() {
        let node = arena[id];
        let f = CostVec::new(f1, f2);
        monitor.on_extract(f, &mut stats.violations);
        if node.g.c2 >= g2min.get(node.vertex) || g2min.goal_bound_prunes(goal, f2, eps.eps2) {
            continue;
        }
        g2min.set(node.vertex, node.g.c2);
        stats.expanded += 1;
        monitor.on_expand(node.vertex, f, &mut stats.violations);

        if node.vertex == goal {
            solutions.push(id);
            continue;
        }

        for (head, cost) in g.out_edges(node.vertex) {
            let Some(h_head) = h.get(head) else { continue };
            stats.generated += 1;
            let g_new = node.g + cost;
            let f_new = g_new + h_head;
            if g_new.c2 >= g2min.get(head) || g2min.goal_bound_prunes(goal, f_new.c2, eps.eps2) {
                continue;
            }
            let child = arena.extend(id, head, cost);
            push(
                &mut open,
                BoaNode {
                    path: child,
                    f: f_new,
                },
            );
        }
    }

    Ok(SearchOutcome::new(arena, solutions, Vec::new(), stats))
}

//! Search counters and runtime checks of the ordering invariants.

use serde::{Deserialize, Serialize};

use crate::graph::{CostVec, VertexId};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Nodes (or pairs) that survived the extraction-time dominance test.
    pub expanded: u64,
    /// Nodes (or pairs) created, including the start node.
    pub generated: u64,
    /// Successful bounded merges into OPEN.
    pub open_merges: u64,
    /// Successful bounded merges into the solution set.
    pub solution_merges: u64,
    /// Stale heap entries skipped because a merge replaced them.
    pub stale_skipped: u64,
    pub violations: InvariantViolations,
}

/// How often each ordering invariant failed during a search. All zeros on a
/// correct run with a consistent heuristic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantViolations {
    /// Extracted f1 decreased.
    pub f1_order: u64,
    /// Expanded f2 at one vertex failed to strictly decrease.
    pub f2_per_vertex: u64,
    /// Merged apex differed from the componentwise min of the inputs.
    pub merged_apex: u64,
    /// A stored pair was not `(eps1, eps2)`-bounded.
    pub unbounded_pair: u64,
}

impl InvariantViolations {
    pub fn total(&self) -> u64 {
        self.f1_order + self.f2_per_vertex + self.merged_apex + self.unbounded_pair
    }

    pub fn absorb(&mut self, other: &InvariantViolations) {
        self.f1_order += other.f1_order;
        self.f2_per_vertex += other.f2_per_vertex;
        self.merged_apex += other.merged_apex;
        self.unbounded_pair += other.unbounded_pair;
    }
}

/// Tracks the extraction order of a best-first search. Violations are
/// counted, and in debug builds they also trip an assertion.
#[derive(Debug)]
pub(crate) struct OrderMonitor {
    last_f1: u64,
    last_f2: Vec<u64>,
}

impl OrderMonitor {
    pub fn new(vertex_count: usize) -> Self {
        OrderMonitor {
            last_f1: 0,
            last_f2: vec![u64::MAX; vertex_count],
        }
    }

    /// Every extracted (non-stale) key, pruned or not.
    pub fn on_extract(&mut self, f: CostVec, v: &mut InvariantViolations) {
        let ok = f.c1 >= self.last_f1;
        debug_assert!(
            ok,
            "extracted f1 decreased: {} after {}",
            f.c1, self.last_f1
        );
        if !ok {
            v.f1_order += 1;
        }
        self.last_f1 = self.last_f1.max(f.c1);
    }

    /// Every expanded key at `vertex`.
    pub fn on_expand(&mut self, vertex: VertexId, f: CostVec, v: &mut InvariantViolations) {
        let slot = &mut self.last_f2[vertex.index()];
        let ok = f.c2 < *slot;
        debug_assert!(
            ok,
            "f2 at vertex {vertex} did not strictly decrease: {} after {}",
            f.c2, *slot
        );
        if !ok {
            v.f2_per_vertex += 1;
        }
        *slot = f.c2;
    }
}

pub(crate) fn check(cond: bool, counter: &mut u64, what: &str) {
    debug_assert!(cond, "invariant violated: {what}");
    if !cond {
        *counter += 1;
    }
}

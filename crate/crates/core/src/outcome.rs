use crate::graph::{CostVec, VertexId};
use crate::pareto::{PathArena, PathId, PathPair};
use crate::stats::SearchStats;

/// Result of one bi-criteria query.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    arena: PathArena,
    /// Returned solution paths, in the order the search produced them.
    pub solutions: Vec<PathId>,
    /// Solution path pairs (PP-A* only; empty for BOA*).
    pub solution_pairs: Vec<PathPair>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub(crate) fn new(
        arena: PathArena,
        solutions: Vec<PathId>,
        solution_pairs: Vec<PathPair>,
        stats: SearchStats,
    ) -> Self {
        SearchOutcome {
            arena,
            solutions,
            solution_pairs,
            stats,
        }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn costs(&self) -> Vec<CostVec> {
        self.solutions.iter().map(|&id| self.arena[id].g).collect()
    }

    /// Vertex sequence of the `i`-th solution.
    pub fn path(&self, i: usize) -> Vec<VertexId> {
        self.arena.vertices(self.solutions[i])
    }

    pub fn arena(&self) -> &PathArena {
        &self.arena
    }
}

//! Reference frontier computation and approximation checks.
//!
//! [`exact_frontier`] is a plain label-correcting search (Martins style): it
//! keeps every non-dominated cost label at every vertex, with no heuristic
//! and no approximation. It shares nothing with the A* engines except
//! [`CostVec`] and the dominance predicates, so it can be used to validate
//! them on small instances.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{BiGraph, CostVec, VertexId};
use crate::pareto::{approx_dominates, strictly_dominates, weakly_dominates, ApproxFactor};
use crate::{Error, Result};

pub const DEFAULT_LABEL_BUDGET: usize = 100_000;

/// Cost-unique Pareto set, ascending in `c1` and descending in `c2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FrontierSet {
    costs: Vec<CostVec>,
}

impl FrontierSet {
    /// Keeps only the non-dominated, distinct costs of `costs`.
    pub fn from_costs(costs: impl IntoIterator<Item = CostVec>) -> Self {
        let mut all: Vec<CostVec> = costs.into_iter().collect();
        all.sort();
        all.dedup();
        let mut out: Vec<CostVec> = Vec::with_capacity(all.len());
        for c in all {
            // sorted by (c1, c2): c survives iff its c2 beats every earlier c2
            if out.last().is_none_or(|last| c.c2 < last.c2) {
                out.push(c);
            }
        }
        FrontierSet { costs: out }
    }

    pub fn costs(&self) -> &[CostVec] {
        &self.costs
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn contains(&self, c: CostVec) -> bool {
        self.costs.binary_search(&c).is_ok()
    }
}

pub fn exact_frontier(g: &BiGraph, start: VertexId, goal: VertexId) -> Result<FrontierSet> {
    exact_frontier_with_budget(g, start, goal, DEFAULT_LABEL_BUDGET)
}

/// Label-correcting search; fails once more than `budget` labels have been
/// created.
pub fn exact_frontier_with_budget(
    g: &BiGraph,
    start: VertexId,
    goal: VertexId,
    budget: usize,
) -> Result<FrontierSet> {
    g.check_vertex(start)?;
    g.check_vertex(goal)?;

    let mut labels: Vec<Vec<CostVec>> = vec![Vec::new(); g.vertex_count()];
    let mut queue = VecDeque::new();
    let mut created = 1usize;
    labels[start.index()].push(CostVec::ZERO);
    queue.push_back((start, CostVec::ZERO));

    while let Some((u, cost)) = queue.pop_front() {
        // a label that was dominated after being queued is gone from the set
        if !labels[u.index()].contains(&cost) {
            continue;
        }
        for (v, w) in g.out_edges(u) {
            let cand = cost + w;
            let at_v = &mut labels[v.index()];
            if at_v.iter().any(|&l| weakly_dominates(l, cand)) {
                continue;
            }
            at_v.retain(|&l| !weakly_dominates(cand, l));
            at_v.push(cand);
            created += 1;
            if created > budget {
                return Err(Error::LabelBudget { budget });
            }
            queue.push_back((v, cand));
        }
    }

    Ok(FrontierSet::from_costs(
        labels[goal.index()].iter().copied(),
    ))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ApproxReport {
    /// Exact frontier costs not `(eps1, eps2)`-dominated by any candidate.
    pub uncovered: Vec<CostVec>,
    /// Candidate pairs `(a, b)` where `a` strictly dominates `b`.
    pub dominated: Vec<(CostVec, CostVec)>,
    /// Candidates that are not on the exact frontier. Informational only.
    pub non_members: Vec<CostVec>,
}

impl ApproxReport {
    pub fn coverage_ok(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn non_domination_ok(&self) -> bool {
        self.dominated.is_empty()
    }

    /// Both hard checks hold.
    pub fn passed(&self) -> bool {
        self.coverage_ok() && self.non_domination_ok()
    }

    pub fn all_members(&self) -> bool {
        self.non_members.is_empty()
    }
}

/// Checks `candidate` as an approximate frontier for `exact`. Candidates
/// are deduplicated by cost first.
pub fn check_approx_frontier(
    candidate: &[CostVec],
    exact: &FrontierSet,
    eps: ApproxFactor,
) -> ApproxReport {
    let mut cand = candidate.to_vec();
    cand.sort();
    cand.dedup();

    let uncovered = exact
        .costs()
        .iter()
        .copied()
        .filter(|&p| !cand.iter().any(|&c| approx_dominates(c, p, eps)))
        .collect();
    let mut dominated = Vec::new();
    for &a in &cand {
        for &b in &cand {
            if strictly_dominates(a, b) {
                dominated.push((a, b));
            }
        }
    }
    let non_members = cand
        .iter()
        .copied()
        .filter(|&c| !exact.contains(c))
        .collect();
    ApproxReport {
        uncovered,
        dominated,
        non_members,
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: BiGraph,
    pub start: VertexId,
    pub goal: VertexId,
}

const ENDPOINT_RETRIES: usize = 64;
const GRAPH_RETRIES: usize = 64;

/// Seeded random digraph: `n` uniform in `[1, n_max]`, each vertex gets a
/// uniform out-degree in `[0, out_degree_max]` with uniform heads, costs are
/// uniform in `[1, cost_max]`. Endpoints are uniform and resampled until the
/// goal is reachable.
pub fn random_instance(
    seed: u64,
    n_max: usize,
    out_degree_max: usize,
    cost_max: u64,
) -> Result<Instance> {
    if n_max == 0 || cost_max == 0 {
        return Err(Error::Generation(
            "n_max and cost_max must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GRAPH_RETRIES {
        let n = rng.gen_range(1..=n_max);
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            let degree = rng.gen_range(0..=out_degree_max);
            for _ in 0..degree {
                let v = rng.gen_range(0..n as u32);
                let c = CostVec::new(rng.gen_range(1..=cost_max), rng.gen_range(1..=cost_max));
                edges.push((VertexId(u), VertexId(v), c));
            }
        }
        let graph = BiGraph::from_edges(n, edges)?;
        for _ in 0..ENDPOINT_RETRIES {
            let start = VertexId(rng.gen_range(0..n as u32));
            let goal = VertexId(rng.gen_range(0..n as u32));
            if reachable(&graph, start, goal) {
                return Ok(Instance { graph, start, goal });
            }
        }
    }
    Err(Error::Generation(format!(
        "no reachable endpoints after {GRAPH_RETRIES} graphs (seed {seed})"
    )))
}

fn reachable(g: &BiGraph, from: VertexId, to: VertexId) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![from];
    seen[from.index()] = true;
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        for (v, _) in g.out_edges(u) {
            if !seen[v.index()] {
                seen[v.index()] = true;
                stack.push(v);
            }
        }
    }
    false
}

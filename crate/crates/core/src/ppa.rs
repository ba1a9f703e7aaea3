//! Path-pair A* (PP-A*).
//!
//! A best-first search whose nodes are [`PathPair`]s. Each pair stands for
//! the slice of a vertex's Pareto frontier between its two extreme paths.
//! When a new pair is inserted into OPEN it is merged with the first pair at
//! the same vertex for which the merged pair is still `(eps1, eps2)`-bounded;
//! the same first-fit merging applies to pairs reaching the goal. Each
//! solution pair contributes its top-left path to the answer.
//!
//! OPEN is keyed by the apex f-values `(f1(tl), f2(br))`. A pair is pruned
//! when `(1 + eps2) * f2(br) >= g2min(goal)` or `g2(br) >= g2min(u)`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::boa::{check_query, GminTable};
use crate::graph::{BiGraph, CostVec, VertexId};
use crate::heuristics::HeuristicTable;
use crate::outcome::SearchOutcome;
use crate::pareto::{extend, is_bounded, merge, ApproxFactor, PathArena, PathPair};
use crate::stats::{check, InvariantViolations, OrderMonitor, SearchStats};
use crate::Result;

/// Handle of a pair stored in [`OpenQueue`]. Handles are issued in
/// insertion order and double as the FIFO tie-breaker.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairHandle(u32);

#[derive(Debug)]
struct Slot {
    pair: PathPair,
    live: bool,
}

/// Priority queue of path pairs with lazy deletion and a per-vertex index of
/// the live pairs, which is where merge candidates are looked up.
#[derive(Debug, Default)]
pub struct OpenQueue {
    slots: Vec<Slot>,
    heap: BinaryHeap<Reverse<(u64, u64, PairHandle)>>,
    buckets: HashMap<VertexId, Vec<PairHandle>>,
    live: usize,
}

impl OpenQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// Live pairs at `v` in insertion order.
    pub fn bucket(&self, v: VertexId) -> &[PairHandle] {
        self.buckets.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn pair(&self, handle: PairHandle) -> &PathPair {
        &self.slots[handle.0 as usize].pair
    }

    pub fn is_live(&self, handle: PairHandle) -> bool {
        self.slots[handle.0 as usize].live
    }

    /// Inserts `pair` keyed by its apex f-values.
    pub fn push(&mut self, pair: PathPair, key: CostVec) -> PairHandle {
        let handle = PairHandle(self.slots.len() as u32);
        self.slots.push(Slot { pair, live: true });
        self.heap.push(Reverse((key.c1, key.c2, handle)));
        self.buckets.entry(pair.vertex).or_default().push(handle);
        self.live += 1;
        handle
    }

    /// Marks `handle` dead and drops it from its vertex bucket. Its heap
    /// entry stays behind and is skipped on extraction.
    pub fn remove(&mut self, handle: PairHandle) {
        let slot = &mut self.slots[handle.0 as usize];
        if !slot.live {
            return;
        }
        slot.live = false;
        self.live -= 1;
        let v = slot.pair.vertex;
        if let Some(bucket) = self.buckets.get_mut(&v) {
            if let Some(pos) = bucket.iter().position(|&x| x == handle) {
                bucket.remove(pos);
            }
            if bucket.is_empty() {
                self.buckets.remove(&v);
            }
        }
    }

    /// Pops the live pair with the smallest key. Returns the pair, its key
    /// and the number of stale entries skipped on the way.
    pub fn pop(&mut self) -> Option<(PathPair, CostVec, u64)> {
        let mut stale = 0;
        while let Some(Reverse((f1, f2, handle))) = self.heap.pop() {
            if !self.is_live(handle) {
                stale += 1;
                continue;
            }
            let pair = self.slots[handle.0 as usize].pair;
            self.remove(handle);
            return Some((pair, CostVec::new(f1, f2), stale));
        }
        None
    }
}

/// Path pairs that reached the goal.
#[derive(Clone, Debug, Default)]
pub struct SolutionSet {
    pub pairs: Vec<PathPair>,
}

impl SolutionSet {
    pub fn new() -> Self {
        Self::default()
    }
}

fn apex_key(pp: &PathPair, h: &HeuristicTable) -> CostVec {
    pp.apex(h)
        .expect("pairs are only created at vertices that reach the goal")
        .f
}

/// Pruning test: dominated by a solution, or by a pair already expanded at
/// its vertex. The goal is taken from `h`.
pub fn is_dominated_ppa(
    pp: &PathPair,
    h: &HeuristicTable,
    g2min: &GminTable,
    eps: ApproxFactor,
) -> bool {
    let f2_br = apex_key(pp, h).c2;
    dominated(pp.vertex, pp.br.g.c2, f2_br, g2min, h.goal(), eps)
}

#[inline]
fn dominated(
    v: VertexId,
    g2_br: u64,
    f2_br: u64,
    g2min: &GminTable,
    goal: VertexId,
    eps: ApproxFactor,
) -> bool {
    g2min.goal_bound_prunes(goal, f2_br, eps.eps2) || g2_br >= g2min.get(v)
}

/// First-fit merge into the candidate list `bucket`: returns the index of the
/// first candidate whose merge with `pp` is bounded, with the merged pair.
fn first_bounded_merge<'a>(
    candidates: impl IntoIterator<Item = &'a PathPair>,
    pp: &PathPair,
    eps: ApproxFactor,
) -> Option<(usize, PathPair)> {
    candidates
        .into_iter()
        .enumerate()
        .find_map(|(i, existing)| {
            let merged = merge(existing, pp);
            is_bounded(&merged, eps).then_some((i, merged))
        })
}

fn check_merge(
    existing: &PathPair,
    pp: &PathPair,
    merged: &PathPair,
    h: &HeuristicTable,
    v: &mut InvariantViolations,
) {
    let expected = apex_key(existing, h).min(apex_key(pp, h));
    check(
        apex_key(merged, h) == expected,
        &mut v.merged_apex,
        "merged apex is the componentwise min",
    );
}

/// Inserts `pp` into OPEN, merging it with the first bounded-mergeable pair
/// at the same vertex. Returns `true` if a merge happened.
pub fn insert_ppa(
    pp: PathPair,
    open: &mut OpenQueue,
    h: &HeuristicTable,
    eps: ApproxFactor,
    stats: &mut SearchStats,
) -> bool {
    let bucket = open.bucket(pp.vertex);
    let found = first_bounded_merge(bucket.iter().map(|&hd| open.pair(hd)), &pp, eps);
    let (to_insert, merged) = match found {
        Some((i, merged)) => {
            let handle = bucket[i];
            check_merge(open.pair(handle), &pp, &merged, h, &mut stats.violations);
            open.remove(handle);
            stats.open_merges += 1;
            (merged, true)
        }
        None => (pp, false),
    };
    check(
        is_bounded(&to_insert, eps),
        &mut stats.violations.unbounded_pair,
        "OPEN pair is bounded",
    );
    open.push(to_insert, apex_key(&to_insert, h));
    merged
}

/// Adds a goal pair to the solution set with the same first-fit discipline
/// as [`insert_ppa`]. Returns `true` if a merge happened.
pub fn merge_to_solutions(
    pp: PathPair,
    sols: &mut SolutionSet,
    h: &HeuristicTable,
    eps: ApproxFactor,
    stats: &mut SearchStats,
) -> bool {
    let found = first_bounded_merge(&sols.pairs, &pp, eps);
    let (to_insert, merged) = match found {
        Some((i, merged)) => {
            check_merge(&sols.pairs[i], &pp, &merged, h, &mut stats.violations);
            sols.pairs.remove(i);
            stats.solution_merges += 1;
            (merged, true)
        }
        None => (pp, false),
    };
    check(
        is_bounded(&to_insert, eps),
        &mut stats.violations.unbounded_pair,
        "solution pair is bounded",
    );
    sols.pairs.push(to_insert);
    merged
}

/// Runs PP-A* and returns the top-left path of every solution pair.
pub fn ppa_search(
    g: &BiGraph,
    h: &HeuristicTable,
    start: VertexId,
    goal: VertexId,
    eps: ApproxFactor,
) -> Result<SearchOutcome> {
    check_query(g, h, start, goal)?;

    let mut arena = PathArena::new();
    let mut stats = SearchStats::default();
    let mut sols = SolutionSet::new();
    if h.get(start).is_none() {
        return Ok(SearchOutcome::new(arena, Vec::new(), Vec::new(), stats));
    }

    let mut g2min = GminTable::new(g.vertex_count());
    let mut monitor = OrderMonitor::new(g.vertex_count());
    let mut open = OpenQueue::new();

    let root = arena.root(start);
    stats.generated += 1;
    insert_ppa(
        PathPair::trivial(&arena, root),
        &mut open,
        h,
        eps,
        &mut stats,
    );

    while let Some((pp, f, stale)) = open.pop() {
        stats.stale_skipped += stale;
        monitor.on_extract(f, &mut stats.violations);
        if dominated(pp.vertex, pp.br.g.c2, f.c2, &g2min, goal, eps) {
            continue;
        }
        g2min.set(pp.vertex, pp.br.g.c2);
        stats.expanded += 1;
        monitor.on_expand(pp.vertex, f, &mut stats.violations);

        if pp.vertex == goal {
            merge_to_solutions(pp, &mut sols, h, eps, &mut stats);
            continue;
        }

        for (head, cost) in g.out_edges(pp.vertex) {
            let Some(h_head) = h.get(head) else { continue };
            stats.generated += 1;
            let br_g2 = pp.br.g.c2 + cost.c2;
            if dominated(head, br_g2, br_g2 + h_head.c2, &g2min, goal, eps) {
                continue;
            }
            let child = extend(&pp, head, cost, &mut arena);
            insert_ppa(child, &mut open, h, eps, &mut stats);
        }
    }

    let solutions = sols.pairs.iter().map(|pp| pp.tl.id).collect();
    Ok(SearchOutcome::new(arena, solutions, sols.pairs, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heuristics::compute_heuristics;
    use crate::oracle::{check_approx_frontier, exact_frontier};
    use crate::pareto::{approx_dominates, PathHandle, SearchPath};

    fn e(u: u32, v: u32, c1: u64, c2: u64) -> (VertexId, VertexId, CostVec) {
        (VertexId(u), VertexId(v), CostVec::new(c1, c2))
    }

    fn g1() -> BiGraph {
        BiGraph::from_edges(
            4,
            vec![
                e(0, 1, 1, 4),
                e(1, 3, 1, 4),
                e(0, 2, 4, 1),
                e(2, 3, 4, 1),
                e(0, 3, 9, 9),
            ],
        )
        .unwrap()
    }

    fn run(g: &BiGraph, s: u32, t: u32, eps: f64) -> SearchOutcome {
        let h = compute_heuristics(g, VertexId(t)).unwrap();
        ppa_search(
            g,
            &h,
            VertexId(s),
            VertexId(t),
            ApproxFactor::uniform(eps).unwrap(),
        )
        .unwrap()
    }

    /// A pair at `v` whose extremes are fresh arena paths with the given costs.
    fn pair(arena: &mut PathArena, v: u32, tl: (u64, u64), br: (u64, u64)) -> PathPair {
        let mut side = |(c1, c2)| {
            let g = CostVec::new(c1, c2);
            PathHandle {
                id: arena.push(SearchPath {
                    vertex: VertexId(v),
                    g,
                    parent: None,
                }),
                g,
            }
        };
        PathPair {
            vertex: VertexId(v),
            tl: side(tl),
            br: side(br),
        }
    }

    /// All-zero heuristic on two vertices with goal 1.
    fn zero_h() -> HeuristicTable {
        compute_heuristics(
            &BiGraph::from_edges(2, vec![e(0, 1, 0, 0)]).unwrap(),
            VertexId(1),
        )
        .unwrap()
    }

    #[test]
    fn g1_exact() {
        let out = run(&g1(), 0, 3, 0.0);
        let mut costs = out.costs();
        costs.sort();
        assert_eq!(costs, vec![CostVec::new(2, 8), CostVec::new(8, 2)]);
        assert_eq!(out.solution_pairs.len(), 2);
        assert!(out.solution_pairs.iter().all(|p| p.tl.g == p.br.g));
        assert_eq!(out.stats.violations.total(), 0);
    }

    #[test]
    fn g1_eps_three_collapses_to_one_pair() {
        let out = run(&g1(), 0, 3, 3.0);
        assert_eq!(out.costs(), vec![CostVec::new(2, 8)]);
        assert_eq!(out.solution_pairs.len(), 1);
        assert_eq!(out.solution_pairs[0].tl.g, CostVec::new(2, 8));
        assert!(out.stats.open_merges > 0);
        assert_eq!(out.path(0), vec![VertexId(0), VertexId(1), VertexId(3)]);
    }

    #[test]
    fn start_equals_goal() {
        let out = run(&g1(), 2, 2, 0.5);
        assert_eq!(out.costs(), vec![CostVec::ZERO]);
        assert_eq!(out.path(0), vec![VertexId(2)]);
    }

    #[test]
    fn unreachable_goal() {
        let out = run(&g1(), 3, 0, 0.0);
        assert!(out.is_empty());
        assert_eq!(out.stats.generated, 0);
    }

    #[test]
    fn pruning_rules() {
        let h = zero_h();
        let mut arena = PathArena::new();
        let eps = ApproxFactor::uniform(3.0).unwrap();

        let mut g2min = GminTable::new(2);
        let at_goal = pair(&mut arena, 1, (9, 2), (9, 2));
        assert!(!is_dominated_ppa(&at_goal, &h, &g2min, eps));
        g2min.set(VertexId(1), 8);
        // 4 * 2 >= 8
        assert!(is_dominated_ppa(&at_goal, &h, &g2min, eps));
        let at_goal = pair(&mut arena, 1, (9, 1), (9, 1));
        assert!(!is_dominated_ppa(&at_goal, &h, &g2min, eps));

        let mut g2min = GminTable::new(2);
        g2min.set(VertexId(0), 5);
        let inner = pair(&mut arena, 0, (1, 9), (3, 5));
        assert!(is_dominated_ppa(&inner, &h, &g2min, ApproxFactor::EXACT));
        let inner = pair(&mut arena, 0, (1, 9), (3, 4));
        assert!(!is_dominated_ppa(&inner, &h, &g2min, ApproxFactor::EXACT));
    }

    #[test]
    fn insert_merges_into_first_bounded_candidate_only() {
        let h = zero_h();
        let mut arena = PathArena::new();
        let mut open = OpenQueue::new();
        let mut stats = SearchStats::default();
        let eps = ApproxFactor::uniform(1.0).unwrap();

        let a = pair(&mut arena, 0, (10, 20), (10, 20));
        let b = pair(&mut arena, 0, (12, 18), (12, 18));
        let far = pair(&mut arena, 0, (100, 1), (100, 1));
        assert!(!insert_ppa(
            a,
            &mut open,
            &h,
            ApproxFactor::EXACT,
            &mut stats
        ));
        assert!(!insert_ppa(
            b,
            &mut open,
            &h,
            ApproxFactor::EXACT,
            &mut stats
        ));
        assert!(!insert_ppa(far, &mut open, &h, eps, &mut stats));
        assert_eq!(open.len(), 3);

        let c = pair(&mut arena, 0, (11, 19), (15, 15));
        assert!(insert_ppa(c, &mut open, &h, eps, &mut stats));
        assert_eq!(stats.open_merges, 1);
        assert_eq!(open.len(), 3);
        let bucket: Vec<PathPair> = open
            .bucket(VertexId(0))
            .iter()
            .map(|&x| *open.pair(x))
            .collect();
        // `a` was replaced by the merged pair, which moved to the back
        assert_eq!(bucket[0], b);
        assert_eq!(bucket[1], far);
        assert_eq!(bucket[2].tl, a.tl);
        assert_eq!(bucket[2].br, c.br);
        assert_eq!(stats.violations.total(), 0);
    }

    #[test]
    fn insert_keeps_unbounded_candidates_apart() {
        let h = zero_h();
        let mut arena = PathArena::new();
        let mut open = OpenQueue::new();
        let mut stats = SearchStats::default();
        let eps = ApproxFactor::uniform(0.1).unwrap();
        insert_ppa(
            pair(&mut arena, 0, (10, 20), (10, 20)),
            &mut open,
            &h,
            eps,
            &mut stats,
        );
        assert!(!insert_ppa(
            pair(&mut arena, 0, (20, 10), (20, 10)),
            &mut open,
            &h,
            eps,
            &mut stats
        ));
        assert!(!insert_ppa(
            pair(&mut arena, 1, (10, 20), (10, 20)),
            &mut open,
            &h,
            eps,
            &mut stats
        ));
        assert_eq!(open.len(), 3);
        assert_eq!(open.bucket(VertexId(0)).len(), 2);
    }

    #[test]
    fn open_pops_by_apex_then_fifo() {
        let h = zero_h();
        let mut arena = PathArena::new();
        let mut open = OpenQueue::new();
        let p = pair(&mut arena, 0, (3, 9), (5, 4));
        let q = pair(&mut arena, 1, (3, 4), (3, 4));
        let r = pair(&mut arena, 0, (2, 50), (2, 50));
        let hp = open.push(p, apex_key(&p, &h));
        open.push(q, apex_key(&q, &h));
        open.push(r, apex_key(&r, &h));
        open.remove(hp);
        assert!(!open.is_live(hp));
        assert_eq!(open.pop(), Some((r, CostVec::new(2, 50), 0)));
        assert_eq!(open.pop(), Some((q, CostVec::new(3, 4), 1)));
        assert_eq!(open.pop(), None);
        assert!(open.is_empty());
    }

    #[test]
    fn solutions_merge_first_fit() {
        let h = zero_h();
        let mut arena = PathArena::new();
        let mut sols = SolutionSet::new();
        let mut stats = SearchStats::default();
        let eps = ApproxFactor::uniform(0.5).unwrap();
        assert!(!merge_to_solutions(
            pair(&mut arena, 1, (10, 14), (10, 14)),
            &mut sols,
            &h,
            eps,
            &mut stats
        ));
        assert!(!merge_to_solutions(
            pair(&mut arena, 1, (30, 2), (30, 2)),
            &mut sols,
            &h,
            eps,
            &mut stats
        ));
        assert!(merge_to_solutions(
            pair(&mut arena, 1, (14, 10), (14, 10)),
            &mut sols,
            &h,
            eps,
            &mut stats
        ));
        assert_eq!(stats.solution_merges, 1);
        assert_eq!(sols.pairs.len(), 2);
        assert_eq!(sols.pairs[0].tl.g, CostVec::new(30, 2));
        assert_eq!(
            (sols.pairs[1].tl.g, sols.pairs[1].br.g),
            (CostVec::new(10, 14), CostVec::new(14, 10))
        );
    }

    // Three parallel s -> g edges at eps 1. (10, 20) and (20, 10) merge into
    // one bounded pair; once it is expanded g2min(goal) = 10, so (25, 6) is
    // pruned by 2 * 6 >= 10. Only the top-left path (10, 20) is returned and
    // it does not approx-dominate (25, 6) (20 > 2 * 6), while the pair's
    // bottom-right path does.
    #[test]
    fn returned_top_left_paths_can_leave_a_pruned_point_uncovered() {
        let g =
            BiGraph::from_edges(2, vec![e(0, 1, 10, 20), e(0, 1, 20, 10), e(0, 1, 25, 6)]).unwrap();
        let eps = ApproxFactor::uniform(1.0).unwrap();
        let out = run(&g, 0, 1, 1.0);
        assert_eq!(out.costs(), vec![CostVec::new(10, 20)]);
        let pp = out.solution_pairs[0];
        assert_eq!(pp.br.g, CostVec::new(20, 10));

        let exact = exact_frontier(&g, VertexId(0), VertexId(1)).unwrap();
        let report = check_approx_frontier(&out.costs(), &exact, eps);
        assert_eq!(report.uncovered, vec![CostVec::new(25, 6)]);
        assert!(approx_dominates(pp.br.g, CostVec::new(25, 6), eps));
        assert_eq!(out.stats.violations.total(), 0);
    }
}

//! Dominance relations, search paths and path pairs.
//!
//! A [`PathPair`] holds the two extreme paths (`tl`, top-left: smaller `c1`;
//! `br`, bottom-right: smaller `c2`) of a slice of the Pareto frontier at one
//! vertex. When the slice is `(eps1, eps2)`-bounded, both extremes
//! approximately dominate every path inside it, so the slice can be carried
//! through the search as a single node.

use serde::{Deserialize, Serialize};

use crate::graph::{CostVec, VertexId};
use crate::heuristics::HeuristicTable;
use crate::{Error, Result};

/// Approximation factors for the two criteria. `(0, 0)` requests the exact
/// frontier.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxFactor {
    pub eps1: f64,
    pub eps2: f64,
}

impl ApproxFactor {
    pub const EXACT: ApproxFactor = ApproxFactor {
        eps1: 0.0,
        eps2: 0.0,
    };

    pub fn new(eps1: f64, eps2: f64) -> Result<Self> {
        let ok = |e: f64| e.is_finite() && e >= 0.0;
        if ok(eps1) && ok(eps2) {
            Ok(ApproxFactor { eps1, eps2 })
        } else {
            Err(Error::InvalidApprox { eps1, eps2 })
        }
    }

    /// Same factor on both criteria.
    pub fn uniform(eps: f64) -> Result<Self> {
        Self::new(eps, eps)
    }

    pub fn is_exact(&self) -> bool {
        self.eps1 == 0.0 && self.eps2 == 0.0
    }
}

/// `(1 + eps) * x >= y`, evaluated as `x + eps * x >= y` in double precision.
#[inline]
pub fn relaxed_ge(x: u64, eps: f64, y: u64) -> bool {
    if eps == 0.0 {
        return x >= y;
    }
    let x = x as f64;
    x + eps * x >= y as f64
}

/// `p` is no worse than `q` on both criteria.
#[inline]
pub fn weakly_dominates(p: CostVec, q: CostVec) -> bool {
    p.c1 <= q.c1 && p.c2 <= q.c2
}

#[inline]
pub fn strictly_dominates(p: CostVec, q: CostVec) -> bool {
    weakly_dominates(p, q) && (p.c1 < q.c1 || p.c2 < q.c2)
}

/// `p.c_i <= (1 + eps_i) * q.c_i` for both criteria.
#[inline]
pub fn approx_dominates(p: CostVec, q: CostVec, eps: ApproxFactor) -> bool {
    relaxed_ge(q.c1, eps.eps1, p.c1) && relaxed_ge(q.c2, eps.eps2, p.c2)
}

/// Index of a [`SearchPath`] inside a [`PathArena`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathId(pub u32);

/// One search path, stored as its endpoint, accumulated cost and a link to
/// the path it extends.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchPath {
    pub vertex: VertexId,
    pub g: CostVec,
    pub parent: Option<PathId>,
}

/// Append-only store of search paths for a single query.
#[derive(Clone, Debug, Default)]
pub struct PathArena {
    paths: Vec<SearchPath>,
}

impl PathArena {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// A zero-cost root path at `start`.
    pub fn root(&mut self, start: VertexId) -> PathId {
        self.push(SearchPath {
            vertex: start,
            g: CostVec::ZERO,
            parent: None,
        })
    }

    pub fn push(&mut self, path: SearchPath) -> PathId {
        let id = PathId(self.paths.len() as u32);
        self.paths.push(path);
        id
    }

    /// Extends path `id` by an edge to `head` with cost `cost`.
    pub fn extend(&mut self, id: PathId, head: VertexId, cost: CostVec) -> PathId {
        let g = self[id].g + cost;
        self.push(SearchPath {
            vertex: head,
            g,
            parent: Some(id),
        })
    }

    /// Vertex sequence from the root to the endpoint of `id`.
    pub fn vertices(&self, id: PathId) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut cur = Some(id);
        while let Some(p) = cur {
            out.push(self[p].vertex);
            cur = self[p].parent;
        }
        out.reverse();
        out
    }
}

impl std::ops::Index<PathId> for PathArena {
    type Output = SearchPath;

    #[inline]
    fn index(&self, id: PathId) -> &SearchPath {
        &self.paths[id.0 as usize]
    }
}

/// A path in the arena together with its cost, so pair operations need no
/// arena lookups.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PathHandle {
    pub id: PathId,
    pub g: CostVec,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PathPair {
    pub vertex: VertexId,
    pub tl: PathHandle,
    pub br: PathHandle,
}

impl PathPair {
    /// The pair `(p, p)` for a single path.
    pub fn trivial(arena: &PathArena, id: PathId) -> Self {
        let p = &arena[id];
        let h = PathHandle { id, g: p.g };
        PathPair {
            vertex: p.vertex,
            tl: h,
            br: h,
        }
    }

    /// Checks `c1(tl) <= c1(br)` and `c2(tl) >= c2(br)`.
    pub fn is_well_formed(&self) -> bool {
        self.tl.g.c1 <= self.br.g.c1 && self.tl.g.c2 >= self.br.g.c2
    }

    /// `g`-values of the apex: `(c1(tl), c2(br))`.
    #[inline]
    pub fn apex_g(&self) -> CostVec {
        CostVec::new(self.tl.g.c1, self.br.g.c2)
    }

    /// Apex at this pair's vertex, or `None` if the vertex cannot reach the
    /// goal.
    pub fn apex(&self, h: &HeuristicTable) -> Option<Apex> {
        let hv = h.get(self.vertex)?;
        let g = self.apex_g();
        Some(Apex {
            vertex: self.vertex,
            g,
            f: g + hv,
        })
    }
}

/// Componentwise-minimum corner of a path pair. No actual path needs to
/// attain it.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Apex {
    pub vertex: VertexId,
    pub g: CostVec,
    pub f: CostVec,
}

/// Whether `(tl, br)` spans an `(eps1, eps2)`-bounded slice:
/// `c1(br) <= (1 + eps1) c1(tl)` and `c2(tl) <= (1 + eps2) c2(br)`.
///
/// A zero denominator only admits a zero numerator, which the relaxed
/// comparison yields naturally.
#[inline]
pub fn is_bounded(pp: &PathPair, eps: ApproxFactor) -> bool {
    relaxed_ge(pp.tl.g.c1, eps.eps1, pp.br.g.c1) && relaxed_ge(pp.br.g.c2, eps.eps2, pp.tl.g.c2)
}

/// Extends both paths of `pp` by the edge `pp.vertex -> head`. A trivial
/// pair stays trivial (both sides share the new arena entry).
pub fn extend(pp: &PathPair, head: VertexId, cost: CostVec, arena: &mut PathArena) -> PathPair {
    let tl_id = arena.extend(pp.tl.id, head, cost);
    let br_id = if pp.br.id == pp.tl.id {
        tl_id
    } else {
        arena.extend(pp.br.id, head, cost)
    };
    PathPair {
        vertex: head,
        tl: PathHandle {
            id: tl_id,
            g: pp.tl.g + cost,
        },
        br: PathHandle {
            id: br_id,
            g: pp.br.g + cost,
        },
    }
}

/// Keeps the `tl` with the smaller `c1` and the `br` with the smaller `c2`;
/// ties keep `pp`'s path.
///
/// # Panics
///
/// If the pairs end at different vertices.
pub fn merge(pp: &PathPair, qq: &PathPair) -> PathPair {
    assert_eq!(
        pp.vertex, qq.vertex,
        "merge requires pairs at the same vertex"
    );
    PathPair {
        vertex: pp.vertex,
        tl: if qq.tl.g.c1 < pp.tl.g.c1 {
            qq.tl
        } else {
            pp.tl
        },
        br: if qq.br.g.c2 < pp.br.g.c2 {
            qq.br
        } else {
            pp.br
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BiGraph;
    use crate::heuristics::compute_heuristics;
    use proptest::prelude::*;

    fn c(a: u64, b: u64) -> CostVec {
        CostVec::new(a, b)
    }

    fn eps(a: f64, b: f64) -> ApproxFactor {
        ApproxFactor::new(a, b).unwrap()
    }

    /// A pair whose handles point at fresh root-like arena entries.
    fn pair(arena: &mut PathArena, tl: CostVec, br: CostVec) -> PathPair {
        let v = VertexId(0);
        let t = arena.push(SearchPath {
            vertex: v,
            g: tl,
            parent: None,
        });
        let b = arena.push(SearchPath {
            vertex: v,
            g: br,
            parent: None,
        });
        PathPair {
            vertex: v,
            tl: PathHandle { id: t, g: tl },
            br: PathHandle { id: b, g: br },
        }
    }

    #[test]
    fn weak_dominance() {
        assert!(weakly_dominates(c(3, 5), c(3, 7)));
        assert!(weakly_dominates(c(3, 5), c(3, 5)));
        assert!(!weakly_dominates(c(4, 2), c(2, 3)));
    }

    #[test]
    fn strict_dominance() {
        assert!(strictly_dominates(c(3, 5), c(3, 7)));
        assert!(!strictly_dominates(c(3, 5), c(3, 5)));
        assert!(strictly_dominates(c(8, 2), c(9, 9)));
    }

    #[test]
    fn approximate_dominance() {
        assert!(approx_dominates(c(4, 2), c(2, 3), eps(1.0, 1.0)));
        assert!(approx_dominates(c(8, 2), c(2, 8), eps(3.0, 3.0)));
        assert!(!approx_dominates(c(8, 2), c(2, 8), eps(2.9, 3.0)));
    }

    #[test]
    fn invalid_factors_rejected() {
        assert!(ApproxFactor::new(-0.5, 0.0).is_err());
        assert!(ApproxFactor::new(0.0, f64::NAN).is_err());
        assert!(ApproxFactor::uniform(f64::INFINITY).is_err());
        assert!(ApproxFactor::uniform(0.0).unwrap().is_exact());
    }

    #[test]
    fn boundedness() {
        let mut a = PathArena::new();
        let p = pair(&mut a, c(10, 20), c(11, 18));
        assert!(is_bounded(&p, eps(0.1, 0.12)));
        assert!(!is_bounded(&p, eps(0.05, 0.12)));
        assert!(!is_bounded(&p, eps(0.1, 0.11)));
        let t = pair(&mut a, c(10, 20), c(10, 20));
        assert!(is_bounded(&t, ApproxFactor::EXACT));
    }

    #[test]
    fn boundedness_with_zero_denominators() {
        let mut a = PathArena::new();
        assert!(!is_bounded(
            &pair(&mut a, c(0, 5), c(1, 3)),
            eps(100.0, 100.0)
        ));
        assert!(is_bounded(&pair(&mut a, c(0, 5), c(0, 3)), eps(0.0, 1.0)));
        assert!(!is_bounded(
            &pair(&mut a, c(1, 5), c(2, 0)),
            eps(100.0, 100.0)
        ));
        assert!(is_bounded(&pair(&mut a, c(1, 0), c(2, 0)), eps(1.0, 0.0)));
    }

    #[test]
    fn extend_adds_edge_cost_to_both_sides() {
        let mut a = PathArena::new();
        let p = pair(&mut a, c(1, 9), c(3, 5));
        let q = extend(&p, VertexId(1), c(2, 2), &mut a);
        assert_eq!((q.tl.g, q.br.g), (c(3, 11), c(5, 7)));
        assert_eq!(q.vertex, VertexId(1));
        assert_eq!(a[q.tl.id].parent, Some(p.tl.id));
        assert_eq!(a[q.br.id].parent, Some(p.br.id));
        assert_eq!(a[q.tl.id].g, q.tl.g);
        assert!(q.is_well_formed());
    }

    #[test]
    fn extend_along_g1_route() {
        // s -> a -> g with edges (1,4) twice
        let mut a = PathArena::new();
        let s = a.root(VertexId(0));
        let at_s = PathPair::trivial(&a, s);
        let at_a = extend(&at_s, VertexId(1), c(1, 4), &mut a);
        let at_g = extend(&at_a, VertexId(3), c(1, 4), &mut a);
        assert_eq!((at_g.tl.g, at_g.br.g), (c(2, 8), c(2, 8)));
        assert_eq!(at_g.tl.id, at_g.br.id);
        assert_eq!(
            a.vertices(at_g.tl.id),
            vec![VertexId(0), VertexId(1), VertexId(3)]
        );
    }

    #[test]
    fn merge_case_equations() {
        let mut a = PathArena::new();
        let p = pair(&mut a, c(1, 9), c(3, 5));
        let q = pair(&mut a, c(2, 8), c(6, 2));
        let m = merge(&p, &q);
        assert_eq!((m.tl, m.br), (p.tl, q.br));
        assert_eq!(merge(&p, &p), p);
    }

    #[test]
    fn merge_ties_keep_first_argument() {
        let mut a = PathArena::new();
        let p = pair(&mut a, c(1, 9), c(3, 5));
        let q = pair(&mut a, c(1, 7), c(4, 5));
        let m = merge(&p, &q);
        assert_eq!(m.tl.id, p.tl.id);
        assert_eq!(m.br.id, p.br.id);
        let m = merge(&q, &p);
        assert_eq!(m.tl.id, q.tl.id);
        assert_eq!(m.br.id, q.br.id);
    }

    #[test]
    #[should_panic(expected = "same vertex")]
    fn merge_rejects_vertex_mismatch() {
        let mut a = PathArena::new();
        let p = pair(&mut a, c(1, 9), c(3, 5));
        let mut q = p;
        q.vertex = VertexId(7);
        merge(&p, &q);
    }

    #[test]
    fn merged_apex_is_componentwise_min() {
        // apexes (1,5) and (2,2)
        let mut a = PathArena::new();
        let p = pair(&mut a, c(1, 9), c(3, 5));
        let q = pair(&mut a, c(2, 8), c(6, 2));
        assert_eq!(p.apex_g(), c(1, 5));
        assert_eq!(q.apex_g(), c(2, 2));
        assert_eq!(merge(&p, &q).apex_g(), c(1, 2));
    }

    #[test]
    fn apex_f_adds_heuristic() {
        let g = BiGraph::from_edges(2, vec![(VertexId(0), VertexId(1), c(3, 4))]).unwrap();
        let h = compute_heuristics(&g, VertexId(1)).unwrap();
        let mut a = PathArena::new();
        let p = pair(&mut a, c(1, 9), c(3, 5));
        let apex = p.apex(&h).unwrap();
        assert_eq!(apex.g, c(1, 5));
        assert_eq!(apex.f, c(4, 9));
    }

    fn arb_cost() -> impl Strategy<Value = CostVec> {
        (0u64..10_000, 0u64..10_000).prop_map(|(a, b)| c(a, b))
    }

    /// A well-formed pair plus an interior point, then the factor that makes
    /// the pair exactly bounded (rounded up), plus optional slack.
    fn arb_bounded_pair_with_point(
    ) -> impl Strategy<Value = (CostVec, CostVec, CostVec, ApproxFactor)> {
        (
            1u64..10_000,
            0u64..10_000,
            1u64..10_000,
            0u64..10_000,
            0.0f64..1.0,
            0.0f64..1.0,
            0.0f64..0.5,
        )
            .prop_map(|(tl1, d1, br2, d2, s1, s2, slack)| {
                let tl = c(tl1, br2 + d2);
                let br = c(tl1 + d1, br2);
                let p = c(tl1 + (s1 * d1 as f64) as u64, br2 + (s2 * d2 as f64) as u64);
                let e1 = d1 as f64 / tl1 as f64;
                let e2 = d2 as f64 / br2 as f64;
                let eps = ApproxFactor::new(e1 * (1.0 + 1e-12) + slack, e2 * (1.0 + 1e-12) + slack)
                    .unwrap();
                (tl, br, p, eps)
            })
    }

    proptest! {
        #[test]
        fn zero_eps_is_weak_dominance(p in arb_cost(), q in arb_cost()) {
            prop_assert_eq!(approx_dominates(p, q, ApproxFactor::EXACT), weakly_dominates(p, q));
        }

        #[test]
        fn strict_implies_weak_and_is_irreflexive(p in arb_cost(), q in arb_cost()) {
            if strictly_dominates(p, q) {
                prop_assert!(weakly_dominates(p, q));
                prop_assert!(!strictly_dominates(q, p));
            }
            prop_assert!(!strictly_dominates(p, p));
        }

        #[test]
        fn merge_commutes_up_to_ties_and_is_idempotent(
            a1 in arb_cost(), a2 in arb_cost(), b1 in arb_cost(), b2 in arb_cost()
        ) {
            let mut arena = PathArena::new();
            let (t1, r1) = if a1.c1 <= a2.c1 { (a1, a2) } else { (a2, a1) };
            let (t2, r2) = if b1.c1 <= b2.c1 { (b1, b2) } else { (b2, b1) };
            let p = pair(&mut arena, t1, r1);
            let q = pair(&mut arena, t2, r2);
            let pq = merge(&p, &q);
            let qp = merge(&q, &p);
            prop_assert_eq!(pq.tl.g.c1, qp.tl.g.c1);
            prop_assert_eq!(pq.br.g.c2, qp.br.g.c2);
            prop_assert_eq!(pq.apex_g(), qp.apex_g());
            prop_assert_eq!(pq.apex_g(), p.apex_g().min(q.apex_g()));
            prop_assert_eq!(merge(&pq, &pq), pq);
        }

        #[test]
        fn merge_of_well_formed_pairs_is_well_formed(
            t1 in arb_cost(), d1 in arb_cost(), t2 in arb_cost(), d2 in arb_cost()
        ) {
            let mut arena = PathArena::new();
            let p = pair(&mut arena, t1, c(t1.c1 + d1.c1, t1.c2.saturating_sub(d1.c2)));
            let q = pair(&mut arena, t2, c(t2.c1 + d2.c1, t2.c2.saturating_sub(d2.c2)));
            prop_assert!(merge(&p, &q).is_well_formed());
        }

        #[test]
        fn extend_is_monotone_in_f(t in arb_cost(), d in arb_cost(), e in arb_cost()) {
            // u --(e)--> v with exact heuristics from a 3-vertex chain u -> v -> goal
            let g = BiGraph::from_edges(3, vec![
                (VertexId(0), VertexId(1), e),
                (VertexId(1), VertexId(2), c(5, 7)),
            ]).unwrap();
            let h = compute_heuristics(&g, VertexId(2)).unwrap();
            let mut arena = PathArena::new();
            let p = pair(&mut arena, t, c(t.c1 + d.c1, t.c2.saturating_sub(d.c2)));
            let q = extend(&p, VertexId(1), e, &mut arena);
            let (fp, fq) = (p.apex(&h).unwrap().f, q.apex(&h).unwrap().f);
            prop_assert!(fq.c1 >= fp.c1 && fq.c2 >= fp.c2);
            prop_assert!(q.is_well_formed());
        }

        #[test]
        fn bounded_extremes_cover_interior(
            (tl, br, p, eps) in arb_bounded_pair_with_point()
        ) {
            let mut arena = PathArena::new();
            prop_assert!(is_bounded(&pair(&mut arena, tl, br), eps));
            prop_assert!(approx_dominates(tl, p, eps));
            prop_assert!(approx_dominates(br, p, eps));
        }
    }
}

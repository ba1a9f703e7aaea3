//! Bi-criteria shortest paths on large directed graphs.
//!
//! Every edge carries two non-negative integer costs (for road networks:
//! distance and travel time). Instead of a single shortest path, the answer
//! is a Pareto-optimal frontier: the set of routes where neither cost can be
//! improved without worsening the other. That set can be huge, so the crate
//! also computes `(eps1, eps2)`-approximate frontiers, where every optimal
//! route is within a factor `1 + eps_i` of some returned route.
//!
//! Three search engines share one vocabulary ([`pareto`]):
//!
//! * [`boa::boa_search`] with `eps = 0`: exact bi-objective A* (BOA*).
//! * [`boa::boa_search`] with `eps > 0`: BOA*-eps, which relaxes only the
//!   goal-bound pruning test.
//! * [`ppa::ppa_search`]: path-pair A* (PP-A*). Each search node is a pair of
//!   extreme paths bounding a slice of the frontier; pairs at the same vertex
//!   are merged while the slice stays `(eps1, eps2)`-bounded.
//!
//! [`oracle`] holds an independent label-correcting frontier computation and
//! a coverage checker; [`bench`] and [`cli`] drive benchmark runs over DIMACS
//! road maps.
//!
//! ```
//! use bicrit::{boa, graph::{BiGraph, CostVec, VertexId}, heuristics, pareto::ApproxFactor, ppa};
//!
//! let g = BiGraph::from_edges(3, vec![
//!     (VertexId(0), VertexId(1), CostVec::new(1, 5)),
//!     (VertexId(1), VertexId(2), CostVec::new(1, 5)),
//!     (VertexId(0), VertexId(2), CostVec::new(4, 2)),
//! ]).unwrap();
//! let h = heuristics::compute_heuristics(&g, VertexId(2)).unwrap();
//! let exact = boa::boa_search(&g, &h, VertexId(0), VertexId(2), ApproxFactor::EXACT).unwrap();
//! assert_eq!(exact.costs(), vec![CostVec::new(2, 10), CostVec::new(4, 2)]);
//!
//! let approx = ppa::ppa_search(&g, &h, VertexId(0), VertexId(2), ApproxFactor::uniform(5.0).unwrap()).unwrap();
//! assert_eq!(approx.costs().len(), 1);
//! ```

pub mod bench;
pub mod boa;
pub mod cli;
pub mod dimacs;
mod error;
pub mod graph;
pub mod heuristics;
pub mod oracle;
mod outcome;
pub mod pareto;
pub mod ppa;
pub mod stats;

pub use error::{Error, Result};
pub use outcome::SearchOutcome;

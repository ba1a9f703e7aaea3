//! Bi-cost directed graph with a forward and a reverse adjacency view.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{Error, Result};

/// Dense 0-based vertex index. DIMACS files use 1-based ids; the parser
/// converts on the way in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Accumulated cost along both criteria. 64-bit so that path sums cannot
/// overflow for any realistic input.
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct CostVec {
    pub c1: u64,
    pub c2: u64,
}

impl CostVec {
    pub const ZERO: CostVec = CostVec { c1: 0, c2: 0 };

    #[inline]
    pub const fn new(c1: u64, c2: u64) -> Self {
        CostVec { c1, c2 }
    }

    /// Componentwise minimum.
    #[inline]
    pub fn min(self, other: CostVec) -> CostVec {
        CostVec::new(self.c1.min(other.c1), self.c2.min(other.c2))
    }
}

impl Add for CostVec {
    type Output = CostVec;

    #[inline]
    fn add(self, rhs: CostVec) -> CostVec {
        CostVec::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl From<[u64; 2]> for CostVec {
    fn from([c1, c2]: [u64; 2]) -> Self {
        CostVec::new(c1, c2)
    }
}

impl From<CostVec> for [u64; 2] {
    fn from(c: CostVec) -> Self {
        [c.c1, c.c2]
    }
}

impl fmt::Display for CostVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

/// A single-weight arc as read from one DIMACS file (0-based endpoints).
pub type Arc = (VertexId, VertexId, u64);

/// A bi-cost edge.
pub type Edge = (VertexId, VertexId, CostVec);

/// Compressed adjacency: the neighbours of `v` live in
/// `heads[first[v]..first[v + 1]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Adjacency {
    first: Vec<u32>,
    heads: Vec<VertexId>,
    costs: Vec<CostVec>,
}

impl Adjacency {
    /// Counting sort by the key vertex; the relative order of `edges`
    /// is preserved inside each bucket.
    fn build(n: usize, edges: &[Edge], key: impl Fn(&Edge) -> (VertexId, VertexId)) -> Self {
        let mut first = vec![0u32; n + 1];
        for e in edges {
            first[key(e).0.index() + 1] += 1;
        }
        for i in 0..n {
            first[i + 1] += first[i];
        }
        let mut next = first.clone();
        let mut heads = vec![VertexId(0); edges.len()];
        let mut costs = vec![CostVec::ZERO; edges.len()];
        for e in edges {
            let (tail, head) = key(e);
            let slot = next[tail.index()] as usize;
            heads[slot] = head;
            costs[slot] = e.2;
            next[tail.index()] += 1;
        }
        Adjacency {
            first,
            heads,
            costs,
        }
    }

    #[inline]
    fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, CostVec)> + '_ {
        let lo = self.first[v.index()] as usize;
        let hi = self.first[v.index() + 1] as usize;
        self.heads[lo..hi]
            .iter()
            .copied()
            .zip(self.costs[lo..hi].iter().copied())
    }

    fn degree(&self, v: VertexId) -> usize {
        (self.first[v.index() + 1] - self.first[v.index()]) as usize
    }
}

/// Directed graph with two costs per edge. Immutable once built, so it can be
/// shared freely between concurrent queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiGraph {
    vertex_count: usize,
    forward: Adjacency,
    reverse: Adjacency,
}

impl BiGraph {
    /// Builds a graph from bi-cost edges. Edges are put in canonical order
    /// (source, target, input order); parallel edges and self-loops are kept.
    pub fn from_edges(vertex_count: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if vertex_count > u32::MAX as usize || edges.len() > u32::MAX as usize {
            return Err(Error::Generation(format!(
                "graph too large: {vertex_count} vertices, {} edges",
                edges.len()
            )));
        }
        for &(u, v, _) in &edges {
            for id in [u, v] {
                if id.index() >= vertex_count {
                    return Err(Error::InvalidVertex {
                        id: id.index(),
                        n: vertex_count,
                    });
                }
            }
        }
        edges.sort_by_key(|&(u, v, _)| (u, v));
        let forward = Adjacency::build(vertex_count, &edges, |&(u, v, _)| (u, v));
        let reverse = Adjacency::build(vertex_count, &edges, |&(u, v, _)| (v, u));
        Ok(BiGraph {
            vertex_count,
            forward,
            reverse,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.forward.heads.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count as u32).map(VertexId)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                id: v.index(),
                n: self.vertex_count,
            })
        }
    }

    /// Outgoing edges `(head, cost)` of `v`.
    #[inline]
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = (VertexId, CostVec)> + '_ {
        self.forward.neighbors(v)
    }

    /// Incoming edges of `v`, reported as `(tail, cost)`.
    #[inline]
    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = (VertexId, CostVec)> + '_ {
        self.reverse.neighbors(v)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.forward.degree(v)
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.reverse.degree(v)
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices()
            .flat_map(move |u| self.out_edges(u).map(move |(v, c)| (u, v, c)))
    }

    /// The transposed graph, rebuilt from flipped edges.
    pub fn reversed(&self) -> BiGraph {
        let flipped = self.edges().map(|(u, v, c)| (v, u, c)).collect();
        BiGraph::from_edges(self.vertex_count, flipped)
            .expect("transpose of a valid graph is valid")
    }

    /// Splits the graph back into the two single-weight arc lists it was
    /// built from (canonical order).
    pub fn to_arc_lists(&self) -> (Vec<Arc>, Vec<Arc>) {
        self.edges()
            .map(|(u, v, c)| ((u, v, c.c1), (u, v, c.c2)))
            .unzip()
    }

    /// SHA-256 over the vertex count and the canonical edge list, hex encoded.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.vertex_count as u64).to_le_bytes());
        for (u, v, c) in self.edges() {
            hasher.update(u.0.to_le_bytes());
            hasher.update(v.0.to_le_bytes());
            hasher.update(c.c1.to_le_bytes());
            hasher.update(c.c2.to_le_bytes());
        }
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

/// Pairs a distance arc list with a time arc list over the same arcs.
///
/// Both lists are stably sorted by (source, target) and zipped positionally:
/// arc `k` of the result carries `(w1_k, w2_k)`.
pub fn build_bigraph(n: usize, arcs1: &[Arc], arcs2: &[Arc]) -> Result<BiGraph> {
    let mut a1 = arcs1.to_vec();
    let mut a2 = arcs2.to_vec();
    a1.sort_by_key(|&(u, v, _)| (u, v));
    a2.sort_by_key(|&(u, v, _)| (u, v));

    let mut edges = Vec::with_capacity(a1.len());
    for (index, (x, y)) in a1.iter().zip(a2.iter()).enumerate() {
        if (x.0, x.1) != (y.0, y.1) {
            return Err(Error::Consistency {
                index,
                msg: format!(
                    "first file has arc {}->{}, second file has arc {}->{} (1-based)",
                    x.0 .0 + 1,
                    x.1 .0 + 1,
                    y.0 .0 + 1,
                    y.1 .0 + 1
                ),
            });
        }
        edges.push((x.0, x.1, CostVec::new(x.2, y.2)));
    }
    if a1.len() != a2.len() {
        let index = a1.len().min(a2.len());
        let (which, arc) = if a1.len() > a2.len() {
            ("first", a1[index])
        } else {
            ("second", a2[index])
        };
        return Err(Error::Consistency {
            index,
            msg: format!(
                "arc counts differ ({} vs {}); unmatched arc {}->{} in {which} file (1-based)",
                a1.len(),
                a2.len(),
                arc.0 .0 + 1,
                arc.1 .0 + 1
            ),
        });
    }
    BiGraph::from_edges(n, edges)
}

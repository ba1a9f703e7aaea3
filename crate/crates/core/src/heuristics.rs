//! Exact per-criterion cost-to-goal tables.
//!
//! Each table is a single-criterion Dijkstra run from the goal over the
//! reverse edges, so `h_i(u)` is the true minimum `c_i` cost from `u` to the
//! goal. Exact distances are consistent, which BOA*'s constant-time
//! dominance test relies on.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use crate::graph::{BiGraph, CostVec, VertexId};
use crate::{Error, Result};

/// Sentinel for vertices that cannot reach the goal. Compares greater than
/// every finite cost.
pub const UNREACHABLE: u64 = u64::MAX;

/// Graphs with at least this many vertices run the two Dijkstra passes on
/// separate threads.
const PARALLEL_THRESHOLD: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeuristicTable {
    goal: VertexId,
    h1: Vec<u64>,
    h2: Vec<u64>,
}

impl HeuristicTable {
    pub fn goal(&self) -> VertexId {
        self.goal
    }

    pub fn len(&self) -> usize {
        self.h1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h1.is_empty()
    }

    /// `(h1, h2)` at `v`, or `None` if `v` cannot reach the goal.
    #[inline]
    pub fn get(&self, v: VertexId) -> Option<CostVec> {
        let (a, b) = (self.h1[v.index()], self.h2[v.index()]);
        if a == UNREACHABLE || b == UNREACHABLE {
            None
        } else {
            Some(CostVec::new(a, b))
        }
    }

    pub fn h1(&self, v: VertexId) -> u64 {
        self.h1[v.index()]
    }

    pub fn h2(&self, v: VertexId) -> u64 {
        self.h2[v.index()]
    }

    pub fn reaches_goal(&self, v: VertexId) -> bool {
        self.h1[v.index()] != UNREACHABLE
    }
}

pub fn compute_heuristics(g: &BiGraph, goal: VertexId) -> Result<HeuristicTable> {
    g.check_vertex(goal)?;
    let (h1, h2) = if g.vertex_count() >= PARALLEL_THRESHOLD {
        std::thread::scope(|s| {
            let t = s.spawn(|| backward_dijkstra(g, goal, |c| c.c1));
            let h2 = backward_dijkstra(g, goal, |c| c.c2);
            (t.join().expect("dijkstra worker panicked"), h2)
        })
    } else {
        (
            backward_dijkstra(g, goal, |c| c.c1),
            backward_dijkstra(g, goal, |c| c.c2),
        )
    };
    Ok(HeuristicTable { goal, h1, h2 })
}

fn backward_dijkstra(g: &BiGraph, goal: VertexId, weight: impl Fn(CostVec) -> u64) -> Vec<u64> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[goal.index()] = 0;
    heap.push(Reverse((0u64, goal.0)));
    while let Some(Reverse((d, v))) = heap.pop() {
        let v = VertexId(v);
        if d > dist[v.index()] {
            continue;
        }
        for (u, cost) in g.in_edges(v) {
            let nd = d + weight(cost);
            if nd < dist[u.index()] {
                dist[u.index()] = nd;
                heap.push(Reverse((nd, u.0)));
            }
        }
    }
    dist
}

/// On-disk cache of heuristic tables keyed by graph content hash and goal.
///
/// File layout (little endian): magic `BCHT`, version `u32`, goal `u32`,
/// vertex count `u64`, then `h1` and `h2` as `u64` arrays.
#[derive(Clone, Debug)]
pub struct HeuristicCache {
    dir: PathBuf,
    graph_hash: String,
}

const CACHE_MAGIC: &[u8; 4] = b"BCHT";
const CACHE_VERSION: u32 = 1;

impl HeuristicCache {
    pub fn new(dir: impl Into<PathBuf>, g: &BiGraph) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(HeuristicCache {
            dir,
            graph_hash: g.content_hash(),
        })
    }

    fn path_for(&self, goal: VertexId) -> PathBuf {
        self.dir
            .join(format!("{}-{}.bcht", &self.graph_hash[..16], goal.0))
    }

    /// Returns the cached table, computing and storing it on a miss.
    /// The boolean is `true` on a cache hit.
    pub fn get_or_compute(&self, g: &BiGraph, goal: VertexId) -> Result<(HeuristicTable, bool)> {
        let path = self.path_for(goal);
        if path.exists() {
            if let Ok(table) = read_table(&path, goal, g.vertex_count()) {
                return Ok((table, true));
            }
        }
        let table = compute_heuristics(g, goal)?;
        write_table(&path, &table)?;
        Ok((table, false))
    }
}

fn write_table(path: &Path, t: &HeuristicTable) -> Result<()> {
    let mut buf = Vec::with_capacity(20 + 16 * t.len());
    buf.extend_from_slice(CACHE_MAGIC);
    buf.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    buf.extend_from_slice(&t.goal.0.to_le_bytes());
    buf.extend_from_slice(&(t.len() as u64).to_le_bytes());
    for x in t.h1.iter().chain(&t.h2) {
        buf.extend_from_slice(&x.to_le_bytes());
    }
    // written to a temp file, then renamed into place
    let tmp = path.with_extension("tmp");
    fs::File::create(&tmp)?.write_all(&buf)?;
    fs::rename(tmp, path)?;
    Ok(())
}

fn read_table(path: &Path, goal: VertexId, n: usize) -> Result<HeuristicTable> {
    let mut bytes = Vec::new();
    fs::File::open(path)?.read_to_end(&mut bytes)?;
    let bad = |msg: &str| Error::Cache(format!("{}: {msg}", path.display()));
    if bytes.len() != 20 + 16 * n || &bytes[..4] != CACHE_MAGIC {
        return Err(bad("size or magic mismatch"));
    }
    let word = |i: usize| u32::from_le_bytes(bytes[i..i + 4].try_into().unwrap());
    if word(4) != CACHE_VERSION || word(8) != goal.0 {
        return Err(bad("version or goal mismatch"));
    }
    if u64::from_le_bytes(bytes[12..20].try_into().unwrap()) != n as u64 {
        return Err(bad("vertex count mismatch"));
    }
    let values: Vec<u64> = bytes[20..]
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    let (h1, h2) = values.split_at(n);
    Ok(HeuristicTable {
        goal,
        h1: h1.to_vec(),
        h2: h2.to_vec(),
    })
}

//! Immutable simple-graph value type and the primitive operations everything
//! else builds on.
//!
//! Vertices are dense identifiers `0..n`. Adjacency is kept as one bitset row
//! per vertex, so adjacency queries are O(1) and neighbourhood intersections
//! are word-parallel. Graphs are immutable after construction: operations
//! return new graphs (plus relabeling maps where identifiers change), so
//! witnesses extracted from a graph stay valid against it.

use crate::error::{Error, Result};

/// Hard ceiling on vertex count. Oracles are adjacency-query-bound and the
/// bit-matrix representation is sized for desk-scale work.
pub const MAX_VERTICES: usize = 4096;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A simple undirected graph without loops or multiple edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    // row-major bit matrix, `words` words per vertex
    adj: Vec<u64>,
    // sorted, deduplicated (u < v) pairs; fixed at construction
    edges: Vec<(usize, usize)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either order)
    /// collapse silently; loops are rejected rather than dropped so corrupt
    /// inputs surface.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::malformed(format!(
                "vertex count {n} exceeds the ceiling {MAX_VERTICES}"
            )));
        }
        let words = words_for(n);
        let mut adj = vec![0u64; n * words];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::malformed(format!(
                    "edge ({u},{v}) has an endpoint out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::malformed(format!("loop at vertex {u} is not allowed")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adj[a * words + b / WORD_BITS] >> (b % WORD_BITS) & 1 == 0 {
                adj[a * words + b / WORD_BITS] |= 1 << (b % WORD_BITS);
                adj[b * words + a / WORD_BITS] |= 1 << (a % WORD_BITS);
                edges.push((a, b));
            }
        }
        edges.sort_unstable();
        Ok(Graph { n, words, adj, edges })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edge_list(n, &[]).expect("empty graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The adjacency row of `v` as bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.row(v).iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Induced subgraph on `s` plus the relabeling map: entry `i` of the map
    /// is the host identifier of new vertex `i`. The relabeling is
    /// order-preserving on identifiers.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep: Vec<usize> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::malformed(format!(
                "vertex {bad} out of range for n={}",
                self.n
            )));
        }
        let mut pairs = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    pairs.push((i, j));
                }
            }
        }
        Ok((Graph::from_edge_list(keep.len(), &pairs)?, keep))
    }

    /// Contracts the nonempty set `u` into a single new vertex. Surviving
    /// vertices keep their relative order and are reindexed densely; the new
    /// vertex gets the last identifier. The new vertex is adjacent to exactly
    /// the outside vertices that had a neighbour in `u`.
    #[allow(clippy::needless_range_loop)]
    pub fn contract(&self, u: &[usize]) -> Result<Graph> {
        let mut inside: Vec<usize> = u.to_vec();
        inside.sort_unstable();
        inside.dedup();
        if inside.is_empty() {
            return Err(Error::malformed("cannot contract an empty vertex set"));
        }
        if let Some(&bad) = inside.iter().find(|&&v| v >= self.n) {
            return Err(Error::malformed(format!(
                "vertex {bad} out of range for n={}",
                self.n
            )));
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if inside.binary_search(&v).is_err() {
                relabel[v] = next;
                next += 1;
            }
        }
        let new_vertex = next;
        let mut pairs = Vec::new();
        for &(a, b) in &self.edges {
            let ia = inside.binary_search(&a).is_ok();
            let ib = inside.binary_search(&b).is_ok();
            match (ia, ib) {
                (true, true) => {}
                (true, false) => pairs.push((new_vertex, relabel[b])),
                (false, true) => pairs.push((relabel[a], new_vertex)),
                (false, false) => pairs.push((relabel[a], relabel[b])),
            }
        }
        Graph::from_edge_list(new_vertex + 1, &pairs)
    }

    /// Explains why `p` is not a chordless path in this graph, or `None` if
    /// it is one. Consecutive items must be adjacent, non-consecutive ones
    /// non-adjacent, and the items distinct and in range.
    pub fn chordless_path_violation(&self, p: &[usize]) -> Option<String> {
        if p.is_empty() {
            return Some("empty sequence".to_string());
        }
        for &v in p {
            if v >= self.n {
                return Some(format!("vertex {v} out of range for n={}", self.n));
            }
        }
        for (i, &v) in p.iter().enumerate() {
            for (j, &w) in p.iter().enumerate().skip(i + 1) {
                if v == w {
                    return Some(format!("vertex {v} repeats at positions {i} and {j}"));
                }
                let adjacent = self.has_edge(v, w);
                if j == i + 1 && !adjacent {
                    return Some(format!("consecutive vertices {v} and {w} are not adjacent"));
                }
                if j > i + 1 && adjacent {
                    return Some(format!("chord ({v},{w})"));
                }
            }
        }
        None
    }

    /// True iff `p` is a chordless path: consecutive items adjacent,
    /// non-consecutive items non-adjacent.
    pub fn is_chordless_path(&self, p: &[usize]) -> bool {
        self.chordless_path_violation(p).is_none()
    }

    /// True iff the whole graph is connected (vacuously true for n <= 1).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Number of independent cycles, `m - n + c`. Minor-monotone, so it is a
    /// cheap pruning bound for minor searches.
    pub fn circuit_rank(&self) -> usize {
        let mut comp = vec![usize::MAX; self.n];
        let mut components = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            comp[start] = components;
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = components;
                        stack.push(w);
                    }
                }
            }
        }
        self.edges.len() + components - self.n
    }
}

// ============================================================================
// Stock constructions used across tests, examples and the generator CLI.
// ============================================================================

/// Chordless path on `n` vertices, `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &pairs).expect("path construction")
}

/// Chordless cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    pairs.push((n - 1, 0));
    Graph::from_edge_list(n, &pairs).expect("cycle construction")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    Graph::from_edge_list(n, &pairs).expect("complete construction")
}

/// Complete bipartite graph; side A is `0..a`, side B is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..a {
        for j in 0..b {
            pairs.push((i, a + j));
        }
    }
    Graph::from_edge_list(a + b, &pairs).expect("biclique construction")
}

/// The k x k grid; vertex (row, col) has identifier `row * k + col`.
pub fn grid(k: usize) -> Graph {
    let mut pairs = Vec::new();
    for r in 0..k {
        for c in 0..k {
            if c + 1 < k {
                pairs.push((r * k + c, r * k + c + 1));
            }
            if r + 1 < k {
                pairs.push((r * k + c, (r + 1) * k + c));
            }
        }
    }
    Graph::from_edge_list(k * k, &pairs).expect("grid construction")
}

//! Immutable simple undirected graphs with bitset adjacency rows, seeded
//! G(n,p) sampling, and the plain-text edge-list interchange format.
//!
//! The edge-list format is one header line `n m`, followed by `m` lines
//! `u v` with `0 <= u < v < n`, UTF-8, LF line endings.

use crate::bitset::VertexSet;
use crate::rng::SplitMix64;
use std::fmt;

/// Parameters of the binomial random graph G(n,p).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GnpParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Invariants: the adjacency rows are symmetric and irreflexive; they are
/// checked at construction and preserved by every operation that produces
/// a new graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// The first line is not `n m` with two decimal integers.
    BadHeader(String),
    /// An edge line is not `u v` with `u < v`.
    BadEdgeLine {
        line: usize,
        content: String,
    },
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        line: usize,
        vertex: usize,
    },
    DuplicateEdge {
        line: usize,
        u: usize,
        v: usize,
    },
    /// Fewer or more edge lines than the header promised.
    WrongEdgeCount {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::BadHeader(s) => write!(f, "malformed header line: {s:?}"),
            GraphError::BadEdgeLine { line, content } => {
                write!(f, "malformed edge on line {line}: {content:?}")
            }
            GraphError::VertexOutOfRange { line, vertex, n } => {
                write!(f, "vertex {vertex} out of range (n={n}) on line {line}")
            }
            GraphError::SelfLoop { line, vertex } => {
                write!(f, "self-loop at vertex {vertex} on line {line}")
            }
            GraphError::DuplicateEdge { line, u, v } => {
                write!(f, "duplicate edge {u} {v} on line {line}")
            }
            GraphError::WrongEdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(v);
            adj.push(row);
        }
        Graph { n, adj }
    }

    /// Cycle 0-1-...-(n-1)-0.  Requires n >= 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<(usize, usize)> = (0..n)
            .map(|i| {
                let j = (i + 1) % n;
                (i.min(j), i.max(j))
            })
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Builds a graph from undirected edges, rejecting loops, duplicates and
    /// out-of-range endpoints. Edge `(u,v)` may be given in either order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (idx, &(u, v)) in edges.iter().enumerate() {
            let line = idx + 2; // matches the text format's line numbering
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    line,
                    vertex: u.max(v),
                    n,
                });
            }
            if g.adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Edges as ascending `(u,v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement graph (same vertex set, inverted non-loop adjacency).
    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            adj.push(row);
        }
        Graph { n: self.n, adj }
    }

    /// Full vertex set of this graph.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Checks the representation invariants; used by tests.
    pub fn check_invariants(&self) -> bool {
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return false;
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Samples G(n,p): each pair `{u,v}`, `u < v`, becomes an edge independently
/// with probability `p`.
///
/// The pair order is row-major (`(0,1), (0,2), .., (1,2), ..`) and every pair
/// consumes exactly one SplitMix64 draw, so identical parameters produce
/// bit-identical graphs on every platform.
pub fn gnp_sample(params: &GnpParams) -> Graph {
    assert!(
        (0.0..=1.0).contains(&params.p),
        "edge probability must lie in [0,1]"
    );
    let n = params.n;
    let mut rng = SplitMix64::new(params.seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_unit() < params.p {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
    }
    g
}

/// Induced subgraph on `s`, relabeled to `0..|s|` in ascending original
/// order. Returns the new graph and the map from new labels back to the
/// original vertex ids.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
    if s.capacity() != g.n() {
        if let Some(v) = s.iter().find(|&v| v >= g.n()) {
            return Err(GraphError::VertexOutOfRange {
                line: 0,
                vertex: v,
                n: g.n(),
            });
        }
    }
    let map: Vec<usize> = s.iter().collect();
    if let Some(&v) = map.last() {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange {
                line: 0,
                vertex: v,
                n: g.n(),
            });
        }
    }
    let k = map.len();
    let mut sub = Graph::empty(k);
    for (i, &u) in map.iter().enumerate() {
        for (j, &v) in map.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                sub.adj[i].insert(j);
                sub.adj[j].insert(i);
            }
        }
    }
    Ok((sub, map))
}

/// True iff no edge of `g` has both endpoints in `s`.
pub fn is_independent_set(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint_from(s))
}

/// True iff `a`, `b` are disjoint and nonempty, every `a x b` pair is an
/// edge, and no edge lies inside `a` or inside `b` (so the subgraph induced
/// on `a ∪ b` is exactly the complete bipartite graph with classes `a`, `b`).
pub fn is_induced_complete_bipartite(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    if a.is_empty() || b.is_empty() || !a.is_disjoint_from(b) {
        return false;
    }
    for u in a.iter() {
        let row = g.neighbors(u);
        if !b.is_subset_of(row) || !row.is_disjoint_from(a) {
            return false;
        }
    }
    for v in b.iter() {
        if !g.neighbors(v).is_disjoint_from(b) {
            return false;
        }
    }
    true
}

/// Parses the edge-list text format.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| GraphError::BadHeader(String::new()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::BadHeader(header.to_string()))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::BadHeader(header.to_string()))?;
    if parts.next().is_some() {
        return Err(GraphError::BadHeader(header.to_string()));
    }

    let mut g = Graph::empty(n);
    let mut found = 0usize;
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        if found == m {
            return Err(GraphError::WrongEdgeCount {
                expected: m,
                found: found + 1,
            });
        }
        let mut it = raw.split_whitespace();
        let (u, v) = match (
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(GraphError::BadEdgeLine {
                    line,
                    content: raw.to_string(),
                })
            }
        };
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if u > v {
            return Err(GraphError::BadEdgeLine {
                line,
                content: raw.to_string(),
            });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { line, vertex: v, n });
        }
        if g.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        found += 1;
    }
    if found != m {
        return Err(GraphError::WrongEdgeCount { expected: m, found });
    }
    Ok(g)
}

/// Serializes to the edge-list text format (ascending edge order, LF
/// endings). `parse_graph(serialize_graph(g)) == g` for every graph.
pub fn serialize_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(16 + edges.len() * 8);
    out.push_str(&format!("{} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

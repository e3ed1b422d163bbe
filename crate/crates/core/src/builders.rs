//! Constructive decompositions: the star sweep behind tau <= n - alpha,
//! its variant keeping one maximum induced biclique whole
//! (tau <= n - beta + 1), the sparse-cover certificate, and the
//! nearly-equal block splitter.
//!
//! All builders sweep vertices in ascending id order and assign every edge
//! to the star of its earlier-processed endpoint, so certificates are
//! deterministic.

use crate::bitset::VertexSet;
use crate::blocks::{BipartiteBlock, Decomposition, DecompositionKind, SparseCover};
use crate::graph::{is_independent_set, is_induced_complete_bipartite, Graph};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuilderError {
    /// star_decomposition received a set with an internal edge.
    NotIndependent,
    /// beta_decomposition received classes that are not induced complete
    /// bipartite in the host.
    NotInducedBlock,
    /// cover_decomposition received an invalid sparse cover.
    InvalidCover(String),
    /// split_block with max_edges < 4 can never terminate.
    MaxEdgesTooSmall { max_edges: usize },
    /// A block cannot be split without creating a singleton class.
    Unsplittable {
        a: usize,
        b: usize,
        max_edges: usize,
    },
    /// split_block requires a nontrivial input block.
    TrivialInput,
}

impl fmt::Display for BuilderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuilderError::NotIndependent => write!(f, "vertex set is not independent"),
            BuilderError::NotInducedBlock => {
                write!(f, "classes are not an induced complete bipartite subgraph")
            }
            BuilderError::InvalidCover(s) => write!(f, "invalid sparse cover: {s}"),
            BuilderError::MaxEdgesTooSmall { max_edges } => {
                write!(
                    f,
                    "max_edges = {max_edges} below the minimum nontrivial block size 4"
                )
            }
            BuilderError::Unsplittable { a, b, max_edges } => write!(
                f,
                "block {a}x{b} exceeds {max_edges} edges but cannot split without a singleton class"
            ),
            BuilderError::TrivialInput => write!(f, "input block must be nontrivial"),
        }
    }
}

impl std::error::Error for BuilderError {}

/// Sweeps the vertices outside `keep` in ascending order; the star at v
/// covers v's edges to not-yet-processed outside vertices and to `keep`.
/// Empty stars are dropped.
fn star_sweep(g: &Graph, keep: &VertexSet) -> Vec<BipartiteBlock> {
    let n = g.n();
    let mut blocks = Vec::new();
    let mut unprocessed = keep.complement();
    let outside: Vec<usize> = unprocessed.iter().collect();
    for v in outside {
        unprocessed.remove(v);
        let mut targets = unprocessed.union(keep);
        targets.intersect_with(g.neighbors(v));
        if !targets.is_empty() {
            blocks.push(BipartiteBlock::new(VertexSet::singleton(n, v), targets));
        }
    }
    blocks
}

/// Partitions E(g) into at most n - |ind| stars centered outside the
/// independent set `ind`.
pub fn star_decomposition(g: &Graph, ind: &VertexSet) -> Result<Decomposition, BuilderError> {
    if !is_independent_set(g, ind) {
        return Err(BuilderError::NotIndependent);
    }
    Ok(Decomposition::new(
        star_sweep(g, ind),
        DecompositionKind::Any,
    ))
}

/// Partitions E(g) into at most n - (|a|+|b|) + 1 blocks: stars outside the
/// induced complete bipartite subgraph `h`, plus `h` itself.
pub fn beta_decomposition(g: &Graph, h: &BipartiteBlock) -> Result<Decomposition, BuilderError> {
    if !is_induced_complete_bipartite(g, &h.a, &h.b) {
        return Err(BuilderError::NotInducedBlock);
    }
    let hverts = h.vertices();
    let mut blocks = star_sweep(g, &hverts);
    blocks.push(h.clone());
    Ok(Decomposition::new(blocks, DecompositionKind::Any))
}

/// Certificate for the sparse regime: stars at the vertices outside the
/// cover plus one block per 4-cycle. With a maximum cover this yields
/// exactly n - gamma blocks.
pub fn cover_decomposition(g: &Graph, cover: &SparseCover) -> Result<Decomposition, BuilderError> {
    cover
        .validate(g)
        .map_err(|e| BuilderError::InvalidCover(e.to_string()))?;
    let hverts = cover.vertices();
    let mut blocks = star_sweep(g, &hverts);
    for cyc in &cover.cycles {
        blocks.push(four_cycle_block(g, cyc));
    }
    Ok(Decomposition::new(blocks, DecompositionKind::Any))
}

/// The K_{2,2} block of an induced 4-cycle: class a is the smallest vertex
/// with its diagonal (non-neighbor), class b the other two.
fn four_cycle_block(g: &Graph, cyc: &VertexSet) -> BipartiteBlock {
    let vs: Vec<usize> = cyc.iter().collect();
    debug_assert_eq!(vs.len(), 4);
    let u = vs[0];
    let partner = vs[1..]
        .iter()
        .copied()
        .find(|&w| !g.has_edge(u, w))
        .expect("an induced 4-cycle has a diagonal");
    let n = cyc.capacity();
    let a = VertexSet::from_iter(n, [u, partner]);
    let b = cyc.difference(&a);
    BipartiteBlock::new(a, b)
}

/// Splits `blk` into nontrivial blocks of at most `max_edges` edges each by
/// repeatedly halving the larger class (ties to class a; a class splits
/// into its lower ceil(s/2) ids and the rest).
pub fn split_block(
    blk: &BipartiteBlock,
    max_edges: usize,
) -> Result<Vec<BipartiteBlock>, BuilderError> {
    if max_edges < 4 {
        return Err(BuilderError::MaxEdgesTooSmall { max_edges });
    }
    if !blk.is_nontrivial() {
        return Err(BuilderError::TrivialInput);
    }
    let mut queue = vec![blk.clone()];
    let mut done = Vec::new();
    while let Some(b) = queue.pop() {
        if b.edge_count() <= max_edges {
            done.push(b);
            continue;
        }
        let (larger, smaller, larger_is_a) = if b.a.len() >= b.b.len() {
            (&b.a, &b.b, true)
        } else {
            (&b.b, &b.a, false)
        };
        if larger.len() == 3 {
            // 3 splits only as 2 + 1, which would create a star
            return Err(BuilderError::Unsplittable {
                a: b.a.len(),
                b: b.b.len(),
                max_edges,
            });
        }
        debug_assert!(larger.len() >= 4);
        let ids: Vec<usize> = larger.iter().collect();
        let half = ids.len().div_ceil(2);
        let n = larger.capacity();
        let lo = VertexSet::from_iter(n, ids[..half].iter().copied());
        let hi = VertexSet::from_iter(n, ids[half..].iter().copied());
        for part in [lo, hi] {
            let nb = if larger_is_a {
                BipartiteBlock::new(part, smaller.clone())
            } else {
                BipartiteBlock::new(smaller.clone(), part)
            };
            queue.push(nb);
        }
    }
    // deterministic output order: by ascending class-a then class-b ids
    done.sort_by_key(|b| (b.a.to_vec(), b.b.to_vec()));
    Ok(done)
}

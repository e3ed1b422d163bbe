//! Complete-bipartite blocks, decomposition certificates, and sparse covers.
//!
//! Certificate text format (stable, used by golden tests):
//!   one line per block   `BLOCK a=<ids> b=<ids>`
//!   sparse cover         `COVER isolated=<ids> c4=<ids;ids;...>`
//! where `<ids>` is an ascending comma-separated vertex list.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::fmt;

/// A complete bipartite subgraph given by its two disjoint vertex classes.
/// The block covers exactly the `a x b` edges of the host graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteBlock {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl BipartiteBlock {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        BipartiteBlock { a, b }
    }

    pub fn edge_count(&self) -> usize {
        self.a.len() * self.b.len()
    }

    /// A star has a single vertex in one of its classes.
    pub fn is_star(&self) -> bool {
        self.a.len().min(self.b.len()) == 1
    }

    /// Nontrivial means both classes have at least two vertices.
    pub fn is_nontrivial(&self) -> bool {
        self.a.len().min(self.b.len()) >= 2
    }

    /// All `a x b` pairs are edges of `g` (the subgraph need not be induced).
    pub fn is_complete_in(&self, g: &Graph) -> bool {
        if self.a.is_empty() || self.b.is_empty() || !self.a.is_disjoint_from(&self.b) {
            return false;
        }
        self.a.iter().all(|u| self.b.is_subset_of(g.neighbors(u)))
    }

    pub fn vertices(&self) -> VertexSet {
        self.a.union(&self.b)
    }

    /// Ascending `(u,v)` pairs covered by this block.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.a.iter() {
            for v in self.b.iter() {
                out.push((u.min(v), u.max(v)));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_line(&self) -> String {
        format!(
            "BLOCK a={} b={}",
            self.a.to_id_string(),
            self.b.to_id_string()
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecompositionKind {
    Any,
    NontrivialOnly,
}

/// A list of pairwise edge-disjoint blocks; with `kind = NontrivialOnly`
/// every block must additionally be nontrivial. When used as a certificate
/// the blocks' edges partition the host graph's edge set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub blocks: Vec<BipartiteBlock>,
    pub kind: DecompositionKind,
}

impl Decomposition {
    pub fn new(blocks: Vec<BipartiteBlock>, kind: DecompositionKind) -> Self {
        Decomposition { blocks, kind }
    }

    pub fn empty(kind: DecompositionKind) -> Self {
        Decomposition {
            blocks: Vec::new(),
            kind,
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// One `BLOCK` line per block, LF endings.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for b in &self.blocks {
            s.push_str(&b.to_line());
            s.push('\n');
        }
        s
    }
}

/// First violation found when validating a decomposition against its host.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    EmptyClass { block: usize },
    ClassesOverlap { block: usize },
    MissingEdge { block: usize, u: usize, v: usize },
    Trivial { block: usize },
    EdgeCoveredTwice { u: usize, v: usize },
    EdgeUncovered { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyClass { block } => write!(f, "block {block} has an empty class"),
            Violation::ClassesOverlap { block } => write!(f, "block {block} classes overlap"),
            Violation::MissingEdge { block, u, v } => {
                write!(f, "block {block} uses non-edge {u}-{v}")
            }
            Violation::Trivial { block } => {
                write!(
                    f,
                    "block {block} is a star in a nontrivial-only decomposition"
                )
            }
            Violation::EdgeCoveredTwice { u, v } => write!(f, "edge {u}-{v} covered twice"),
            Violation::EdgeUncovered { u, v } => write!(f, "edge {u}-{v} uncovered"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub passed: bool,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    fn pass() -> Self {
        ValidationReport {
            passed: true,
            violation: None,
        }
    }
    fn fail(v: Violation) -> Self {
        ValidationReport {
            passed: false,
            violation: Some(v),
        }
    }
}

/// Verifies that `d` is a valid biclique partition of the edges of `g`:
/// every block complete in `g` with disjoint nonempty classes, blocks
/// pairwise edge-disjoint, every edge of `g` covered, and (for
/// `NontrivialOnly`) no stars. Reports the first violation found.
pub fn validate_decomposition(g: &Graph, d: &Decomposition) -> ValidationReport {
    let n = g.n();
    let mut covered = vec![VertexSet::new(n); n];
    for (idx, blk) in d.blocks.iter().enumerate() {
        if blk.a.is_empty() || blk.b.is_empty() {
            return ValidationReport::fail(Violation::EmptyClass { block: idx });
        }
        if !blk.a.is_disjoint_from(&blk.b) {
            return ValidationReport::fail(Violation::ClassesOverlap { block: idx });
        }
        if d.kind == DecompositionKind::NontrivialOnly && !blk.is_nontrivial() {
            return ValidationReport::fail(Violation::Trivial { block: idx });
        }
        for u in blk.a.iter() {
            for v in blk.b.iter() {
                if !g.has_edge(u, v) {
                    return ValidationReport::fail(Violation::MissingEdge { block: idx, u, v });
                }
                if covered[u].contains(v) {
                    return ValidationReport::fail(Violation::EdgeCoveredTwice {
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
                covered[u].insert(v);
                covered[v].insert(u);
            }
        }
    }
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            if v > u && !covered[u].contains(v) {
                return ValidationReport::fail(Violation::EdgeUncovered { u, v });
            }
        }
    }
    ValidationReport::pass()
}

/// An induced subgraph of the host whose components are isolated vertices
/// and 4-cycles; certifies a value of gamma = |isolated| + 3 * #cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseCover {
    pub isolated: VertexSet,
    pub cycles: Vec<VertexSet>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoverViolation {
    PiecesShareVertex,
    EdgeBetweenPieces { u: usize, v: usize },
    NotAFourCycle { cycle: usize },
    IsolatedHasNeighborInCover { vertex: usize },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::PiecesShareVertex => write!(f, "two pieces share a vertex"),
            CoverViolation::EdgeBetweenPieces { u, v } => {
                write!(f, "edge {u}-{v} joins two distinct pieces")
            }
            CoverViolation::NotAFourCycle { cycle } => {
                write!(f, "piece {cycle} does not induce a 4-cycle")
            }
            CoverViolation::IsolatedHasNeighborInCover { vertex } => {
                write!(f, "isolated piece {vertex} has a neighbor inside the cover")
            }
        }
    }
}

impl SparseCover {
    pub fn empty(n: usize) -> Self {
        SparseCover {
            isolated: VertexSet::new(n),
            cycles: Vec::new(),
        }
    }

    pub fn gamma(&self) -> usize {
        self.isolated.len() + 3 * self.cycles.len()
    }

    /// All vertices used by the cover.
    pub fn vertices(&self) -> VertexSet {
        let mut s = self.isolated.clone();
        for c in &self.cycles {
            s.union_with(c);
        }
        s
    }

    /// Checks every invariant against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<(), CoverViolation> {
        let mut seen = VertexSet::new(g.n());
        let mut pieces: Vec<VertexSet> = Vec::new();
        for v in self.isolated.iter() {
            pieces.push(VertexSet::singleton(g.n(), v));
        }
        pieces.extend(self.cycles.iter().cloned());
        for p in &pieces {
            if !seen.is_disjoint_from(p) {
                return Err(CoverViolation::PiecesShareVertex);
            }
            seen.union_with(p);
        }
        for (ci, c) in self.cycles.iter().enumerate() {
            if !induces_four_cycle(g, c) {
                return Err(CoverViolation::NotAFourCycle { cycle: ci });
            }
        }
        // no edge joins two distinct pieces
        for (i, p) in pieces.iter().enumerate() {
            for u in p.iter() {
                for v in g.neighbors(u).iter() {
                    if seen.contains(v) && !p.contains(v) {
                        let _ = i;
                        return Err(CoverViolation::EdgeBetweenPieces {
                            u: u.min(v),
                            v: u.max(v),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `COVER isolated=<ids> c4=<ids;ids;...>`, cycles ordered by smallest
    /// member.
    pub fn to_line(&self) -> String {
        let mut cycles = self.cycles.clone();
        cycles.sort_by_key(|c| c.first().unwrap_or(usize::MAX));
        let cycle_part: Vec<String> = cycles.iter().map(|c| c.to_id_string()).collect();
        format!(
            "COVER isolated={} c4={}",
            self.isolated.to_id_string(),
            cycle_part.join(";")
        )
    }
}

/// True iff `s` has exactly four vertices inducing a chordless 4-cycle.
pub fn induces_four_cycle(g: &Graph, s: &VertexSet) -> bool {
    if s.len() != 4 {
        return false;
    }
    let vs: Vec<usize> = s.iter().collect();
    let mut degs = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if g.has_edge(vs[i], vs[j]) {
                degs[i] += 1;
                degs[j] += 1;
                edges += 1;
            }
        }
    }
    edges == 4 && degs.iter().all(|&d| d == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn vs(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, ids.iter().copied())
    }

    #[test]
    fn c4_is_its_own_certificate() {
        let c4 = Graph::cycle(4);
        let d = Decomposition::new(
            vec![BipartiteBlock::new(vs(4, &[0, 2]), vs(4, &[1, 3]))],
            DecompositionKind::NontrivialOnly,
        );
        assert!(validate_decomposition(&c4, &d).passed);
        assert_eq!(d.to_text(), "BLOCK a=0,2 b=1,3\n");
    }

    #[test]
    fn violations_are_detected() {
        let k3 = Graph::complete(3);
        let partial = Decomposition::new(
            vec![BipartiteBlock::new(vs(3, &[0]), vs(3, &[1, 2]))],
            DecompositionKind::Any,
        );
        let rep = validate_decomposition(&k3, &partial);
        assert!(!rep.passed);
        assert_eq!(rep.violation, Some(Violation::EdgeUncovered { u: 1, v: 2 }));

        let overlapping = Decomposition::new(
            vec![
                BipartiteBlock::new(vs(3, &[0]), vs(3, &[1, 2])),
                BipartiteBlock::new(vs(3, &[1]), vs(3, &[0, 2])),
            ],
            DecompositionKind::Any,
        );
        let rep = validate_decomposition(&k3, &overlapping);
        assert_eq!(
            rep.violation,
            Some(Violation::EdgeCoveredTwice { u: 0, v: 1 })
        );

        let c4 = Graph::cycle(4);
        let bogus = Decomposition::new(
            vec![BipartiteBlock::new(vs(4, &[0]), vs(4, &[2]))],
            DecompositionKind::Any,
        );
        let rep = validate_decomposition(&c4, &bogus);
        assert_eq!(
            rep.violation,
            Some(Violation::MissingEdge {
                block: 0,
                u: 0,
                v: 2
            })
        );
    }

    #[test]
    fn sparse_cover_validation_and_format() {
        // C4 on 0..4 plus isolated vertex 4
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let cover = SparseCover {
            isolated: vs(5, &[4]),
            cycles: vec![vs(5, &[0, 1, 2, 3])],
        };
        assert!(cover.validate(&g).is_ok());
        assert_eq!(cover.gamma(), 4);
        assert_eq!(cover.to_line(), "COVER isolated=4 c4=0,1,2,3");

        // K4 does not induce a 4-cycle
        let k4 = Graph::complete(4);
        let cover = SparseCover {
            isolated: VertexSet::new(4),
            cycles: vec![vs(4, &[0, 1, 2, 3])],
        };
        assert!(matches!(
            cover.validate(&k4),
            Err(CoverViolation::NotAFourCycle { .. })
        ));
    }
}

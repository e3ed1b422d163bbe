//! Exact maximum induced complete bipartite subgraph.
//!
//! beta(g) is the largest |a| + |b| over pairs of disjoint nonempty classes
//! such that the subgraph induced on a ∪ b is exactly the complete
//! bipartite graph between them. The search grows both classes at once.
//! A vertex is a candidate for class a while it is adjacent to everything
//! in b and to nothing in a (and symmetrically for b); the remaining
//! candidates bound any extension, giving the prune
//! |a| + |b| + |cand_a ∪ cand_b| <= best.

use crate::bitset::VertexSet;
use crate::blocks::BipartiteBlock;
use crate::graph::Graph;
use crate::search::{Budget, SearchError};

struct BetaSearch<'a> {
    g: &'a Graph,
    best: usize,
    best_block: Option<BipartiteBlock>,
    budget: Budget,
}

impl BetaSearch<'_> {
    fn expand(
        &mut self,
        a: &VertexSet,
        b: &VertexSet,
        cand_a: &VertexSet,
        cand_b: &VertexSet,
    ) -> Result<(), SearchError> {
        if !self.budget.step() {
            return Err(SearchError::BudgetExceeded {
                lower_bound: self.best as u64,
                upper_bound: None,
            });
        }
        let pool = cand_a.union(cand_b);
        let size = a.len() + b.len();
        if size + pool.len() <= self.best {
            return Ok(());
        }
        let v = match pool.first() {
            None => {
                // leaf: every admissible vertex was placed or discarded
                if !a.is_empty() && !b.is_empty() && size > self.best {
                    self.best = size;
                    self.best_block = Some(BipartiteBlock::new(a.clone(), b.clone()));
                }
                return Ok(());
            }
            Some(v) => v,
        };
        let row = self.g.neighbors(v);
        if cand_a.contains(v) {
            let mut a2 = a.clone();
            a2.insert(v);
            let mut ca = cand_a.clone();
            ca.remove(v);
            ca.difference_with(row); // a stays independent
            let mut cb = cand_b.clone();
            cb.intersect_with(row); // b stays fully adjacent to a
            cb.remove(v);
            self.expand(&a2, b, &ca, &cb)?;
        }
        // placing the very first vertex in b instead of a only mirrors the
        // classes, so skip that symmetric branch
        if cand_b.contains(v) && !(a.is_empty() && b.is_empty()) {
            let mut b2 = b.clone();
            b2.insert(v);
            let mut cb = cand_b.clone();
            cb.remove(v);
            cb.difference_with(row);
            let mut ca = cand_a.clone();
            ca.intersect_with(row);
            ca.remove(v);
            self.expand(a, &b2, &ca, &cb)?;
        }
        let mut ca = cand_a.clone();
        ca.remove(v);
        let mut cb = cand_b.clone();
        cb.remove(v);
        self.expand(a, b, &ca, &cb)
    }
}

/// Exact beta(g) with a witness block, or (0, None) for an edgeless graph.
pub fn beta_budgeted(
    g: &Graph,
    budget: u64,
) -> Result<(usize, Option<BipartiteBlock>), SearchError> {
    let n = g.n();
    if g.edge_count() == 0 {
        return Ok((0, None));
    }
    let mut search = BetaSearch {
        g,
        best: 0,
        best_block: None,
        budget: Budget::new(budget),
    };
    let empty = VertexSet::new(n);
    let full = VertexSet::full(n);
    search.expand(&empty, &empty, &full, &full)?;
    Ok((search.best, search.best_block))
}

pub fn beta(g: &Graph) -> (usize, Option<BipartiteBlock>) {
    beta_budgeted(g, u64::MAX).expect("unlimited search cannot exhaust its budget")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gnp_sample, is_induced_complete_bipartite, GnpParams};

    #[test]
    fn beta_known_values() {
        let (v, w) = beta(&Graph::cycle(4));
        assert_eq!(v, 4);
        let w = w.unwrap();
        assert!(is_induced_complete_bipartite(&Graph::cycle(4), &w.a, &w.b));

        // all three vertices of K3 induce a triangle, so the best is an edge
        assert_eq!(beta(&Graph::complete(3)).0, 2);
        assert_eq!(beta(&Graph::empty(5)), (0, None));
        // star K_{1,4}
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(beta(&star).0, 5);
    }

    /// Oracle: scan all class assignments (each vertex in a, b, or out).
    fn beta_brute(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        let mut assign = vec![0u8; n];
        loop {
            let a = VertexSet::from_iter(n, (0..n).filter(|&v| assign[v] == 1));
            let b = VertexSet::from_iter(n, (0..n).filter(|&v| assign[v] == 2));
            if !a.is_empty() && !b.is_empty() && is_induced_complete_bipartite(g, &a, &b) {
                best = best.max(a.len() + b.len());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return best;
                }
                assign[i] += 1;
                if assign[i] == 3 {
                    assign[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    #[test]
    fn beta_matches_exhaustive_class_scan() {
        for trial in 0..200 {
            let g = gnp_sample(&GnpParams {
                n: 9,
                p: 0.5,
                seed: 9_000 + trial,
            });
            let (v, w) = beta(&g);
            assert_eq!(v, beta_brute(&g), "seed {}", 9_000 + trial);
            if let Some(blk) = w {
                assert!(is_induced_complete_bipartite(&g, &blk.a, &blk.b));
                assert_eq!(blk.a.len() + blk.b.len(), v);
            } else {
                assert_eq!(v, 0);
            }
        }
    }

    #[test]
    fn beta_at_least_two_with_an_edge() {
        for trial in 0..50 {
            let g = gnp_sample(&GnpParams {
                n: 8,
                p: 0.2,
                seed: 100 + trial,
            });
            if g.edge_count() > 0 {
                assert!(beta(&g).0 >= 2);
            }
        }
    }
}

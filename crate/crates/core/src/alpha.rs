//! Exact maximum independent set via branch-and-bound maximum clique on the
//! complement, with greedy-coloring upper bounds for pruning.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::search::{Budget, SearchError};

struct CliqueSearch<'a> {
    adj: &'a [VertexSet],
    best: usize,
    best_set: VertexSet,
    current: Vec<usize>,
    budget: Budget,
}

impl CliqueSearch<'_> {
    /// Greedy coloring of `cand`; returns vertices ordered by ascending
    /// color together with their (1-based) color numbers. A clique inside
    /// `cand` cannot exceed the number of colors, and a vertex of color c
    /// caps any clique built from it and earlier-ordered vertices at c.
    fn color_order(&self, cand: &VertexSet) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(cand.len());
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                order.push((v, color));
                uncolored.remove(v);
                avail.remove(v);
                avail.difference_with(&self.adj[v]);
            }
        }
        order
    }

    fn expand(&mut self, cand: &VertexSet) -> Result<(), SearchError> {
        if !self.budget.step() {
            return Err(SearchError::BudgetExceeded {
                lower_bound: self.best as u64,
                upper_bound: None,
            });
        }
        if cand.is_empty() {
            if self.current.len() > self.best {
                self.best = self.current.len();
                self.best_set = VertexSet::from_iter(self.adj.len(), self.current.iter().copied());
            }
            return Ok(());
        }
        let order = self.color_order(cand);
        let mut cand = cand.clone();
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color <= self.best {
                return Ok(()); // all remaining vertices have color <= this one
            }
            self.current.push(v);
            let next = cand.intersection(&self.adj[v]);
            self.expand(&next)?;
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }
}

/// Exact maximum clique of the graph given by adjacency rows.
pub fn max_clique_budgeted(
    adj: &[VertexSet],
    budget: u64,
) -> Result<(usize, VertexSet), SearchError> {
    let n = adj.len();
    let mut search = CliqueSearch {
        adj,
        best: 0,
        best_set: VertexSet::new(n),
        current: Vec::new(),
        budget: Budget::new(budget),
    };
    search.expand(&VertexSet::full(n))?;
    Ok((search.best, search.best_set))
}

/// Exact alpha(g) with a witness independent set.
pub fn alpha_budgeted(g: &Graph, budget: u64) -> Result<(usize, VertexSet), SearchError> {
    if g.n() == 0 {
        return Ok((0, VertexSet::new(0)));
    }
    let comp = g.complement();
    let rows: Vec<VertexSet> = (0..comp.n()).map(|v| comp.neighbors(v).clone()).collect();
    max_clique_budgeted(&rows, budget)
}

/// Exact alpha(g); panics only if the (effectively unlimited) budget is hit.
pub fn alpha(g: &Graph) -> (usize, VertexSet) {
    alpha_budgeted(g, u64::MAX).expect("unlimited search cannot exhaust its budget")
}

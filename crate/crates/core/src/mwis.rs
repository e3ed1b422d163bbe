//! Exact maximum-weight independent set on small conflict graphs.
//!
//! Isolated vertices and dominant leaves are taken greedily (both
//! reductions preserve some optimum), the rest is branch and bound with
//! the residual-weight bound after splitting into connected components.
//! The sparse-regime conflict graphs are forests plus a few short cycles,
//! so the reductions usually leave nothing to branch on.

use crate::bitset::VertexSet;
use crate::search::{Budget, SearchError};

struct Mwis<'a> {
    adj: &'a [VertexSet],
    weights: &'a [u64],
    best: u64,
    best_set: VertexSet,
    current: Vec<usize>,
    current_weight: u64,
    budget: Budget,
}

impl Mwis<'_> {
    fn expand(&mut self, cand: &VertexSet) -> Result<(), SearchError> {
        if !self.budget.step() {
            return Err(SearchError::BudgetExceeded {
                lower_bound: self.best,
                upper_bound: None,
            });
        }
        let slack: u64 = cand.iter().map(|v| self.weights[v]).sum();
        if self.current_weight + slack <= self.best {
            return Ok(());
        }
        // branch on the heaviest candidate, ties to the lowest id
        let v = cand
            .iter()
            .max_by_key(|&v| (self.weights[v], std::cmp::Reverse(v)))
            .expect("slack > 0 implies a candidate");
        // include v
        let mut with_v = cand.clone();
        with_v.remove(v);
        with_v.difference_with(&self.adj[v]);
        self.current.push(v);
        self.current_weight += self.weights[v];
        if self.current_weight > self.best && with_v.is_empty() {
            self.best = self.current_weight;
            self.best_set = VertexSet::from_iter(self.adj.len(), self.current.iter().copied());
        }
        self.expand(&with_v)?;
        self.current.pop();
        self.current_weight -= self.weights[v];
        // exclude v
        let mut without_v = cand.clone();
        without_v.remove(v);
        self.expand(&without_v)
    }
}

/// Exact maximum-weight independent set.
pub fn max_weight_independent_set(
    adj: &[VertexSet],
    weights: &[u64],
    budget: u64,
) -> Result<(u64, VertexSet), SearchError> {
    let n = adj.len();
    assert_eq!(n, weights.len());
    let mut total_best = 0u64;
    let mut total_set = VertexSet::new(n);
    let mut shared = Budget::new(budget);

    // reduction phase on a mutable copy of the adjacency
    let mut live = VertexSet::full(n);
    let mut radj: Vec<VertexSet> = adj.to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        for v in live.clone().iter() {
            if !live.contains(v) {
                continue;
            }
            let deg = radj[v].intersection_len(&live);
            if deg == 0 {
                // isolated: always take
                total_best += weights[v];
                total_set.insert(v);
                live.remove(v);
                changed = true;
            } else if deg == 1 {
                let u = radj[v].intersection(&live).first().unwrap();
                if weights[v] >= weights[u] {
                    // dominant leaf: some optimum contains v
                    total_best += weights[v];
                    total_set.insert(v);
                    live.remove(v);
                    live.remove(u);
                    changed = true;
                }
            }
        }
    }
    for v in 0..n {
        radj[v].intersect_with(&live);
    }

    // component decomposition of what remains
    let mut unseen = live;
    while let Some(start) = unseen.first() {
        let mut comp = VertexSet::new(n);
        let mut frontier = VertexSet::singleton(n, start);
        while !frontier.is_empty() {
            comp.union_with(&frontier);
            let mut next = VertexSet::new(n);
            for v in frontier.iter() {
                next.union_with(&radj[v]);
            }
            next.difference_with(&comp);
            frontier = next;
        }
        unseen.difference_with(&comp);

        let mut search = Mwis {
            adj: &radj,
            weights,
            best: 0,
            best_set: VertexSet::new(n),
            current: Vec::new(),
            current_weight: 0,
            budget: shared.clone(),
        };
        search.expand(&comp)?;
        shared = search.budget;
        total_best += search.best;
        total_set.union_with(&search.best_set);
    }
    Ok((total_best, total_set))
}

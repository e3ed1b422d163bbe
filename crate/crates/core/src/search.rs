//! Shared plumbing for the exact solvers: node budgets with graceful
//! degradation.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    /// The node budget ran out; carries the best bounds proven so far.
    BudgetExceeded {
        lower_bound: u64,
        upper_bound: Option<u64>,
    },
    /// The instance exceeds the solver's structural limit.
    TooLarge { n: usize, max: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::BudgetExceeded {
                lower_bound,
                upper_bound,
            } => match upper_bound {
                Some(ub) => write!(f, "budget exceeded (bounds [{lower_bound}, {ub}])"),
                None => write!(f, "budget exceeded (lower bound {lower_bound})"),
            },
            SearchError::TooLarge { n, max } => {
                write!(f, "instance with n={n} exceeds solver limit {max}")
            }
        }
    }
}

impl std::error::Error for SearchError {}

/// Decrementing node counter shared by a solver invocation.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: u64,
}

impl Budget {
    pub fn new(nodes: u64) -> Self {
        Budget { remaining: nodes }
    }

    pub fn unlimited() -> Self {
        Budget {
            remaining: u64::MAX,
        }
    }

    /// Spends one node; `false` when the budget is gone.
    #[inline]
    pub fn step(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}

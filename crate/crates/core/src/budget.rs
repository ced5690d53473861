//! Search budgets for the enumeration routines.

use thiserror::Error;

/// Default cap on candidate maps examined by functor enumeration.
pub const DEFAULT_FUNCTOR_BUDGET: u64 = 10_000_000;

/// Default cap on horn assignments / simplicial map candidates.
pub const DEFAULT_SSET_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} candidates exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// A countdown of search steps. Every enumeration threads one of these
/// through its inner loop and stops with [`BudgetExceeded`] when it runs out.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_SSET_BUDGET)
    }
}

use crate::error::{Error, Result};

/// Node budget for the exponential searches.
///
/// Every search routine counts the nodes it expands and aborts with
/// [`Error::BudgetExceeded`] once the count passes the limit, so a caller can
/// bound worst-case behaviour on hostile inputs. The default is unlimited,
/// which is the right choice for the desk-scale corpora this crate targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_nodes: u64,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: u64::MAX };

    pub fn nodes(max_nodes: u64) -> Budget {
        Budget { max_nodes }
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}

/// Running node counter for one top-level solver call.
#[derive(Debug)]
pub(crate) struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Meter {
        Meter { limit: budget.max_nodes, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { nodes: self.used })
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

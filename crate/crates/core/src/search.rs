use thiserror::Error;

pub const DEFAULT_MAX_SEARCH: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search space too large: more than {cap} candidates")]
pub struct SearchSpaceTooLarge {
    pub cap: u64,
}

/// Counts candidate nodes visited by a backtracking search and refuses to go
/// past the cap, so a partial enumeration is never reported as complete.
#[derive(Debug, Clone)]
pub struct Budget {
    cap: u64,
    used: u64,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { cap, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn tick(&mut self) -> Result<(), SearchSpaceTooLarge> {
        self.used += 1;
        if self.used > self.cap {
            Err(SearchSpaceTooLarge { cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_MAX_SEARCH)
    }
}

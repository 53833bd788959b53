//! Step budgets for the exponential searches.
//!
//! Every search takes a `&mut Budget` and calls [`Budget::tick`] once per
//! node it expands. Running out is reported as [`Exhausted`], which callers
//! keep distinct from a negative answer.

use std::fmt;

#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            limit: None,
            used: 0,
        }
    }

    pub fn steps(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn from_option(limit: Option<u64>) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Exhausted {
                steps: limit,
                lower: None,
                upper: None,
            }),
            _ => Ok(()),
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

/// The search ran out of steps. `lower`/`upper` carry the best interval
/// known for optimisation problems when the caller fills them in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhausted {
    pub steps: u64,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
}

impl Exhausted {
    pub fn with_interval(mut self, lower: usize, upper: usize) -> Self {
        self.lower = Some(lower);
        self.upper = Some(upper);
        self
    }
}

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step budget of {} exhausted", self.steps)?;
        if let (Some(lo), Some(hi)) = (self.lower, self.upper) {
            write!(f, " (value known to lie in [{lo}, {hi}])")?;
        }
        Ok(())
    }
}

impl std::error::Error for Exhausted {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limited_budget_runs_out() {
        let mut b = Budget::steps(2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_err());
    }
}

//! Resource caps for doubly-exponential integer growth.

use crate::error::{Error, Result};

/// Default cap on the size of a single sequence term, in bits.
pub const DEFAULT_TERM_BITS: u64 = 1 << 25;
/// Default cap on the combined size of all terms of one sequence, in bits.
pub const DEFAULT_TOTAL_BITS: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitBudget {
    pub max_term_bits: u64,
    pub max_total_bits: u64,
}

impl Default for BitBudget {
    fn default() -> Self {
        BitBudget {
            max_term_bits: DEFAULT_TERM_BITS,
            max_total_bits: DEFAULT_TOTAL_BITS,
        }
    }
}

impl BitBudget {
    /// Budget with the given total cap; a single term may use half of it,
    /// which is the ratio of the defaults.
    pub fn with_total(total: u64) -> Self {
        BitBudget {
            max_term_bits: (total / 2).max(1),
            max_total_bits: total,
        }
    }

    pub fn unlimited() -> Self {
        BitBudget {
            max_term_bits: u64::MAX,
            max_total_bits: u64::MAX,
        }
    }

    pub fn check_term(&self, bits: u64) -> Result<()> {
        if bits > self.max_term_bits {
            return Err(Error::BitBudgetExceeded {
                needed: bits,
                cap: self.max_term_bits,
            });
        }
        Ok(())
    }

    pub fn check_total(&self, bits: u64) -> Result<()> {
        if bits > self.max_total_bits {
            return Err(Error::BitBudgetExceeded {
                needed: bits,
                cap: self.max_total_bits,
            });
        }
        Ok(())
    }
}

/// Running tally of the bits consumed by one sequence.
#[derive(Debug, Clone)]
pub(crate) struct BitMeter {
    budget: BitBudget,
    used: u64,
}

impl BitMeter {
    pub(crate) fn new(budget: BitBudget) -> Self {
        BitMeter { budget, used: 0 }
    }

    /// Check a term of `bits` bits before it is materialized, then record it.
    pub(crate) fn charge(&mut self, bits: u64) -> Result<()> {
        self.budget.check_term(bits)?;
        let used = self.used.saturating_add(bits);
        self.budget.check_total(used)?;
        self.used = used;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meter_rejects_oversized_term_and_total() {
        let mut m = BitMeter::new(BitBudget {
            max_term_bits: 10,
            max_total_bits: 15,
        });
        m.charge(8).unwrap();
        assert_eq!(m.charge(11), Err(Error::BitBudgetExceeded { needed: 11, cap: 10 }));
        assert_eq!(m.charge(9), Err(Error::BitBudgetExceeded { needed: 17, cap: 15 }));
        m.charge(7).unwrap();
    }

    #[test]
    fn with_total_keeps_default_ratio() {
        assert_eq!(BitBudget::with_total(DEFAULT_TOTAL_BITS), BitBudget::default());
    }
}

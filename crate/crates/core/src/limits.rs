use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

/// Size guards applied by enumerating operations.
///
/// Every group carries a copy; groups derived from it (subgroups,
/// quotients, normalizers) inherit the same limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Limits {
    /// Largest group order that may be listed element by element.
    pub max_elements: u64,
    /// Largest index accepted by the coset action.
    pub max_coset_index: u64,
    /// Largest group order accepted by subgroup-lattice enumeration.
    pub max_lattice_order: u64,
}

impl Limits {
    pub const DEFAULT_MAX_ELEMENTS: u64 = 1_000_000;
    pub const DEFAULT_MAX_COSET_INDEX: u64 = 100_000;
    pub const DEFAULT_MAX_LATTICE_ORDER: u64 = 2_000;

    pub(crate) fn check(what: &'static str, limit: u64, actual: u64) -> Result<()> {
        if actual > limit {
            Err(GroupError::BoundExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_elements: Self::DEFAULT_MAX_ELEMENTS,
            max_coset_index: Self::DEFAULT_MAX_COSET_INDEX,
            max_lattice_order: Self::DEFAULT_MAX_LATTICE_ORDER,
        }
    }
}

//! Size limits shared by every enumeration in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Caps on enumerated sets. Anything larger is refused with
/// [`Error::BoundExceeded`] instead of being computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Bounds {
    /// Largest group that may be enumerated element by element.
    pub max_group_order: u128,
    /// Largest subgroup or transversal that may be listed.
    pub max_subgroup_order: u128,
    /// Largest degree handled by symmetric function expansions.
    pub max_degree: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_group_order: 50_000,
            max_subgroup_order: 50_000,
            max_degree: 24,
        }
    }
}

impl Bounds {
    pub fn check_group(&self, what: &str, size: u128) -> Result<()> {
        check(what, size, self.max_group_order)
    }

    pub fn check_subgroup(&self, what: &str, size: u128) -> Result<()> {
        check(what, size, self.max_subgroup_order)
    }

    pub fn check_degree(&self, what: &str, size: usize) -> Result<()> {
        check(what, size as u128, self.max_degree as u128)
    }
}

fn check(what: &str, size: u128, bound: u128) -> Result<()> {
    if size > bound {
        Err(Error::BoundExceeded {
            what: what.to_string(),
            size,
            bound,
        })
    } else {
        Ok(())
    }
}

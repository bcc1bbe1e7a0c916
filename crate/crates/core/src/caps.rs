use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Enumeration limits. These are configuration rather than constants so the
/// desk-scale defaults can be raised on larger machines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCaps {
    /// Bounded compositions visited by the `mu`/`lambda` oracles.
    pub compositions: u64,
    /// k-subsets materialised when a family's member list is built.
    pub family: u64,
    /// Subsets visited by a streaming sweep (coverage checks, size statistics).
    pub sweep: u64,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps {
            compositions: 100_000_000,
            family: 10_000_000,
            sweep: 200_000_000,
        }
    }
}

impl SizeCaps {
    /// The same cap for every kind of enumeration.
    pub fn uniform(cap: u64) -> Self {
        SizeCaps {
            compositions: cap,
            family: cap,
            sweep: cap,
        }
    }
}

/// `C(n, k)` as a saturating `u128`, used only to size enumerations.
pub fn choose_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(v) => v / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub(crate) fn guard(what: &'static str, size: u128, cap: u64) -> Result<()> {
    if size > u128::from(cap) {
        Err(Error::SizeGuard { what, size, cap })
    } else {
        Ok(())
    }
}

//! Coverage checks for Turán families and the counting identities behind the
//! averaging bound.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::{choose_u128, guard, SizeCaps};
use crate::cyclic::{
    self, for_each_k_subset, for_each_subset_starting_at, in_family, witness_index, CyclicSubset,
    TuranFamily,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerifyMode {
    Exhaustive,
    WitnessGuided,
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyMode::Exhaustive => "exhaustive",
            VerifyMode::WitnessGuided => "witness",
        })
    }
}

/// Outcome of a coverage sweep. `failures` holds the uncovered r-subsets in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: VerifyMode,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub checked: u64,
    pub failures: Vec<CyclicSubset>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `mode=<m> n=<n> k=<k> r=<r> checked=<c> failures=<f>`
    pub fn summary_line(&self) -> String {
        format!(
            "mode={} n={} k={} r={} checked={} failures={}",
            self.mode,
            self.n,
            self.k,
            self.r,
            self.checked,
            self.failures.len()
        )
    }

    /// Summary line followed by one uncovered subset per line.
    pub fn listing(&self) -> String {
        let mut out = self.summary_line();
        for f in &self.failures {
            out.push('\n');
            out.push_str(&f.to_string());
        }
        out
    }
}

/// Checks every r-subset of `Z_n` for a member of `family` inside it, by
/// looking up each of its k-subsets in a hash index of the members.
pub fn is_turan_family(family: &TuranFamily, caps: &SizeCaps) -> Result<VerificationReport> {
    let TuranFamily { n, k, r, .. } = *family;
    if k > r || r > n {
        return Err(Error::domain(format!("need k <= r <= n, got n={n} k={k} r={r}")));
    }
    guard("r-subsets for exhaustive check", choose_u128(n as u64, r as u64), caps.sweep)?;
    if let Some(m) = family.members.iter().find(|m| m.n() != n || m.len() != k) {
        return Err(Error::InvalidSubset(format!("member {m} is not a {k}-subset of Z_{n}")));
    }

    let index: HashSet<&[usize]> = family.members.iter().map(|m| m.elements()).collect();
    let mut checked = 0u64;
    let mut failures = Vec::new();
    let mut sub = vec![0usize; k];
    for_each_k_subset(n, r, |z| {
        checked += 1;
        let mut covered = false;
        for_each_k_subset(r, k, |pos| {
            if covered {
                return;
            }
            for (slot, &p) in sub.iter_mut().zip(pos) {
                *slot = z[p];
            }
            covered = index.contains(sub.as_slice());
        });
        if !covered {
            failures.push(CyclicSubset::new(n, z.to_vec()).expect("enumerated subset is valid"));
        }
    });
    Ok(VerificationReport { mode: VerifyMode::Exhaustive, n, k, r, checked, failures })
}

/// Checks that `L_j` covers every (k+1)-subset `Z` by constructing the
/// explicit witness `Z \ {x_i}` and testing it for membership. Constant work
/// per `Z`, so it scales to `C(32, 11)`.
pub fn witness_verify(n: usize, k: usize, j: usize, caps: &SizeCaps) -> Result<VerificationReport> {
    if k < 2 || k + 2 > n {
        return Err(Error::domain(format!("cyclic family needs 2 <= k <= n-2, got n={n} k={k}")));
    }
    if j >= n {
        return Err(Error::domain(format!("shift j={j} is not a residue mod {n}")));
    }
    let r = k + 1;
    guard("(k+1)-subsets for witness check", choose_u128(n as u64, r as u64), caps.sweep)?;

    let chunks: Vec<(u64, Vec<CyclicSubset>)> = (0..=n - r)
        .into_par_iter()
        .map(|first| {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            let mut x = Vec::with_capacity(k);
            for_each_subset_starting_at(n, r, first, &mut |z| {
                checked += 1;
                let drop = witness_index(n, j, z);
                x.clear();
                x.extend(z.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v));
                if x.len() != k || !in_family(n, j, &x) {
                    failures.push(CyclicSubset::new(n, z.to_vec()).expect("enumerated subset is valid"));
                }
            });
            (checked, failures)
        })
        .collect();

    let mut checked = 0;
    let mut failures = Vec::new();
    for (c, f) in chunks {
        checked += c;
        failures.extend(f);
    }
    Ok(VerificationReport { mode: VerifyMode::WitnessGuided, n, k, r, checked, failures })
}

/// For each k-subset, the number of shifts `j` whose family contains it,
/// tallied from the `n` explicitly built families.
pub fn occurrence_counts(n: usize, k: usize, caps: &SizeCaps) -> Result<BTreeMap<CyclicSubset, u64>> {
    guard(
        "k-subsets times shifts for occurrence count",
        choose_u128(n as u64, k as u64).saturating_mul(n as u128),
        caps.sweep,
    )?;
    let mut counts = BTreeMap::new();
    for_each_k_subset(n, k, |x| {
        counts.insert(CyclicSubset::new(n, x.to_vec()).expect("valid"), 0u64);
    });
    for j in 0..n {
        for m in cyclic::build_family(n, k, j, caps)?.members {
            *counts.get_mut(&m).expect("members are k-subsets") += 1;
        }
    }
    Ok(counts)
}

/// `(1/n) sum_j |L_j|` as an exact rational.
pub fn averaging_bound(n: usize, k: usize, caps: &SizeCaps) -> Result<Ratio<u64>> {
    Ok(cyclic::family_size_stats(n, k, caps)?.mean)
}

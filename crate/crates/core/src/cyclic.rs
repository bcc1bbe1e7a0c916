//! Cyclic families over `Z_n`.
//!
//! A k-subset `X` of `Z_n` sits on a circle; its gaps are the runs of
//! residues strictly between consecutive elements, and `h_X` is the longest
//! run. For a shift `j`, the family `L_j` keeps exactly those `X` with
//! `(j + sum X) mod n < h_X`. Every (k+1)-subset of `Z_n` contains a member
//! of `L_j`, and every k-subset lies in exactly `h_X` of the `n` families.

use std::fmt;
use std::io::{self, BufRead, Write};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::{choose_u128, guard, SizeCaps};
use crate::error::{Error, Result};

/// A non-empty subset of `Z_n`, elements strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CyclicSubset {
    n: usize,
    elements: Vec<usize>,
}

impl CyclicSubset {
    /// Sorts and validates `elements` as residues of `Z_n`.
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubset("modulus must be positive".into()));
        }
        if elements.is_empty() {
            return Err(Error::InvalidSubset("empty element list".into()));
        }
        elements.sort_unstable();
        if let Some(&x) = elements.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidSubset(format!("{x} is not a residue mod {n}")));
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset("repeated element".into()));
        }
        Ok(CyclicSubset { n, elements })
    }

    pub(crate) fn from_sorted(n: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        CyclicSubset { n, elements }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &CyclicSubset) -> bool {
        self.n == other.n && self.elements.iter().all(|&x| other.contains(x))
    }

    /// Translate every element by `t` modulo `n`.
    pub fn rotate(&self, t: usize) -> CyclicSubset {
        let mut elements: Vec<usize> = self.elements.iter().map(|&x| (x + t) % self.n).collect();
        elements.sort_unstable();
        CyclicSubset { n: self.n, elements }
    }

    /// Copy with the element at `index` removed.
    pub fn without_index(&self, index: usize) -> CyclicSubset {
        let mut elements = self.elements.clone();
        elements.remove(index);
        CyclicSubset { n: self.n, elements }
    }
}

impl fmt::Display for CyclicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Cyclic gap sizes of a subset: `gaps[i]` counts the residues strictly
/// between `elements[i]` and the next element round the circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapProfile {
    pub gaps: Vec<usize>,
    pub max_gap: usize,
}

pub fn gap_profile(x: &CyclicSubset) -> Result<GapProfile> {
    if x.is_empty() {
        return Err(Error::InvalidSubset("empty element list".into()));
    }
    let els = x.elements();
    let n = x.n();
    let mut gaps: Vec<usize> = els.windows(2).map(|w| w[1] - w[0] - 1).collect();
    gaps.push(n - 1 - els[els.len() - 1] + els[0]);
    let max_gap = gaps.iter().copied().max().unwrap_or(0);
    Ok(GapProfile { gaps, max_gap })
}

/// Largest cyclic gap of a sorted, non-empty residue slice.
#[inline]
pub(crate) fn max_gap_of(n: usize, els: &[usize]) -> usize {
    let mut best = n - 1 - els[els.len() - 1] + els[0];
    for w in els.windows(2) {
        best = best.max(w[1] - w[0] - 1);
    }
    best
}

#[inline]
pub(crate) fn phi_of(n: usize, j: usize, els: &[usize]) -> usize {
    (j + els.iter().sum::<usize>()) % n
}

/// `phi_j(X) = (j + sum X) mod n`.
pub fn phi(j: usize, x: &CyclicSubset) -> usize {
    phi_of(x.n(), j, x.elements())
}

/// Membership test for `L_j`.
#[inline]
pub(crate) fn in_family(n: usize, j: usize, els: &[usize]) -> bool {
    phi_of(n, j, els) < max_gap_of(n, els)
}

/// How a family was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Cyclic { shift: usize },
    Partition { parts: Vec<usize> },
}

/// An explicit family of k-subsets meant to cover every r-subset of `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranFamily {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub provenance: Provenance,
    pub members: Vec<CyclicSubset>,
}

impl TuranFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Writes the member list: a header `n=<n> k=<k> j=<j> size=<m>` then one
    /// comma-separated member per line. Partition families print `j=-`.
    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        let j = match &self.provenance {
            Provenance::Cyclic { shift } => shift.to_string(),
            Provenance::Partition { .. } => "-".to_string(),
        };
        writeln!(w, "n={} k={} j={} size={}", self.n, self.k, j, self.members.len())?;
        for m in &self.members {
            writeln!(w, "{m}")?;
        }
        Ok(())
    }
}

/// A family read back from the export format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportedFamily {
    pub n: usize,
    pub k: usize,
    pub j: Option<usize>,
    pub members: Vec<CyclicSubset>,
}

pub fn read_family<R: BufRead>(r: R) -> Result<ExportedFamily> {
    let mut lines = r.lines().enumerate();
    let io_err = |line: usize, e: io::Error| Error::Parse { line, msg: e.to_string() };
    let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let header = header.map_err(|e| io_err(1, e))?;

    let (mut n, mut k, mut j, mut size) = (None, None, None, None);
    for field in header.split_whitespace() {
        let (key, val) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse { line: 1, msg: format!("bad header field {field:?}") })?;
        let num = || {
            val.parse::<usize>()
                .map_err(|e| Error::Parse { line: 1, msg: format!("{key}: {e}") })
        };
        match key {
            "n" => n = Some(num()?),
            "k" => k = Some(num()?),
            "j" => j = if val == "-" { Some(None) } else { Some(Some(num()?)) },
            "size" => size = Some(num()?),
            _ => return Err(Error::Parse { line: 1, msg: format!("unknown header key {key:?}") }),
        }
    }
    let missing = |what: &str| Error::Parse { line: 1, msg: format!("header lacks {what}") };
    let n = n.ok_or_else(|| missing("n"))?;
    let k = k.ok_or_else(|| missing("k"))?;
    let j = j.ok_or_else(|| missing("j"))?;
    let size = size.ok_or_else(|| missing("size"))?;

    let mut members = Vec::with_capacity(size);
    for (idx, line) in lines {
        let line = line.map_err(|e| io_err(idx + 1, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let els = line
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { line: idx + 1, msg: e.to_string() })?;
        let m = CyclicSubset::new(n, els).map_err(|e| Error::Parse { line: idx + 1, msg: e.to_string() })?;
        if m.len() != k {
            return Err(Error::Parse { line: idx + 1, msg: format!("member has {} elements, expected {k}", m.len()) });
        }
        members.push(m);
    }
    if members.len() != size {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header says size={size} but {} members follow", members.len()),
        });
    }
    Ok(ExportedFamily { n, k, j, members })
}

/// Calls `f` on every k-subset of `{0..n}` whose smallest element is `first`,
/// in lexicographic order.
pub(crate) fn for_each_subset_starting_at(n: usize, k: usize, first: usize, f: &mut impl FnMut(&[usize])) {
    if k == 0 || first + k > n {
        return;
    }
    let mut idx: Vec<usize> = (first..first + k).collect();
    loop {
        f(&idx);
        // advance positions 1..k; position 0 stays at `first`
        let mut p = k;
        loop {
            if p == 1 {
                return;
            }
            p -= 1;
            if idx[p] < n - k + p {
                break;
            }
        }
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Calls `f` on every k-subset of `{0..n}` in lexicographic order.
pub fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    for first in 0..=n - k {
        for_each_subset_starting_at(n, k, first, &mut f);
    }
}

fn check_family_params(n: usize, k: usize, j: usize) -> Result<()> {
    if k < 2 || k + 2 > n {
        return Err(Error::domain(format!("cyclic family needs 2 <= k <= n-2, got n={n} k={k}")));
    }
    if j >= n {
        return Err(Error::domain(format!("shift j={j} is not a residue mod {n}")));
    }
    Ok(())
}

/// Builds `L_j = { X : |X| = k, phi_j(X) < h_X }` with members in
/// lexicographic order.
pub fn build_family(n: usize, k: usize, j: usize, caps: &SizeCaps) -> Result<TuranFamily> {
    check_family_params(n, k, j)?;
    guard("k-subsets for family", choose_u128(n as u64, k as u64), caps.family)?;
    let mut members = Vec::new();
    for_each_k_subset(n, k, |els| {
        if in_family(n, j, els) {
            members.push(CyclicSubset::from_sorted(n, els.to_vec()));
        }
    });
    Ok(TuranFamily {
        n,
        k,
        r: k + 1,
        provenance: Provenance::Cyclic { shift: j },
        members,
    })
}

/// `|L_j|` for every shift, with the minimum and the exact mean.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySizeStats {
    pub n: usize,
    pub k: usize,
    pub sizes: Vec<u64>,
    pub min: u64,
    pub argmin: usize,
    pub mean: Ratio<u64>,
}

impl FamilySizeStats {
    pub fn total(&self) -> u64 {
        self.sizes.iter().sum()
    }
}

/// Histogram of k-subsets by (element sum mod n, largest gap), built by a
/// depth-first walk that carries the running sum and gap.
fn sum_gap_histogram(n: usize, k: usize) -> Vec<u64> {
    let width = n - k + 1;

    struct Walk<'a> {
        n: usize,
        k: usize,
        width: usize,
        first: usize,
        hist: &'a mut [u64],
    }

    impl Walk<'_> {
        fn rec(&mut self, depth: usize, prev: usize, sum: usize, maxgap: usize) {
            if depth == self.k {
                let wrap = self.n - 1 - prev + self.first;
                let h = maxgap.max(wrap);
                self.hist[(sum % self.n) * self.width + h] += 1;
                return;
            }
            let last = self.n - (self.k - depth);
            for next in prev + 1..=last {
                self.rec(depth + 1, next, sum + next, maxgap.max(next - prev - 1));
            }
        }
    }

    (0..=n - k)
        .into_par_iter()
        .map(|first| {
            let mut hist = vec![0u64; n * width];
            Walk { n, k, width, first, hist: &mut hist }.rec(1, first, first, 0);
            hist
        })
        .reduce(
            || vec![0u64; n * width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Sizes of all `n` shifted families without materialising any of them.
pub fn family_size_stats(n: usize, k: usize, caps: &SizeCaps) -> Result<FamilySizeStats> {
    check_family_params(n, k, 0)?;
    guard("k-subsets for size sweep", choose_u128(n as u64, k as u64), caps.sweep)?;
    let width = n - k + 1;
    let hist = sum_gap_histogram(n, k);

    let mut sizes = vec![0u64; n];
    for (j, size) in sizes.iter_mut().enumerate() {
        for sigma in 0..n {
            let phi = (j + sigma) % n;
            let row = &hist[sigma * width..(sigma + 1) * width];
            // members need h > phi
            if phi + 1 < width {
                *size += row[phi + 1..].iter().sum::<u64>();
            }
        }
    }
    let (argmin, &min) = sizes
        .iter()
        .enumerate()
        .min_by_key(|&(j, &s)| (s, j))
        .expect("n > 0");
    let mean = Ratio::new(sizes.iter().sum::<u64>(), n as u64);
    Ok(FamilySizeStats { n, k, sizes, min, argmin, mean })
}

/// Index of the element of `z` to drop so that the remaining k-subset lies
/// in `L_j`: the element equal to `alpha = phi_j(z)` if present, otherwise the
/// element whose following gap contains `alpha`.
#[inline]
pub(crate) fn witness_index(n: usize, j: usize, z: &[usize]) -> usize {
    let alpha = phi_of(n, j, z);
    match z.binary_search(&alpha) {
        Ok(p) => p,
        // alpha precedes every element: it sits in the wrap-around gap
        Err(0) => z.len() - 1,
        Err(p) => p - 1,
    }
}

/// The k-subset of `z` (|z| = k + 1) guaranteed to lie in `L_j`.
pub fn cover_witness(z: &CyclicSubset, j: usize) -> Result<CyclicSubset> {
    if z.len() < 2 {
        return Err(Error::InvalidSubset("witness needs a subset of size k+1 >= 2".into()));
    }
    if j >= z.n() {
        return Err(Error::domain(format!("shift j={j} is not a residue mod {}", z.n())));
    }
    Ok(z.without_index(witness_index(z.n(), j, z.elements())))
}

/// The classical construction: cut `Z_n` into `d = floor((r-1)/(k-1))`
/// consecutive blocks of near-equal size and take every k-subset inside a
/// block. An r-subset meets some block in at least k points because
/// `r > d(k-1)`.
pub fn partition_family(n: usize, k: usize, r: usize, caps: &SizeCaps) -> Result<TuranFamily> {
    let parts = partition_parts(n, k, r)?;
    let size: u128 = parts.iter().map(|&p| choose_u128(p as u64, k as u64)).sum();
    guard("k-subsets for partition family", size, caps.family)?;
    let mut members = Vec::with_capacity(size as usize);
    let mut offset = 0;
    for &p in &parts {
        for_each_k_subset(p, k, |els| {
            members.push(CyclicSubset::from_sorted(n, els.iter().map(|x| x + offset).collect()));
        });
        offset += p;
    }
    Ok(TuranFamily {
        n,
        k,
        r,
        provenance: Provenance::Partition { parts },
        members,
    })
}

/// Block sizes for [`partition_family`]: `n mod d` blocks of `ceil(n/d)`
/// followed by blocks of `floor(n/d)`.
pub fn partition_parts(n: usize, k: usize, r: usize) -> Result<Vec<usize>> {
    if k < 2 || r <= k || n < r {
        return Err(Error::domain(format!("partition family needs k >= 2, r > k, n >= r; got n={n} k={k} r={r}")));
    }
    let d = (r - 1) / (k - 1);
    let (q, extra) = (n / d, n % d);
    Ok((0..d).map(|i| if i < extra { q + 1 } else { q }).collect())
}

//! Exact weighted counts of bounded compositions.
//!
//! `mu(s, k, h)` sums `x_k + 1` over all non-negative integer vectors
//! `(x_1, .., x_k)` with sum `s` and every coordinate at most `h`;
//! `lambda(s, k, h)` is the same sum restricted to vectors whose maximum is
//! exactly `h`. With `s = n - k` the vectors are the cyclic gap sequences of
//! k-subsets of `Z_n`, and the weight counts the rotations that keep the
//! first gap in front of residue 0.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::caps::{choose_u128, guard};
use crate::error::{Error, Result};

/// Default limit on the number of compositions an oracle may visit.
pub const DEFAULT_COMPOSITION_CAP: u64 = 100_000_000;

/// Arbitrary-precision non-negative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CountValue(pub BigUint);

impl CountValue {
    pub fn zero() -> Self {
        CountValue(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    fn from_signed(v: BigInt) -> Self {
        match v.sign() {
            Sign::Minus => panic!("count went negative: {v}"),
            _ => CountValue(v.magnitude().clone()),
        }
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        CountValue(BigUint::from(v))
    }
}

impl From<BigUint> for CountValue {
    fn from(v: BigUint) -> Self {
        CountValue(v)
    }
}

impl PartialEq<u64> for CountValue {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The parameters `(s, k, h)` of a bounded-composition count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompositionSpace {
    pub s: u64,
    pub k: u64,
    pub h: u64,
}

impl CompositionSpace {
    pub fn new(s: u64, k: u64, h: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("composition length k must be at least 1"));
        }
        Ok(CompositionSpace { s, k, h })
    }

    /// `V(s, k, h)` has no element.
    pub fn bounded_is_empty(&self) -> bool {
        self.s > self.k.saturating_mul(self.h)
    }

    /// `V̄(s, k, h)` (maximum exactly `h`) has no element.
    pub fn exact_max_is_empty(&self) -> bool {
        self.h > self.s || self.bounded_is_empty()
    }

    /// `|Ω_s| = C(s + k - 1, k - 1)`, the size of the unbounded space the
    /// oracles walk.
    pub fn unbounded_size(&self) -> u128 {
        choose_u128(self.s + self.k - 1, self.k - 1)
    }
}

/// `C(a, b)`, taken to be zero whenever `b < 0`, `a < 0` or `a < b`.
///
/// The zero convention for negative `a` is what makes the inclusion-exclusion
/// sum in [`mu_closed`] truncate correctly; the generalised binomial would
/// give e.g. `C(-1, 1) = -1` and break `mu(2, 2, 1)`.
pub fn binomial(a: i64, b: i64) -> CountValue {
    if a < 0 || b < 0 || a < b {
        return CountValue::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    CountValue(acc)
}

fn binomial_signed(a: i64, b: i64) -> BigInt {
    BigInt::from(binomial(a, b).0)
}

/// Walks every vector of `Ω_s` (no coordinate cap) and hands each one to
/// `visit`. Deliberately unpruned: this is the reference the closed form is
/// checked against.
fn for_each_composition(s: u64, k: u64, visit: &mut impl FnMut(&[u64])) {
    fn rec(buf: &mut Vec<u64>, left: u64, slots: u64, visit: &mut impl FnMut(&[u64])) {
        if slots == 1 {
            buf.push(left);
            visit(buf);
            buf.pop();
            return;
        }
        for x in 0..=left {
            buf.push(x);
            rec(buf, left - x, slots - 1, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(k as usize);
    rec(&mut buf, s, k, visit);
}

fn weighted_enumeration(
    space: CompositionSpace,
    cap: u64,
    keep: impl Fn(u64) -> bool,
) -> Result<CountValue> {
    guard("compositions", space.unbounded_size(), cap)?;
    let mut total: u128 = 0;
    for_each_composition(space.s, space.k, &mut |v| {
        let max = v.iter().copied().max().unwrap_or(0);
        if keep(max) {
            total += u128::from(v[v.len() - 1]) + 1;
        }
    });
    Ok(CountValue(BigUint::from(total)))
}

/// `mu(s, k, h)` by exhaustive enumeration of `V(s, k, h)`.
pub fn mu_oracle(space: CompositionSpace, cap: u64) -> Result<CountValue> {
    weighted_enumeration(space, cap, |max| max <= space.h)
}

/// `lambda(s, k, h)` by exhaustive enumeration of `V̄(s, k, h)`.
pub fn lambda_oracle(space: CompositionSpace, cap: u64) -> Result<CountValue> {
    weighted_enumeration(space, cap, |max| max == space.h)
}

/// `mu(s, k, h)` by inclusion-exclusion over the coordinates forced above
/// the cap:
///
/// `sum_i (-1)^i [ C(k,i) C(s+k-i(h+1), k) + (h+1) C(k-1,i-1) C(s+k-i(h+1)-1, k-1) ]`
///
/// for `i = 0..=k`; out-of-range binomials vanish.
pub fn mu_closed(space: CompositionSpace) -> CountValue {
    let CompositionSpace { s, k, h } = space;
    let (s, k, step) = (s as i64, k as i64, h as i64 + 1);
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let top = s + k - i * step;
        let mut term = binomial_signed(k, i) * binomial_signed(top, k);
        term += BigInt::from(step) * binomial_signed(k - 1, i - 1) * binomial_signed(top - 1, k - 1);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    CountValue::from_signed(acc)
}

/// `lambda(s, k, h) = mu(s, k, h) - mu(s, k, h - 1)`, with `mu(s, k, -1) = 0`.
pub fn lambda_count(space: CompositionSpace) -> CountValue {
    let upper = BigInt::from(mu_closed(space).0);
    let lower = match space.h.checked_sub(1) {
        Some(h) => BigInt::from(mu_closed(CompositionSpace { h, ..space }).0),
        None => BigInt::zero(),
    };
    CountValue::from_signed(upper - lower)
}

/// `sum_h h * lambda(n - k, k, h)`, which equals the sum of the largest
/// cyclic gap over all k-subsets of `Z_n`.
pub fn weighted_gap_sum(n: u64, k: u64) -> Result<CountValue> {
    if k == 0 || k >= n {
        return Err(Error::domain(format!("weighted gap sum needs 1 <= k < n, got n={n} k={k}")));
    }
    let s = n - k;
    let mut acc = BigUint::zero();
    for h in 1..=s {
        acc += lambda_count(CompositionSpace { s, k, h }).0 * h;
    }
    Ok(CountValue(acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: u64, k: u64, h: u64) -> CompositionSpace {
        CompositionSpace::new(s, k, h).unwrap()
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(3, 2), 3);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(-1, 1), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(32, 10), 64_512_240);
        assert_eq!(binomial(100, 49).to_string(), "98913082887808032681188722800");
    }

    #[test]
    fn mu_small_values() {
        for (s, k, h, want) in [(0, 3, 5, 1u64), (1, 2, 1, 3), (2, 2, 1, 2), (0, 1, 0, 1)] {
            assert_eq!(mu_oracle(sp(s, k, h), DEFAULT_COMPOSITION_CAP).unwrap(), want, "oracle {s},{k},{h}");
            assert_eq!(mu_closed(sp(s, k, h)), want, "closed {s},{k},{h}");
        }
    }

    #[test]
    fn negative_binomial_convention_is_needed() {
        // the i = 2 term of mu(2, 2, 1) evaluates C(-1, 1)
        assert_eq!(mu_closed(sp(2, 2, 1)), mu_oracle(sp(2, 2, 1), 100).unwrap());
    }

    #[test]
    fn lambda_small_values() {
        assert_eq!(lambda_count(sp(2, 2, 1)), 2);
        assert_eq!(lambda_count(sp(0, 4, 0)), 1);
        assert_eq!(lambda_count(sp(0, 4, 2)), 0);
        assert_eq!(lambda_oracle(sp(2, 2, 1), 100).unwrap(), 2);
        assert_eq!(lambda_oracle(sp(3, 2, 3), 100).unwrap(), 5);
        assert_eq!(lambda_oracle(sp(1, 1, 1), 100).unwrap(), 2);
    }

    #[test]
    fn emptiness_predicates() {
        assert!(sp(7, 3, 2).bounded_is_empty());
        assert!(!sp(6, 3, 2).bounded_is_empty());
        assert!(sp(2, 3, 3).exact_max_is_empty());
        assert_eq!(mu_closed(sp(7, 3, 2)), 0);
        assert_eq!(lambda_count(sp(2, 3, 3)), 0);
    }

    #[test]
    fn zero_length_rejected() {
        assert!(CompositionSpace::new(1, 0, 1).is_err());
    }

    #[test]
    fn oracle_guard() {
        let err = mu_oracle(sp(30, 6, 30), 1000).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn gap_sums() {
        assert_eq!(weighted_gap_sum(3, 2).unwrap(), 3);
        assert_eq!(weighted_gap_sum(32, 2).unwrap(), 11280);
        for k in 1..8 {
            assert_eq!(weighted_gap_sum(k + 1, k).unwrap(), k + 1);
        }
        assert!(weighted_gap_sum(4, 4).is_err());
    }
}

//! Floating-point evaluation of the bound constants
//!
//! * `c0(k) = ∫_1^{ln k} (1 - e^{-x})^k dx`
//! * `c1(k) = sum_{i>0} (-1)^{i-1} C(k,i) k^{-i} / i`
//! * `tau(t) = ∫_1^t 1 - (1 - e^{-x})^t dx`, bounded above by
//!   `ln t - 1 + c1(t) - c0(t)`
//! * `tau1(t) = ∫_1^t (1 - e^{-x})^{t-1} x e^{-x} dx`, bounded by `(1 + tau(t)) / t`
//!
//! and of the competing upper and lower bounds on `T(k+1, k, n)`. All logs
//! are natural.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::count::{self, binomial, CompositionSpace, CountValue};
use crate::cyclic::partition_parts;
use crate::error::{Error, Result};

/// Slack allowed when comparing two quadrature results.
pub const INEQUALITY_MARGIN: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { abs_tol: 1e-10, max_depth: 60 }
    }
}

impl QuadratureConfig {
    pub fn new(abs_tol: f64, max_depth: u32) -> Result<Self> {
        if !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::domain(format!("quadrature tolerance must be positive, got {abs_tol}")));
        }
        Ok(QuadratureConfig { abs_tol, max_depth })
    }
}

// Panels integrated independently before adaptive refinement; guards against
// a single coarse Simpson estimate agreeing with its halves by accident.
const INITIAL_PANELS: usize = 16;

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `cfg.abs_tol`. Returns 0 for an empty or reversed interval.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(b > a) {
        return Ok(0.0);
    }

    struct Ctx<'a, F: Fn(f64) -> f64> {
        f: &'a F,
        cfg: &'a QuadratureConfig,
        a: f64,
        b: f64,
    }

    #[allow(clippy::too_many_arguments)]
    fn refine<F: Fn(f64) -> f64>(
        ctx: &Ctx<'_, F>,
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_mid: f64,
        f_hi: f64,
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> Result<f64> {
        let mid = 0.5 * (lo + hi);
        let (lm, rm) = (0.5 * (lo + mid), 0.5 * (mid + hi));
        let (f_lm, f_rm) = ((ctx.f)(lm), (ctx.f)(rm));
        let width = hi - lo;
        let left = width * (f_lo + 4.0 * f_lm + f_mid) / 12.0;
        let right = width * (f_mid + 4.0 * f_rm + f_hi) / 12.0;
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * eps {
            return Ok(left + right + delta / 15.0);
        }
        if depth >= ctx.cfg.max_depth {
            return Err(Error::Quadrature {
                a: ctx.a,
                b: ctx.b,
                tol: ctx.cfg.abs_tol,
                max_depth: ctx.cfg.max_depth,
            });
        }
        Ok(refine(ctx, lo, mid, f_lo, f_lm, f_mid, left, 0.5 * eps, depth + 1)?
            + refine(ctx, mid, hi, f_mid, f_rm, f_hi, right, 0.5 * eps, depth + 1)?)
    }

    let ctx = Ctx { f: &f, cfg, a, b };
    let step = (b - a) / INITIAL_PANELS as f64;
    let eps = cfg.abs_tol / INITIAL_PANELS as f64;
    let mut total = 0.0;
    for p in 0..INITIAL_PANELS {
        let lo = a + step * p as f64;
        let hi = if p + 1 == INITIAL_PANELS { b } else { lo + step };
        let mid = 0.5 * (lo + hi);
        let (f_lo, f_mid, f_hi) = (f(lo), f(mid), f(hi));
        let whole = (hi - lo) * (f_lo + 4.0 * f_mid + f_hi) / 6.0;
        total += refine(&ctx, lo, hi, f_lo, f_mid, f_hi, whole, eps, 1)?;
    }
    Ok(total)
}

#[inline]
fn one_minus_exp_neg(x: f64) -> f64 {
    -(-x).exp_m1()
}

/// Neumaier-compensated running sum.
#[derive(Default)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn require_t(t: f64, min: f64, what: &str) -> Result<()> {
    if t.is_finite() && t >= min {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} needs t >= {min}, got {t}")))
    }
}

/// `c0` at a real argument; zero when `ln t <= 1`.
pub fn c0_at(t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    require_t(t, 1.0, "c0")?;
    adaptive_simpson(|x| one_minus_exp_neg(x).powf(t), 1.0, t.ln(), cfg)
}

pub fn c0(k: u32, cfg: &QuadratureConfig) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain("c0 is defined here for k >= 2"));
    }
    c0_at(f64::from(k), cfg)
}

/// Left-endpoint sum `step * sum f(1 + i*step)` for `i = 0..=floor((ln k - 1)/step)`.
/// A crude rule kept only because it reproduces the published `c0` table
/// (step `1e-4`) to six decimals; [`c0`] is the integral.
pub fn c0_grid_sum(k: u32, step: f64) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain("c0 is defined here for k >= 2"));
    }
    if !(step > 0.0) {
        return Err(Error::domain(format!("grid step must be positive, got {step}")));
    }
    let upper = f64::from(k).ln();
    if upper <= 1.0 {
        return Ok(0.0);
    }
    let t = f64::from(k);
    let steps = ((upper - 1.0) / step).floor() as u64;
    let mut sum = CompensatedSum::default();
    for i in 0..=steps {
        sum.add(one_minus_exp_neg(1.0 + i as f64 * step).powf(t));
    }
    Ok(step * sum.value())
}

/// `c1` at a real argument. For integer `t` the series stops after `t`
/// terms; otherwise it runs until the terms fall below double precision.
pub fn c1_at(t: f64) -> Result<f64> {
    require_t(t, 1.0, "c1")?;
    let mut sum = CompensatedSum::default();
    // C(t, i) t^{-i}
    let mut ratio = 1.0;
    let mut i = 1u32;
    loop {
        let fi = f64::from(i);
        ratio *= (t - fi + 1.0) / (fi * t);
        if ratio == 0.0 {
            break;
        }
        let term = ratio / fi;
        sum.add(if i % 2 == 1 { term } else { -term });
        if fi > t && term.abs() < 1e-18 {
            break;
        }
        if i >= 100_000 {
            return Err(Error::domain(format!("c1 series did not converge at t={t}")));
        }
        i += 1;
    }
    Ok(sum.value())
}

pub fn c1(k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain("c1 is defined here for k >= 2"));
    }
    c1_at(f64::from(k))
}

/// `∫_1^t 1 - (1 - e^{-x})^t dx`.
pub fn tau_integral(t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    require_t(t, 1.0, "tau")?;
    adaptive_simpson(|x| 1.0 - one_minus_exp_neg(x).powf(t), 1.0, t, cfg)
}

/// `ln t - 1 + c1(t) - c0(t)`, the closed-form upper bound on `tau(t)`.
pub fn tau_closed_at(t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(t.ln() - 1.0 + c1_at(t)? - c0_at(t, cfg)?)
}

pub fn tau_closed(k: u32, cfg: &QuadratureConfig) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain("tau is defined here for k >= 2"));
    }
    tau_closed_at(f64::from(k), cfg)
}

/// `∫_1^t (1 - e^{-x})^{t-1} x e^{-x} dx`.
pub fn tau1(t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    require_t(t, 1.0, "tau1")?;
    adaptive_simpson(|x| one_minus_exp_neg(x).powf(t - 1.0) * x * (-x).exp(), 1.0, t, cfg)
}

/// A bound on `T(r, k, n)` both as a multiple of `C(n, k)` and absolutely.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub coefficient: f64,
    pub absolute: f64,
}

impl BoundValue {
    fn from_coefficient(coefficient: f64, n: u64, k: u64) -> Self {
        BoundValue {
            coefficient,
            absolute: coefficient * binomial(n as i64, k as i64).to_f64(),
        }
    }

    /// Coefficient above 1 says nothing beyond the trivial `C(n, k)`.
    pub fn exceeds_trivial(&self) -> bool {
        self.coefficient > 1.0
    }
}

fn require_k_below_n(n: u64, k: u64) -> Result<()> {
    if k >= n {
        return Err(Error::domain(format!("need k < n, got n={n} k={k}")));
    }
    Ok(())
}

/// `(ln k + c1(k) - c0(k)) / (k - 1)`. Not capped at 1: for `k = 2` the
/// coefficient is about 1.568 and [`BoundValue::exceeds_trivial`] reports it.
pub fn theorem1_coefficient(k: u32, cfg: &QuadratureConfig) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain("bound needs k >= 2"));
    }
    Ok((1.0 + tau_closed(k, cfg)?) / f64::from(k - 1))
}

pub fn bound_theorem1(n: u64, k: u32, cfg: &QuadratureConfig) -> Result<BoundValue> {
    require_k_below_n(n, u64::from(k))?;
    Ok(BoundValue::from_coefficient(theorem1_coefficient(k, cfg)?, n, u64::from(k)))
}

/// Counting lower bound `C(n, k) / C(r, k)`.
pub fn bound_lower(n: u64, k: u64, r: u64) -> Result<BoundValue> {
    if k > r || r > n {
        return Err(Error::domain(format!("need k <= r <= n, got n={n} k={k} r={r}")));
    }
    let per = binomial(r as i64, k as i64).to_f64();
    Ok(BoundValue::from_coefficient(1.0 / per, n, k))
}

/// The block construction's size and its simplified coefficient `1/d^{k-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionBound {
    pub d: usize,
    pub parts: Vec<usize>,
    pub exact: String,
    pub bound: BoundValue,
    pub simplified_coefficient: f64,
}

pub fn bound_partition(n: u64, k: u64, r: u64) -> Result<PartitionBound> {
    let parts = partition_parts(n as usize, k as usize, r as usize)?;
    let d = parts.len();
    let mut exact = num_bigint::BigUint::default();
    for &p in &parts {
        exact += binomial(p as i64, k as i64).0;
    }
    let exact = CountValue(exact);
    let absolute = exact.to_f64();
    let coefficient = absolute / binomial(n as i64, k as i64).to_f64();
    Ok(PartitionBound {
        d,
        parts,
        exact: exact.to_string(),
        bound: BoundValue { coefficient, absolute },
        simplified_coefficient: (d as f64).powi(k as i32 - 1).recip(),
    })
}

/// `(1/ceil(k / (2 ln k)) + 1/(2 k ln k)) C(n, k)`, bracketed as typeset in
/// the original statement.
pub fn bound_kim_roush(n: u64, k: u32) -> Result<BoundValue> {
    if k < 2 {
        return Err(Error::domain("Kim-Roush bound needs k >= 2"));
    }
    require_k_below_n(n, u64::from(k))?;
    let kf = f64::from(k);
    let l = kf.ln();
    let coefficient = 1.0 / (kf / (2.0 * l)).ceil() + 1.0 / (2.0 * kf * l);
    Ok(BoundValue::from_coefficient(coefficient, n, u64::from(k)))
}

/// `(1/ceil(k / ln k)) (ln k / (ln k - 1)) C(n, k)`; only meaningful once
/// `ln k > 1`.
pub fn bound_frankl_rodl(n: u64, k: u32) -> Result<BoundValue> {
    if k < 3 {
        return Err(Error::domain(format!("Frankl-Rodl bound needs ln k > 1, got k={k}")));
    }
    require_k_below_n(n, u64::from(k))?;
    let kf = f64::from(k);
    let l = kf.ln();
    let coefficient = (1.0 / (kf / l).ceil()) * (l / (l - 1.0));
    Ok(BoundValue::from_coefficient(coefficient, n, u64::from(k)))
}

/// All constants and bound coefficients for one `k`, at `r = k + 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: u32,
    pub c0: f64,
    pub c1: f64,
    pub tau_closed: f64,
    pub tau_integral: f64,
    pub bound_16: f64,
    pub bound_11: f64,
    pub bound_12: f64,
    pub bound_13: f64,
    pub bound_14: f64,
    /// `None` where the formula is undefined (`k = 2`).
    pub bound_15: Option<f64>,
}

impl BoundRow {
    pub fn compute(n: u64, k: u32, cfg: &QuadratureConfig) -> Result<Self> {
        let ku = u64::from(k);
        let partition = bound_partition(n, ku, ku + 1)?;
        let bound_15 = match bound_frankl_rodl(n, k) {
            Ok(b) => Some(b.coefficient),
            Err(Error::Domain(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(BoundRow {
            k,
            c0: c0(k, cfg)?,
            c1: c1(k)?,
            tau_closed: tau_closed(k, cfg)?,
            tau_integral: tau_integral(f64::from(k), cfg)?,
            bound_16: bound_theorem1(n, k, cfg)?.coefficient,
            bound_11: bound_lower(n, ku, ku + 1)?.coefficient,
            bound_12: partition.bound.coefficient,
            bound_13: partition.simplified_coefficient,
            bound_14: bound_kim_roush(n, k)?.coefficient,
            bound_15,
        })
    }
}

/// Numerical evaluation of both inequalities on `tau` and `tau1` at one `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Lemma4Check {
    pub t: f64,
    pub tau: f64,
    pub tau_bound: f64,
    pub tau1: f64,
    pub tau1_bound: f64,
    pub tau_holds: bool,
    pub tau1_holds: bool,
    /// The intermediate step `t * tau1(t) - 1 <= tau(t)`.
    pub reverse_holds: bool,
}

impl Lemma4Check {
    pub fn holds(&self) -> bool {
        self.tau_holds && self.tau1_holds && self.reverse_holds
    }
}

pub fn check_lemma4(t_values: &[f64], cfg: &QuadratureConfig) -> Result<Vec<Lemma4Check>> {
    t_values
        .iter()
        .map(|&t| {
            require_t(t, 2.0, "tau inequality check")?;
            let tau = tau_integral(t, cfg)?;
            let tau_bound = tau_closed_at(t, cfg)?;
            let tau1 = tau1(t, cfg)?;
            let tau1_bound = (1.0 + tau) / t;
            Ok(Lemma4Check {
                t,
                tau,
                tau_bound,
                tau1,
                tau1_bound,
                tau_holds: tau <= tau_bound + INEQUALITY_MARGIN,
                tau1_holds: tau1 <= tau1_bound + INEQUALITY_MARGIN,
                reverse_holds: t * tau1 - 1.0 <= tau + INEQUALITY_MARGIN,
            })
        })
        .collect()
}

/// `sum_h h lambda(n-k, k, h) / C(n, k)` (exact) against
/// `(n / (k-1)) (1 + tau(k))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma6Check {
    pub n: u64,
    pub k: u32,
    pub lhs_exact: Ratio<BigInt>,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub fn check_lemma6(n: u64, k: u32, cfg: &QuadratureConfig) -> Result<Lemma6Check> {
    if k < 3 {
        return Err(Error::domain("gap-sum inequality is checked for k >= 3"));
    }
    require_k_below_n(n, u64::from(k))?;
    let total = count::weighted_gap_sum(n, u64::from(k))?;
    let lhs_exact = Ratio::new(
        BigInt::from(total.0),
        BigInt::from(binomial(n as i64, i64::from(k)).0),
    );
    let lhs = lhs_exact.to_f64().unwrap_or(f64::NAN);
    let rhs = n as f64 / f64::from(k - 1) * (1.0 + tau_closed(k, cfg)?);
    Ok(Lemma6Check { n, k, lhs_exact, lhs, rhs, holds: lhs <= rhs })
}

/// Both sides of the summed-`mu` lower bound, reported without a verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma5Diagnostic {
    pub n: u64,
    pub k: u32,
    pub lhs: CountValue,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub gap: f64,
    /// `n > 3k`; below that the asymptotic statement carries no weight.
    pub in_regime: bool,
}

pub fn check_lemma5_diagnostic(n: u64, k: u32, cfg: &QuadratureConfig) -> Result<Lemma5Diagnostic> {
    if k < 3 {
        return Err(Error::domain("summed-mu diagnostic needs k >= 3"));
    }
    let ku = u64::from(k);
    require_k_below_n(n, ku)?;
    let s = n - ku;
    let mut lhs = num_bigint::BigUint::default();
    for h in s.div_ceil(ku)..s {
        lhs += count::mu_closed(CompositionSpace { s, k: ku, h }).0;
    }
    let lhs = CountValue(lhs);
    let coeff = (n - ku) as f64 - n as f64 / f64::from(k - 1) * (1.0 + tau_closed(k, cfg)?);
    let rhs = coeff * binomial(n as i64, i64::from(k)).to_f64();
    Ok(Lemma5Diagnostic {
        n,
        k,
        gap: lhs.to_f64() - rhs,
        lhs,
        rhs,
        in_regime: n > 3 * ku,
    })
}

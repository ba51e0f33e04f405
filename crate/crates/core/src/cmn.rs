//! The composed mean `M_{k,s,q}`: the `s`-th power mean of the `q`-th power
//! means of all k-element sub-tuples, collapsing to `P_q` when `k >= n`.
//!
//! Three evaluators share one definition:
//!
//! * [`cmn_mean_naive`] enumerates every k-subset in lexicographic order and is
//!   the oracle for the others. It refuses inputs above [`ENUMERATION_BUDGET`].
//! * [`cmn_mean_fast`] takes a closed form whenever one exists (degenerate
//!   collapses, and `q = 0` through the elementary symmetric polynomial
//!   `e_k(v^{s/k})`), falling back to enumeration.
//! * [`cmn_mean_sampled`] estimates the mean from uniform random k-subsets.
//!
//! Enumeration and sampling run in fixed-size blocks whose results are
//! concatenated in block order, so the output does not depend on the number
//! of worker threads.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::{binomial, ln_binomial, next_subset, sample_subset, unrank_subset};
use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::power_means::{
    is_geometric, is_zero_exponent, power_mean, power_mean_in_order, power_mean_with,
};
use crate::sum::CompensatedSum;
use crate::symmetric::ElementarySymmetric;
use crate::vector::PositiveVector;

/// Largest number of subsets the naive evaluator will enumerate.
pub const ENUMERATION_BUDGET: u128 = 1 << 22;

/// Longest vector the naive evaluator accepts when `k < n`.
pub const MAX_ENUMERATION_LEN: usize = 30;

/// Smallest sample count accepted by the sampler.
pub const MIN_SAMPLES: u64 = 100;

/// Relative tolerance of the boolean inequality checks.
pub const CHECK_REL_TOL: f64 = 1e-10;

/// Absolute floor under [`CHECK_REL_TOL`].
pub const CHECK_ABS_FLOOR: f64 = 1e-300;

/// Relative tolerance of the pairwise-mean identity.
pub const IDENTITY_REL_TOL: f64 = 1e-11;

const ENUM_CHUNK: u128 = 1 << 14;
const SAMPLE_BLOCK: u64 = 1 << 12;
const MAX_BATCHES: usize = 1000;

/// The parameter triple `(k, s, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeanParams {
    k: usize,
    s: ExtReal,
    q: ExtReal,
}

impl MeanParams {
    pub fn new(k: usize, s: ExtReal, q: ExtReal) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("subset size k must be at least 1"));
        }
        Ok(MeanParams { k, s, q })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Outer exponent.
    pub fn s(&self) -> ExtReal {
        self.s
    }

    /// Inner exponent.
    pub fn q(&self) -> ExtReal {
        self.q
    }
}

impl fmt::Display for MeanParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.k, self.s, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    FastSymmetric,
    Degenerate,
    MonteCarlo,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "Exact",
            Method::FastSymmetric => "FastSymmetric",
            Method::Degenerate => "Degenerate",
            Method::MonteCarlo => "MonteCarlo",
        })
    }
}

/// Value of `M_{k,s,q}` and how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct CmnEvalReport {
    pub value: f64,
    pub method: Method,
    /// Draws used; Monte Carlo only.
    pub samples: Option<u64>,
    /// Standard error of `value`; Monte Carlo only.
    pub stderr_estimate: Option<f64>,
    pub caveat: Option<String>,
}

impl CmnEvalReport {
    fn deterministic(value: f64, method: Method) -> Self {
        CmnEvalReport {
            value,
            method,
            samples: None,
            stderr_estimate: None,
            caveat: None,
        }
    }
}

fn enumeration_size(n: usize, k: usize) -> Result<u128> {
    if n > MAX_ENUMERATION_LEN {
        return Err(Error::capacity(format!(
            "enumeration limited to n <= {MAX_ENUMERATION_LEN}, got n = {n}"
        )));
    }
    match binomial(n, k) {
        Some(c) if c <= ENUMERATION_BUDGET => Ok(c),
        c => Err(Error::capacity(format!(
            "C({n}, {k}) = {} subsets exceeds the budget of {ENUMERATION_BUDGET}",
            c.map_or_else(|| "overflow".to_string(), |c| c.to_string())
        ))),
    }
}

/// Exact `M_{k,s,q}(v)` by enumerating every k-subset.
pub fn cmn_mean_naive(params: &MeanParams, v: &PositiveVector) -> Result<f64> {
    let (n, k) = (v.len(), params.k);
    if k >= n {
        return Ok(power_mean(params.q, v));
    }
    let total = enumeration_size(n, k)?;
    let inner = subset_means(v, k, params.q, total);
    Ok(power_mean_with(params.s, &inner, &mut Vec::new()))
}

fn subset_means(v: &[f64], k: usize, q: ExtReal, total: u128) -> Vec<f64> {
    let n = v.len();
    let chunks = total.div_ceil(ENUM_CHUNK) as usize;
    let parts: Vec<Vec<f64>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c as u128 * ENUM_CHUNK;
            let len = ENUM_CHUNK.min(total - start) as usize;
            let mut subset = unrank_subset(n, k, start);
            let mut buf = Vec::with_capacity(k);
            let mut scratch = Vec::with_capacity(k);
            let mut out = Vec::with_capacity(len);
            loop {
                buf.clear();
                buf.extend(subset.iter().map(|&i| v[i]));
                out.push(power_mean_with(q, &buf, &mut scratch));
                if out.len() == len {
                    break;
                }
                next_subset(&mut subset, n);
            }
            out
        })
        .collect();
    parts.concat()
}

/// `M_{k,s,q}(v)` through the cheapest applicable route.
///
/// Dispatch order: `k >= n` and `s = q` collapse to `P_q`; `k = 1` is `P_s`
/// of singletons; `q = 0` with finite nonzero `s` uses
/// `M = (e_k(v^{s/k}) / C(n,k))^{1/s}`; `q = s = 0` is the geometric mean.
/// Everything else is enumerated, which fails with a capacity error above
/// the budget.
pub fn cmn_mean_fast(params: &MeanParams, v: &PositiveVector) -> Result<CmnEvalReport> {
    let (n, k, s, q) = (v.len(), params.k, params.s, params.q);
    if k >= n || s == q {
        return Ok(CmnEvalReport::deterministic(
            power_mean(q, v),
            Method::Degenerate,
        ));
    }
    if k == 1 {
        return Ok(CmnEvalReport::deterministic(
            power_mean(s, v),
            Method::Degenerate,
        ));
    }
    if is_geometric(q) {
        if let ExtReal::Finite(sv) = s {
            return Ok(if is_zero_exponent(sv) {
                CmnEvalReport::deterministic(power_mean(ExtReal::ZERO, v), Method::Degenerate)
            } else {
                CmnEvalReport::deterministic(symmetric_mean(k, sv, v), Method::FastSymmetric)
            });
        }
    }
    cmn_mean_naive(params, v)
        .map(|value| CmnEvalReport::deterministic(value, Method::Exact))
        .map_err(|e| {
            if e.is_capacity() {
                e.context(format!(
                    "no closed form for (k, s, q) = ({params}); use the Monte Carlo sampler"
                ))
            } else {
                e
            }
        })
}

/// `M_{k,s,0}` for finite `s != 0` and `2 <= k < n`.
fn symmetric_mean(k: usize, s: f64, v: &[f64]) -> f64 {
    let mut xs = v.to_vec();
    xs.sort_unstable_by(f64::total_cmp);
    let (lo, hi) = (xs[0], xs[xs.len() - 1]);
    if lo == hi {
        return lo;
    }
    // Anchoring makes every b_i lie in (0, 1].
    let anchor = if s > 0.0 { hi } else { lo };
    let ln_anchor = anchor.ln();
    let e = s / k as f64;
    let mut es = ElementarySymmetric::new(k);
    for &x in &xs {
        push_power(&mut es, x / anchor, e, || x.ln() - ln_anchor);
    }
    let ln_ratio = es.ln_top() - ln_binomial(xs.len(), k);
    (anchor * (ln_ratio / s).exp()).clamp(lo, hi)
}

/// Pushes `r^e`, going through logarithms when `r` or the power leaves the
/// normal range.
fn push_power(es: &mut ElementarySymmetric, r: f64, e: f64, ln_r: impl FnOnce() -> f64) {
    if r.is_normal() {
        let b = r.powf(e);
        if b.is_normal() {
            es.push(b);
            return;
        }
    }
    es.push_ln(e * ln_r());
}

/// Monte Carlo estimate of `M_{k,s,q}(v)` from `samples` uniform k-subsets.
///
/// The input is sorted first, so for a fixed seed the estimate does not
/// depend on entry order. The reported standard error comes from batch means
/// of the `s`-th power aggregate (log aggregate for `s = 0`) carried through
/// the outer `1/s` power by the delta method. For `s = +-inf` the estimate is
/// the extreme sampled subset mean, with a zero standard error and a caveat.
pub fn cmn_mean_sampled(
    params: &MeanParams,
    v: &PositiveVector,
    samples: u64,
    seed: u64,
) -> Result<CmnEvalReport> {
    let (n, k) = (v.len(), params.k);
    if samples < MIN_SAMPLES {
        return Err(Error::domain(format!(
            "sampler needs at least {MIN_SAMPLES} samples, got {samples}"
        )));
    }
    if k >= n {
        return Err(Error::domain(format!(
            "sampler needs k < n, got k = {k}, n = {n}"
        )));
    }
    let sorted = v.sorted();
    let inner = sampled_means(&sorted, k, params.q, samples, seed);
    let mut report = CmnEvalReport {
        value: 0.0,
        method: Method::MonteCarlo,
        samples: Some(samples),
        stderr_estimate: Some(0.0),
        caveat: None,
    };
    match params.s {
        ExtReal::PosInf | ExtReal::NegInf => {
            report.value = power_mean_in_order(params.s, &inner, &mut Vec::new());
            report.caveat = Some(
                "infinite outer exponent: extreme over sampled subsets only, \
                 a one-sided estimate with no error bar"
                    .to_string(),
            );
        }
        ExtReal::Finite(s) => {
            let value = power_mean_in_order(params.s, &inner, &mut Vec::new());
            report.value = value;
            report.stderr_estimate = Some(batch_stderr(&inner, s, value));
        }
    }
    Ok(report)
}

fn sampled_means(v: &[f64], k: usize, q: ExtReal, samples: u64, seed: u64) -> Vec<f64> {
    let n = v.len();
    let blocks = samples.div_ceil(SAMPLE_BLOCK);
    let parts: Vec<Vec<f64>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let len = SAMPLE_BLOCK.min(samples - b * SAMPLE_BLOCK) as usize;
            let mut subset = Vec::with_capacity(k);
            let mut buf = Vec::with_capacity(k);
            let mut scratch = Vec::with_capacity(k);
            (0..len)
                .map(|_| {
                    sample_subset(&mut rng, n, k, &mut subset);
                    buf.clear();
                    buf.extend(subset.iter().map(|&i| v[i]));
                    power_mean_with(q, &buf, &mut scratch)
                })
                .collect()
        })
        .collect();
    parts.concat()
}

/// Standard error of `P_s(inner)` from batch means of `(x / value)^s`.
fn batch_stderr(inner: &[f64], s: f64, value: f64) -> f64 {
    let ln_value = value.ln();
    let geometric = is_zero_exponent(s);
    let y = |x: f64| {
        let t = x.ln() - ln_value;
        if geometric {
            t
        } else {
            (s * t).exp()
        }
    };
    let n = inner.len();
    let batches = n.min(MAX_BATCHES);
    let means: Vec<f64> = (0..batches)
        .map(|b| {
            let (lo, hi) = (b * n / batches, (b + 1) * n / batches);
            let sum: CompensatedSum = inner[lo..hi].iter().map(|&x| y(x)).collect();
            sum.value() / (hi - lo) as f64
        })
        .collect();
    let grand = means.iter().copied().collect::<CompensatedSum>().value() / batches as f64;
    let var = means
        .iter()
        .map(|m| (m - grand).powi(2))
        .collect::<CompensatedSum>()
        .value()
        / (batches - 1).max(1) as f64;
    let se = (var / batches as f64).sqrt();
    if geometric {
        value * se
    } else {
        value * se / (s.abs() * grand)
    }
}

/// `lhs <= rhs` up to the relative check tolerance.
pub(crate) fn within(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + (CHECK_REL_TOL * rhs.abs()).max(CHECK_ABS_FLOOR)
}

fn evaluate(k: usize, s: ExtReal, q: ExtReal, v: &PositiveVector) -> Result<f64> {
    Ok(cmn_mean_fast(&MeanParams::new(k, s, q)?, v)?.value)
}

/// Whether `M_{k,s,q}(v) <= M_{k,t,p}(v)` for `q <= p`, `s <= t`.
pub fn check_qs_monotonicity(
    k: usize,
    s: ExtReal,
    t: ExtReal,
    q: ExtReal,
    p: ExtReal,
    v: &PositiveVector,
) -> Result<bool> {
    if q > p || s > t {
        return Err(Error::domain(format!(
            "need q <= p and s <= t, got q = {q}, p = {p}, s = {s}, t = {t}"
        )));
    }
    Ok(within(evaluate(k, s, q, v)?, evaluate(k, t, p, v)?))
}

/// Whether `M_{k,s,q}(v) <= M_{k-1,s,q}(v)` for `s > q`, `2 <= k <= n`.
pub fn check_k_monotonicity(k: usize, s: ExtReal, q: ExtReal, v: &PositiveVector) -> Result<bool> {
    if s <= q {
        return Err(Error::domain(format!("need s > q, got s = {s}, q = {q}")));
    }
    if k < 2 || k > v.len() {
        return Err(Error::domain(format!(
            "need 2 <= k <= n, got k = {k}, n = {}",
            v.len()
        )));
    }
    Ok(within(evaluate(k, s, q, v)?, evaluate(k - 1, s, q, v)?))
}

/// Both sides of `M_{2,1,0}(v) = n/(n-1) (P_{1/2}(v) - P_1(v)/n)` and the
/// bound `M_{2,1,0}(v) <= P_{1/2}(v)` that follows from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairwiseIdentity {
    /// `M_{2,1,0}(v)`, enumerated when within budget.
    pub pair_mean: f64,
    /// `n/(n-1) (P_{1/2} - P_1/n)`.
    pub closed_form: f64,
    /// `P_{1/2}(v)`.
    pub half_mean: f64,
}

impl PairwiseIdentity {
    pub fn identity_residual(&self) -> f64 {
        (self.pair_mean - self.closed_form).abs() / self.pair_mean
    }

    pub fn holds(&self) -> bool {
        self.identity_residual() <= IDENTITY_REL_TOL && within(self.pair_mean, self.half_mean)
    }
}

pub fn pairwise_identity(v: &PositiveVector) -> Result<PairwiseIdentity> {
    let n = v.len();
    if n < 2 {
        return Err(Error::domain("pairwise identity needs n >= 2"));
    }
    let params = MeanParams::new(2, ExtReal::ONE, ExtReal::ZERO)?;
    let pair_mean = match cmn_mean_naive(&params, v) {
        Ok(m) => m,
        Err(e) if e.is_capacity() => cmn_mean_fast(&params, v)?.value,
        Err(e) => return Err(e),
    };
    let half_mean = power_mean(ExtReal::Finite(0.5), v);
    let arithmetic = power_mean(ExtReal::ONE, v);
    let nf = n as f64;
    let closed_form = nf / (nf - 1.0) * (half_mean - arithmetic / nf);
    Ok(PairwiseIdentity {
        pair_mean,
        closed_form,
        half_mean,
    })
}

/// Checks the pairwise identity to [`IDENTITY_REL_TOL`] and the majorization
/// `M_{2,1,0} <= P_{1/2}`.
pub fn pairwise_identity_check(v: &PositiveVector) -> Result<bool> {
    pairwise_identity(v).map(|id| id.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(xs: &[f64]) -> PositiveVector {
        PositiveVector::from_slice(xs).unwrap()
    }

    fn params(k: usize, s: f64, q: f64) -> MeanParams {
        MeanParams::new(k, ExtReal::new(s).unwrap(), ExtReal::new(q).unwrap()).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn k_must_be_positive() {
        assert!(MeanParams::new(0, ExtReal::ONE, ExtReal::ONE).is_err());
    }

    #[test]
    fn hamy_two_by_hand() {
        // Subset geometric means 2, 3, 6.
        let m = cmn_mean_naive(&params(2, 1.0, 0.0), &pv(&[1.0, 4.0, 9.0])).unwrap();
        assert!(rel(m, 11.0 / 3.0) < 1e-15);
        let r = cmn_mean_fast(&params(2, 1.0, 0.0), &pv(&[1.0, 4.0, 9.0])).unwrap();
        assert_eq!(r.method, Method::FastSymmetric);
        assert!(rel(r.value, 11.0 / 3.0) < 1e-14);
    }

    #[test]
    fn k_at_least_n_is_inner_mean() {
        let v = pv(&[1.0, 2.0, 3.0]);
        let m = cmn_mean_naive(&params(5, 7.0, 2.0), &v).unwrap();
        assert!(rel(m, (14.0f64 / 3.0).sqrt()) < 1e-15);
        let r = cmn_mean_fast(&params(5, 7.0, 2.0), &v).unwrap();
        assert_eq!(r.method, Method::Degenerate);
        assert_eq!(r.value, m);
    }

    #[test]
    fn constant_vector_is_fixed() {
        let v = PositiveVector::constant(2.5, 7).unwrap();
        for (k, s, q) in [(2, 1.0, 0.0), (3, -2.0, 5.0), (4, f64::INFINITY, 0.5)] {
            assert_eq!(cmn_mean_naive(&params(k, s, q), &v).unwrap(), 2.5);
            assert_eq!(cmn_mean_fast(&params(k, s, q), &v).unwrap().value, 2.5);
        }
        let r = cmn_mean_sampled(&params(3, 2.0, 1.0), &v, 1000, 1).unwrap();
        assert_eq!(r.value, 2.5);
        assert_eq!(r.stderr_estimate, Some(0.0));
    }

    #[test]
    fn fast_path_dispatch() {
        let v = pv(&[1.0, 4.0, 16.0]);
        let r = cmn_mean_fast(&params(3, 4.0, 4.0), &pv(&[1.0, 2.0, 3.0, 4.0])).unwrap();
        assert_eq!(r.method, Method::Degenerate);
        assert_eq!(
            r.value,
            power_mean(ExtReal::Finite(4.0), &pv(&[1.0, 2.0, 3.0, 4.0]))
        );

        let r = cmn_mean_fast(&params(2, 0.0, 0.0), &v).unwrap();
        assert_eq!(r.method, Method::Degenerate);
        assert!(rel(r.value, 4.0) < 1e-15);
        let naive = cmn_mean_naive(&params(2, 0.0, 0.0), &v).unwrap();
        assert!(rel(naive, 4.0) < 1e-15);

        let r = cmn_mean_fast(&params(2, f64::INFINITY, 0.0), &v).unwrap();
        assert_eq!(r.method, Method::Exact);
        let r = cmn_mean_fast(&params(2, 1.0, 1.0), &v).unwrap();
        assert_eq!(r.method, Method::Degenerate);
        let r = cmn_mean_fast(&params(2, 2.0, 1.0), &v).unwrap();
        assert_eq!(r.method, Method::Exact);
    }

    #[test]
    fn budget_is_enforced() {
        let v = PositiveVector::new((1..=31).map(f64::from).collect()).unwrap();
        assert!(cmn_mean_naive(&params(2, 2.0, 1.0), &v)
            .unwrap_err()
            .is_capacity());
        let v = PositiveVector::new((1..=30).map(f64::from).collect()).unwrap();
        // C(30, 15) is far above 2^22, C(30, 5) = 142506 is below.
        assert!(cmn_mean_naive(&params(15, 2.0, 1.0), &v)
            .unwrap_err()
            .is_capacity());
        assert!(cmn_mean_naive(&params(5, 2.0, 1.0), &v).is_ok());
        let err = cmn_mean_fast(&params(15, 2.0, 1.0), &v).unwrap_err();
        assert!(err.is_capacity());
        assert!(err.to_string().contains("sampler"));
        // The symmetric route has no budget.
        assert!(cmn_mean_fast(&params(15, 2.0, 0.0), &v).is_ok());
    }

    #[test]
    fn enumeration_spans_several_chunks() {
        // C(24, 6) = 134596 subsets, about eight enumeration chunks.
        let v =
            PositiveVector::new((1..=24).map(|i| 1.0 + (i as f64).sin().abs()).collect()).unwrap();
        let naive = cmn_mean_naive(&params(6, 2.0, 0.0), &v).unwrap();
        let fast = cmn_mean_fast(&params(6, 2.0, 0.0), &v).unwrap().value;
        assert!(rel(naive, fast) < 1e-12);
    }

    #[test]
    fn sampler_close_to_exact() {
        let v = pv(&[1.0, 4.0, 9.0]);
        let r = cmn_mean_sampled(&params(2, 1.0, 0.0), &v, 100_000, 7).unwrap();
        let se = r.stderr_estimate.unwrap();
        assert!(se > 0.0);
        assert!((r.value - 11.0 / 3.0).abs() <= 3.0 * se, "{r:?}");
        assert_eq!(r.samples, Some(100_000));
    }

    #[test]
    fn sampler_is_deterministic_and_order_free() {
        let v = pv(&[5.0, 1.0, 3.0, 2.0, 8.0, 0.5]);
        let w = pv(&[0.5, 8.0, 2.0, 3.0, 1.0, 5.0]);
        let p = params(3, 2.0, -1.0);
        let a = cmn_mean_sampled(&p, &v, 10_000, 42).unwrap();
        let b = cmn_mean_sampled(&p, &w, 10_000, 42).unwrap();
        assert_eq!(a, b);
        let c = cmn_mean_sampled(&p, &v, 10_000, 43).unwrap();
        assert_ne!(a.value, c.value);
    }

    #[test]
    fn sampler_preconditions() {
        let v = pv(&[1.0, 2.0, 3.0]);
        assert!(cmn_mean_sampled(&params(2, 1.0, 0.0), &v, 99, 0).is_err());
        assert!(cmn_mean_sampled(&params(3, 1.0, 0.0), &v, 1000, 0).is_err());
        let r = cmn_mean_sampled(&params(2, f64::INFINITY, 0.0), &v, 1000, 0).unwrap();
        assert_eq!(r.stderr_estimate, Some(0.0));
        assert!(r.caveat.is_some());
        assert!(rel(r.value, 6f64.sqrt()) < 1e-15);
    }

    #[test]
    fn monotonicity_examples() {
        let v = pv(&[1.0, 4.0, 9.0]);
        let (z, one) = (ExtReal::ZERO, ExtReal::ONE);
        assert!(check_qs_monotonicity(2, z, one, z, z, &v).unwrap());
        assert!(check_qs_monotonicity(2, one, one, z, z, &v).unwrap());
        assert!(check_qs_monotonicity(2, one, z, z, z, &v).is_err());
        assert!(check_qs_monotonicity(2, z, one, one, z, &v).is_err());

        // M_{2,1,0} = 11/3 <= M_{1,1,0} = P_1 = 14/3.
        assert!(check_k_monotonicity(2, one, z, &v).unwrap());
        assert!(check_k_monotonicity(3, one, z, &v).unwrap());
        assert!(check_k_monotonicity(2, z, one, &v).is_err());
        assert!(check_k_monotonicity(1, one, z, &v).is_err());
        assert!(check_k_monotonicity(4, one, z, &v).is_err());
        let c = PositiveVector::constant(3.0, 4).unwrap();
        assert!(check_k_monotonicity(3, ExtReal::PosInf, ExtReal::NegInf, &c).unwrap());
    }

    #[test]
    fn pairwise_identity_examples() {
        let id = pairwise_identity(&pv(&[1.0, 4.0, 9.0])).unwrap();
        assert!(rel(id.pair_mean, 11.0 / 3.0) < 1e-15);
        assert!(rel(id.closed_form, 11.0 / 3.0) < 1e-14);
        assert!(rel(id.half_mean, 4.0) < 1e-15);
        assert!(id.holds());
        assert!(pairwise_identity_check(&PositiveVector::constant(0.25, 5).unwrap()).unwrap());
        assert!(pairwise_identity_check(&pv(&[1.0])).is_err());
        // Above the enumeration limit the symmetric route supplies M_{2,1,0}.
        let big = PositiveVector::new((1..=50).map(|i| 1.0 / i as f64).collect()).unwrap();
        assert!(pairwise_identity_check(&big).unwrap());
    }
}

//! Classical power means `P_p` for every extended-real exponent.
//!
//! Finite exponents are evaluated relative to an anchor entry (the maximum
//! for `p > 0`, the minimum for `p < 0`) so every term lies in `(0, 1]` and
//! nothing overflows for entries spanning `[1e-300, 1e300]` with `|p| <= 1e3`.
//! Small exponents go through `expm1`/`ln_1p` to avoid the cancellation in
//! `(mean)^(1/p)`. Terms are sorted before the compensated reduction, which
//! makes the result bit-for-bit independent of entry order.

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::sum::compensated_sum;
use crate::vector::{validate, PositiveVector};

/// Exponents with `|p|` below this are evaluated as the geometric mean.
pub const ZERO_EXPONENT_THRESHOLD: f64 = 1e-12;

/// Below this `|p|` the `expm1`/`ln_1p` form is used.
const SMALL_EXPONENT: f64 = 0.5;

pub(crate) fn is_zero_exponent(p: f64) -> bool {
    p.abs() < ZERO_EXPONENT_THRESHOLD
}

/// True when `p` is finite and evaluated through the geometric-mean branch.
pub fn is_geometric(p: ExtReal) -> bool {
    p.finite().is_some_and(is_zero_exponent)
}

/// `P_p(v)`.
pub fn power_mean(p: ExtReal, v: &PositiveVector) -> f64 {
    power_mean_with(p, v, &mut Vec::with_capacity(v.len()))
}

/// `P_p` of a raw slice, validating the entries first.
pub fn power_mean_of(p: ExtReal, xs: &[f64]) -> Result<f64> {
    validate(xs)?;
    Ok(power_mean_with(p, xs, &mut Vec::with_capacity(xs.len())))
}

/// Core evaluator. `xs` must be nonempty, positive and finite; `scratch` is
/// reused across calls by the subset evaluators.
pub(crate) fn power_mean_with(p: ExtReal, xs: &[f64], scratch: &mut Vec<f64>) -> f64 {
    evaluate(p, xs, scratch, true)
}

/// As [`power_mean_with`] but summing in the given order: deterministic, not
/// permutation invariant, and cheaper on long inputs.
pub(crate) fn power_mean_in_order(p: ExtReal, xs: &[f64], scratch: &mut Vec<f64>) -> f64 {
    evaluate(p, xs, scratch, false)
}

/// `r^p`, exact for the common exponents.
fn pow(r: f64, p: f64) -> f64 {
    if p == 1.0 {
        r
    } else if p == 2.0 {
        r * r
    } else if p == -1.0 {
        1.0 / r
    } else if p == -2.0 {
        let t = 1.0 / r;
        t * t
    } else if p == 0.5 {
        r.sqrt()
    } else if p == -0.5 {
        1.0 / r.sqrt()
    } else {
        r.powf(p)
    }
}

fn evaluate(p: ExtReal, xs: &[f64], scratch: &mut Vec<f64>, sort: bool) -> f64 {
    debug_assert!(!xs.is_empty());
    let (lo, hi) = min_max(xs);
    let p = match p {
        ExtReal::NegInf => return lo,
        ExtReal::PosInf => return hi,
        ExtReal::Finite(p) => p,
    };
    if lo == hi {
        return lo;
    }
    let n = xs.len() as f64;
    scratch.clear();

    let value = if is_zero_exponent(p) {
        let ln_hi = hi.ln();
        scratch.extend(xs.iter().map(|x| x.ln() - ln_hi));
        hi * (reduce(scratch, sort) / n).exp()
    } else {
        let anchor = if p > 0.0 { hi } else { lo };
        let ln_anchor = anchor.ln();
        if p.abs() < SMALL_EXPONENT {
            scratch.extend(xs.iter().map(|x| (p * (x.ln() - ln_anchor)).exp_m1()));
            let log_mean = (reduce(scratch, sort) / n).ln_1p();
            anchor * (log_mean / p).exp()
        } else {
            scratch.extend(xs.iter().map(|&x| {
                let r = x / anchor;
                if r.is_normal() {
                    pow(r, p)
                } else {
                    (p * (x.ln() - ln_anchor)).exp()
                }
            }));
            anchor * pow(reduce(scratch, sort) / n, 1.0 / p)
        }
    };
    value.clamp(lo, hi)
}

fn reduce(terms: &mut [f64], sort: bool) -> f64 {
    if sort {
        terms.sort_unstable_by(f64::total_cmp);
    }
    compensated_sum(terms.iter().copied())
}

fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// Whether `P_{q1}(v) > len(v)^(-1/q1) * max(v)` holds.
///
/// The bound constant uses the length of `v`; for a single entry both sides
/// coincide and the strict comparison is false.
pub fn power_mean_lower_bound_check(q1: f64, v: &PositiveVector) -> Result<bool> {
    if !(q1.is_finite() && q1 > 0.0) {
        return Err(Error::domain(format!(
            "lower-bound exponent must be positive and finite, got {q1}"
        )));
    }
    let k = v.len() as f64;
    let bound = k.powf(-1.0 / q1) * v.max();
    Ok(power_mean(ExtReal::Finite(q1), v) > bound)
}

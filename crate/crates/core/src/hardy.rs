//! Hardy-type partial sums `sum_{n<=N} M(a_1..a_n) / sum_{n<=N} a_n`, the
//! sequence families they run on, and the sharpness experiments for the
//! constant 4 of `M_{2,1,0}` and `P_{1/2}`.

use std::fmt;
use std::str::FromStr;

use crate::cmn::{cmn_mean_fast, MeanParams};
use crate::combinatorics::ln_binomial;
use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::power_means::{is_geometric, is_zero_exponent, power_mean};
use crate::sum::CompensatedSum;
use crate::symmetric::ElementarySymmetric;
use crate::vector::PositiveVector;

/// `(1 - p)^(-1/p)`, the sharp Hardy constant of `P_p` for `0 < p < 1`.
pub fn landau_constant(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!(
            "Landau constant needs 0 < p < 1, got {p}"
        )));
    }
    Ok((1.0 - p).powf(-1.0 / p))
}

/// Positive test sequences `a_1, a_2, ..`.
#[derive(Debug, Clone, PartialEq)]
pub enum SequenceFamily {
    /// `a_n = 1/n`. Not summable; only usable with an explicit opt-in.
    Harmonic,
    /// `a_n = 1/n` for `n <= n0`, then `a_n = n^-2`.
    HarmonicTruncated { n0: usize },
    /// `a_n = n^-alpha`, `alpha > 1`.
    PowerTail { alpha: f64 },
    /// `a_n = r^n`, `0 < r < 1`.
    Geometric { ratio: f64 },
    /// An explicit finite list. Terms past its end would be zero, which the
    /// positive-sequence experiments reject.
    Custom(Vec<f64>),
}

impl SequenceFamily {
    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceFamily::Harmonic => Ok(()),
            SequenceFamily::HarmonicTruncated { n0 } if *n0 >= 1 => Ok(()),
            SequenceFamily::HarmonicTruncated { .. } => {
                Err(Error::domain("harmonic-truncated needs n0 >= 1"))
            }
            SequenceFamily::PowerTail { alpha } if alpha.is_finite() && *alpha > 1.0 => Ok(()),
            SequenceFamily::PowerTail { alpha } => Err(Error::domain(format!(
                "power tail needs a finite exponent alpha > 1, got {alpha}"
            ))),
            SequenceFamily::Geometric { ratio } if *ratio > 0.0 && *ratio < 1.0 => Ok(()),
            SequenceFamily::Geometric { ratio } => Err(Error::domain(format!(
                "geometric family needs 0 < r < 1, got {ratio}"
            ))),
            SequenceFamily::Custom(xs) => crate::vector::validate(xs),
        }
    }

    pub fn is_summable(&self) -> bool {
        !matches!(self, SequenceFamily::Harmonic)
    }

    /// Length of the longest prefix whose terms are normal positive doubles,
    /// when that is shorter than any practical run.
    pub fn max_len(&self) -> Option<usize> {
        let floor = f64::MIN_POSITIVE.ln();
        match self {
            SequenceFamily::Geometric { ratio } => Some((floor / ratio.ln()).floor() as usize),
            SequenceFamily::PowerTail { alpha } => {
                let n = (-floor / alpha).exp();
                (n < 1e15).then(|| n.floor() as usize)
            }
            SequenceFamily::Custom(xs) => Some(xs.len()),
            _ => None,
        }
    }

    /// `a_n`, 1-based.
    pub fn term(&self, n: usize) -> Result<f64> {
        assert!(n >= 1, "sequences are 1-based");
        let x = n as f64;
        let a = match self {
            SequenceFamily::Harmonic => 1.0 / x,
            SequenceFamily::HarmonicTruncated { n0 } if n <= *n0 => 1.0 / x,
            SequenceFamily::HarmonicTruncated { .. } => 1.0 / (x * x),
            SequenceFamily::PowerTail { alpha } => x.powf(-alpha),
            SequenceFamily::Geometric { ratio } => ratio.powf(x),
            SequenceFamily::Custom(xs) => match xs.get(n - 1) {
                Some(&a) => a,
                None => {
                    return Err(Error::domain(format!(
                        "custom sequence has {} terms; term {n} would be zero",
                        xs.len()
                    )))
                }
            },
        };
        if a < f64::MIN_POSITIVE {
            return Err(Error::domain(format!(
                "term {n} of {self} underflows the positive double range"
            )));
        }
        Ok(a)
    }

    /// `(a_1, .., a_len)`.
    pub fn terms(&self, len: usize) -> Result<PositiveVector> {
        self.validate()?;
        PositiveVector::new((1..=len).map(|n| self.term(n)).collect::<Result<_>>()?)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SequenceFamily::Harmonic => "harmonic",
            SequenceFamily::HarmonicTruncated { .. } => "harmonic-truncated",
            SequenceFamily::PowerTail { .. } => "powertail",
            SequenceFamily::Geometric { .. } => "geometric",
            SequenceFamily::Custom(_) => "custom",
        }
    }

    /// The family parameters as they appear after the `:` in the family string.
    pub fn params(&self) -> String {
        match self {
            SequenceFamily::Harmonic => String::new(),
            SequenceFamily::HarmonicTruncated { n0 } => n0.to_string(),
            SequenceFamily::PowerTail { alpha } => alpha.to_string(),
            SequenceFamily::Geometric { ratio } => ratio.to_string(),
            SequenceFamily::Custom(xs) => {
                xs.iter().map(f64::to_string).collect::<Vec<_>>().join(",")
            }
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceFamily::Harmonic => f.write_str("harmonic"),
            _ => write!(f, "{}:{}", self.kind(), self.params()),
        }
    }
}

/// `harmonic`, `harmonic-truncated:<n0>` (alias `sharpness:<n0>`),
/// `powertail:<alpha>`, `geometric:<r>`, `custom:<a1>,<a2>,..`.
impl FromStr for SequenceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let bad = || Error::domain(format!("cannot parse sequence family {s:?}"));
        let num = |a: &str| a.trim().parse::<f64>().map_err(|_| bad());
        let family = match kind.to_ascii_lowercase().as_str() {
            "harmonic" if arg.is_empty() => SequenceFamily::Harmonic,
            "harmonic-truncated" | "sharpness" => SequenceFamily::HarmonicTruncated {
                n0: arg.trim().parse().map_err(|_| bad())?,
            },
            "powertail" => SequenceFamily::PowerTail { alpha: num(arg)? },
            "geometric" => SequenceFamily::Geometric { ratio: num(arg)? },
            "custom" => SequenceFamily::Custom(arg.split(',').map(num).collect::<Result<_>>()?),
            _ => return Err(bad()),
        };
        family.validate()?;
        Ok(family)
    }
}

/// A mean to run Hardy experiments on: `P_p` or `M_{k,s,q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanSpec {
    Power(ExtReal),
    Cmn(MeanParams),
}

impl MeanSpec {
    pub fn evaluate(&self, v: &PositiveVector) -> Result<f64> {
        match self {
            MeanSpec::Power(p) => Ok(power_mean(*p, v)),
            MeanSpec::Cmn(params) => Ok(cmn_mean_fast(params, v)?.value),
        }
    }

    /// An evaluator of `M(a_1..a_n)` over a growing prefix.
    pub fn prefix_evaluator(&self) -> PrefixMean {
        let kind = match *self {
            MeanSpec::Power(p) => PrefixKind::power(p),
            MeanSpec::Cmn(params) => {
                let (k, s, q) = (params.k(), params.s(), params.q());
                if s == q {
                    PrefixKind::power(q)
                } else if k == 1 {
                    PrefixKind::power(s)
                } else if is_geometric(q) && is_geometric(s) {
                    PrefixKind::power(ExtReal::ZERO)
                } else if k == 2 && s == ExtReal::ONE && is_geometric(q) {
                    PrefixKind::Pairwise {
                        roots: CompensatedSum::new(),
                        total: CompensatedSum::new(),
                    }
                } else if let (true, ExtReal::Finite(s)) = (is_geometric(q), s) {
                    PrefixKind::Symmetric {
                        s,
                        elementary: ElementarySymmetric::new(k),
                        logs: CompensatedSum::new(),
                    }
                } else {
                    PrefixKind::Direct {
                        params,
                        terms: Vec::new(),
                    }
                }
            }
        };
        PrefixMean {
            kind,
            n: 0,
            first: 0.0,
            lo: f64::INFINITY,
            hi: f64::NEG_INFINITY,
        }
    }
}

impl fmt::Display for MeanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanSpec::Power(p) => write!(f, "power:{p}"),
            MeanSpec::Cmn(params) => write!(f, "cmn:{params}"),
        }
    }
}

/// `power:<p>` or `cmn:<k>,<s>,<q>`, exponents accepting `inf` and `-inf`.
impl FromStr for MeanSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse mean {s:?}"));
        let (kind, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        match kind.to_ascii_lowercase().as_str() {
            "power" => Ok(MeanSpec::Power(arg.parse()?)),
            "cmn" => {
                let parts: Vec<&str> = arg.split(',').collect();
                let [k, s, q] = parts[..] else {
                    return Err(bad());
                };
                let k = k.trim().parse().map_err(|_| bad())?;
                Ok(MeanSpec::Cmn(MeanParams::new(k, s.parse()?, q.parse()?)?))
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone)]
enum PrefixKind {
    /// `sum (a_i / anchor)^p`, re-anchored at the running max (`p > 0`) or
    /// min (`p < 0`).
    PowerSum {
        p: f64,
        sum: CompensatedSum,
        anchor: f64,
    },
    LogSum(CompensatedSum),
    Min,
    Max,
    /// `M_{2,1,0} = (S^2 - T) / (n(n-1))` with `S = sum sqrt(a_i)`, `T = sum a_i`,
    /// both relative to `a_1`.
    Pairwise {
        roots: CompensatedSum,
        total: CompensatedSum,
    },
    /// `M_{k,s,0}` from the running `e_k((a_i / a_1)^{s/k})`.
    Symmetric {
        s: f64,
        elementary: ElementarySymmetric,
        logs: CompensatedSum,
    },
    /// Re-evaluates the whole prefix each step.
    Direct {
        params: MeanParams,
        terms: Vec<f64>,
    },
}

impl PrefixKind {
    fn power(p: ExtReal) -> Self {
        match p {
            ExtReal::NegInf => PrefixKind::Min,
            ExtReal::PosInf => PrefixKind::Max,
            ExtReal::Finite(p) if is_zero_exponent(p) => PrefixKind::LogSum(CompensatedSum::new()),
            ExtReal::Finite(p) => PrefixKind::PowerSum {
                p,
                sum: CompensatedSum::new(),
                anchor: f64::NAN,
            },
        }
    }
}

/// Incremental evaluator of `M(a_1..a_n)`; see [`MeanSpec::prefix_evaluator`].
///
/// Every closed-form case costs O(1) per term (O(k) for `M_{k,s,0}`); other
/// parameters fall back to re-evaluating the prefix, which is subject to
/// the enumeration budget.
#[derive(Debug, Clone)]
pub struct PrefixMean {
    kind: PrefixKind,
    n: usize,
    first: f64,
    lo: f64,
    hi: f64,
}

impl PrefixMean {
    /// Number of terms consumed.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Appends `a > 0` and returns the mean of the prefix including it.
    pub fn push(&mut self, a: f64) -> Result<f64> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::domain(format!(
                "term {} is {a}; terms must be strictly positive and finite",
                self.n + 1
            )));
        }
        self.n += 1;
        if self.n == 1 {
            self.first = a;
        }
        self.lo = self.lo.min(a);
        self.hi = self.hi.max(a);
        let n = self.n as f64;
        let value = match &mut self.kind {
            PrefixKind::Min => self.lo,
            PrefixKind::Max => self.hi,
            PrefixKind::LogSum(logs) => {
                logs.add(a.ln());
                (logs.value() / n).exp()
            }
            PrefixKind::PowerSum { p, sum, anchor } => {
                let p = *p;
                let target = if p > 0.0 { self.hi } else { self.lo };
                if anchor.is_nan() {
                    *anchor = target;
                } else if target != *anchor {
                    sum.scale(ratio_power(*anchor, target, p));
                    *anchor = target;
                }
                sum.add(ratio_power(a, *anchor, p));
                *anchor * (sum.value() / n).powf(1.0 / p)
            }
            PrefixKind::Pairwise { roots, total } => {
                let r = a / self.first;
                roots.add(r.sqrt());
                total.add(r);
                if self.n == 1 {
                    a
                } else {
                    let s = roots.value();
                    self.first * (s * s - total.value()) / (n * (n - 1.0))
                }
            }
            PrefixKind::Symmetric {
                s,
                elementary,
                logs,
            } => {
                let (s, k) = (*s, elementary.k());
                logs.add(a.ln());
                let first = self.first;
                let e = s / k as f64;
                let r = a / first;
                if r.is_normal() && r.powf(e).is_normal() {
                    elementary.push(r.powf(e));
                } else {
                    elementary.push_ln(e * (a.ln() - first.ln()));
                }
                if self.n <= k {
                    (logs.value() / n).exp()
                } else {
                    let ln_ratio = elementary.ln_top() - ln_binomial(self.n, k);
                    first * (ln_ratio / s).exp()
                }
            }
            PrefixKind::Direct { params, terms } => {
                terms.push(a);
                let prefix = PositiveVector::from_slice(terms)?;
                cmn_mean_fast(params, &prefix)
                    .map_err(|e| e.context(format!("prefix of length {}", self.n)))?
                    .value
            }
        };
        if !value.is_finite() {
            return Err(Error::domain(format!(
                "prefix mean at n = {} left the double range",
                self.n
            )));
        }
        Ok(value.clamp(self.lo, self.hi))
    }
}

/// `(x / anchor)^p` without overflow in the quotient.
fn ratio_power(x: f64, anchor: f64, p: f64) -> f64 {
    let r = x / anchor;
    if r.is_normal() {
        r.powf(p)
    } else {
        (p * (x.ln() - anchor.ln())).exp()
    }
}

/// One row of a Hardy experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardyRow {
    pub n: usize,
    /// `sum_{m<=n} M(a_1..a_m)`.
    pub partial_sum: f64,
    /// `sum_{m<=n} a_m`.
    pub partial_norm: f64,
    pub ratio: f64,
}

/// Outcome of a Hardy partial-sum experiment truncated at `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HardyEstimate {
    pub mean: MeanSpec,
    pub family: SequenceFamily,
    pub n: usize,
    pub sum: f64,
    pub norm: f64,
    pub ratio: f64,
}

fn check_run(family: &SequenceFamily, n: usize, allow_nonsummable: bool) -> Result<()> {
    if n < 1 {
        return Err(Error::domain("truncation length N must be at least 1"));
    }
    family.validate()?;
    if !family.is_summable() && !allow_nonsummable {
        return Err(Error::domain(format!(
            "{family} is not summable; ratio experiments on it need an explicit opt-in"
        )));
    }
    if let Some(max) = family.max_len() {
        if n > max {
            return Err(Error::domain(format!(
                "{family} has only {max} strictly positive double terms, N = {n} requested"
            )));
        }
    }
    Ok(())
}

/// Runs the experiment to `n` and reports rows at the given checkpoints
/// (values above `n` are ignored).
pub fn hardy_checkpoints(
    mean: &MeanSpec,
    family: &SequenceFamily,
    n: usize,
    checkpoints: &[usize],
    allow_nonsummable: bool,
) -> Result<Vec<HardyRow>> {
    check_run(family, n, allow_nonsummable)?;
    let mut marks: Vec<usize> = checkpoints
        .iter()
        .copied()
        .filter(|&c| c >= 1 && c <= n)
        .collect();
    marks.sort_unstable();
    marks.dedup();
    let mut marks = marks.into_iter().peekable();

    let mut eval = mean.prefix_evaluator();
    let mut sum = CompensatedSum::new();
    let mut norm = CompensatedSum::new();
    let mut rows = Vec::new();
    for m in 1..=n {
        if marks.peek().is_none() {
            break;
        }
        let a = family.term(m)?;
        let value = eval
            .push(a)
            .map_err(|e| e.context(format!("{mean} on {family}")))?;
        sum.add(value);
        norm.add(a);
        if marks.peek() == Some(&m) {
            marks.next();
            rows.push(HardyRow {
                n: m,
                partial_sum: sum.value(),
                partial_norm: norm.value(),
                ratio: sum.value() / norm.value(),
            });
        }
    }
    Ok(rows)
}

/// `sum_{n<=N} M(a_1..a_n)` and its ratio to `sum_{n<=N} a_n`.
pub fn hardy_partial_sum(
    mean: &MeanSpec,
    family: &SequenceFamily,
    n: usize,
    allow_nonsummable: bool,
) -> Result<HardyEstimate> {
    let row = hardy_checkpoints(mean, family, n, &[n], allow_nonsummable)?
        .pop()
        .expect("final checkpoint is always reported");
    Ok(HardyEstimate {
        mean: *mean,
        family: family.clone(),
        n,
        sum: row.partial_sum,
        norm: row.partial_norm,
        ratio: row.ratio,
    })
}

/// `1, 2, 5, 10, 20, 50, ..` up to `n`, always ending at `n`.
pub fn log_checkpoints(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut decade = 1usize;
    'outer: loop {
        for m in [1, 2, 5] {
            match decade.checked_mul(m) {
                Some(c) if c < n => out.push(c),
                _ => break 'outer,
            }
        }
        decade = match decade.checked_mul(10) {
            Some(d) => d,
            None => break,
        };
    }
    if n >= 1 {
        out.push(n);
    }
    out
}

/// `n * M_{2,1,0}(1, 1/2, .., 1/n)` at `n`; tends to 4 from below.
pub fn sharpness_limit_experiment(n: usize) -> Result<f64> {
    Ok(sharpness_limit_series(&[n])?[0])
}

/// [`sharpness_limit_experiment`] at several `n` in one pass.
pub fn sharpness_limit_series(ns: &[usize]) -> Result<Vec<f64>> {
    if let Some(bad) = ns.iter().find(|&&n| n < 2) {
        return Err(Error::domain(format!(
            "sharpness limit needs N >= 2, got {bad}"
        )));
    }
    let max = ns.iter().copied().max().unwrap_or(0);
    let mut roots = CompensatedSum::new();
    let mut total = CompensatedSum::new();
    let mut at = vec![0.0; max + 1];
    for (m, slot) in at.iter_mut().enumerate().skip(1) {
        let mf = m as f64;
        let a = 1.0 / mf;
        roots.add(a.sqrt());
        total.add(a);
        if m >= 2 {
            let s = roots.value();
            *slot = (s * s - total.value()) / (mf - 1.0);
        }
    }
    Ok(ns.iter().map(|&n| at[n]).collect())
}

/// `(1, 1/2, .., 1/n0, (n0+1)^-2, .., n^-2)`.
pub fn sharpness_sequence(n0: usize, n: usize) -> Result<PositiveVector> {
    if !(1 <= n0 && n0 <= n) {
        return Err(Error::domain(format!(
            "need 1 <= N0 <= N, got N0 = {n0}, N = {n}"
        )));
    }
    SequenceFamily::HarmonicTruncated { n0 }.terms(n)
}

/// `1, 2, 5, 10, ..` below `n`, followed by `n`: the default sweep of `N0`.
pub fn sharpness_grid(n: usize) -> Vec<usize> {
    log_checkpoints(n)
        .into_iter()
        .filter(|&m| m >= 10 || m == n)
        .collect()
}

/// Hardy ratios at `n` on the sharpness sequences for each `N0` in `n0s`.
pub fn sharpness_sweep(mean: &MeanSpec, n: usize, n0s: &[usize]) -> Result<Vec<HardyEstimate>> {
    n0s.iter()
        .map(|&n0| {
            if !(1 <= n0 && n0 <= n) {
                return Err(Error::domain(format!(
                    "need 1 <= N0 <= N, got N0 = {n0}, N = {n}"
                )));
            }
            hardy_partial_sum(mean, &SequenceFamily::HarmonicTruncated { n0 }, n, false)
        })
        .collect()
}

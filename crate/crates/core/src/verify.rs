//! The invariant suite behind `hardy-means verify`.
//!
//! Each property reports its number of cases and the worst residual seen;
//! a property passes when every case is inside its tolerance.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify, Reason, Verdict};
use crate::cmn::{
    cmn_mean_fast, cmn_mean_naive, pairwise_identity, CmnEvalReport, MeanParams, CHECK_REL_TOL,
    IDENTITY_REL_TOL,
};
use crate::error::Result;
use crate::ext_real::ExtReal;
use crate::hardy::{hardy_partial_sum, sharpness_limit_series, MeanSpec, SequenceFamily};
use crate::power_means::power_mean;
use crate::vector::PositiveVector;

/// Signature of the closed-form evaluator under test.
pub type FastEvaluator = fn(&MeanParams, &PositiveVector) -> Result<CmnEvalReport>;

/// Exponents exercised by the oracle-equivalence sweep.
pub const EXPONENT_GRID: [ExtReal; 8] = [
    ExtReal::NegInf,
    ExtReal::Finite(-2.0),
    ExtReal::Finite(-1.0),
    ExtReal::Finite(0.0),
    ExtReal::Finite(0.5),
    ExtReal::Finite(1.0),
    ExtReal::Finite(2.0),
    ExtReal::PosInf,
];

const ORACLE_TOL: f64 = 1e-10;
const HOMOGENEITY_TOL: f64 = 1e-12;

#[derive(Clone)]
pub struct VerifyConfig {
    /// Random vectors per property sweep.
    pub vectors: usize,
    /// Largest `n` in the oracle-equivalence sweep.
    pub oracle_max_n: usize,
    /// Random vectors per `(n, k, s, q)` cell of that sweep.
    pub oracle_vectors: usize,
    /// Largest `N` of the sharpness-limit experiment.
    pub limit_n: usize,
    /// Truncation of the Hardy-bound experiments.
    pub hardy_n: usize,
    pub seed: u64,
    pub fast: FastEvaluator,
}

impl VerifyConfig {
    pub fn full() -> Self {
        VerifyConfig {
            vectors: 1000,
            oracle_max_n: 12,
            oracle_vectors: 2,
            limit_n: 1_000_000,
            hardy_n: 100_000,
            seed: 0x5eed,
            fast: cmn_mean_fast,
        }
    }

    pub fn quick() -> Self {
        VerifyConfig {
            vectors: 100,
            oracle_max_n: 8,
            oracle_vectors: 1,
            limit_n: 10_000,
            hardy_n: 10_000,
            ..Self::full()
        }
    }
}

impl fmt::Debug for VerifyConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VerifyConfig")
            .field("vectors", &self.vectors)
            .field("oracle_max_n", &self.oracle_max_n)
            .field("oracle_vectors", &self.oracle_vectors)
            .field("limit_n", &self.limit_n)
            .field("hardy_n", &self.hardy_n)
            .field("seed", &self.seed)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub worst_residual: f64,
    pub detail: String,
}

/// Accumulates residuals; a case fails when its residual exceeds `tol` or
/// the evaluation errored.
struct Tally {
    name: &'static str,
    tol: f64,
    cases: usize,
    worst: f64,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str, tol: f64) -> Self {
        Tally {
            name,
            tol,
            cases: 0,
            worst: 0.0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, residual: Result<f64>, what: impl FnOnce() -> String) {
        self.cases += 1;
        let failure = match residual {
            Ok(r) if r <= self.tol => {
                self.worst = self.worst.max(r);
                None
            }
            Ok(r) => {
                self.worst = if r.is_nan() {
                    f64::INFINITY
                } else {
                    self.worst.max(r)
                };
                Some(format!("{} (residual {r:e})", what()))
            }
            Err(e) => {
                self.worst = f64::INFINITY;
                Some(format!("{}: {e}", what()))
            }
        };
        if let Some(f) = failure {
            self.failures += 1;
            self.first_failure.get_or_insert(f);
        }
    }

    fn finish(self) -> PropertyResult {
        let detail = match &self.first_failure {
            None => format!("tolerance {:e}", self.tol),
            Some(f) => format!(
                "{} of {} cases failed; first: {f}",
                self.failures, self.cases
            ),
        };
        PropertyResult {
            name: self.name,
            passed: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            worst_residual: self.worst,
            detail,
        }
    }
}

/// Log-uniform entries in `[1e-3, 1e3]`.
pub fn random_vector(rng: &mut impl Rng, n: usize) -> PositiveVector {
    PositiveVector::new(
        (0..n)
            .map(|_| 10f64.powf(rng.random_range(-3.0..3.0)))
            .collect(),
    )
    .expect("entries are positive")
}

/// An exponent from the grid, or a uniform real in `[-3, 3]`.
pub fn random_exponent(rng: &mut impl Rng) -> ExtReal {
    if rng.random_bool(0.5) {
        EXPONENT_GRID[rng.random_range(0..EXPONENT_GRID.len())]
    } else {
        ExtReal::Finite(rng.random_range(-3.0..3.0))
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Relative excess of `lhs` over `rhs`, clipped at zero.
fn excess(lhs: f64, rhs: f64) -> f64 {
    ((lhs - rhs) / rhs).max(0.0)
}

pub fn oracle_equivalence(cfg: &VerifyConfig) -> PropertyResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut t = Tally::new("oracle-equivalence", ORACLE_TOL);
    for n in 1..=cfg.oracle_max_n {
        for _ in 0..cfg.oracle_vectors {
            let v = random_vector(&mut rng, n);
            for k in 1..=n {
                for s in EXPONENT_GRID {
                    for q in EXPONENT_GRID {
                        let params = MeanParams::new(k, s, q).expect("k >= 1");
                        let res = (|| {
                            let naive = cmn_mean_naive(&params, &v)?;
                            Ok(rel((cfg.fast)(&params, &v)?.value, naive))
                        })();
                        t.record(res, || format!("n={n} (k,s,q)=({params})"));
                    }
                }
            }
        }
    }
    t.finish()
}

pub fn qs_monotonicity(cfg: &VerifyConfig) -> PropertyResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 1);
    let mut t = Tally::new("qs-monotonicity", CHECK_REL_TOL);
    for _ in 0..cfg.vectors {
        let n = rng.random_range(2..=8);
        let k = rng.random_range(1..=n);
        let v = random_vector(&mut rng, n);
        let (a, b) = (random_exponent(&mut rng), random_exponent(&mut rng));
        let (s, tt) = (a.min(b), a.max(b));
        let (a, b) = (random_exponent(&mut rng), random_exponent(&mut rng));
        let (q, p) = (a.min(b), a.max(b));
        let res = (|| {
            let lo = (cfg.fast)(&MeanParams::new(k, s, q)?, &v)?.value;
            let hi = (cfg.fast)(&MeanParams::new(k, tt, p)?, &v)?.value;
            Ok(excess(lo, hi))
        })();
        t.record(res, || {
            format!("k={k} s={s} t={tt} q={q} p={p} v={:?}", v.as_slice())
        });
    }
    t.finish()
}

pub fn k_monotonicity(cfg: &VerifyConfig) -> PropertyResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 2);
    let mut t = Tally::new("k-monotonicity", CHECK_REL_TOL);
    for _ in 0..cfg.vectors {
        let n = rng.random_range(2..=8);
        let k = rng.random_range(2..=n);
        let v = random_vector(&mut rng, n);
        let (s, q) = loop {
            let (a, b) = (random_exponent(&mut rng), random_exponent(&mut rng));
            if a != b {
                break (a.max(b), a.min(b));
            }
        };
        let res = (|| {
            let smaller = (cfg.fast)(&MeanParams::new(k, s, q)?, &v)?.value;
            let larger = (cfg.fast)(&MeanParams::new(k - 1, s, q)?, &v)?.value;
            Ok(excess(smaller, larger))
        })();
        t.record(res, || format!("k={k} s={s} q={q} v={:?}", v.as_slice()));
    }
    t.finish()
}

/// The pairwise identity and the majorization it implies, as two results.
pub fn pairwise_identity_sweep(cfg: &VerifyConfig) -> [PropertyResult; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 3);
    let mut ident = Tally::new("pairwise-identity", IDENTITY_REL_TOL);
    let mut major = Tally::new("pairwise-majorization", CHECK_REL_TOL);
    for _ in 0..cfg.vectors {
        let n = rng.random_range(2..=50);
        let v = random_vector(&mut rng, n);
        match pairwise_identity(&v) {
            Ok(id) => {
                ident.record(Ok(id.identity_residual()), || format!("n={n}"));
                major.record(Ok(excess(id.pair_mean, id.half_mean)), || format!("n={n}"));
            }
            Err(e) => {
                ident.record(Err(e.clone()), || format!("n={n}"));
                major.record(Err(e), || format!("n={n}"));
            }
        }
    }
    [ident.finish(), major.finish()]
}

pub fn internality_homogeneity(cfg: &VerifyConfig) -> PropertyResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 4);
    let mut t = Tally::new("internality-homogeneity", HOMOGENEITY_TOL);
    for _ in 0..cfg.vectors {
        let n = rng.random_range(1..=10);
        let k = rng.random_range(1..=n + 1);
        let v = random_vector(&mut rng, n);
        let c = 10f64.powf(rng.random_range(-5.0..5.0));
        let (s, q) = (random_exponent(&mut rng), random_exponent(&mut rng));
        let res = (|| {
            let params = MeanParams::new(k, s, q)?;
            let m = (cfg.fast)(&params, &v)?.value;
            let scaled = (cfg.fast)(&params, &v.scaled(c)?)?.value;
            let outside = if m < v.min() || m > v.max() {
                f64::INFINITY
            } else {
                0.0
            };
            Ok(rel(scaled, c * m).max(outside))
        })();
        t.record(res, || format!("k={k} s={s} q={q} c={c}"));
    }
    t.finish()
}

pub fn power_mean_monotonicity(cfg: &VerifyConfig) -> PropertyResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 5);
    let mut t = Tally::new("power-mean-monotonicity", 1e-12);
    for _ in 0..cfg.vectors {
        let n = rng.random_range(1..=40);
        let v = random_vector(&mut rng, n);
        let (a, b) = (random_exponent(&mut rng), random_exponent(&mut rng));
        let (p, p2) = (a.min(b), a.max(b));
        let lo = power_mean(p, &v);
        let hi = power_mean(p2, &v);
        t.record(Ok(((lo - hi) / hi).max(0.0)), || format!("p={p} p'={p2}"));
    }
    t.finish()
}

/// `n M_{2,1,0}(1, .., 1/n)` increases on the decade grid, stays below 4, and
/// its gap to 4 is at most `6/sqrt(n)` (the leading term is `5.84/sqrt(n)`).
pub fn sharpness_limit(cfg: &VerifyConfig) -> PropertyResult {
    // Residual: gap to 4 in units of the bound; infinite if not increasing.
    let mut t = Tally::new("sharpness-limit", 1.0);
    let mut grid: Vec<usize> = std::iter::successors(Some(100usize), |n| n.checked_mul(10))
        .take_while(|&n| n <= cfg.limit_n)
        .collect();
    if grid.last() != Some(&cfg.limit_n) {
        grid.push(cfg.limit_n.max(2));
    }
    match sharpness_limit_series(&grid) {
        Ok(values) => {
            for (i, (&n, &v)) in grid.iter().zip(&values).enumerate() {
                let increasing = i == 0 || v > values[i - 1];
                let gap = 4.0 - v;
                let res = if increasing && gap > 0.0 {
                    gap * (n as f64).sqrt() / 6.0
                } else {
                    f64::INFINITY
                };
                t.record(Ok(res), || format!("n={n} value={v}"));
            }
        }
        Err(e) => t.record(Err(e), || "sharpness series".into()),
    }
    t.finish()
}

/// Ratios of `M_{2,1,0}` and `P_{1/2}` stay strictly below 4.
pub fn hardy_bound(cfg: &VerifyConfig) -> PropertyResult {
    let mut t = Tally::new("hardy-bound", 0.0);
    let means = [
        "cmn:2,1,0".parse::<MeanSpec>().expect("literal"),
        "power:0.5".parse::<MeanSpec>().expect("literal"),
    ];
    let families = [
        SequenceFamily::PowerTail { alpha: 1.5 },
        SequenceFamily::PowerTail { alpha: 2.0 },
        SequenceFamily::PowerTail { alpha: 3.0 },
        SequenceFamily::Geometric { ratio: 0.3 },
        SequenceFamily::Geometric { ratio: 0.9 },
        SequenceFamily::HarmonicTruncated { n0: 10 },
        SequenceFamily::HarmonicTruncated { n0: 1000 },
    ];
    for mean in &means {
        for family in &families {
            let n = family.max_len().map_or(cfg.hardy_n, |m| m.min(cfg.hardy_n));
            let res = hardy_partial_sum(mean, family, n, false).map(|e| {
                if e.ratio < 4.0 {
                    0.0
                } else {
                    e.ratio - 4.0
                }
            });
            t.record(res, || format!("{mean} on {family}, N={n}"));
        }
    }
    t.finish()
}

pub fn classifier_golden() -> PropertyResult {
    let mut t = Tally::new("classifier-golden", 0.0);
    let golden = [
        ((3, 1.0, 0.0), Verdict::Hardy, Reason::HamyCorollary),
        ((4, 0.0, 1.0), Verdict::Hardy, Reason::HayashiCorollary),
        ((2, 2.0, 0.5), Verdict::NotHardy, Reason::PropItem1),
        ((2, 2.0, -1.0), Verdict::Open, Reason::OpenProblem),
        ((2, 1.0, 0.0), Verdict::Hardy, Reason::Theorem1),
    ];
    for ((k, s, q), verdict, reason) in golden {
        let params = MeanParams::new(k, ExtReal::Finite(s), ExtReal::Finite(q)).expect("k >= 1");
        let c = classify(&params);
        let ok = c.verdict == verdict && c.reason == reason;
        t.record(Ok(if ok { 0.0 } else { f64::INFINITY }), || {
            format!("({params}) -> {c:?}")
        });
    }
    t.finish()
}

/// Runs every property in a fixed order.
pub fn run_verify(cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let [ident, major] = pairwise_identity_sweep(cfg);
    vec![
        oracle_equivalence(cfg),
        qs_monotonicity(cfg),
        k_monotonicity(cfg),
        ident,
        major,
        internality_homogeneity(cfg),
        power_mean_monotonicity(cfg),
        sharpness_limit(cfg),
        hardy_bound(cfg),
        classifier_golden(),
    ]
}

//! Timing ladder comparing the enumeration, symmetric-polynomial and Monte
//! Carlo evaluators of `M_{k,s,q}`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cmn::{cmn_mean_fast, cmn_mean_naive, cmn_mean_sampled, MeanParams, Method};
use crate::error::Result;
use crate::ext_real::ExtReal;
use crate::vector::PositiveVector;

/// Each measurement repeats its evaluator until this much time has passed.
const MIN_MEASURE: Duration = Duration::from_millis(20);

#[derive(Debug, Clone)]
pub struct LadderConfig {
    pub ns: Vec<usize>,
    pub ks: Vec<usize>,
    pub s: ExtReal,
    pub q: ExtReal,
    pub samples: u64,
    pub seed: u64,
}

impl Default for LadderConfig {
    fn default() -> Self {
        LadderConfig {
            ns: vec![10, 15, 20, 1000, 100_000],
            ks: vec![2, 3, 5],
            s: ExtReal::ONE,
            q: ExtReal::ZERO,
            samples: 100_000,
            seed: 7,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LadderRow {
    pub method: Method,
    pub n: usize,
    pub k: usize,
    /// Mean seconds per evaluation; `None` when the evaluator refused.
    pub seconds: Option<f64>,
    pub value: Option<f64>,
    /// Relative deviation from the most accurate available value.
    pub rel_error_vs_best: Option<f64>,
    pub status: String,
}

/// Mean wall time of `f` over enough repetitions to fill [`MIN_MEASURE`].
fn time_it<T>(mut f: impl FnMut() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let mut out = f()?;
    let mut reps = 1u32;
    while start.elapsed() < MIN_MEASURE {
        out = f()?;
        reps += 1;
    }
    Ok((out, start.elapsed().as_secs_f64() / f64::from(reps)))
}

/// The ladder's input of length `n`: log-uniform entries in `[0.1, 10]`.
pub fn ladder_vector(n: usize, seed: u64) -> PositiveVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    PositiveVector::new(
        (0..n)
            .map(|_| 10f64.powf(rng.random_range(-1.0..1.0)))
            .collect(),
    )
    .expect("positive entries")
}

/// Times the three evaluators at one `(n, k)`.
pub fn ladder_step(cfg: &LadderConfig, n: usize, k: usize) -> Result<Vec<LadderRow>> {
    let params = MeanParams::new(k, cfg.s, cfg.q)?;
    let v = ladder_vector(n, cfg.seed);
    let mut rows = Vec::with_capacity(3);
    let mut push = |method, outcome: Result<(f64, f64)>| {
        let row = match outcome {
            Ok((value, secs)) => LadderRow {
                method,
                n,
                k,
                seconds: Some(secs),
                value: Some(value),
                rel_error_vs_best: None,
                status: "ok".to_string(),
            },
            Err(e) => LadderRow {
                method,
                n,
                k,
                seconds: None,
                value: None,
                rel_error_vs_best: None,
                status: if e.is_capacity() {
                    "capacity".to_string()
                } else {
                    e.to_string()
                },
            },
        };
        rows.push(row);
    };
    push(Method::Exact, time_it(|| cmn_mean_naive(&params, &v)));
    push(
        Method::FastSymmetric,
        time_it(|| cmn_mean_fast(&params, &v).map(|r| r.value)),
    );
    push(
        Method::MonteCarlo,
        time_it(|| cmn_mean_sampled(&params, &v, cfg.samples, cfg.seed).map(|r| r.value)),
    );
    let best = rows
        .iter()
        .find(|r| r.method == Method::FastSymmetric && r.value.is_some())
        .or_else(|| {
            rows.iter()
                .find(|r| r.method == Method::Exact && r.value.is_some())
        })
        .and_then(|r| r.value);
    if let Some(best) = best {
        for r in &mut rows {
            r.rel_error_vs_best = r.value.map(|v| (v - best).abs() / best);
        }
    }
    Ok(rows)
}

/// Every `(n, k)` of the ladder with `k < n`.
pub fn run_ladder(cfg: &LadderConfig) -> Result<Vec<LadderRow>> {
    let mut rows = Vec::new();
    for &n in &cfg.ns {
        for &k in cfg.ks.iter().filter(|&&k| k < n) {
            rows.extend(ladder_step(cfg, n, k)?);
        }
    }
    Ok(rows)
}

/// Enumeration time over symmetric-polynomial time at `(n, k)`.
pub fn speedup(rows: &[LadderRow], n: usize, k: usize) -> Option<f64> {
    let secs = |m| {
        rows.iter()
            .find(|r| r.method == m && r.n == n && r.k == k)
            .and_then(|r| r.seconds)
    };
    Some(secs(Method::Exact)? / secs(Method::FastSymmetric)?)
}

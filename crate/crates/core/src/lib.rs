//! Generalized power means `M_{k,s,q}` and Hardy-type inequalities.
//!
//! `M_{k,s,q}(v)` takes the `q`-th power mean of every k-element sub-tuple of
//! `v` and then the `s`-th power mean of the results. The crate evaluates
//! these means exactly, through closed forms, or by Monte Carlo; runs Hardy
//! partial-sum experiments on them; and classifies the parameter space into
//! Hardy, not-Hardy and open regions.
//!
//! ```
//! use hardy_means::{cmn_mean_fast, ExtReal, MeanParams, PositiveVector};
//!
//! let v = PositiveVector::new(vec![1.0, 4.0, 9.0]).unwrap();
//! let params = MeanParams::new(2, ExtReal::ONE, ExtReal::ZERO).unwrap();
//! let m = cmn_mean_fast(&params, &v).unwrap();
//! assert!((m.value - 11.0 / 3.0).abs() < 1e-14);
//! ```

pub mod classify;
pub mod cmn;
pub mod combinatorics;
pub mod error;
pub mod ext_real;
pub mod hardy;
pub mod ladder;
pub mod power_means;
pub mod sum;
pub mod symmetric;
pub mod table;
pub mod vector;
pub mod verify;

pub use classify::{
    classification_table, classify, Classification, ClassifiedPoint, Reason, Verdict,
};
pub use cmn::{
    check_k_monotonicity, check_qs_monotonicity, cmn_mean_fast, cmn_mean_naive, cmn_mean_sampled,
    pairwise_identity, pairwise_identity_check, CmnEvalReport, MeanParams, Method,
    PairwiseIdentity,
};
pub use error::{Error, Result};
pub use ext_real::ExtReal;
pub use hardy::{
    hardy_checkpoints, hardy_partial_sum, landau_constant, log_checkpoints, sharpness_grid,
    sharpness_limit_experiment, sharpness_limit_series, sharpness_sequence, sharpness_sweep,
    HardyEstimate, HardyRow, MeanSpec, PrefixMean, SequenceFamily,
};
pub use power_means::{power_mean, power_mean_lower_bound_check, power_mean_of};
pub use vector::PositiveVector;

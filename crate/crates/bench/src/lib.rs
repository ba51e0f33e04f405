//! Inputs shared by the criterion benchmarks.

use hardy_means::{ExtReal, MeanParams, PositiveVector};

pub use hardy_means::ladder::ladder_vector;

/// The Hamy mean `M_{k,1,0}`, which every evaluator supports.
pub fn hamy(k: usize) -> MeanParams {
    MeanParams::new(k, ExtReal::ONE, ExtReal::ZERO).expect("k >= 1")
}

/// Harmonic prefix `(1, 1/2, .., 1/n)`.
pub fn harmonic(n: usize) -> PositiveVector {
    PositiveVector::new((1..=n).map(|i| 1.0 / i as f64).collect()).expect("positive entries")
}

use std::ops::Deref;

use crate::error::{Error, Result};

/// A nonempty sequence of strictly positive, finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveVector(Vec<f64>);

impl PositiveVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        validate(&entries)?;
        Ok(PositiveVector(entries))
    }

    pub fn from_slice(entries: &[f64]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    /// A vector of `n` copies of `c`.
    pub fn constant(c: f64, n: usize) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Multiplies every entry by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    /// The entries in ascending order.
    pub fn sorted(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_by(f64::total_cmp);
        PositiveVector(v)
    }
}

pub(crate) fn validate(entries: &[f64]) -> Result<()> {
    if entries.is_empty() {
        return Err(Error::domain("vector is empty"));
    }
    if let Some((i, x)) = entries
        .iter()
        .enumerate()
        .find(|(_, x)| !(x.is_finite() && **x > 0.0))
    {
        return Err(Error::domain(format!(
            "entry {i} is {x}; entries must be strictly positive and finite"
        )));
    }
    Ok(())
}

impl Deref for PositiveVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for PositiveVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl TryFrom<&[f64]> for PositiveVector {
    type Error = Error;

    fn try_from(v: &[f64]) -> Result<Self> {
        Self::from_slice(v)
    }
}

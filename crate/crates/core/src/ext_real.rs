//! Extended real numbers used as mean exponents.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A real number or one of the two infinities.
///
/// `Finite` never holds NaN when built through [`ExtReal::new`] or parsing;
/// negative zero is normalized to zero. The order is the real order with
/// `NegInf` below and `PosInf` above every finite value.
#[derive(Debug, Clone, Copy)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite(0.0);
    pub const ONE: ExtReal = ExtReal::Finite(1.0);

    /// Maps `±inf` onto the infinite variants and rejects NaN.
    pub fn new(x: f64) -> Result<Self> {
        if x.is_nan() {
            Err(Error::domain("exponent is NaN"))
        } else if x == f64::INFINITY {
            Ok(ExtReal::PosInf)
        } else if x == f64::NEG_INFINITY {
            Ok(ExtReal::NegInf)
        } else {
            Ok(ExtReal::Finite(x + 0.0))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// The value as an `f64`, infinities included.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::Finite(x) => x,
            ExtReal::PosInf => f64::INFINITY,
        }
    }

    fn rank(self) -> u8 {
        match self {
            ExtReal::NegInf => 0,
            ExtReal::Finite(_) => 1,
            ExtReal::PosInf => 2,
        }
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => {
                a.partial_cmp(b).unwrap_or_else(|| a.total_cmp(b))
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExtReal {}

impl PartialEq<f64> for ExtReal {
    fn eq(&self, other: &f64) -> bool {
        ExtReal::new(*other).is_ok_and(|o| *self == o)
    }
}

impl From<i32> for ExtReal {
    fn from(x: i32) -> Self {
        ExtReal::Finite(f64::from(x))
    }
}

impl TryFrom<f64> for ExtReal {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        ExtReal::new(x)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("inf"),
            ExtReal::Finite(x) => write!(f, "{x}"),
        }
    }
}

/// Accepts decimals, `p/q` fractions and `inf`, `+inf`, `-inf`, `infinity`.
impl FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        match lower.as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" => return Ok(ExtReal::PosInf),
            "-inf" | "-infinity" => return Ok(ExtReal::NegInf),
            _ => {}
        }
        let bad = || Error::domain(format!("cannot parse exponent {s:?}"));
        let x = match t.split_once('/') {
            Some((num, den)) => {
                let num: f64 = num.trim().parse().map_err(|_| bad())?;
                let den: f64 = den.trim().parse().map_err(|_| bad())?;
                if den == 0.0 {
                    return Err(bad());
                }
                num / den
            }
            None => t.parse::<f64>().map_err(|_| bad())?,
        };
        if !x.is_finite() {
            return Err(bad());
        }
        ExtReal::new(x)
    }
}

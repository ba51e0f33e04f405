//! Elementary symmetric polynomials of positive arguments.
//!
//! `e_j` is carried as a mantissa in `[0.5, 1)` with its own binary exponent,
//! so the O(n*k) recurrence `e_j <- e_j + b * e_{j-1}` neither overflows nor
//! underflows even when `e_k` is far outside the `f64` range.

use std::f64::consts::LN_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Scaled {
    mant: f64,
    exp: i64,
}

impl Scaled {
    pub(crate) const ZERO: Scaled = Scaled { mant: 0.0, exp: 0 };
    pub(crate) const ONE: Scaled = Scaled { mant: 0.5, exp: 1 };

    /// `x` must be finite and nonnegative.
    pub(crate) fn from_f64(x: f64) -> Scaled {
        debug_assert!(x.is_finite() && x >= 0.0);
        if x == 0.0 {
            Scaled::ZERO
        } else {
            let (mant, exp) = frexp(x);
            Scaled { mant, exp }
        }
    }

    pub(crate) fn from_ln(l: f64) -> Scaled {
        if l == f64::NEG_INFINITY {
            return Scaled::ZERO;
        }
        let e = (l / LN_2).floor();
        Scaled::from_f64((l - e * LN_2).exp()).shifted(e as i64)
    }

    fn shifted(self, by: i64) -> Scaled {
        if self.mant == 0.0 {
            self
        } else {
            Scaled {
                mant: self.mant,
                exp: self.exp + by,
            }
        }
    }

    fn mul(self, other: Scaled) -> Scaled {
        if self.mant == 0.0 || other.mant == 0.0 {
            return Scaled::ZERO;
        }
        Scaled::from_f64(self.mant * other.mant).shifted(self.exp + other.exp)
    }

    fn add(self, other: Scaled) -> Scaled {
        if other.mant == 0.0 {
            return self;
        }
        if self.mant == 0.0 {
            return other;
        }
        let (big, small) = if self.exp >= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let gap = big.exp - small.exp;
        if gap > 1100 {
            return big;
        }
        Scaled::from_f64(big.mant + small.mant * pow2(-gap)).shifted(big.exp)
    }

    pub(crate) fn ln(self) -> f64 {
        if self.mant == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.mant.ln() + self.exp as f64 * LN_2
        }
    }
}

/// Mantissa in `[0.5, 1)` and exponent with `x = m * 2^e`; `x > 0` finite.
fn frexp(x: f64) -> (f64, i64) {
    let bits = x.to_bits();
    let raw = ((bits >> 52) & 0x7ff) as i64;
    if raw == 0 {
        let (m, e) = frexp(x * pow2(64));
        return (m, e - 64);
    }
    let mant = f64::from_bits((bits & !(0x7ff << 52)) | (1022 << 52));
    (mant, raw - 1022)
}

/// `2^e` for `-2044 <= e <= 1023`.
fn pow2(e: i64) -> f64 {
    if e < -1022 {
        return pow2(e + 1022) * pow2(-1022);
    }
    f64::from_bits(((e + 1023) as u64) << 52)
}

/// Incremental `e_k(b_1, .., b_n)` over a stream of positive arguments.
#[derive(Debug, Clone)]
pub struct ElementarySymmetric {
    row: Vec<Scaled>,
    count: usize,
}

impl ElementarySymmetric {
    pub fn new(k: usize) -> Self {
        let mut row = vec![Scaled::ZERO; k + 1];
        row[0] = Scaled::ONE;
        ElementarySymmetric { row, count: 0 }
    }

    pub fn k(&self) -> usize {
        self.row.len() - 1
    }

    /// Number of arguments pushed so far.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Appends an argument `b >= 0`.
    pub fn push(&mut self, b: f64) {
        self.push_scaled(Scaled::from_f64(b));
    }

    /// Appends the argument `exp(ln_b)`; use this when `b` itself is out of range.
    pub fn push_ln(&mut self, ln_b: f64) {
        self.push_scaled(Scaled::from_ln(ln_b));
    }

    pub(crate) fn push_scaled(&mut self, b: Scaled) {
        self.count += 1;
        let top = self.count.min(self.k());
        for j in (1..=top).rev() {
            self.row[j] = self.row[j].add(b.mul(self.row[j - 1]));
        }
    }

    /// `ln e_j` for `j <= k`; `-inf` while fewer than `j` arguments are in.
    pub fn ln_value(&self, j: usize) -> f64 {
        self.row[j].ln()
    }

    /// `ln e_k`.
    pub fn ln_top(&self) -> f64 {
        self.ln_value(self.k())
    }
}

/// `ln e_k(b)`.
pub fn ln_elementary_symmetric(b: &[f64], k: usize) -> f64 {
    let mut e = ElementarySymmetric::new(k);
    for &x in b {
        e.push(x);
    }
    e.ln_top()
}

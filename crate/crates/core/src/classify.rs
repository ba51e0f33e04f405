//! Hardy / not-Hardy / open verdicts over the `(k, s, q)` parameter space.
//!
//! For `k >= 2`:
//!
//! | region              | verdict  | reason                                       |
//! |---------------------|----------|----------------------------------------------|
//! | `s >= 1`, `q > 0`   | NotHardy | `PropItem1`                                  |
//! | `s = 1`, `q <= 0`   | Hardy    | `PropItem2` (`Theorem1` at `(2,1,0)`, `HamyCorollary` at `q = 0`) |
//! | `s < 1`             | Hardy    | `PropItem3` (`HayashiCorollary` at `(k,0,1)`) |
//! | `s > 1`, `q <= 0`   | Open     | `OpenProblem`                                |
//!
//! `k = 1` is outside those statements: `M_{1,s,q} = P_s`, Hardy exactly when
//! `s < 1` (reason `DegeneratePowerMean`).

use std::fmt;

use crate::cmn::MeanParams;
use crate::ext_real::ExtReal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Hardy,
    NotHardy,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Reason {
    Theorem1,
    PropItem1,
    PropItem2,
    PropItem3,
    DegeneratePowerMean,
    HamyCorollary,
    HayashiCorollary,
    OpenProblem,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Reason {
    /// One-line statement of the result behind the reason.
    pub fn citation(self) -> &'static str {
        match self {
            Reason::Theorem1 => {
                "Theorem 1: M(2,1,0) <= P(1/2), so it is Hardy with sharp constant 4"
            }
            Reason::PropItem1 => {
                "Proposition 1(i): for k >= 2, s >= 1, q > 0 the mean dominates a multiple \
                 of the arithmetic mean and is not Hardy"
            }
            Reason::PropItem2 => {
                "Proposition 1(ii): for k >= 2, q <= 0, M(k,1,q) <= M(2,1,0) is Hardy"
            }
            Reason::PropItem3 => {
                "Proposition 1(iii): for k >= 2, s < 1 and any q, M(k,s,q) is bounded by a \
                 multiple of P(s) and is Hardy"
            }
            Reason::DegeneratePowerMean => {
                "k = 1: M(1,s,q) = P(s), which is Hardy exactly when s < 1"
            }
            Reason::HamyCorollary => "Corollary 1: the Hamy mean M(k,1,0) is Hardy for k >= 2",
            Reason::HayashiCorollary => {
                "Corollary 2: the Hayashi mean M(k,0,1) is Hardy for k >= 2"
            }
            Reason::OpenProblem => {
                "unresolved for k >= 2, s > 1, q <= 0; the answer may depend on k"
            }
        }
    }
}

/// A verdict with the result it rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub reason: Reason,
}

impl Classification {
    fn new(verdict: Verdict, reason: Reason) -> Self {
        Classification { verdict, reason }
    }

    pub fn citation(&self) -> &'static str {
        self.reason.citation()
    }
}

/// Classifies `M_{k,s,q}`. Total on valid parameters.
pub fn classify(params: &MeanParams) -> Classification {
    use Reason::*;
    use Verdict::*;

    let (k, s, q) = (params.k(), params.s(), params.q());
    let one = ExtReal::ONE;
    let zero = ExtReal::ZERO;
    if k == 1 {
        return if s < one {
            Classification::new(Hardy, DegeneratePowerMean)
        } else {
            Classification::new(NotHardy, DegeneratePowerMean)
        };
    }
    if s >= one && q > zero {
        Classification::new(NotHardy, PropItem1)
    } else if s == one {
        let reason = if q == zero && k == 2 {
            Theorem1
        } else if q == zero {
            HamyCorollary
        } else {
            PropItem2
        };
        Classification::new(Hardy, reason)
    } else if s < one {
        let reason = if s == zero && q == one {
            HayashiCorollary
        } else {
            PropItem3
        };
        Classification::new(Hardy, reason)
    } else {
        Classification::new(Open, OpenProblem)
    }
}

/// One row of [`classification_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifiedPoint {
    pub params: MeanParams,
    pub classification: Classification,
}

/// `classify` over `ks x s_grid x q_grid`, ordered by `k`, then `s`, then `q`
/// (grids sorted and deduplicated).
pub fn classification_table(
    ks: impl IntoIterator<Item = usize>,
    s_grid: &[ExtReal],
    q_grid: &[ExtReal],
) -> Vec<ClassifiedPoint> {
    let sorted = |g: &[ExtReal]| {
        let mut g = g.to_vec();
        g.sort();
        g.dedup();
        g
    };
    let mut ks: Vec<usize> = ks.into_iter().filter(|&k| k >= 1).collect();
    ks.sort_unstable();
    ks.dedup();
    let (s_grid, q_grid) = (sorted(s_grid), sorted(q_grid));
    let mut rows = Vec::with_capacity(ks.len() * s_grid.len() * q_grid.len());
    for &k in &ks {
        for &s in &s_grid {
            for &q in &q_grid {
                let params = MeanParams::new(k, s, q).expect("k >= 1 filtered above");
                rows.push(ClassifiedPoint {
                    params,
                    classification: classify(&params),
                });
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn at(k: usize, s: f64, q: f64) -> Classification {
        classify(&MeanParams::new(k, ExtReal::new(s).unwrap(), ExtReal::new(q).unwrap()).unwrap())
    }

    #[test]
    fn golden_points() {
        use Reason::*;
        use Verdict::*;
        assert_eq!(at(3, 1.0, 0.0), Classification::new(Hardy, HamyCorollary));
        assert_eq!(
            at(4, 0.0, 1.0),
            Classification::new(Hardy, HayashiCorollary)
        );
        assert_eq!(at(2, 2.0, 0.5), Classification::new(NotHardy, PropItem1));
        assert_eq!(at(2, 2.0, -1.0), Classification::new(Open, OpenProblem));
        assert_eq!(at(2, 1.0, 0.0), Classification::new(Hardy, Theorem1));
        assert_eq!(at(2, 1.5, -2.0), Classification::new(Open, OpenProblem));
    }

    #[test]
    fn infinite_exponents() {
        use Reason::*;
        use Verdict::*;
        assert_eq!(
            at(3, f64::INFINITY, 0.1),
            Classification::new(NotHardy, PropItem1)
        );
        assert_eq!(
            at(3, f64::INFINITY, f64::INFINITY),
            Classification::new(NotHardy, PropItem1)
        );
        assert_eq!(
            at(3, f64::INFINITY, f64::NEG_INFINITY),
            Classification::new(Open, OpenProblem)
        );
        assert_eq!(
            at(3, f64::NEG_INFINITY, f64::INFINITY),
            Classification::new(Hardy, PropItem3)
        );
        assert_eq!(
            at(2, 1.0, f64::NEG_INFINITY),
            Classification::new(Hardy, PropItem2)
        );
    }

    #[test]
    fn boundary_s1_q0_is_hardy_not_open() {
        for k in 2..10 {
            assert_eq!(at(k, 1.0, 0.0).verdict, Verdict::Hardy);
            // Arbitrarily close neighbours fall in other regions.
            assert_eq!(at(k, 1.0 + 1e-9, 0.0).verdict, Verdict::Open);
            assert_eq!(at(k, 1.0, 1e-9).verdict, Verdict::NotHardy);
        }
    }

    #[test]
    fn k_one_is_power_mean_rule() {
        assert_eq!(
            at(1, 0.5, 3.0),
            Classification::new(Verdict::Hardy, Reason::DegeneratePowerMean)
        );
        assert_eq!(
            at(1, 1.0, -3.0),
            Classification::new(Verdict::NotHardy, Reason::DegeneratePowerMean)
        );
    }

    #[test]
    fn arithmetic_row_is_not_hardy() {
        for row in classification_table(1..=6, &[ExtReal::ONE], &[ExtReal::ONE]) {
            assert_eq!(row.classification.verdict, Verdict::NotHardy);
        }
    }

    #[test]
    fn table_order_and_size() {
        let s: Vec<ExtReal> = [2, 1, 0, -1].map(ExtReal::from).to_vec();
        let q: Vec<ExtReal> = [1, -1, 0].map(ExtReal::from).to_vec();
        let rows = classification_table(2..=4, &s, &q);
        assert_eq!(rows.len(), 36);
        let keys: Vec<_> = rows
            .iter()
            .map(|r| (r.params.k(), r.params.s(), r.params.q()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let single = classification_table([2], &[ExtReal::ONE], &[ExtReal::ZERO]);
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].classification, at(2, 1.0, 0.0));
    }

    fn ext() -> impl Strategy<Value = ExtReal> {
        prop_oneof![
            1 => Just(ExtReal::NegInf),
            1 => Just(ExtReal::PosInf),
            1 => Just(ExtReal::ZERO),
            1 => Just(ExtReal::ONE),
            8 => (-5.0f64..5.0).prop_map(ExtReal::Finite),
        ]
    }

    proptest! {
        // The four region predicates partition k >= 2 and the classifier
        // lands in the one that fires.
        #[test]
        fn regions_partition(k in 2usize..20, s in ext(), q in ext()) {
            let one = ExtReal::ONE;
            let zero = ExtReal::ZERO;
            let regions = [
                (s >= one && q > zero, Verdict::NotHardy),
                (s == one && q <= zero, Verdict::Hardy),
                (s < one, Verdict::Hardy),
                (s > one && q <= zero, Verdict::Open),
            ];
            let fired: Vec<_> = regions.iter().filter(|r| r.0).collect();
            prop_assert_eq!(fired.len(), 1);
            let c = classify(&MeanParams::new(k, s, q).unwrap());
            prop_assert_eq!(c.verdict, fired[0].1);
            match c.verdict {
                Verdict::Hardy => prop_assert!(!matches!(c.reason, Reason::PropItem1 | Reason::OpenProblem)),
                Verdict::NotHardy => prop_assert!(matches!(c.reason, Reason::PropItem1 | Reason::DegeneratePowerMean)),
                Verdict::Open => prop_assert_eq!(c.reason, Reason::OpenProblem),
            }
        }
    }
}

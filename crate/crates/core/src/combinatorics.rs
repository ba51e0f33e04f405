//! k-subsets of `{0, .., n-1}`: counting, lexicographic enumeration and
//! uniform sampling.

use rand::Rng;

/// `C(n, k)`, or `None` when it does not fit in a `u128`.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        // acc * (n - j) is divisible by (j + 1) at every step.
        acc = acc.checked_mul((n - j) as u128)? / (j as u128 + 1);
    }
    Some(acc)
}

/// `ln C(n, k)` in floating point, for sizes where the exact value overflows.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    assert!(k <= n, "ln_binomial({n}, {k})");
    let k = k.min(n - k);
    (0..k).map(|j| ((n - j) as f64 / (j + 1) as f64).ln()).sum()
}

/// Advances `subset` to its lexicographic successor among the k-subsets of
/// `{0, .., n-1}`. Returns `false` (leaving `subset` untouched) at the last one.
pub fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The k-subset of lexicographic rank `rank`.
///
/// Panics if `rank >= C(n, k)`.
pub fn unrank_subset(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let total = binomial(n, k).expect("subset count overflows u128");
    assert!(
        rank < total,
        "rank {rank} out of range for C({n}, {k}) = {total}"
    );
    let mut out = Vec::with_capacity(k);
    let mut x = 0;
    for i in 0..k {
        loop {
            let with_x = binomial(n - x - 1, k - i - 1).unwrap_or(u128::MAX);
            if rank < with_x {
                out.push(x);
                x += 1;
                break;
            }
            rank -= with_x;
            x += 1;
        }
    }
    out
}

/// Lexicographic iterator over all k-subsets of `{0, .., n-1}`.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Subsets { n, current }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        if !next_subset(cur, self.n) {
            self.current = None;
        }
        Some(out)
    }
}

/// Floyd's algorithm: a uniform random k-subset of `{0, .., n-1}`, written to
/// `out` in ascending order. O(k^2) worst case, no O(n) state.
pub fn sample_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, out: &mut Vec<usize>) {
    assert!(k <= n, "cannot draw {k} of {n}");
    out.clear();
    for j in n - k..n {
        let t = rng.random_range(0..=j);
        if out.contains(&t) {
            out.push(j);
        } else {
            out.push(t);
        }
    }
    out.sort_unstable();
}

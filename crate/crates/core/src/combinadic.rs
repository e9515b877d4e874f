//! Combinatorial number system: a bijection between k-subsets of `0..n` and
//! the integers `0..C(n, k)`.
//!
//! A sorted vertex set `x_1 < … < x_k` has rank `Σ C(x_i, i)` with the
//! convention `C(a, b) = 0` for `a < b`. Ranks are 0-based and the induced
//! order is colexicographic on vertex sets (compare largest vertices first),
//! not lexicographic on bitstrings.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::complex::Simplex;
use crate::error::{Error, Result};

/// Exact binomial coefficients `C(i, j)` for `0 <= j <= i <= n_max`,
/// built by Pascal's rule.
#[derive(Debug, Clone)]
pub struct PascalTable {
    n_max: usize,
    rows: Vec<Vec<BigUint>>,
}

/// Builds the table with one addition per interior entry.
pub fn build_pascal(n_max: usize) -> PascalTable {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigUint::one()]);
    for i in 1..=n_max {
        let prev = &rows[i - 1];
        let mut row = Vec::with_capacity(i + 1);
        row.push(BigUint::one());
        for j in 1..i {
            row.push(&prev[j - 1] + &prev[j]);
        }
        row.push(BigUint::one());
        rows.push(row);
    }
    PascalTable { n_max, rows }
}

impl PascalTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `C(a, b)`, zero when `b > a`.
    ///
    /// Panics if `a > n_max`.
    pub fn get(&self, a: usize, b: usize) -> BigUint {
        self.binom(a, b).cloned().unwrap_or_default()
    }

    fn binom(&self, a: usize, b: usize) -> Option<&BigUint> {
        assert!(a <= self.n_max, "row {a} beyond table size {}", self.n_max);
        self.rows[a].get(b)
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.rows[i]
    }
}

/// A rank in `[0, C(n, k))` together with its `(n, k)` context.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CombinadicRank {
    pub value: BigUint,
    pub n: usize,
    pub k: usize,
}

fn check_table(table: &PascalTable, n: usize) -> Result<()> {
    if table.n_max() < n {
        return Err(Error::Argument(format!(
            "Pascal table covers n <= {}, need {n}",
            table.n_max()
        )));
    }
    Ok(())
}

pub fn rank(s: &Simplex, table: &PascalTable) -> Result<CombinadicRank> {
    check_table(table, s.n())?;
    let mut value = BigUint::zero();
    for (i, &x) in s.vertices().iter().enumerate() {
        if let Some(c) = table.binom(x, i + 1) {
            value += c;
        }
    }
    Ok(CombinadicRank {
        value,
        n: s.n(),
        k: s.weight(),
    })
}

/// Inverse of [`rank`].
///
/// Peels off the largest vertex first: for the current weight `k'` it finds
/// the largest `x` with `C(x, k') <= l'` by binary search down column `k'`.
pub fn unrank(l: &BigUint, n: usize, k: usize, table: &PascalTable) -> Result<Simplex> {
    check_table(table, n)?;
    if k > n {
        return Err(Error::Argument(format!("k = {k} exceeds n = {n}")));
    }
    let total = table.get(n, k);
    if *l >= total {
        return Err(Error::Argument(format!("rank {l} out of range [0, {total})")));
    }
    let mut rest = l.clone();
    let mut vertices = vec![0usize; k];
    // every remaining vertex is strictly below `upper`
    let mut upper = n;
    for kk in (1..=k).rev() {
        // C(x, kk) is zero for x < kk and strictly increasing from x = kk - 1,
        // so search x in [kk - 1, upper).
        let (mut lo, mut hi) = (kk - 1, upper - 1);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if table.get(mid, kk) <= rest {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        rest -= table.get(lo, kk);
        vertices[kk - 1] = lo;
        upper = lo;
    }
    debug_assert!(rest.is_zero());
    Simplex::new(n, vertices)
}

/// Convenience wrapper building a table of the right size.
pub fn rank_of(s: &Simplex) -> BigUint {
    rank(s, &build_pascal(s.n()))
        .expect("table sized to simplex")
        .value
}

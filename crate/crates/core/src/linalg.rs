//! Exact integer matrices, fraction-free rank, and a thin wrapper over
//! nalgebra's symmetric eigensolver.

use std::fmt::Write as _;
use std::ops::{Div, Mul, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix product; panics on shape mismatch.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (l, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(l, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Largest absolute row sum, the Gershgorin bound for symmetric matrices.
    pub fn max_abs_row_sum(&self) -> i64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum())
            .max()
            .unwrap_or(0)
    }

    /// Simultaneous row/column permutation: `out[p[i]][p[j]] = self[i][j]`.
    pub fn permute_symmetric(&self, p: &[usize]) -> Self {
        assert_eq!(self.rows, self.cols);
        assert_eq!(p.len(), self.rows);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(p[i], p[j], self.get(i, j));
            }
        }
        out
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let data = self.data.iter().map(|&x| BigInt::from(x)).collect();
        rank_fraction_free(self.rows, self.cols, data)
    }

    pub fn to_dmatrix<T: Real>(&self) -> DMatrix<T> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| {
            <T as num_traits::FromPrimitive>::from_i64(self.get(i, j)).expect("representable")
        })
    }

    fn dump(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}

/// Rank by Bareiss fraction-free elimination over an integral domain.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact. `a` is row-major `rows × cols`.
pub fn rank_fraction_free<T>(rows: usize, cols: usize, mut a: Vec<T>) -> usize
where
    T: Clone + Zero + One + PartialEq,
    for<'x> &'x T: Mul<&'x T, Output = T> + Sub<&'x T, Output = T> + Div<&'x T, Output = T>,
{
    assert_eq!(a.len(), rows * cols);
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pivot = a[r * cols + c].clone();
        for i in (r + 1)..rows {
            let lead = a[i * cols + c].clone();
            for j in (c + 1)..cols {
                let num = &(&pivot * &a[i * cols + j]) - &(&lead * &a[r * cols + j]);
                a[i * cols + j] = &num / &prev;
            }
            a[i * cols + c] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Eigenvalues (ascending) and matching unit eigenvectors of a symmetric
/// integer matrix.
pub fn symmetric_eigen<T: Real>(m: &IntMatrix) -> Result<(Vec<T>, Vec<Vec<T>>)> {
    if !m.is_symmetric() {
        return Err(Error::Consistency("eigensolve on a non-symmetric matrix".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let max_iter = 1000 * n.max(10);
    let eig = SymmetricEigen::try_new(m.to_dmatrix::<T>(), T::default_epsilon(), max_iter)
        .ok_or_else(|| Error::Numerical {
            rows: n,
            dump: m.dump(),
        })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("finite eigenvalues")
    });
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = order
        .iter()
        .map(|&i| eig.eigenvectors.column(i).iter().copied().collect())
        .collect();
    Ok((values, vectors))
}

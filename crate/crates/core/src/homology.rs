//! Boundary maps, combinatorial Laplacians, the Dirac operator and exact
//! Betti numbers.
//!
//! Exact integer rank is the authority for every kernel dimension. Floating
//! spectra are diagnostics: their zero eigenvalues are identified by index
//! using the exact kernel dimension, never by a threshold.

use std::io::{self, BufRead, Write};
use std::ops::Range;

use num_traits::Float;

use crate::complex::{enumerate_simplices, EpsilonGraph, SimplexSet};
use crate::error::{Error, Result};
use crate::linalg::{symmetric_eigen, IntMatrix};
use crate::scalar::Real;

/// Sparse matrix of `∂_k`, mapping k-chains to (k−1)-chains.
///
/// Column `j` is the boundary of the `j`-th member of `S_k`; rows index
/// `S_{k−1}`. Deleting the `i`-th smallest vertex (0-based) contributes
/// sign `(−1)^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    k: usize,
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    /// `∂_1 = 0`, a map from vertices to the zero space.
    pub fn zero_map(vertices: &SimplexSet) -> Result<Self> {
        if vertices.k() != 1 {
            return Err(Error::Argument(format!(
                "zero boundary is defined on vertices, got k = {}",
                vertices.k()
            )));
        }
        Ok(Self {
            k: 1,
            rows: 0,
            columns: vec![Vec::new(); vertices.len()],
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.nnz() == 0 {
            return 0;
        }
        self.to_dense().rank()
    }
}

/// Assembles `∂_k : H_k → H_{k−1}` from consecutive simplex sets.
pub fn boundary_matrix(lower: &SimplexSet, upper: &SimplexSet) -> Result<BoundaryMatrix> {
    let k = upper.k();
    if k < 2 || lower.k() + 1 != k {
        return Err(Error::Argument(format!(
            "boundary needs dimensions (k-1, k) with k >= 2, got ({}, {k})",
            lower.k()
        )));
    }
    if lower.n() != upper.n() {
        return Err(Error::Argument("simplex sets come from different graphs".into()));
    }
    let mut columns = Vec::with_capacity(upper.len());
    for s in upper.iter() {
        let mut col = Vec::with_capacity(k);
        for i in 0..k {
            let facet = s.facet(i);
            let row = lower.index_of(&facet).ok_or_else(|| {
                Error::Consistency(format!("facet {facet} of {s} missing from S_{}", k - 1))
            })?;
            let sign = if i % 2 == 0 { 1 } else { -1 };
            col.push((row, sign));
        }
        col.sort_unstable();
        columns.push(col);
    }
    Ok(BoundaryMatrix {
        k,
        rows: lower.len(),
        columns,
    })
}

/// `Δ_k = ∂_k^T ∂_k + ∂_{k+1} ∂_{k+1}^T` as an exact integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laplacian {
    pub k: usize,
    pub matrix: IntMatrix,
}

impl Laplacian {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn kernel_dim(&self) -> usize {
        self.dim() - self.matrix.rank()
    }
}

pub fn laplacian(d_k: &BoundaryMatrix, d_k1: &BoundaryMatrix) -> Result<Laplacian> {
    if d_k1.k() != d_k.k() + 1 || d_k.cols() != d_k1.rows() {
        return Err(Error::Argument(format!(
            "Laplacian shape mismatch: d_{} is {}x{}, d_{} is {}x{}",
            d_k.k(),
            d_k.rows(),
            d_k.cols(),
            d_k1.k(),
            d_k1.rows(),
            d_k1.cols()
        )));
    }
    let size = d_k.cols();
    let mut m = IntMatrix::zeros(size, size);

    // down part: simplices sharing a facet
    let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); d_k.rows()];
    for j in 0..d_k.cols() {
        for &(i, v) in d_k.column(j) {
            by_row[i].push((j, v));
        }
    }
    for row in &by_row {
        for &(a, va) in row {
            for &(b, vb) in row {
                m.add_at(a, b, va * vb);
            }
        }
    }
    // up part: simplices sharing a coface
    for j in 0..d_k1.cols() {
        let col = d_k1.column(j);
        for &(a, va) in col {
            for &(b, vb) in col {
                m.add_at(a, b, va * vb);
            }
        }
    }
    Ok(Laplacian {
        k: d_k.k(),
        matrix: m,
    })
}

/// `β_k = |S_k| − rank ∂_k − rank ∂_{k+1}`, ranks computed exactly.
pub fn betti_exact(d_k: &BoundaryMatrix, d_k1: &BoundaryMatrix) -> Result<usize> {
    if d_k1.k() != d_k.k() + 1 || d_k.cols() != d_k1.rows() {
        return Err(Error::Argument("boundary shapes do not chain".into()));
    }
    let r = d_k.rank() + d_k1.rank();
    d_k.cols()
        .checked_sub(r)
        .ok_or_else(|| Error::Consistency(format!("ranks {r} exceed |S_k| = {}", d_k.cols())))
}

/// Block-tridiagonal Hermitian operator with `∂_k` in block `(k−1, k)` and
/// its transpose in block `(k, k−1)`.
///
/// Sectors are numbered from 1 (vertices). Stored as sparse rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracOperator {
    sector_sizes: Vec<usize>,
    offsets: Vec<usize>,
    rows: Vec<Vec<(usize, i64)>>,
}

/// Builds `B` from `[∂_2, ∂_3, …]`.
pub fn dirac(boundaries: &[BoundaryMatrix]) -> Result<DiracOperator> {
    let first = boundaries
        .first()
        .ok_or_else(|| Error::Argument("Dirac operator needs at least d_2".into()))?;
    let mut sector_sizes = vec![first.rows()];
    for (i, b) in boundaries.iter().enumerate() {
        if b.k() != i + 2 {
            return Err(Error::Argument(format!(
                "expected d_{} at position {i}, got d_{}",
                i + 2,
                b.k()
            )));
        }
        if b.rows() != *sector_sizes.last().unwrap() {
            return Err(Error::Argument(format!(
                "d_{} has {} rows but sector {} has {} simplices",
                b.k(),
                b.rows(),
                b.k() - 1,
                sector_sizes.last().unwrap()
            )));
        }
        sector_sizes.push(b.cols());
    }
    let mut offsets = Vec::with_capacity(sector_sizes.len() + 1);
    let mut acc = 0;
    for &s in &sector_sizes {
        offsets.push(acc);
        acc += s;
    }
    offsets.push(acc);

    let mut rows = vec![Vec::new(); acc];
    for b in boundaries {
        let row_off = offsets[b.k() - 2];
        let col_off = offsets[b.k() - 1];
        for j in 0..b.cols() {
            for &(i, v) in b.column(j) {
                rows[row_off + i].push((col_off + j, v));
                rows[col_off + j].push((row_off + i, v));
            }
        }
    }
    for r in &mut rows {
        r.sort_unstable();
    }
    Ok(DiracOperator {
        sector_sizes,
        offsets,
        rows,
    })
}

impl DiracOperator {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Number of sectors, i.e. the top simplex dimension represented.
    pub fn sectors(&self) -> usize {
        self.sector_sizes.len()
    }

    /// Global index range of sector `k` (1-based).
    pub fn sector_range(&self, k: usize) -> Range<usize> {
        self.offsets[k - 1]..self.offsets[k]
    }

    /// Sector containing global index `g`.
    pub fn sector_of(&self, g: usize) -> usize {
        self.offsets.partition_point(|&o| o <= g)
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.rows[i]
    }

    pub fn max_row_nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.dim(), self.dim());
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                m.set(i, j, v);
            }
        }
        m
    }

    /// `B²` computed by sparse row products.
    pub fn square(&self) -> IntMatrix {
        let n = self.dim();
        let mut m = IntMatrix::zeros(n, n);
        for (i, r) in self.rows.iter().enumerate() {
            for &(l, a) in r {
                for &(j, b) in &self.rows[l] {
                    m.add_at(i, j, a * b);
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_dense().rank()
    }
}

/// Extracts the square block of `m` on sector range `r`.
pub fn diagonal_block(m: &IntMatrix, r: Range<usize>) -> IntMatrix {
    let size = r.len();
    let mut out = IntMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            out.set(i, j, m.get(r.start + i, r.start + j));
        }
    }
    out
}

/// All simplex sets and boundary maps of a clique complex.
///
/// `sets[k-1]` is `S_k` for `k = 1..=top+1`, where the last set is empty.
/// `boundaries[k-1]` is `∂_k` for the same range.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    n: usize,
    sets: Vec<SimplexSet>,
    boundaries: Vec<BoundaryMatrix>,
}

impl ChainComplex {
    pub fn build<T: Real>(g: &EpsilonGraph<T>) -> Result<Self> {
        let n = g.n();
        let mut sets = vec![enumerate_simplices(g, 1)?];
        let mut boundaries = vec![BoundaryMatrix::zero_map(&sets[0])?];
        loop {
            let k = sets.len() + 1;
            let next = if k <= n {
                enumerate_simplices(g, k)?
            } else {
                SimplexSet::empty(n, k)
            };
            boundaries.push(boundary_matrix(sets.last().unwrap(), &next)?);
            let done = next.is_empty();
            sets.push(next);
            if done {
                break;
            }
        }
        Ok(Self {
            n,
            sets,
            boundaries,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest k with `S_k` nonempty.
    pub fn top(&self) -> usize {
        self.sets.len() - 1
    }

    /// `S_k`; empty above the top dimension.
    pub fn set(&self, k: usize) -> SimplexSet {
        assert!(k >= 1, "dimensions start at 1");
        self.sets
            .get(k - 1)
            .cloned()
            .unwrap_or_else(|| SimplexSet::empty(self.n, k))
    }

    /// `∂_k` for `1 <= k <= top + 1`.
    pub fn boundary(&self, k: usize) -> &BoundaryMatrix {
        &self.boundaries[k - 1]
    }

    pub fn boundaries(&self) -> &[BoundaryMatrix] {
        &self.boundaries
    }

    pub fn laplacian(&self, k: usize) -> Result<Laplacian> {
        if k == 0 || k > self.top() {
            return Err(Error::Argument(format!(
                "Laplacian requires 1 <= k <= {}, got {k}",
                self.top()
            )));
        }
        laplacian(self.boundary(k), self.boundary(k + 1))
    }

    pub fn betti(&self, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(Error::Argument("k must be >= 1".into()));
        }
        if k > self.top() {
            return Ok(0);
        }
        betti_exact(self.boundary(k), self.boundary(k + 1))
    }

    /// `B` over sectors `1..=top+1`; the last sector is empty.
    pub fn dirac(&self) -> Result<DiracOperator> {
        dirac(&self.boundaries[1..])
    }
}

/// Spectral diagnostics of one Laplacian.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport<T> {
    pub k: usize,
    /// Ascending.
    pub eigenvalues: Vec<T>,
    /// Unit eigenvectors matching `eigenvalues`; the first `kernel_dim`
    /// span `ker Δ_k`.
    pub eigenvectors: Vec<Vec<T>>,
    pub kernel_dim: usize,
    /// Smallest eigenvalue outside the exact kernel.
    pub lambda_min: Option<T>,
    pub lambda_max: T,
    pub gershgorin_bound: i64,
}

impl<T: Real> SpectrumReport<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn nonzero_eigenvalues(&self) -> &[T] {
        &self.eigenvalues[self.kernel_dim..]
    }

    /// Numerical zero count with tolerance `sqrt(eps) · max(1, gershgorin)`,
    /// used only to cross-check `kernel_dim`.
    pub fn float_zero_count(&self) -> usize {
        let scale = T::lit(self.gershgorin_bound.max(1) as f64);
        let tol = Float::sqrt(T::epsilon()) * scale;
        self.eigenvalues.iter().filter(|&&x| Float::abs(x) <= tol).count()
    }

    pub fn kernel_vectors(&self) -> &[Vec<T>] {
        &self.eigenvectors[..self.kernel_dim]
    }
}

pub fn spectrum<T: Real>(l: &Laplacian) -> Result<SpectrumReport<T>> {
    if l.dim() == 0 {
        return Err(Error::Argument(format!("spectrum of empty S_{}", l.k)));
    }
    let kernel_dim = l.kernel_dim();
    let (eigenvalues, eigenvectors) = symmetric_eigen::<T>(&l.matrix)?;
    let lambda_min = eigenvalues.get(kernel_dim).copied();
    let lambda_max = *eigenvalues.last().expect("nonempty");
    Ok(SpectrumReport {
        k: l.k,
        eigenvalues,
        eigenvectors,
        kernel_dim,
        lambda_min,
        lambda_max,
        gershgorin_bound: l.matrix.max_abs_row_sum(),
    })
}

/// Writes `rows cols nnz` followed by one `row col value` line per nonzero.
pub fn write_triplets<W: Write>(w: &mut W, m: &IntMatrix) -> io::Result<()> {
    let t = m.triplets();
    writeln!(w, "{} {} {}", m.rows(), m.cols(), t.len())?;
    for (i, j, v) in t {
        writeln!(w, "{i} {j} {v}")?;
    }
    Ok(())
}

/// Reads the format produced by [`write_triplets`].
pub fn read_triplets<R: BufRead>(r: R) -> Result<IntMatrix> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty triplet file".into()))??;
    let h: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::InvalidInput(format!("bad header {header:?}: {e}")))?;
    let [rows, cols, nnz] = h[..] else {
        return Err(Error::InvalidInput(format!("bad header {header:?}")));
    };
    let mut m = IntMatrix::zeros(rows, cols);
    let mut seen = 0;
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::InvalidInput(format!("bad triplet {line:?}"));
        if f.len() != 3 {
            return Err(bad());
        }
        let i: usize = f[0].parse().map_err(|_| bad())?;
        let j: usize = f[1].parse().map_err(|_| bad())?;
        let v: i64 = f[2].parse().map_err(|_| bad())?;
        if i >= rows || j >= cols {
            return Err(bad());
        }
        m.set(i, j, v);
        seen += 1;
    }
    if seen != nnz {
        return Err(Error::InvalidInput(format!("expected {nnz} triplets, found {seen}")));
    }
    Ok(m)
}

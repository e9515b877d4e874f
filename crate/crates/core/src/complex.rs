//! Vietoris–Rips construction: distance matrix → ε-graph → k-cliques.
//!
//! Dimensions follow the vertex-count convention used throughout the crate:
//! a k-simplex has k vertices, so 1-simplices are vertices and 2-simplices
//! are edges. Vertex indices are 0-based.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Symmetric matrix of pairwise distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix<T> {
    n: usize,
    d: Vec<T>,
}

impl<T: Real> DistanceMatrix<T> {
    /// Validates and wraps a row-major `n × n` matrix.
    pub fn new(n: usize, d: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("distance matrix needs n >= 1".into()));
        }
        if d.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                d.len()
            )));
        }
        for i in 0..n {
            if d[i * n + i] != T::zero() {
                return Err(Error::InvalidInput(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                let x = d[i * n + j];
                if !Float::is_finite(x) || x < T::zero() {
                    return Err(Error::InvalidInput(format!(
                        "entry ({i}, {j}) = {x} is negative or not finite"
                    )));
                }
                if x != d[j * n + i] {
                    return Err(Error::InvalidInput(format!(
                        "not symmetric at ({i}, {j}): {x} vs {}",
                        d[j * n + i]
                    )));
                }
            }
        }
        Ok(Self { n, d })
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("distance matrix rows are ragged".into()));
        }
        Self::new(n, rows.concat())
    }

    /// Euclidean distances between points; all points must share a dimension.
    pub fn from_points(points: &[Vec<T>]) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::InvalidInput("point cloud is empty".into()));
        }
        let dim = points[0].len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidInput("points have mixed dimensions".into()));
        }
        let mut d = vec![T::zero(); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let sq = points[i]
                    .iter()
                    .zip(&points[j])
                    .fold(T::zero(), |acc, (&a, &b)| acc + (a - b) * (a - b));
                let dist = Float::sqrt(sq);
                d[i * n + j] = dist;
                d[j * n + i] = dist;
            }
        }
        Self::new(n, d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.d[i * self.n + j]
    }
}

/// Threshold graph of a distance matrix: `i ~ j` iff `i != j` and `d(i, j) <= ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonGraph<T> {
    n: usize,
    adjacency: Vec<bool>,
    epsilon: T,
}

impl<T: Real> EpsilonGraph<T> {
    /// Graph with the given undirected edges, tagged with scale ε = 1.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![false; n * n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidInput(format!("bad edge ({a}, {b}) for n = {n}")));
            }
            adjacency[a * n + b] = true;
            adjacency[b * n + a] = true;
        }
        Ok(Self {
            n,
            adjacency,
            epsilon: T::one(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> T {
        self.epsilon
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.n + j]
    }

    /// Edges as `(i, j)` with `i < j`, in row order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn higher_neighbors(&self, v: usize) -> Vec<usize> {
        ((v + 1)..self.n).filter(|&u| self.adjacent(v, u)).collect()
    }
}

/// Builds the closed-threshold ε-graph.
pub fn build_graph<T: Real>(d: &DistanceMatrix<T>, epsilon: T) -> Result<EpsilonGraph<T>> {
    if !Float::is_finite(epsilon) || epsilon < T::zero() {
        return Err(Error::Argument(format!("epsilon must be >= 0, got {epsilon}")));
    }
    let n = d.n();
    let mut adjacency = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            adjacency[i * n + j] = i != j && d.get(i, j) <= epsilon;
        }
    }
    Ok(EpsilonGraph {
        n,
        adjacency,
        epsilon,
    })
}

/// A set of `k` vertices out of `n`, viewed as a weight-k bitstring.
///
/// Ordering is colexicographic on the sorted vertex list, which is the order
/// induced by the combinatorial number system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    n: usize,
    vertices: Vec<usize>,
}

impl Simplex {
    /// Vertices in any order; duplicates and out-of-range indices are rejected.
    pub fn new(n: usize, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("repeated vertex in {vertices:?}")));
        }
        if let Some(&v) = vertices.last() {
            if v >= n {
                return Err(Error::InvalidInput(format!("vertex {v} out of range for n = {n}")));
            }
        }
        Ok(Self { n, vertices })
    }

    /// Parses a `0`/`1` string; character `i` is vertex `i`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        for (i, c) in bits.chars().enumerate() {
            match c {
                '1' => vertices.push(i),
                '0' => {}
                other => {
                    return Err(Error::InvalidInput(format!("bad bit {other:?} in {bits:?}")))
                }
            }
        }
        Ok(Self {
            n: bits.chars().count(),
            vertices,
        })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, vertices: Vec<usize>) -> Self {
        Self { n, vertices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Hamming weight, i.e. the simplex dimension in vertex-count convention.
    pub fn weight(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn bits(&self) -> String {
        let mut s = vec![b'0'; self.n];
        for &v in &self.vertices {
            s[v] = b'1';
        }
        String::from_utf8(s).expect("ascii")
    }

    /// The facet obtained by deleting the `i`-th smallest vertex (0-based).
    pub fn facet(&self, i: usize) -> Simplex {
        let mut vertices = self.vertices.clone();
        vertices.remove(i);
        Simplex { n: self.n, vertices }
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices
            .iter()
            .rev()
            .cmp(other.vertices.iter().rev())
            .then(self.vertices.len().cmp(&other.vertices.len()))
            .then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// True iff every pair of vertices of `s` is an edge of `g`.
pub fn is_simplex<T: Real>(g: &EpsilonGraph<T>, s: &Simplex) -> bool {
    let v = s.vertices();
    if s.n() != g.n() || v.iter().any(|&x| x >= g.n()) {
        return false;
    }
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| g.adjacent(a, b)))
}

/// The k-simplices of a clique complex, in combinadic-rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexSet {
    n: usize,
    k: usize,
    members: Vec<Simplex>,
}

impl SimplexSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Simplex] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Simplex> {
        self.members.iter()
    }

    /// Position of `s` in the canonical order, if present.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    /// Empty set of the given dimension, used for `S_{n+1}`.
    pub fn empty(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            members: Vec::new(),
        }
    }
}

/// Enumerates all k-cliques of `g`.
///
/// Cliques are grown over ascending candidate neighborhoods, so each is
/// produced once; the result is then sorted into canonical order.
pub fn enumerate_simplices<T: Real>(g: &EpsilonGraph<T>, k: usize) -> Result<SimplexSet> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::Argument(format!("k must satisfy 1 <= k <= n = {n}, got {k}")));
    }
    let higher: Vec<Vec<usize>> = (0..n).map(|v| g.higher_neighbors(v)).collect();
    let mut members = Vec::new();
    let mut clique = Vec::with_capacity(k);
    let all: Vec<usize> = (0..n).collect();
    extend(&higher, k, &mut clique, &all, &mut |c| {
        members.push(Simplex::from_sorted_unchecked(n, c.to_vec()))
    });
    members.sort_unstable();
    Ok(SimplexSet { n, k, members })
}

fn extend(
    higher: &[Vec<usize>],
    k: usize,
    clique: &mut Vec<usize>,
    candidates: &[usize],
    emit: &mut impl FnMut(&[usize]),
) {
    if clique.len() == k {
        emit(clique);
        return;
    }
    let need = k - clique.len();
    if candidates.len() < need {
        return;
    }
    for (idx, &v) in candidates.iter().enumerate() {
        if candidates.len() - idx < need {
            break;
        }
        // Candidates after v that are also neighbours of v; both lists are sorted.
        let next = intersect_sorted(&candidates[idx + 1..], &higher[v]);
        clique.push(v);
        extend(higher, k, clique, &next, emit);
        clique.pop();
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

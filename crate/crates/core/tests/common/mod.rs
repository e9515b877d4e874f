//! Independent reference computations for integration tests.
//!
//! Nothing here calls the code paths it is used to check: cliques come from
//! exhaustive subset scans, ranks from rational Gaussian elimination,
//! binomials from the multiplicative formula, and phase-estimation
//! probabilities from an explicit eigendecomposition of the Dirac operator.
#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qbetti::complex::EpsilonGraph;
use qbetti::linalg::IntMatrix;

pub type G = EpsilonGraph<f64>;

/// Every graph on `n` labelled vertices, one per subset of the `C(n,2)` pairs.
pub fn all_graphs(n: usize) -> Vec<G> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    (0u64..(1u64 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            G::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Erdős–Rényi graph with a seeded generator.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> G {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    G::from_edges(n, &edges).unwrap()
}

/// `count` random graphs with `n` in `lo..=hi` and edge density in `[0.3, 0.9]`.
pub fn random_suite(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<G> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.3..0.9);
            random_graph(n, p, &mut rng)
        })
        .collect()
}

/// k-cliques by scanning every n-bit mask of popcount k.
pub fn brute_cliques(g: &G, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let v: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let ok = v
            .iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| g.adjacent(a, b)));
        if ok {
            out.push(v);
        }
    }
    out
}

/// All k-subsets of `0..n` sorted colexicographically.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..(1u32 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    all
}

/// `C(n, k)` by the multiplicative formula.
pub fn binom_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Rank over Q by plain Gaussian elimination with rational arithmetic.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from_integer(BigInt::from(m.get(i, j))))
                .collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = BigRational::one() / a[r][c].clone();
        for i in (r + 1)..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * inv.clone();
            let pivot_row = a[r].clone();
            for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(c) {
                *x -= f.clone() * p.clone();
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `|(1/N) Σ_x e^{2πi φ x}|²` summed term by term, `N = 2^t`.
pub fn pe_zero_prob_direct(t: u32, phi: f64) -> f64 {
    let n = 1usize << t;
    let (mut re, mut im) = (0.0, 0.0);
    for x in 0..n {
        let a = 2.0 * std::f64::consts::PI * phi * x as f64;
        re += a.cos();
        im += a.sin();
    }
    (re * re + im * im) / (n * n) as f64
}

/// Outcome-0 probability of phase estimation with `e^{iB/c}` on the uniform
/// mixture of the basis states of `sector`, via the full eigendecomposition
/// of `B`.
pub fn pe_zero_via_dirac(b: &IntMatrix, sector: std::ops::Range<usize>, t: u32, c: f64) -> f64 {
    let dim = b.rows();
    let m = DMatrix::from_fn(dim, dim, |i, j| b.get(i, j) as f64);
    let eig = SymmetricEigen::new(m);
    let kernel: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&mu| pe_zero_prob_direct(t, mu / (2.0 * std::f64::consts::PI * c)))
        .collect();
    let size = sector.len() as f64;
    let mut total = 0.0;
    for s in sector {
        for (w, kw) in kernel.iter().enumerate() {
            let amp = eig.eigenvectors[(s, w)];
            total += amp * amp * kw;
        }
    }
    total / size
}

/// Spearman rank correlation (average ranks for ties).
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0;
            for &p in &idx[i..=j] {
                r[p] = avg;
            }
            i = j + 1;
        }
        r
    }
    let (rx, ry) = (ranks(x), ranks(y));
    let n = x.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

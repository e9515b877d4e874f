//! Exact outcome statistics of t-bit phase estimation with `U = e^{iB/c}`
//! on the uniform mixture over one sector of the Dirac operator.
//!
//! An eigenvector `v` of `Δ_k` with eigenvalue `λ > 0` splits evenly into
//! eigenvectors of `B` with eigenvalues `±√λ`: with `u = Bv`, `‖u‖² = λ`, so
//! `v = ½(w₊ + w₋)` for `w± = v ± u/√λ`, each of squared norm 2. Those
//! components carry phases `±φ` with `φ = √λ / (2πc)`. Kernel vectors are
//! fixed by `U` and land on outcome 0 with certainty.

use num_traits::Float;
use rand::distributions::{Distribution, WeightedIndex};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::SpectrumReport;
use crate::scalar::Real;

/// Widest register whose full distribution is tabulated.
pub const MAX_TABULATED_BITS: u32 = 22;

/// Headroom factor applied on top of the operator norm when choosing `c`.
pub const SCALE_HEADROOM: f64 = 1.0 + 1.0 / 8.0;

pub const DEFAULT_MARGIN_BITS: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegisterSizing<T> {
    /// Eigenvalue-register width in qubits.
    pub t: u32,
    /// Spectral scale: the simulated unitary is `e^{iB/c}`.
    pub c: T,
}

/// Probability that t-bit phase estimation of phase `φ` reports `y`, as a
/// function of `delta = φ − y/2^t`:
/// `|sin(2^t π δ) / (2^t sin(π δ))|²`.
pub fn fejer_kernel<T: Real>(t: u32, delta: T) -> T {
    let big_n = T::lit((t as f64).exp2());
    // reduce to (-1/2, 1/2]
    let d = delta - Float::round(delta);
    let pi = <T as Real>::pi();
    let den = Float::sin(pi * d);
    if Float::abs(den) <= T::epsilon() {
        return T::one();
    }
    let num = Float::sin(big_n * pi * d);
    let r = num / (big_n * den);
    Float::min(r * r, T::one())
}

/// Upper bound on the outcome-0 mass of a nonzero phase:
/// `(1 / (2^{t+1} |φ|))²`, from `sin(πx) >= 2x` on `[0, 1/2]`.
pub fn zero_leakage_bound<T: Real>(t: u32, phi: T) -> T {
    let r = T::one() / (T::lit(((t + 1) as f64).exp2()) * Float::abs(phi));
    r * r
}

/// `φ = √λ / (2πc)`.
pub fn phase_of<T: Real>(lambda: T, c: T) -> T {
    Float::sqrt(Float::max(lambda, T::zero())) / (T::lit(2.0) * <T as Real>::pi() * c)
}

/// Register sizing using only the sector's own spectrum for the scale.
pub fn register_sizing<T: Real>(
    report: &SpectrumReport<T>,
    margin_bits: u32,
) -> Result<RegisterSizing<T>> {
    register_sizing_with_norm(report, report.lambda_max, margin_bits)
}

/// Register sizing with `λ_max(B)² = block_lambda_max`, the largest
/// eigenvalue over all Laplacian blocks.
///
/// `c = (9/8)·√block_lambda_max` and
/// `t = ⌈log₂(2πc / √λ_min)⌉ + margin_bits`, so every nonzero phase
/// satisfies `2^t |φ| >= 2^margin_bits`.
pub fn register_sizing_with_norm<T: Real>(
    report: &SpectrumReport<T>,
    block_lambda_max: T,
    margin_bits: u32,
) -> Result<RegisterSizing<T>> {
    let norm_sq = Float::max(block_lambda_max, report.lambda_max);
    let c = if norm_sq > T::zero() {
        T::lit(SCALE_HEADROOM) * Float::sqrt(norm_sq)
    } else {
        T::one()
    };
    match report.lambda_min {
        None => {
            if report.kernel_dim != report.dim() {
                return Err(Error::Consistency(format!(
                    "no nonzero eigenvalue but kernel dim {} < {}",
                    report.kernel_dim,
                    report.dim()
                )));
            }
            Ok(RegisterSizing { t: 1, c })
        }
        Some(lm) if lm <= T::zero() => Err(Error::Consistency(format!(
            "eigenvalue {lm} outside the exact kernel is not positive"
        ))),
        Some(lm) => {
            let ratio = T::lit(2.0) * <T as Real>::pi() * c / Float::sqrt(lm);
            let base = Float::ceil(Float::log2(ratio)).to_f64_lossy().max(0.0) as u32;
            Ok(RegisterSizing {
                t: (base + margin_bits).max(1),
                c,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseEstimationModel<T> {
    pub t: u32,
    pub c: T,
    /// Eigenvalues of `Δ_k`, ascending; the first `kernel_dim` are exact zeros.
    pub spectrum: Vec<T>,
    pub kernel_dim: usize,
    pub p_zero: T,
    /// Probability of each outcome `0..2^t`.
    pub distribution: Vec<T>,
}

impl<T: Real> PhaseEstimationModel<T> {
    pub fn set_size(&self) -> usize {
        self.spectrum.len()
    }

    /// `round(p_zero · |S_k|)`.
    pub fn beta_estimate(&self) -> usize {
        Float::round(self.p_zero * T::from_count(self.set_size()))
            .to_f64_lossy()
            .max(0.0) as usize
    }

    /// Bound on `p_zero − β/|S_k|` from the smallest nonzero phase.
    pub fn leakage_bound(&self) -> T {
        let nonzero = self.set_size() - self.kernel_dim;
        match self.spectrum.get(self.kernel_dim) {
            None => T::zero(),
            Some(&lm) => {
                let frac = T::from_count(nonzero) / T::from_count(self.set_size());
                frac * zero_leakage_bound(self.t, phase_of(lm, self.c))
            }
        }
    }
}

fn check_scale<T: Real>(report: &SpectrumReport<T>, t: u32, c: T) -> Result<()> {
    if t == 0 {
        return Err(Error::Argument("register needs t >= 1".into()));
    }
    let norm = Float::sqrt(Float::max(report.lambda_max, T::zero()));
    if !(c > T::zero()) || c < norm {
        return Err(Error::PhaseWrap {
            scale: c.to_f64_lossy(),
            norm: norm.to_f64_lossy(),
        });
    }
    Ok(())
}

/// Outcome-0 probability without tabulating the full distribution.
pub fn p_zero<T: Real>(report: &SpectrumReport<T>, t: u32, c: T) -> Result<T> {
    check_scale(report, t, c)?;
    let size = T::from_count(report.dim());
    let leak = report
        .nonzero_eigenvalues()
        .iter()
        .fold(T::zero(), |acc, &l| acc + fejer_kernel(t, phase_of(l, c)));
    Ok((T::from_count(report.kernel_dim) + leak) / size)
}

pub fn pe_distribution<T: Real>(
    report: &SpectrumReport<T>,
    t: u32,
    c: T,
) -> Result<PhaseEstimationModel<T>> {
    check_scale(report, t, c)?;
    if t > MAX_TABULATED_BITS {
        return Err(Error::Argument(format!(
            "t = {t} exceeds the tabulation limit of {MAX_TABULATED_BITS} bits"
        )));
    }
    let outcomes = 1usize << t;
    let big_n = T::from_count(outcomes);
    let weight = T::one() / T::from_count(report.dim());
    let half = weight / T::lit(2.0);

    let mut dist = vec![T::zero(); outcomes];
    dist[0] = T::from_count(report.kernel_dim) * weight;
    let mut kernel = vec![T::zero(); outcomes];
    for &lambda in report.nonzero_eigenvalues() {
        let phi = phase_of(lambda, c);
        for (y, slot) in kernel.iter_mut().enumerate() {
            *slot = fejer_kernel(t, phi - T::from_count(y) / big_n);
        }
        // the −φ branch is the mirror image y ↦ −y mod 2^t
        for y in 0..outcomes {
            dist[y] += half * (kernel[y] + kernel[(outcomes - y) % outcomes]);
        }
    }
    Ok(PhaseEstimationModel {
        t,
        c,
        spectrum: report.eigenvalues.clone(),
        kernel_dim: report.kernel_dim,
        p_zero: dist[0],
        distribution: dist,
    })
}

/// Multinomial histogram of `shots` draws over the outcome register.
pub fn sample_outcomes<T: Real>(
    model: &PhaseEstimationModel<T>,
    shots: u64,
    rng_seed: u64,
) -> Result<Vec<u64>> {
    if shots == 0 {
        return Err(Error::Argument("shots must be >= 1".into()));
    }
    let weights: Vec<f64> = model
        .distribution
        .iter()
        .map(|p| p.to_f64_lossy().max(0.0))
        .collect();
    let sampler = WeightedIndex::new(&weights)
        .map_err(|e| Error::Consistency(format!("bad outcome distribution: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut hist = vec![0u64; weights.len()];
    for _ in 0..shots {
        hist[sampler.sample(&mut rng)] += 1;
    }
    Ok(hist)
}

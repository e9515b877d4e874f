//! Desk-scale simulation of the two-stage quantum Betti-number algorithm.
//!
//! Everything is simulated inside the `|S_k|`-dimensional sector (and the
//! `Σ|S_j|`-dimensional space of `B`), never the `2^n` qubit space.
//! Zero eigenvalues come from exact integer rank, so "kernel vector →
//! outcome 0 with probability 1" holds literally.

pub mod bbht;
pub mod counting;
pub mod phase;

use num_traits::Float;
use serde::Serialize;

use crate::complex::EpsilonGraph;
use crate::error::{Error, Result};
use crate::homology::{spectrum, ChainComplex, SpectrumReport};
use crate::linalg::symmetric_eigen;
use crate::resources::{binomial, CostLedger, SimulatedTally};
use crate::scalar::Real;

pub use bbht::{simulate_bbht_prep, GroverPrepReport};
pub use counting::{quantum_count_betti, sampled_count, CountMode, CountReport};
pub use phase::{
    fejer_kernel, pe_distribution, register_sizing, register_sizing_with_norm, sample_outcomes,
    PhaseEstimationModel, RegisterSizing,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    pub margin_bits: u32,
    /// Phase-estimation shots; 0 skips sampling.
    pub shots: u64,
    pub seed: u64,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            margin_bits: phase::DEFAULT_MARGIN_BITS,
            shots: 0,
            seed: 0,
        }
    }
}

/// Everything learned from one `(ε, k)` run.
#[derive(Debug, Clone, Serialize)]
pub struct BettiRun<T> {
    pub n: usize,
    pub k: usize,
    pub s_k: u64,
    /// `S_k` was empty; β is 0 by definition and nothing was simulated.
    pub empty_complex: bool,
    pub beta_exact: u64,
    pub beta_quantum: u64,
    pub p_zero: T,
    pub sizing: Option<RegisterSizing<T>>,
    #[serde(skip)]
    pub spectrum: Option<SpectrumReport<T>>,
    pub lambda_min: Option<T>,
    pub lambda_max: Option<T>,
    pub gershgorin: Option<i64>,
    pub prep: Option<GroverPrepReport>,
    pub count: CountReport,
    pub sampled: Option<CountReport>,
    pub ledger: Option<CostLedger<T>>,
}

impl<T: Real> BettiRun<T> {
    pub fn agrees(&self) -> bool {
        self.beta_exact == self.beta_quantum
    }
}

/// Largest eigenvalue over all Laplacian blocks, i.e. `λ_max(B)²`.
pub fn block_lambda_max<T: Real>(cx: &ChainComplex) -> Result<T> {
    let mut best = T::zero();
    for k in 1..=cx.top() {
        let l = cx.laplacian(k)?;
        let (vals, _) = symmetric_eigen::<T>(&l.matrix)?;
        if let Some(&v) = vals.last() {
            best = Float::max(best, v);
        }
    }
    Ok(best)
}

/// Enumerate → boundaries → spectrum → register sizing → phase estimation →
/// counting, with cost accounting alongside.
pub fn end_to_end_betti<T: Real>(
    g: &EpsilonGraph<T>,
    k: usize,
    config: &SimConfig,
) -> Result<BettiRun<T>> {
    let cx = ChainComplex::build(g)?;
    end_to_end_on_complex(&cx, k, config)
}

/// As [`end_to_end_betti`] on an already built complex.
pub fn end_to_end_on_complex<T: Real>(
    cx: &ChainComplex,
    k: usize,
    config: &SimConfig,
) -> Result<BettiRun<T>> {
    let n = cx.n();
    if k == 0 || k > n {
        return Err(Error::Argument(format!("k must satisfy 1 <= k <= n = {n}, got {k}")));
    }
    let beta_exact = cx.betti(k)? as u64;
    let s_k = cx.set(k).len() as u64;
    if s_k == 0 {
        return Ok(BettiRun {
            n,
            k,
            s_k,
            empty_complex: true,
            beta_exact,
            beta_quantum: 0,
            p_zero: T::zero(),
            sizing: None,
            spectrum: None,
            lambda_min: None,
            lambda_max: None,
            gershgorin: None,
            prep: None,
            count: quantum_count_betti(0, 0)?,
            sampled: None,
            ledger: None,
        });
    }

    let report: SpectrumReport<T> = spectrum(&cx.laplacian(k)?)?;
    let sizing = register_sizing_with_norm(&report, block_lambda_max::<T>(cx)?, config.margin_bits)?;

    let (p_zero, model) = if sizing.t <= phase::MAX_TABULATED_BITS {
        let m = pe_distribution(&report, sizing.t, sizing.c)?;
        (m.p_zero, Some(m))
    } else {
        (phase::p_zero(&report, sizing.t, sizing.c)?, None)
    };
    let beta_quantum = Float::round(p_zero * T::from_count(s_k as usize))
        .to_f64_lossy()
        .max(0.0) as u64;
    let count = quantum_count_betti(beta_quantum.min(s_k), s_k)?;
    let sampled = match (&model, config.shots) {
        (Some(m), shots) if shots > 0 => {
            let hist = sample_outcomes(m, shots, config.seed)?;
            Some(sampled_count(&hist, s_k)?)
        }
        _ => None,
    };

    let universe = binomial::<f64>(n, k);
    let prep = if universe <= u64::MAX as f64 {
        Some(simulate_bbht_prep(universe as u64, s_k, config.seed)?)
    } else {
        None
    };
    let tally = SimulatedTally::new(
        n,
        k,
        prep.as_ref().map_or(0, |p| p.oracle_queries),
        count.grover_rounds,
        prep.as_ref().map_or(0, |p| p.approx_count_queries),
        sizing.t,
    );
    let delta = T::one() / T::lit(beta_exact.max(1) as f64);
    let ledger = CostLedger::new(n, k, s_k, beta_exact, report.lambda_min, delta, tally)?;

    Ok(BettiRun {
        n,
        k,
        s_k,
        empty_complex: false,
        beta_exact,
        beta_quantum,
        p_zero,
        sizing: Some(sizing),
        lambda_min: report.lambda_min,
        lambda_max: Some(report.lambda_max),
        gershgorin: Some(report.gershgorin_bound),
        spectrum: Some(report),
        prep,
        count,
        sampled,
        ledger: Some(ledger),
    })
}

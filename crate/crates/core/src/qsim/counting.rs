//! Idealised quantum counting of the zero-eigenvalue subspace.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMode {
    /// Noise-free count of the marked subspace.
    ExactCount,
    /// Estimate read off a finite number of phase-estimation shots.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub beta_estimate: u64,
    /// Grover rounds booked; each round runs state preparation and phase
    /// estimation once.
    pub grover_rounds: u64,
    pub mode: CountMode,
}

/// `⌈√(set_size · max(β, 1))⌉` rounds.
pub fn counting_rounds(set_size: u64, beta: u64) -> u64 {
    ((set_size as f64) * (beta.max(1) as f64)).sqrt().ceil() as u64
}

pub fn quantum_count_betti(p_zero_subspace_dim: u64, set_size: u64) -> Result<CountReport> {
    if p_zero_subspace_dim > set_size {
        return Err(Error::Argument(format!(
            "marked subspace dimension {p_zero_subspace_dim} exceeds |S_k| = {set_size}"
        )));
    }
    Ok(CountReport {
        beta_estimate: p_zero_subspace_dim,
        grover_rounds: counting_rounds(set_size, p_zero_subspace_dim),
        mode: CountMode::ExactCount,
    })
}

/// Estimate from a histogram: `round(freq(0) · |S_k|)`.
pub fn sampled_count(histogram: &[u64], set_size: u64) -> Result<CountReport> {
    let shots: u64 = histogram.iter().sum();
    if shots == 0 {
        return Err(Error::Argument("histogram has no shots".into()));
    }
    let freq = histogram[0] as f64 / shots as f64;
    let beta = ((freq * set_size as f64).round() as u64).min(set_size);
    Ok(CountReport {
        beta_estimate: beta,
        grover_rounds: counting_rounds(set_size, beta),
        mode: CountMode::Sampled,
    })
}

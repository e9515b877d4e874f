//! Gate-count expressions evaluated as plain arithmetic.
//!
//! All polylogarithmic factors hidden by Õ are set to 1. The results are
//! for comparing trends across instances and spotting divergence as
//! `λ_min → 0`, not for predicting exact gate counts. Infinite costs are
//! reported as `+∞` (serialised as `null`).

use num_traits::Float;
use serde::Serialize;

use crate::combinadic::build_pascal;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `C(n, k)` as a (possibly rounded) real.
pub fn binomial<T: Real>(n: usize, k: usize) -> T {
    let exact = build_pascal(n).get(n, k);
    let f = num_traits::ToPrimitive::to_f64(&exact).unwrap_or(f64::INFINITY);
    T::lit(f)
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

fn count<T: Real>(x: u64) -> T {
    T::lit(x as f64)
}

/// `k·n² + n·k·√(C(n,k)/|S_k|)`: one-time table construction plus a
/// Grover search over combinadic indices.
pub fn state_prep_cost<T: Real>(n: usize, k: usize, s_k: u64) -> Result<T> {
    check_nk(n, k)?;
    if s_k == 0 {
        return Ok(T::infinity());
    }
    let (nf, kf) = (T::from_count(n), T::from_count(k));
    Ok(kf * nf * nf + nf * kf * Float::sqrt(binomial::<T>(n, k) / count(s_k)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eq1Cost<T> {
    pub value: T,
    /// Set when `β = 0` and the formula was evaluated with `β = 1`.
    pub beta_substituted: bool,
}

/// `√(β·|S_k|) · [n·k·√(C(n,k)/|S_k|) + n²·k/λ_min]`.
pub fn eq1_total<T: Real>(
    n: usize,
    k: usize,
    s_k: u64,
    beta: u64,
    lambda_min: T,
) -> Result<Eq1Cost<T>> {
    check_nk(n, k)?;
    if !(lambda_min > T::zero()) {
        return Err(Error::Domain(format!("lambda_min must be > 0, got {lambda_min}")));
    }
    if s_k == 0 {
        return Ok(Eq1Cost {
            value: T::infinity(),
            beta_substituted: beta == 0,
        });
    }
    let beta_eff = beta.max(1);
    let (nf, kf) = (T::from_count(n), T::from_count(k));
    let s = count::<T>(s_k);
    let bracket = nf * kf * Float::sqrt(binomial::<T>(n, k) / s) + nf * nf * kf / lambda_min;
    Ok(Eq1Cost {
        value: Float::sqrt(count::<T>(beta_eff) * s) * bracket,
        beta_substituted: beta == 0,
    })
}

/// The three comparison formulas for the projection-based algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LgzCosts<T> {
    /// `n⁵ δ⁻¹ √(C(n,k)/|S_k|)`
    pub sampling: T,
    /// `n⁵ δ⁻¹ √(C(n,k)/β)`
    pub betti: T,
    /// `n⁵ √(β·C(n,k))`
    pub exact: T,
}

pub fn lgz_costs<T: Real>(n: usize, k: usize, s_k: u64, beta: u64, delta: T) -> Result<LgzCosts<T>> {
    check_nk(n, k)?;
    if !(delta > T::zero()) {
        return Err(Error::Domain(format!("delta must be > 0, got {delta}")));
    }
    let n5 = Float::powi(T::from_count(n), 5);
    let c = binomial::<T>(n, k);
    let sampling = if s_k == 0 {
        T::infinity()
    } else {
        n5 / delta * Float::sqrt(c / count(s_k))
    };
    let (betti, exact) = if beta == 0 {
        (T::infinity(), T::infinity())
    } else {
        let b = count::<T>(beta);
        (n5 / delta * Float::sqrt(c / b), n5 * Float::sqrt(b * c))
    };
    Ok(LgzCosts {
        sampling,
        betti,
        exact,
    })
}

/// Predicted costs for one instance, next to the simulated tallies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostLedger<T> {
    pub n: usize,
    pub k: usize,
    pub s_k: u64,
    pub beta: u64,
    pub lambda_min: Option<T>,
    pub delta: T,
    pub state_prep: T,
    /// Absent when there is no nonzero eigenvalue.
    pub eq1_total: Option<Eq1Cost<T>>,
    pub lgz: LgzCosts<T>,
    pub simulated: SimulatedTally,
}

/// Query and gate tallies produced by the simulation.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SimulatedTally {
    pub prep_queries: u64,
    pub count_rounds: u64,
    pub approx_count_queries: u64,
    /// Controlled applications of `U` per phase-estimation run, `2^t − 1`.
    pub pe_applications: u64,
    /// `rounds · (k·n² + n·k·prep_queries + n²·pe_applications)`.
    pub gates: f64,
}

impl SimulatedTally {
    pub fn new(
        n: usize,
        k: usize,
        prep_queries: u64,
        count_rounds: u64,
        approx_count_queries: u64,
        t: u32,
    ) -> Self {
        let pe_applications = if t >= 64 { u64::MAX } else { (1u64 << t) - 1 };
        let (nf, kf) = (n as f64, k as f64);
        let per_round =
            kf * nf * nf + nf * kf * prep_queries as f64 + nf * nf * pe_applications as f64;
        Self {
            prep_queries,
            count_rounds,
            approx_count_queries,
            pe_applications,
            gates: count_rounds as f64 * per_round,
        }
    }
}

impl<T: Real> CostLedger<T> {
    pub fn new(
        n: usize,
        k: usize,
        s_k: u64,
        beta: u64,
        lambda_min: Option<T>,
        delta: T,
        simulated: SimulatedTally,
    ) -> Result<Self> {
        let eq1 = match lambda_min {
            Some(lm) if lm > T::zero() => Some(eq1_total(n, k, s_k, beta, lm)?),
            _ => None,
        };
        Ok(Self {
            n,
            k,
            s_k,
            beta,
            lambda_min,
            delta,
            state_prep: state_prep_cost(n, k, s_k)?,
            eq1_total: eq1,
            lgz: lgz_costs(n, k, s_k, beta, delta)?,
            simulated,
        })
    }
}

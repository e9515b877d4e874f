//! Grover search with an unknown number of marked items, simulated at the
//! level of measurement statistics.
//!
//! Stage `s` picks `j` uniformly in `0..m`, runs `j` Grover iterations and
//! measures; the measured item is marked with probability
//! `sin²((2j+1)θ)` where `sin²θ = marked / universe`. Each iteration costs
//! one oracle query and checking the measured item costs one more. After a
//! failure `m ← min(⌈6m/5⌉, ⌈√universe⌉)`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Growth factor of the iteration bound between stages.
pub const GROWTH: f64 = 6.0 / 5.0;

/// Query budget multiplier used when nothing is marked.
pub const CUTOFF_FACTOR: f64 = 3.0;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroverPrepReport {
    pub universe_size: u64,
    pub marked: u64,
    pub oracle_queries: u64,
    pub stages: u64,
    pub succeeded: bool,
    /// Queries booked for approximate counting of the marked set, which
    /// fixes the rotation count of the unitary preparation circuit.
    pub approx_count_queries: u64,
}

/// `⌈3√universe⌉`, the budget after which an empty marked set is declared.
pub fn zero_marked_cutoff(universe: u64) -> u64 {
    (CUTOFF_FACTOR * (universe as f64).sqrt()).ceil() as u64
}

/// `⌈√(universe · marked)⌉`.
pub fn approx_count_cost(universe: u64, marked: u64) -> u64 {
    ((universe as f64) * (marked as f64)).sqrt().ceil() as u64
}

pub fn simulate_bbht_prep(universe: u64, marked: u64, rng_seed: u64) -> Result<GroverPrepReport> {
    if universe == 0 || marked > universe {
        return Err(Error::Argument(format!(
            "need 0 <= marked <= universe and universe >= 1, got {marked} of {universe}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let sin2 = marked as f64 / universe as f64;
    let theta = sin2.sqrt().asin();
    let cap = (universe as f64).sqrt().ceil().max(1.0) as u64;
    let cutoff = zero_marked_cutoff(universe);

    let mut m: u64 = 1;
    let mut queries = 0u64;
    let mut stages = 0u64;
    let succeeded = loop {
        if marked == 0 && queries >= cutoff {
            break false;
        }
        let j = rng.gen_range(0..m);
        queries += j + 1;
        stages += 1;
        let p = ((2 * j + 1) as f64 * theta).sin().powi(2);
        if marked > 0 && rng.gen_bool(p.clamp(0.0, 1.0)) {
            break true;
        }
        m = ((GROWTH * m as f64).ceil() as u64).min(cap);
    };
    Ok(GroverPrepReport {
        universe_size: universe,
        marked,
        oracle_queries: queries,
        stages,
        succeeded,
        approx_count_queries: approx_count_cost(universe, marked),
    })
}

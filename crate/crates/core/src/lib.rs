//! Exact desk-scale simulation of a phase-estimation algorithm for Betti
//! numbers of Vietoris–Rips complexes, checked against an exact classical
//! homology computation.
//!
//! Conventions: a k-simplex has k vertices (so `β_1` counts connected
//! components and `β_2` counts independent loops), vertices are 0-based, and
//! simplex sets are ordered by combinadic rank.
//!
//! Pipeline: [`complex`] builds the ε-graph and its cliques, [`homology`]
//! assembles boundary maps, Laplacians and the Dirac operator and computes
//! exact Betti numbers, [`qsim`] simulates state preparation, phase
//! estimation and counting, and [`resources`] evaluates the gate-count
//! formulas.
//!
//! Floating-point code is generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix it to `f64`.

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod combinadic;
pub mod complex;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod qsim;
pub mod resources;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub type DistanceMatrixF64 = complex::DistanceMatrix<f64>;
pub type Graph = complex::EpsilonGraph<f64>;
pub type Spectrum = homology::SpectrumReport<f64>;
pub type PhaseModel = qsim::PhaseEstimationModel<f64>;
pub type Sizing = qsim::RegisterSizing<f64>;
pub type Run = qsim::BettiRun<f64>;
pub type Ledger = resources::CostLedger<f64>;

//! Batch pipeline behind the `qbetti` binary: read a data set, sweep a grid
//! of `(ε, k)` cells, and emit one report record per cell.

pub mod input;
pub mod squares;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{build_graph, DistanceMatrix};
use crate::error::{Error, Result};
use crate::homology::{write_triplets, ChainComplex};
use crate::qsim::{end_to_end_on_complex, BettiRun, SimConfig};
use crate::resources::CostLedger;

pub use input::{parse_inputs, InputFormat};
pub use squares::gen_squares;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Exact Betti numbers only.
    OracleOnly,
    /// Oracle plus the simulated quantum pipeline.
    FullSim,
}

/// Scale values to sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum EpsilonSpec {
    List(Vec<f64>),
    /// `steps` points `min + i·(max − min)/steps` for `i = 0..steps`,
    /// i.e. the half-open interval `[min, max)`.
    Grid { min: f64, max: f64, steps: usize },
}

impl EpsilonSpec {
    /// Parses `min:max:steps`.
    pub fn parse_grid(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Config(format!("epsilon grid must be min:max:steps, got {s:?}"));
        let [a, b, c] = parts[..] else {
            return Err(bad());
        };
        Ok(Self::Grid {
            min: a.trim().parse().map_err(|_| bad())?,
            max: b.trim().parse().map_err(|_| bad())?,
            steps: c.trim().parse().map_err(|_| bad())?,
        })
    }

    pub fn values(&self) -> Result<Vec<f64>> {
        let v = match *self {
            Self::List(ref v) => v.clone(),
            Self::Grid { min, max, steps } => {
                if !(max >= min) {
                    return Err(Error::Config(format!("epsilon grid max {max} < min {min}")));
                }
                (0..steps)
                    .map(|i| min + (max - min) * i as f64 / steps as f64)
                    .collect()
            }
        };
        if v.is_empty() {
            return Err(Error::Config("epsilon grid is empty".into()));
        }
        if let Some(bad) = v.iter().find(|e| !(e.is_finite() && **e >= 0.0)) {
            return Err(Error::Config(format!("epsilon {bad} must be finite and >= 0")));
        }
        Ok(v)
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: InputFormat,
    pub epsilon: EpsilonSpec,
    pub ks: Vec<usize>,
    pub mode: Mode,
    pub margin_bits: u32,
    pub shots: u64,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub dump_matrices: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Queries {
    pub prep: u64,
    pub count: u64,
    pub approx_count: u64,
}

/// One `(ε, k)` cell of the report.
#[derive(Debug, Clone, Serialize)]
pub struct CellRecord {
    pub n: usize,
    pub k: usize,
    pub epsilon: f64,
    #[serde(rename = "S_k")]
    pub s_k: u64,
    pub beta_exact: u64,
    pub beta_quantum: Option<u64>,
    pub beta_sampled: Option<u64>,
    pub p_zero: Option<f64>,
    pub t: Option<u32>,
    pub c: Option<f64>,
    pub lambda_min: Option<f64>,
    pub lambda_max: Option<f64>,
    pub gershgorin: Option<i64>,
    pub queries: Option<Queries>,
    pub eq1_prediction: Option<f64>,
    pub empty_complex: bool,
    pub agrees: bool,
    pub ledger: Option<CostLedger<f64>>,
}

impl CellRecord {
    fn oracle(n: usize, k: usize, epsilon: f64, s_k: u64, beta: u64) -> Self {
        Self {
            n,
            k,
            epsilon,
            s_k,
            beta_exact: beta,
            beta_quantum: None,
            beta_sampled: None,
            p_zero: None,
            t: None,
            c: None,
            lambda_min: None,
            lambda_max: None,
            gershgorin: None,
            queries: None,
            eq1_prediction: None,
            empty_complex: s_k == 0,
            agrees: true,
            ledger: None,
        }
    }

    fn from_run(epsilon: f64, run: BettiRun<f64>) -> Self {
        let queries = run.prep.as_ref().map(|p| Queries {
            prep: p.oracle_queries,
            count: run.count.grover_rounds,
            approx_count: p.approx_count_queries,
        });
        let eq1 = run
            .ledger
            .as_ref()
            .and_then(|l| l.eq1_total.map(|e| e.value));
        Self {
            n: run.n,
            k: run.k,
            epsilon,
            s_k: run.s_k,
            beta_exact: run.beta_exact,
            beta_quantum: Some(run.beta_quantum),
            beta_sampled: run.sampled.as_ref().map(|s| s.beta_estimate),
            p_zero: Some(run.p_zero),
            t: run.sizing.map(|s| s.t),
            c: run.sizing.map(|s| s.c),
            lambda_min: run.lambda_min,
            lambda_max: run.lambda_max,
            gershgorin: run.gershgorin,
            queries,
            eq1_prediction: eq1,
            empty_complex: run.empty_complex,
            agrees: run.agrees(),
            ledger: run.ledger,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub format: InputFormat,
    pub mode: Mode,
    pub margin_bits: u32,
    pub shots: u64,
    pub seed: u64,
    pub cells: Vec<CellRecord>,
}

impl Report {
    pub fn mismatches(&self) -> usize {
        self.cells.iter().filter(|c| !c.agrees).count()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// `epsilon,k,S_k,beta_oracle,beta_sim,p_zero`; missing values are empty.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("epsilon,k,S_k,beta_oracle,beta_sim,p_zero\n");
        for c in &self.cells {
            let sim = c.beta_quantum.map(|b| b.to_string()).unwrap_or_default();
            let p = c.p_zero.map(|p| p.to_string()).unwrap_or_default();
            let _ = writeln!(s, "{},{},{},{},{},{}", c.epsilon, c.k, c.s_k, c.beta_exact, sim, p);
        }
        s
    }
}

fn sim_config(config: &RunConfig) -> SimConfig {
    SimConfig {
        margin_bits: config.margin_bits,
        shots: config.shots,
        seed: config.seed,
    }
}

fn run_scale(
    d: &DistanceMatrix<f64>,
    eps_index: usize,
    epsilon: f64,
    config: &RunConfig,
) -> Result<Vec<CellRecord>> {
    let g = build_graph(d, epsilon)?;
    let cx = ChainComplex::build(&g)?;
    if let Some(dir) = &config.dump_matrices {
        dump_matrices(dir, eps_index, &cx, &config.ks)?;
    }
    let sim = sim_config(config);
    config
        .ks
        .iter()
        .map(|&k| match config.mode {
            Mode::OracleOnly => Ok(CellRecord::oracle(
                d.n(),
                k,
                epsilon,
                cx.set(k).len() as u64,
                cx.betti(k)? as u64,
            )),
            Mode::FullSim => Ok(CellRecord::from_run(
                epsilon,
                end_to_end_on_complex::<f64>(&cx, k, &sim)?,
            )),
        })
        .collect()
}

fn dump_matrices(dir: &Path, eps_index: usize, cx: &ChainComplex, ks: &[usize]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let write = |name: String, m: &crate::linalg::IntMatrix| -> Result<()> {
        let mut buf = Vec::new();
        write_triplets(&mut buf, m)?;
        fs::write(dir.join(name), buf)?;
        Ok(())
    };
    for &k in ks {
        if k > cx.top() {
            continue;
        }
        write(format!("eps{eps_index}_boundary{k}.txt"), &cx.boundary(k).to_dense())?;
        write(
            format!("eps{eps_index}_boundary{}.txt", k + 1),
            &cx.boundary(k + 1).to_dense(),
        )?;
        write(format!("eps{eps_index}_laplacian{k}.txt"), &cx.laplacian(k)?.matrix)?;
    }
    Ok(())
}

/// Evaluates every cell and writes the requested outputs.
///
/// Cells are computed in parallel; the report is ordered by ε, then k.
pub fn run_pipeline(config: &RunConfig) -> Result<Report> {
    let epsilons = config.epsilon.values()?;
    if config.ks.is_empty() {
        return Err(Error::Config("no k values given".into()));
    }
    let d = parse_inputs(&config.input, config.format)?;
    if let Some(&k) = config.ks.iter().find(|&&k| k == 0 || k > d.n()) {
        return Err(Error::Config(format!("k = {k} outside 1..={}", d.n())));
    }
    let per_scale: Vec<Vec<CellRecord>> = epsilons
        .par_iter()
        .enumerate()
        .map(|(i, &eps)| run_scale(&d, i, eps, config))
        .collect::<Result<_>>()?;
    let mut cells: Vec<CellRecord> = per_scale.into_iter().flatten().collect();
    cells.sort_by(|a, b| a.epsilon.total_cmp(&b.epsilon).then(a.k.cmp(&b.k)));

    let report = Report {
        input: config.input.display().to_string(),
        format: config.format,
        mode: config.mode,
        margin_bits: config.margin_bits,
        shots: config.shots,
        seed: config.seed,
        cells,
    };
    if let Some(out) = &config.out {
        fs::write(out, report.to_json()?)?;
    }
    if let Some(csv) = &config.csv {
        fs::write(csv, report.to_csv())?;
    }
    Ok(report)
}

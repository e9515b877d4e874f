use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use qbetti::cli::{self, squares, EpsilonSpec, InputFormat, Mode, RunConfig};
use qbetti::combinadic::{build_pascal, rank, unrank};
use qbetti::complex::Simplex;
use qbetti::qsim::phase::DEFAULT_MARGIN_BITS;
use qbetti::Error;

#[derive(Parser)]
#[command(name = "qbetti", version, about = "Simulated quantum Betti numbers with an exact oracle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep (ε, k) cells over a data set and write a report.
    Run(RunArgs),
    /// Write the distant-squares point set.
    GenSquares {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 10.0)]
        separation: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Combinadic rank of a 0/1 string (character i is vertex i).
    Rank { bits: String },
    /// Bitstring with the given combinadic rank.
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        rank: String,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "points")]
    format: InputFormat,
    /// Comma-separated scale values.
    #[arg(long, value_delimiter = ',', conflicts_with = "eps_grid")]
    eps: Vec<f64>,
    /// `min:max:steps`, covering [min, max).
    #[arg(long)]
    eps_grid: Option<String>,
    /// Comma-separated simplex dimensions (vertex-count convention).
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<usize>,
    #[arg(long, value_enum, default_value = "full-sim")]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_MARGIN_BITS)]
    margin_bits: u32,
    #[arg(long, default_value_t = 0)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional CSV summary path.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Directory for triplet dumps of boundary maps and Laplacians.
    #[arg(long)]
    dump_matrices: Option<PathBuf>,
}

fn run(args: RunArgs) -> Result<ExitCode, Error> {
    let epsilon = match &args.eps_grid {
        Some(g) => EpsilonSpec::parse_grid(g)?,
        None => EpsilonSpec::List(args.eps),
    };
    let config = RunConfig {
        input: args.input,
        format: args.format,
        epsilon,
        ks: args.k,
        mode: args.mode,
        margin_bits: args.margin_bits,
        shots: args.shots,
        seed: args.seed,
        out: args.out,
        csv: args.csv,
        dump_matrices: args.dump_matrices,
    };
    let report = cli::run_pipeline(&config)?;
    if config.out.is_none() {
        print!("{}", report.to_json()?);
    }
    let bad = report.mismatches();
    if bad > 0 {
        eprintln!("{bad} cell(s) where the simulated Betti number disagrees with the oracle");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Run(args) => run(args),
        Command::GenSquares { m, separation, out } => {
            let text = squares::points_to_text(&squares::gen_squares(m, separation)?);
            match out {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank { bits } => {
            let s = Simplex::from_bits(&bits)?;
            println!("{}", rank(&s, &build_pascal(s.n()))?.value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Unrank { n, k, rank: r } => {
            let l: BigUint = r
                .parse()
                .map_err(|_| Error::Argument(format!("not a natural number: {r:?}")))?;
            println!("{}", unrank(&l, n, k, &build_pascal(n))?.bits());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

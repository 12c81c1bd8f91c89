//! Batch command-line frontend for entanglement-depth certification.
//!
//! Subcommands: `curve` (compute/cache boundary curves), `boundary`
//! (producibility boundaries in the measured plane), `evaluate` (criteria
//! on record files), `depth` (depth search per record), `simulate`
//! (μ sweeps of squeezed states with noise) and `fluctuating` (per-shot or
//! binned fluctuating-N data).
//!
//! Exit codes: 0 success, 2 invalid usage/config, 3 numerical failure,
//! 4 criterion inapplicable for every requested k.

mod cmds;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spindepth", version, about = "Entanglement depth from collective-spin data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Nonlinear,
    Sm,
    Xi2,
    Xi2Sm,
    Duan,
    QubitTangent,
    All,
}

impl CriterionArg {
    fn ids(self) -> Vec<spindepth::CriterionId> {
        use spindepth::CriterionId::*;
        match self {
            CriterionArg::Nonlinear => vec![Nonlinear],
            CriterionArg::Sm => vec![SorensenMolmer],
            CriterionArg::Xi2 => vec![Xi2],
            CriterionArg::Xi2Sm => vec![Xi2Sm],
            CriterionArg::Duan => vec![Duan],
            CriterionArg::QubitTangent => vec![QubitTangent],
            CriterionArg::All => vec![Nonlinear, SorensenMolmer, Xi2, Xi2Sm, Duan, QubitTangent],
        }
    }
}

/// Options shared by every curve-consuming subcommand.
#[derive(Debug, Args)]
struct CurveOpts {
    /// Curve cache directory (env SPINDEPTH_CACHE overrides).
    #[arg(long)]
    curve_cache: Option<PathBuf>,
    /// λ sweep upper bound, as a multiple of the group spin J.
    #[arg(long)]
    lambda_max: Option<f64>,
    /// Maximum X gap between consecutive curve samples.
    #[arg(long)]
    resolution: Option<f64>,
}

impl CurveOpts {
    fn config(&self) -> spindepth::CurveConfig {
        let mut config = spindepth::CurveConfig::default();
        if let Some(f) = self.lambda_max {
            config.lambda_max_factor = f;
        }
        if let Some(r) = self.resolution {
            config.resolution = r;
        }
        config
    }

    fn cache(&self) -> spindepth::CurveCache {
        let dir = std::env::var_os("SPINDEPTH_CACHE")
            .map(PathBuf::from)
            .or_else(|| self.curve_cache.clone());
        match dir {
            Some(dir) => spindepth::CurveCache::with_dir(self.config(), dir),
            None => spindepth::CurveCache::new(self.config()),
        }
    }
}

#[derive(Debug, Args)]
struct OutputOpts {
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct KRange {
    /// Single group size k.
    #[arg(long)]
    k: Option<u64>,
    /// Inclusive range of group sizes, as "lo:hi".
    #[arg(long)]
    k_range: Option<String>,
}

impl KRange {
    fn resolve(&self, default_hi: u64) -> Result<(u64, u64), CliError> {
        match (self.k, &self.k_range) {
            (Some(k), None) => Ok((k, k)),
            (None, Some(range)) => {
                let (lo, hi) = range
                    .split_once(':')
                    .ok_or_else(|| CliError::Usage(format!("bad k range '{range}'")))?;
                let lo: u64 = lo
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad k range '{range}'")))?;
                let hi: u64 = hi
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad k range '{range}'")))?;
                if lo == 0 || hi < lo {
                    return Err(CliError::Usage(format!("bad k range '{range}'")));
                }
                Ok((lo, hi))
            }
            (None, None) => Ok((1, default_hi)),
            (Some(_), Some(_)) => Err(CliError::Usage(
                "--k and --k-range are mutually exclusive".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute and cache boundary curves F_J / G_J.
    Curve {
        /// Comma-separated list of 2J values (e.g. 2,6,10 for J = 1,3,5).
        #[arg(long, value_delimiter = ',', required = true)]
        two_j: Vec<u32>,
        /// Which curves to emit.
        #[arg(long, default_value = "both")]
        kind: String,
        #[command(flatten)]
        curves: CurveOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Producibility boundaries in the (⟨Jy²+Jz²⟩, (ΔJx)²) plane.
    Boundary {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        two_j: u32,
        /// Comma-separated group sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u64>,
        #[command(flatten)]
        curves: CurveOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Evaluate criteria on a record file (JSON lines or CSV).
    Evaluate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = CriterionArg::All)]
        criterion: CriterionArg,
        #[command(flatten)]
        krange: KRange,
        #[command(flatten)]
        curves: CurveOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Search the maximal certified depth per record.
    Depth {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = CriterionArg::Nonlinear)]
        criterion: CriterionArg,
        /// Use computed half-integer curves for odd k at half-integer j.
        #[arg(long)]
        half_integer: bool,
        /// Evaluate every admissible k instead of bisecting.
        #[arg(long)]
        linear_scan: bool,
        #[command(flatten)]
        curves: CurveOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Sweep ground states of H_μ = Jx² − μJz with optional noise and
    /// report the certified depth of both curve criteria.
    Simulate {
        /// Even particle number.
        #[arg(long = "N")]
        n: u64,
        #[arg(long, default_value_t = 1e-2)]
        mu_min: f64,
        #[arg(long, default_value_t = 1e4)]
        mu_max: f64,
        /// Number of μ points (geometric grid).
        #[arg(long, default_value_t = 31)]
        points: usize,
        /// Noise: "none", a white-noise probability, or "decohere:m".
        #[arg(long, default_value = "none")]
        noise: String,
        /// RNG seed for stochastic extensions (recorded in the output).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        curves: CurveOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Fluctuating-N criteria from per-shot CSV or pre-binned JSON.
    Fluctuating {
        #[arg(long)]
        input: PathBuf,
        /// 2j of the constituent particles.
        #[arg(long)]
        two_j: u32,
        #[arg(long, value_enum, default_value_t = CriterionArg::Nonlinear)]
        criterion: CriterionArg,
        #[command(flatten)]
        krange: KRange,
        /// Report a depth verdict instead of per-k results.
        #[arg(long)]
        depth: bool,
        #[command(flatten)]
        curves: CurveOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
}

/// Error carrying the documented exit code.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Numerical(String),
    /// Criterion inapplicable for every requested k.
    Inapplicable(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) | CliError::Inapplicable(m) => {
                write!(f, "{m}")
            }
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Inapplicable(_) => 4,
        }
    }
}

impl From<spindepth::BoundaryError> for CliError {
    fn from(e: spindepth::BoundaryError) -> Self {
        use spindepth::BoundaryError::*;
        match e {
            NonIntegerSpin { .. } | NotHalfIntegerSpin { .. } | SpinMismatch { .. }
            | InvalidGroupSize { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<spindepth::CriterionError> for CliError {
    fn from(e: spindepth::CriterionError) -> Self {
        use spindepth::CriterionError::*;
        match e {
            SpinMismatch { .. } | InvalidGroupSize { .. } | NonIntegerGroupSpin { .. }
            | NotQubit { .. } | MissingFields { .. } => CliError::Usage(e.to_string()),
            NotApplicable { .. } => CliError::Inapplicable(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<spindepth::FluctError> for CliError {
    fn from(e: spindepth::FluctError) -> Self {
        use spindepth::FluctError::*;
        match e {
            EmptyEnsemble | BadWeight { .. } => CliError::Usage(e.to_string()),
            NotApplicable { .. } => CliError::Inapplicable(e.to_string()),
            BinUnderflow { .. } => CliError::Usage(e.to_string()),
            Criterion(c) => c.into(),
        }
    }
}

impl From<spindepth::StatesError> for CliError {
    fn from(e: spindepth::StatesError) -> Self {
        use spindepth::StatesError::*;
        match e {
            InvalidInput { .. } | SizeLimitExceeded { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<spindepth::io::IoError> for CliError {
    fn from(e: spindepth::io::IoError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn spin_from_two_j(two_j: u32) -> Result<spindepth::SpinLength, CliError> {
    spindepth::SpinLength::from_two_j(two_j).map_err(|e| CliError::Usage(e.to_string()))
}

/// Writer for --out or stdout.
fn open_output(out: &Option<PathBuf>) -> Result<Box<dyn std::io::Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cmds::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coresat::GeneralizedParams;

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "coresat",
    version,
    about = "Core-satellite graph generator and analyzer"
)]
pub struct Cli {
    /// Tolerance for numeric comparisons and eigenvalue grouping
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Largest node count for which dense matrices are built
    #[arg(long, global = true, default_value_t = 2000)]
    pub dense_limit: usize,

    /// Write the main output here instead of standard output
    #[arg(short, long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a core-satellite graph as an edge list, Matrix Market or DOT file
    Generate(GenerateArgs),
    /// Clustering and assortativity report (JSON)
    Metrics(GraphArgs),
    /// Adjacency and Laplacian spectra with derived indices (JSON)
    Spectrum(SpectrumArgs),
    /// Metrics of Θ(c, sizes, (p, ..., p)) for every core c and 1 <= p <= pmax (CSV)
    Sweep(SweepArgs),
    /// Check closed forms and spectra against the oracles on a parameter grid
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Core clique size
    #[arg(long)]
    pub core: usize,

    /// Satellite cliques as size:count[,size:count...]
    #[arg(long)]
    pub satellites: Satellites,
}

impl GraphArgs {
    pub fn params(&self) -> CliResult<GeneralizedParams> {
        Ok(GeneralizedParams::new(
            self.core,
            self.satellites.0.iter().copied(),
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Satellites(pub Vec<(usize, usize)>);

impl FromStr for Satellites {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let classes = s
            .split(',')
            .map(|item| {
                let (size, count) = item
                    .split_once(':')
                    .ok_or_else(|| format!("expected size:count, got {item:?}"))?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| format!("bad number {t:?} in {item:?}: {e}"))
                };
                Ok((parse(size)?, parse(count)?))
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(Satellites(classes))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Mtx,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Analytic,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    #[arg(long, value_enum, default_value_t = Method::Analytic)]
    pub method: Method,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "3,5,10")]
    pub cores: Vec<usize>,

    #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
    pub sizes: Vec<usize>,

    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub pmax: u64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Largest node count for exhaustive subgraph enumeration
    #[arg(long, default_value_t = 50)]
    pub max_n: usize,

    /// Seed for the randomized generalized instances
    #[arg(long, default_value_t = 20_260_101)]
    pub seed: u64,

    /// Count triangles with the sign-flipped formula (negative control)
    #[arg(long, hide = true)]
    pub inject_triangle_sign_fault: bool,
}

impl Cli {
    pub fn validate(&self) -> CliResult<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Usage(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

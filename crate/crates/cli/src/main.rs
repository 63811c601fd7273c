//! `resonance-atlas`: verification suites, point classification, sphere
//! sampling and mesh export for the 1:1 resonance stability atlas.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{Overrides, RunConfig};
use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;
const THREADS_ENV: &str = "RESONANCE_ATLAS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "resonance-atlas",
    version,
    about,
    allow_negative_numbers = true
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Zero threshold for real parts and ranks.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Root-clustering tolerance.
    #[arg(long, global = true)]
    cluster_tol: Option<f64>,
    /// Imaginary-part scale of the reduced unfolding.
    #[arg(long, global = true, allow_negative_numbers = true)]
    nu5: Option<f64>,
    /// Seed of the sphere sampler.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Lattice resolution of the strata suite.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// TOML file with any of tol, cluster_tol, nu5, seed, grid.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification checks and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Classify one point of the parameter sphere.
    #[command(allow_negative_numbers = true)]
    Classify {
        /// ν₁ ν₂ ν₃ ν₄, optionally followed by ν₅.
        #[arg(num_args = 4..=5, required = true)]
        nu: Vec<f64>,
        /// Print JSON instead of a one-line summary.
        #[arg(long)]
        json: bool,
    },
    /// Classify quasi-uniform sphere samples into a CSV file.
    Sample {
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Export a triangulated critical surface.
    Mesh {
        #[arg(long, value_enum, default_value_t = DiscArg::Both)]
        disc: DiscArg,
        #[arg(long, default_value_t = 128)]
        resolution: usize,
        #[arg(long, value_enum, default_value_t = MeshFormat::Obj)]
        format: MeshFormat,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Tables,
    Strata,
    NormalForms,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiscArg {
    Plus,
    Minus,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeshFormat {
    Obj,
    Csv,
}

fn resolve_config(g: &GlobalArgs) -> CliResult<RunConfig> {
    let file = match &g.config {
        Some(p) => Overrides::load(p)?,
        None => Overrides::default(),
    };
    let flags = Overrides {
        tol: g.tol,
        cluster_tol: g.cluster_tol,
        nu5: g.nu5,
        seed: g.seed,
        grid: g.grid,
    };
    RunConfig::resolve(&file, &flags)
}

fn init_threads() -> CliResult<()> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got {v:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> CliResult<()> {
    init_threads()?;
    let cfg = resolve_config(&cli.global)?;
    match cli.command {
        Command::Verify { suite } => commands::verify::run(suite, &cfg),
        Command::Classify { nu, json } => commands::classify::run(&nu, json, &cfg),
        Command::Sample { n, out } => commands::sample::run(n, &out, &cfg),
        Command::Mesh {
            disc,
            resolution,
            format,
            out,
        } => commands::mesh::run(disc, resolution, format, &out, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("resonance-atlas: {e}");
            e.exit_code()
        }
    }
}

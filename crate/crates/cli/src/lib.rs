//! Command-line front end for `sungeo`.
//!
//! Every subcommand prints one JSON report on stdout. Exit codes: 0 success,
//! 2 invalid input, 3 numerical failure, 4 usage error.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub mod commands;
pub mod io;
pub mod report;

pub use report::Report;

pub const TOL_ENV: &str = "SUNGEO_TOL";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("usage error: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Usage(_) => 4,
        }
    }
}

impl From<sungeo::Error> for CliError {
    fn from(e: sungeo::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sungeo",
    version,
    about = "Geometry of SU(n) under the Frobenius metric"
)]
pub struct Cli {
    /// Group-membership tolerance; defaults to $SUNGEO_TOL, then 1e-8·n.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance d(P, Q) and the spectral data of P*Q.
    Dist { p: PathBuf, q: PathBuf },
    /// Minimal velocity X with P·exp(X) = Q.
    Log { p: PathBuf, q: PathBuf },
    /// Points P·exp(tX) along the canonical minimizing geodesic.
    Geo {
        p: PathBuf,
        q: PathBuf,
        /// Comma-separated parameters, e.g. 0,0.5,1.
        #[arg(
            long = "t",
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        t: Vec<f64>,
    },
    /// Classify the generalized principal logarithms of Q.
    Plog { q: PathBuf },
    /// Diameter of SU(n), optionally with the diametral points of a matrix.
    Diam {
        n: usize,
        #[arg(long)]
        point: Option<PathBuf>,
    },
    /// Haar-random SU(n) matrix.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The set of minimal logarithms of Q, optionally with samples from it.
    Theta {
        q: PathBuf,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check m(Q) against an exhaustive lattice search.
    Oracle {
        q: PathBuf,
        /// Search box half-width K; entries range over [-K, K].
        #[arg(long = "box", default_value_t = 3)]
        bound: u32,
    },
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    commands::dispatch(cli)
}

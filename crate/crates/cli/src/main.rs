//! `semiring`: checks semiring structure and theorems from the command line.
//!
//! Exit codes: 0 when every judged verdict matches the expectations table
//! (or the command is informational), 1 on a mismatch, 2 on usage, parse or
//! input errors.

mod commands;
mod report;
mod target;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use semiring_core::harness::Scope;

#[derive(Debug, Parser)]
#[command(name = "semiring", version, about = "Commutative semiring toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Flags {
    /// Largest finite order enumerated by `check`.
    #[arg(long, global = true, default_value_t = 3)]
    pub order: usize,
    /// Element-size bound for sweeps over infinite families.
    #[arg(long, global = true, default_value_t = 30)]
    pub bound: u64,
    #[arg(long, global = true, default_value_t = 3)]
    pub degree_bound: usize,
    #[arg(long, global = true, default_value_t = 6)]
    pub coeff_bound: u64,
    /// Random trials for sampled checks.
    #[arg(long, global = true, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for enumeration; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// TOML file whose `[expected]` entries override the shipped table.
    #[arg(long, global = true)]
    pub expectations: Option<PathBuf>,
    /// Restrict `check` to one family: nat, bool, trop or finite.
    #[arg(long, global = true)]
    pub family: Option<String>,
}

impl Flags {
    pub fn scope(&self) -> anyhow::Result<Scope> {
        let family = match &self.family {
            None => None,
            Some(f) => Some(f.parse().map_err(anyhow::Error::msg)?),
        };
        Ok(Scope {
            order: self.order,
            bound: self.bound,
            degree_bound: self.degree_bound,
            coeff_bound: self.coeff_bound,
            trials: self.trials,
            seed: self.seed,
            workers: self.workers,
            family,
        })
    }
}

/// `TARGET` is `nat`, `bool`, `trop` or the path of a table file.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of every table in a file.
    Validate { path: PathBuf },
    /// List the ideals of a finite semiring with their classification.
    Ideals { target: String },
    /// List prime ideals (registered primes for infinite families).
    Spec { target: String },
    /// Euclidean gcd with its remainder chain.
    Gcd {
        target: String,
        a: String,
        b: String,
    },
    /// Factor an element into irreducibles.
    Factor { target: String, x: String },
    /// Content ideals of one or two polynomials.
    Content {
        target: String,
        f: String,
        g: Option<String>,
    },
    /// Gaussian check for a family, or for one pair of polynomials.
    Gaussian {
        target: String,
        f: Option<String>,
        g: Option<String>,
    },
    /// Localize at an MC-set: units, nonzero, powers:<a>,.. or set:{i,j,..}.
    Localize { target: String, mc_set: String },
    /// Search for an integral equation satisfied by a fraction `a/b`.
    Integral { target: String, u: String },
    /// Goldman-Krull detection.
    Gk { target: String },
    /// Nilpotent-freeness and its local-global check.
    Nilpotent { target: String },
    /// Write every semiring of an order in the table format.
    Enumerate {
        order: usize,
        /// File to write instead of the report output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Keep one table per isomorphism class.
        #[arg(long)]
        dedup: bool,
    },
    /// Run a theorem-check suite: euclid, pisd, ufsd, saturated, gaussian,
    /// closed, gk, nilpotent or all.
    Check { suite: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            let text = if cli.flags.json {
                report.render_json()
            } else {
                report.render_text()
            };
            print!("{text}");
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rsbf",
    version,
    about = "Exact orbit-level algebra for rotation symmetric Boolean functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. Defaults to csv for `spectrum`, json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Worker threads for parallel sections. Output does not depend on it.
    #[arg(long, global = true, value_name = "INT")]
    pub threads: Option<usize>,

    /// Set every dimension budget to this n (default caps: enumeration 24,
    /// matrix 16, square identity 14, oracles 16/20, sampled search 12).
    #[arg(long, global = true, value_name = "INT")]
    pub max_n_override: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct Dimension {
    /// Dimension n of F_2^n (1..=32).
    #[arg(long, value_name = "INT")]
    pub n: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List orbits of the cyclic shift action with representatives and sizes.
    Orbits {
        #[command(flatten)]
        dim: Dimension,
        /// Include every orbit element.
        #[arg(long)]
        elements: bool,
    },
    /// Print the RSBF matrix.
    Matrix {
        #[command(flatten)]
        dim: Dimension,
    },
    /// Check matrix identities. With no check flags, all checks run.
    Verify {
        #[command(flatten)]
        dim: Dimension,
        /// A*A = 2^n I by full integer product.
        #[arg(long)]
        square: bool,
        /// Diagonal sum vs the sigma-sum closed form.
        #[arg(long)]
        trace: bool,
        /// Eigenvalue counts vs the directly computed trace.
        #[arg(long)]
        eigen: bool,
        /// Closed forms vs brute-force oracles.
        #[arg(long)]
        oracle: bool,
    },
    /// Walsh spectrum of an RSBF at the orbit representatives.
    Spectrum {
        #[command(flatten)]
        dim: Dimension,
        /// g_n orbit values or a 2^n truth table, as 0/1 characters; `@path` reads a file.
        #[arg(long, value_name = "BITS|@FILE")]
        function: String,
    },
    /// Eigenvalue multiplicities from closed forms (n > 2).
    Eigen {
        #[command(flatten)]
        dim: Dimension,
    },
    /// Search RSBFs for bent functions.
    BentSearch {
        #[command(flatten)]
        dim: Dimension,
        /// Test all 2^g_n functions.
        #[arg(long, conflicts_with = "sample", required_unless_present = "sample")]
        exhaustive: bool,
        /// Test this many random functions.
        #[arg(long, value_name = "COUNT")]
        sample: Option<u64>,
        /// Seed for sampled mode.
        #[arg(long, value_name = "INT", default_value_t = 0, requires = "sample")]
        seed: u64,
    },
    /// Brute-force orbit count, sigma sums and trace.
    Oracle {
        #[command(flatten)]
        dim: Dimension,
    },
}

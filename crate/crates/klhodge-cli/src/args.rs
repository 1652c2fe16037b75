use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "klhodge",
    version,
    about = "Exact Hodge numbers for symmetric-power moments of Kloosterman and Airy sums"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the document to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hodge numbers through the closed formula, the basis route, or both.
    Hodge(HodgeArgs),
    /// Cohomology dimensions and local solution counts.
    Dims(DimsArgs),
    /// Counting tables: q, n, d, a, b.
    Counts(CountsArgs),
    /// Degree-graded cohomology bases.
    Basis(BasisArgs),
    /// Cross-route consistency checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Kl,
    KlTilde,
    Airy,
    V21,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kl => "kl",
            Family::KlTilde => "kl-tilde",
            Family::Airy => "airy",
            Family::V21 => "v21",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Closed,
    Basis,
    Both,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Basis => "basis",
            Route::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Q,
    N,
    D,
    A,
    B,
}

#[derive(Debug, Args)]
pub struct HodgeArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Defaults to `closed`, or `basis` for v21.
    #[arg(long, value_enum)]
    pub route: Option<Route>,
    /// Emit the full mixed table (kl with 3 | k, or kl-tilde; closed route only).
    #[arg(long)]
    pub mixed: bool,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Family::Kl)]
    pub family: Family,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    #[arg(long, value_enum)]
    pub what: CountKind,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    /// A single degree instead of the whole table (q and n only).
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<i64>,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Middle cohomology instead of the full cokernel basis.
    #[arg(long)]
    pub mid: bool,
    /// Include each basis vector as a monomial expansion.
    #[arg(long)]
    pub vectors: bool,
    /// Top degree of the chain; beyond the support every slice must vanish.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "sweep", requires = "k")]
    pub n: Option<u32>,
    #[arg(long, required_unless_present = "sweep", requires = "n")]
    pub k: Option<u32>,
    #[arg(long, conflicts_with_all = ["n", "k"])]
    pub sweep: bool,
    #[arg(long, default_value_t = 4)]
    pub max_n: u32,
    #[arg(long, default_value_t = 12)]
    pub max_k: u32,
}

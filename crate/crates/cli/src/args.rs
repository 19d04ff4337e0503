use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fatforest_core::homology::DEFAULT_VERTEX_GUARD;

/// Stanley–Reisner invariants of fat forests and their skeletons.
#[derive(Debug, Parser)]
#[command(name = "fatforest", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Face counts (f_{-1}, f_0, ...).
    Fvector {
        #[command(flatten)]
        input: InputArgs,
        /// Defaults to the closed form for `--sizes` and brute force for `--facets`.
        #[arg(long, value_enum)]
        method: Option<ComplexMethod>,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hilbert series numerator over (1-t)^N.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        /// Defaults to the closed form for `--sizes` and brute force for `--facets`.
        #[arg(long, value_enum)]
        method: Option<ComplexMethod>,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graded Betti table.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        /// Defaults to the closed form for `--sizes` and brute force for `--facets`.
        #[arg(long, value_enum)]
        method: Option<BettiMethod>,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// pd, reg, depth, Krull dimension and Cohen–Macaulayness.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        /// Defaults to the closed form for `--sizes` and brute force for `--facets`.
        #[arg(long, value_enum)]
        method: Option<InvariantsMethod>,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every method and compare; exits 1 on any disagreement.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Binomial identities from the two numerator forms; exits 1 on a failed degree.
    Identities {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Betti tables of Δ(3,4,5) for k = 1, 2, 3, checked three ways.
    PaperExamples {
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Facet sizes n_1,...,n_e.
    #[arg(long, value_delimiter = ',', conflicts_with = "facets", required_unless_present = "facets")]
    pub sizes: Option<Vec<usize>>,
    /// Skeleton dimension; omit for the whole complex.
    #[arg(short = 'k', long = "skeleton")]
    pub k: Option<usize>,
    /// `chain-distinct`, `star`, or an explicit schedule such as `2:0,3:4`
    /// (facet index from 2, attachment vertex).
    #[arg(long, default_value = "chain-distinct")]
    pub gluing: String,
    /// Read an arbitrary complex from a facet-list file instead.
    #[arg(long, value_name = "FILE")]
    pub facets: Option<PathBuf>,
    /// Vertex count for `--facets` (default: largest index + 1).
    #[arg(long, requires = "facets")]
    pub vertices: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Homology coefficients: gf2, gf3, gfP for a prime P, or rat.
    #[arg(long, default_value = "gf2")]
    pub field: String,
    /// Largest vertex count the brute-force routes accept.
    #[arg(long, env = "FATFOREST_ORACLE_GUARD", default_value_t = DEFAULT_VERTEX_GUARD)]
    pub guard: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::PaperTable)]
    pub format: Format,
    /// Write the document here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    PaperTable,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplexMethod {
    Closed,
    FromComplex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BettiMethod {
    Formula,
    Strands,
    Hochster,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InvariantsMethod {
    Closed,
    Oracle,
}

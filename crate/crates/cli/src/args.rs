use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "rmx",
    version,
    about = "Exact universal R-matrices, coquasitriangular forms and braidings for finite Abelian groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArg {
    /// Group as a product of cyclic factors, e.g. Z4xZ2, or 1 for the trivial group
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug, Clone)]
pub struct JsonArg {
    /// Also write a machine-readable report to this path
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

/// A single bicharacter, either as a K-matrix or as the cyclic σ_k.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct BicharChoice {
    /// Generator exponent matrix, e.g. "K=0,1;1,0"
    #[arg(long)]
    pub bichar: Option<String>,
    /// σ_k(γ^r, γ^s) = ω^{krs}; cyclic groups only
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every bicharacter of the group
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        /// Only list bicharacters with σ(α,β)σ(β,α) = 1
        #[arg(long)]
        commutation_factors_only: bool,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Run the axiom suite for one bicharacter or for all of them
    Verify {
        #[command(flatten)]
        group: GroupArg,
        /// Verify every bicharacter of the group
        #[arg(long, conflicts_with_all = ["bichar", "k"])]
        all: bool,
        /// Generator exponent matrix, e.g. "K=0,1;1,0"
        #[arg(long)]
        bichar: Option<String>,
        /// σ_k on a cyclic group
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Worker threads for --all; reports keep enumeration order
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Build the universal R-matrix of a bicharacter
    Rmatrix {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        choice: BicharChoice,
        /// Also check the R-matrix axioms and the Yang-Baxter equation
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Check the coquasitriangular axioms for the form of a bicharacter
    Coquasi {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        bichar: String,
        /// Also test cotriangularity and the antipode relations
        #[arg(long)]
        cotriangular: bool,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Compute the braiding on a graded space
    Braid {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        bichar: String,
        /// Dimensions per degree, e.g. "0.0:1,1.1:2"
        #[arg(long)]
        dims: String,
        /// Also check hexagons, the braid relation and symmetry on V ⊗ V ⊗ V
        #[arg(long)]
        check_ybe: bool,
        #[command(flatten)]
        json: JsonArg,
    },
    /// Write the R-matrix and its metadata as JSON
    Dump {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        choice: BicharChoice,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
}

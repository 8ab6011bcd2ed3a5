use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "cosetlab", version, about = "Exact computations for affine/N=2 coset constructions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
pub struct TypeArgs {
    /// Cartan series: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Args, Clone)]
pub struct LevelArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Level k as an exact rational, e.g. `5/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub level: String,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Root system data and identity checks.
    Rootsys {
        #[command(subcommand)]
        cmd: RootsysCmd,
    },
    /// Level-dependent Gram matrices.
    Forms {
        #[command(subcommand)]
        cmd: FormsCmd,
    },
    /// Weight correspondences between the affine and superconformal sides.
    Weights {
        #[command(subcommand)]
        cmd: WeightsCmd,
    },
    /// Integral lattices.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Symbolic OPE verification.
    Ope {
        #[command(subcommand)]
        cmd: OpeCmd,
    },
    /// Formal characters and the branching transforms.
    Char {
        #[command(subcommand)]
        cmd: CharCmd,
    },
    /// Character-level spectral flow.
    Flow {
        #[command(subcommand)]
        cmd: FlowCmd,
    },
}

#[derive(Subcommand)]
pub enum RootsysCmd {
    /// Positive roots, h∨, the long root lattice and identity checks.
    Info(TypeArgs),
}

#[derive(Subcommand)]
pub enum FormsCmd {
    /// Builds g, g*, G, G* and checks the inverse pairs and central charges.
    Verify(LevelArgs),
}

#[derive(Args)]
pub struct ScInput {
    /// J-values, one per positive root.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "jstar")]
    pub j: Option<String>,
    /// J*-values, one per positive root.
    #[arg(long, allow_hyphen_values = true)]
    pub jstar: Option<String>,
}

#[derive(Subcommand)]
pub enum WeightsCmd {
    /// μ ↦ μ_sc for a weight in simple-root coordinates.
    ToSc {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// μ ↦ μ_af for a superconformal weight.
    ToAf {
        #[command(flatten)]
        level: LevelArgs,
        #[command(flatten)]
        input: ScInput,
    },
    /// Integrality hypothesis and conclusion of the converse correspondence.
    Converse {
        #[command(flatten)]
        level: LevelArgs,
        #[command(flatten)]
        input: ScInput,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeKind {
    LPlus,
    LMinus,
    Kernel,
    QscDual,
    EPlus,
    EMinus,
    Custom,
}

#[derive(Args)]
pub struct LatticeArgs {
    #[arg(long, value_enum)]
    pub lattice: LatticeKind,
    #[arg(long = "type")]
    pub ty: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub level: Option<String>,
    /// Gram matrix for `--lattice custom`, rows separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub gram: Option<String>,
}

#[derive(Subcommand)]
pub enum LatticeCmd {
    /// Elementary divisors of L*/L.
    Disc {
        #[command(flatten)]
        lattice: LatticeArgs,
        /// Expected divisors; a mismatch exits with status 1.
        #[arg(long)]
        expect: Option<String>,
    },
    /// All vectors with |norm| at most the bound.
    Enum {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long)]
        bound: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpeCheck {
    Jalpha,
    Hminus,
    Fst,
    All,
}

#[derive(Subcommand)]
pub enum OpeCmd {
    /// Compares engine OPEs with the expected free-field tables.
    Verify {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long, value_enum, default_value_t = OpeCheck::All)]
        check: OpeCheck,
    },
}

#[derive(Subcommand)]
pub enum CharCmd {
    /// defermionize(fermionize(seed)) against the seed.
    Roundtrip {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long = "T")]
        t: String,
        /// Fermionization weight (default: the seed's base weight).
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Affine character to superconformal character.
    Fermionize {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long = "T")]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Also write the resulting character document here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Superconformal character to affine character.
    Defermionize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "T")]
        t: String,
        /// J*-values of λ (default: the input's base weight).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// The lattice sum identity behind the round trip, for one γ.
    Cflemma {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long = "T")]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Norm bound for the brute-force enumeration.
        #[arg(long, default_value_t = 9)]
        bound: i64,
    },
}

#[derive(Subcommand)]
pub enum FlowCmd {
    /// Equivariance of both flows, additivity, and the identity at γ = 0.
    Check {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long = "T")]
        t: String,
        /// Root-lattice γ for the superconformal flow (repeatable).
        #[arg(long = "sc-gamma", allow_hyphen_values = true)]
        sc_gamma: Vec<String>,
        /// J*-values of γ for the affine flow (repeatable).
        #[arg(long = "af-gamma", allow_hyphen_values = true)]
        af_gamma: Vec<String>,
    },
    /// h_af, ξ^γ, ζ^γ, h^γ for γ given by J*-values.
    Diagnostics {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
}

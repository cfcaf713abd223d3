use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rslab", version, about = "Exact spin-3/2 index, kernel and representation computations")]
pub struct Cli {
    /// Print the JSON report envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Complete intersection X_n(d_1, ..., d_r) in CP^{n+r}.
    Ci(CiArgs),
    /// Spin-3/2 decomposition and kernel formulas for a holonomy group.
    Holonomy(HolonomyArgs),
    /// Weyl dimension, Casimir, weights and tensor products.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Casimir positivity check on the round sphere S^n.
    Sphere(SphereArgs),
    /// Product manifolds.
    #[command(subcommand)]
    Product(ProductCommand),
    /// Run the regression manifest of reference values.
    VerifyPaper(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// L-genus on the Chern profile.
    Chern,
    /// Coefficient extraction from the hypersurface generating function.
    Series,
    /// Both, and require agreement.
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Chern => "chern",
            Method::Series => "series",
            Method::Both => "both",
        }
    }
}

#[derive(Args, Debug)]
pub struct CiArgs {
    /// Complex dimension.
    #[arg(short = 'n', long = "dim")]
    pub n: u32,
    /// Degrees, comma separated or repeated.
    #[arg(short = 'd', long = "degrees", value_delimiter = ',', num_args = 1.., required = true)]
    pub degrees: Vec<u32>,
    /// Signature method.
    #[arg(long, value_enum, default_value_t = Method::Chern)]
    pub method: Method,
    /// Include the Rarita-Schwinger kernel report.
    #[arg(long)]
    pub kernel: bool,
    /// Include the coefficient identities for this real dimension (4, 8 or 12).
    #[arg(long)]
    pub identities: bool,
}

#[derive(Args, Debug)]
pub struct HolonomyArgs {
    /// su, sp, spsp, g2, spin7, so, u, su3-symmetric, or catalog.
    pub group: String,
    /// Rank parameter for su, sp, spsp, so, u.
    pub rank: Option<u32>,
    /// Calabi-Yau Hodge numbers h^{1,1}, ..., h^{1,n-1}.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub h1p: Option<Vec<i64>>,
    /// Hyperkähler Hodge numbers h^{1,1}, ..., h^{n,1}.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub hk1: Option<Vec<i64>>,
    #[arg(long, allow_negative_numbers = true)]
    pub b2: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b3: Option<i64>,
    #[arg(long = "b4minus", allow_negative_numbers = true)]
    pub b4_minus: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum RepCommand {
    /// Weyl dimension of V(λ).
    Dim(WeightArgs),
    /// Casimir eigenvalue ⟨λ+2δ, λ⟩.
    Casimir(WeightArgs),
    /// Dominant weights of V(λ) with multiplicities.
    Weights(WeightArgs),
    /// Decompose V(λ) ⊗ V(μ).
    Tensor(TensorArgs),
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    /// Root system such as G2, B3, C1xC2, A2xU1.
    pub algebra: String,
    /// Dynkin labels, comma separated.
    #[arg(allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Args, Debug)]
pub struct TensorArgs {
    pub algebra: String,
    #[arg(allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(allow_hyphen_values = true)]
    pub mu: String,
}

#[derive(Args, Debug)]
pub struct SphereArgs {
    pub n: u32,
    /// Check every dimension from n up to this one.
    #[arg(long)]
    pub to: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum ProductCommand {
    /// Parallel spin-3/2 fields on M × N from counts on the factors.
    Parallel(ParallelArgs),
    /// ind Q on a product of complete intersections, two ways.
    Index(IndexArgs),
}

#[derive(Args, Debug)]
pub struct ParallelArgs {
    /// Parallel spinors and parallel spin-3/2 fields on M: `s,r`.
    #[arg(long, value_delimiter = ',')]
    pub left: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    pub right: Vec<i64>,
    #[arg(long)]
    pub left_dim: Option<u32>,
    #[arg(long)]
    pub right_dim: Option<u32>,
}

#[derive(Args, Debug)]
pub struct IndexArgs {
    /// Complete intersection `n:d1,d2,...`.
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Only run entries whose id contains this substring.
    #[arg(long)]
    pub filter: Option<String>,
}

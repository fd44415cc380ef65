use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jetclosure::groebner::Limits;

#[derive(Debug, Parser)]
#[command(name = "jetclosure", version, about = "Jet closures and jet support closures of polynomial ideals")]
#[command(args_override_self = true)]
pub struct Cli {
    /// Print one JSON record per result instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Maximum S-pair reductions in one Groebner basis run.
    #[arg(long, global = true, env = "JETCLOSURE_MAX_PAIRS", default_value_t = Limits::DEFAULT_MAX_PAIRS)]
    pub max_pairs: usize,

    /// Maximum rows times columns of one exact linear system.
    #[arg(long, global = true, env = "JETCLOSURE_MAX_MATRIX", default_value_t = Limits::DEFAULT_MAX_MATRIX)]
    pub max_matrix: usize,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits { max_pairs: self.max_pairs, max_matrix: self.max_matrix }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators of the order-m jet ideal.
    JetIdeal(JetIdealArgs),
    /// The m-jet closure.
    Jc(JcArgs),
    /// The m-jet support closure.
    Jsc(JscArgs),
    /// Dimension of the quotient by a closure.
    Dim(KindArgs),
    /// Whether a closure is just I + m^(m+1).
    Good(KindArgs),
    /// Least m at which the ideal is m-jet closed.
    JetIndex(JetIndexArgs),
    /// Local Milnor and Tjurina numbers of a polynomial.
    Milnor(PolyArgs),
    /// Value of g in the filtration by jet closures.
    Filtration(FiltrationArgs),
    /// Compare two ADE curve singularities by their jsc dimensions.
    Classify(ClassifyArgs),
    /// Computed and published closures of the ADE curve singularities.
    Catalog(CatalogArgs),
    /// Check a conjecture over a corpus of polynomials.
    Scan(ScanArgs),
    /// Run one request per line of a file.
    Batch(BatchArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::JetIdeal(_) => "jet-ideal",
            Command::Jc(_) => "jc",
            Command::Jsc(_) => "jsc",
            Command::Dim(_) => "dim",
            Command::Good(_) => "good",
            Command::JetIndex(_) => "jet-index",
            Command::Milnor(_) => "milnor",
            Command::Filtration(_) => "filtration",
            Command::Classify(_) => "classify",
            Command::Catalog(_) => "catalog",
            Command::Scan(_) => "scan",
            Command::Batch(_) => "batch",
        }
    }
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Comma separated variable names, e.g. `x,y`.
    #[arg(long)]
    pub ring: String,
    /// Comma separated generators.
    #[arg(long)]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct JetIdealArgs {
    #[command(flatten)]
    pub input: IdealInput,
    #[arg(long)]
    pub m: usize,
    /// Arcs through the origin: drop the order-0 coefficients.
    #[arg(long)]
    pub at_origin: bool,
    /// Print the reduced Groebner basis instead of the arc coefficients.
    #[arg(long)]
    pub groebner: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum JcMethod {
    Kernel,
    Elim,
}

#[derive(Debug, Args)]
pub struct JcArgs {
    #[command(flatten)]
    pub input: IdealInput,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = JcMethod::Kernel)]
    pub method: JcMethod,
    /// Only test membership of this polynomial.
    #[arg(long)]
    pub query: Option<String>,
}

#[derive(Debug, Args)]
pub struct JscArgs {
    #[command(flatten)]
    pub input: IdealInput,
    #[arg(long)]
    pub m: usize,
    /// Also test membership of this polynomial.
    #[arg(long)]
    pub query: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Jc,
    Jsc,
}

#[derive(Debug, Args)]
pub struct KindArgs {
    #[command(flatten)]
    pub input: IdealInput,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = Kind::Jc)]
    pub kind: Kind,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum IndexMode {
    /// Jet index of the given ideal.
    Plain,
    /// Jet index of the Jacobian ideal of the polynomial.
    Milnor,
    /// Jet index of (f) + J(f).
    Tjurina,
}

#[derive(Debug, Args)]
pub struct JetIndexArgs {
    #[arg(long)]
    pub ring: String,
    /// The ideal, for `--mode plain`.
    #[arg(long, conflicts_with = "poly")]
    pub ideal: Option<String>,
    /// The polynomial, for `--mode milnor` and `--mode tjurina`.
    #[arg(long)]
    pub poly: Option<String>,
    #[arg(long, value_enum, default_value_t = IndexMode::Plain)]
    pub mode: IndexMode,
    /// Largest order to try; defaults to 2 dim(R/I) + 2.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long)]
    pub poly: String,
}

#[derive(Debug, Args)]
pub struct FiltrationArgs {
    #[command(flatten)]
    pub input: IdealInput,
    /// The element g.
    #[arg(long)]
    pub poly: String,
    /// The coarser filtration by powers of the maximal ideal modulo the
    /// radical (monomial or principal homogeneous ideals only).
    #[arg(long)]
    pub homogeneous: bool,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, default_value = "x,y")]
    pub ring: String,
    /// First ideal, or a catalog name such as `E6`.
    #[arg(long)]
    pub ideal: String,
    /// Second ideal, or a catalog name.
    #[arg(long)]
    pub other: String,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Restrict to these types (e.g. `A3,E7`); defaults to every type with
    /// Milnor number at most `--max-milnor`.
    #[arg(long, value_delimiter = ',')]
    pub types: Vec<String>,
    #[arg(long, default_value_t = 8)]
    pub max_milnor: u32,
    #[arg(long, default_value_t = 1)]
    pub m_min: usize,
    #[arg(long, default_value_t = 9)]
    pub m_max: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScanKindArg {
    /// J(f)^{m-jc} = J(f) + m^(m+1) for weighted homogeneous f.
    WeightedJc,
    /// Jet Tjurina index plus one equals the nilpotency index of (f) + J(f).
    TjurinaNilpotency,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub kind: ScanKindArg,
    #[arg(long)]
    pub ring: String,
    /// A polynomial to check; may be repeated.
    #[arg(long)]
    pub poly: Vec<String>,
    /// File with one polynomial per line.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// One command line per line, e.g. `jc --ring x,y --ideal "x^2+y^3" --m 4`.
    /// Blank lines and lines starting with `#` are skipped.
    pub file: PathBuf,
}

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use qforms_core::Sign;

#[derive(Debug, Parser)]
#[command(name = "qforms", version, about = "Exact differential calculi on SL_q(N): dimension tables, verification suites and Laplace spectra")]
pub struct Cli {
    /// Output format; JSON is normative.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of the spaces of left-invariant k-forms.
    Dims(DimsArgs),
    /// Laplace eigenvalues indexed by Young diagrams.
    Spectrum(SpectrumArgs),
    /// Checks the sigma-metric built from the diagonal F/G data.
    VerifyMetric(SizeArgs),
    /// Checks Hecke and braid relations and inverse braidings.
    BraidCheck(SizeArgs),
    /// Dumps the r-form on generators and the functionals f, f-bar.
    Rform(SizeArgs),
    /// Matrix of a Hodge operator between spaces of left-invariant forms.
    Hodge(HodgeArgs),
    /// Compares the word-level Laplace operator with the closed-form eigenvalues.
    LaplaceOracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Probabilistic,
    /// Exact on small spaces, probabilistic beyond.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Required unless the mode is exact.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Which calculus: plus for the forms ω_ij, minus for θ_ij.
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub tau: SignArg,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long)]
    pub max_boxes: usize,
    /// Rational value of z, such as 3/2, at which to evaluate.
    #[arg(long, value_parser = parse_z)]
    pub at: Option<BigRational>,
    /// Include the classical eigenvalue of each diagram.
    #[arg(long)]
    pub classical: bool,
}

#[derive(Debug, Args)]
pub struct HodgeArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub tau: SignArg,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
    /// Which braiding enters the contraction.
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub sign: SignArg,
    /// Selects the residue used to pick basis classes and detect the top degree.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub n: u32,
    /// Word length: 1 or 2.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
    pub m: u32,
}

/// A rational `z` that is neither 0 nor ±1.
pub fn parse_z(s: &str) -> Result<BigRational, String> {
    use num_traits::{One, Signed, Zero};
    let z: BigRational = s.trim().parse().map_err(|e| format!("not a rational number: {e}"))?;
    if z.is_zero() || z.abs().is_one() {
        return Err("z must be nonzero and different from 1 and -1".into());
    }
    Ok(z)
}

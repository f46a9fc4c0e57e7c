use clap::{Args, Parser, Subcommand, ValueEnum};
use hypdual::hypergeometric::DEFAULT_ORDER;

#[derive(Parser, Debug)]
#[command(name = "hypdual", version, about = "Exact duality relations for (q-)hypergeometric equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the operator, its dual and the dual parameters.
    Dual(Opts),
    /// Print the pairing matrix Psi (or Psi_q).
    Psi(Opts),
    /// Print the duality matrix M = Psi^-1 (or M_q).
    Matrix(Opts),
    /// Check every cell of the duality relation through z^order.
    Verify(Opts),
    /// Compare the tabulated order-2 and order-3 matrices and the Euler and
    /// Heine product identities on built-in parameter tuples.
    PaperRegression(RegressionOpts),
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Generalized hypergeometric equation (default).
    #[arg(long, conflicts_with = "qhg")]
    pub hg: bool,
    /// Basic hypergeometric q-difference equation.
    #[arg(long)]
    pub qhg: bool,
    /// Order of the equation; inferred from --a when given.
    #[arg(short = 'r')]
    pub r: Option<usize>,
    /// Upper parameters a_1..a_r as rationals, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<String>,
    /// Lower parameters b_1..b_(r-1); b_r is fixed to 1 (or q).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Vec<String>,
    /// Base of the q-shift, 0 < q < 1.
    #[arg(long)]
    pub q: Option<String>,
    /// Truncation order of the series.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Draw this many seeded random generic parameter tuples instead of --a/--b.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Re-verify the printed matrix (M * Psi = I, structure of Psi).
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug, Clone)]
pub struct RegressionOpts {
    /// Truncation order of the identity checks.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use recpow::Rational;

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("`{s}` is not a rational number: {e}"))
}

#[derive(Debug, Parser)]
#[command(name = "recpow", version, about = "Exact closed forms for powers of second-order recurrences")]
pub struct Cli {
    /// key=value file with defaults (format, max-n, max-r, claims, check-terms)
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one term U_n (or V_n)
    Seq(SeqArgs),
    /// Generating function of U_n^r
    Gf(GfArgs),
    /// Partial sum of U_i^r x^i for i = 0..=n
    Sum(SumArgs),
    /// Binomial-weighted sum of C(n,i) U_i^r x^i
    #[command(name = "binom-sum")]
    BinomSum(BinomSumArgs),
    /// Check published identities against direct computation
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub u0: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub u1: Option<Rational>,
    /// fibonacci, lucas, pell, pell-q or gen-pell:P,Q
    #[arg(long)]
    pub preset: Option<String>,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    /// Use index doubling (n >= 0)
    #[arg(long)]
    pub fast: bool,
    /// Print the companion V_n instead
    #[arg(long)]
    pub companion: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GfFormat {
    Text,
    Latex,
    Structured,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    #[arg(long, value_enum)]
    pub format: Option<GfFormat>,
    /// Compare this many series coefficients with U_n^r before printing
    #[arg(long, value_name = "N")]
    pub check_terms: Option<usize>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ModeArgs {
    #[arg(long)]
    pub closed: bool,
    #[arg(long)]
    pub direct: bool,
    #[arg(long)]
    pub both: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Closed,
    Direct,
    Both,
}

impl ModeArgs {
    pub fn mode(&self) -> Mode {
        if self.closed {
            Mode::Closed
        } else if self.direct {
            Mode::Direct
        } else {
            Mode::Both
        }
    }
}

#[derive(Debug, Args)]
pub struct SumArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    /// Evaluation point; omit for the sum as a function of x (n <= 32)
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub x: Option<Rational>,
    #[command(flatten)]
    pub mode: ModeArgs,
}

#[derive(Debug, Args)]
pub struct BinomSumArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "1")]
    pub x: Rational,
    #[command(flatten)]
    pub mode: ModeArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AuditFormat {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Comma-separated claim ids, or `all`
    #[arg(long)]
    pub claims: Option<String>,
    #[arg(long)]
    pub max_n: Option<u64>,
    #[arg(long)]
    pub max_r: Option<u32>,
    #[arg(long, value_enum)]
    pub format: Option<AuditFormat>,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// List claim ids and exit
    #[arg(long)]
    pub list: bool,
}

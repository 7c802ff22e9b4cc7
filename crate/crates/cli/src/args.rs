//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polybern::num_bigint::BigInt;
use polybern::num_traits::{self, One, Signed};
use polybern::zeta::DEFAULT_MAX_TERMS;
use polybern::{parse_rat, Rat};

use crate::CliError;

/// Precision, in bits, used when neither `--precision` nor the
/// environment variable is set.
pub const DEFAULT_PRECISION: usize = 128;
pub const PRECISION_ENV: &str = "POLYBERN_PRECISION";
/// Largest `n`, `|k|` or `m` an exact request may ask for.
pub const EXACT_LIMIT: i64 = 64;

#[derive(Debug, Parser)]
#[command(name = "polybern", version, about = "Generalized poly-Bernoulli tables, evaluation and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a table of exact values or polynomial coefficients.
    Table(Request),
    /// Evaluate one value, exactly or numerically.
    Eval(Request),
    /// Run an identity suite, or `all` of them.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    PbNumber,
    PbNeg,
    GpbPoly,
    GpbCPoly,
    SymPoly,
    Zeta,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::PbNumber => "pb-number",
            Kind::PbNeg => "pb-neg",
            Kind::GpbPoly => "gpb-poly",
            Kind::GpbCPoly => "gpb-c-poly",
            Kind::SymPoly => "sym-poly",
            Kind::Zeta => "zeta",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        Kind::value_variants().iter().copied().find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Numeric zeta method. `auto` runs the series unless its estimated term
/// count exceeds `--max-terms`, and falls back to quadrature when the
/// series exhausts the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Series,
    Reduced,
    Quadrature,
}

#[derive(Debug, Clone, Args)]
pub struct Request {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Index `n`: a value `N` or an inclusive range `A..B`.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Upper index: `B_n^(k)`; `pb-neg` takes `k` in `B_n^(-k)`.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Second index of `sym-poly`.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// `ln a` as `p/q`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub alpha: String,
    /// `ln b` as `p/q`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta: String,
    /// `ln c` as `p/q`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub gamma: String,
    /// Zeta argument; `p/q` or a decimal, converted exactly.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Evaluation point(s), comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Second coordinate for `sym-poly`, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    /// Working precision in bits.
    #[arg(long, env = PRECISION_ENV, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Accepted for a uniform flag set; tables and evaluations draw no randomness.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Report format; human-readable text when absent.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Inclusive index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: i64,
    pub hi: i64,
}

impl Range {
    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn single(self) -> Option<i64> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

/// Parses `N`, `A..B` or `A..=B`; both ends inclusive.
pub fn parse_range(flag: &str, s: &str) -> Result<Range, CliError> {
    let bad = || CliError::Usage(format!("--{flag}: expected N or A..B, got {s:?}"));
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((a, b)) => Range { lo: int(a)?, hi: int(b.strip_prefix('=').unwrap_or(b))? },
        None => {
            let v = int(s)?;
            Range { lo: v, hi: v }
        }
    };
    if range.lo > range.hi {
        return Err(CliError::Guard(format!("--{flag}: empty range {s:?}")));
    }
    Ok(range)
}

/// Parses `p/q`, an integer, or a decimal such as `-1.25e-3`, exactly.
pub fn parse_number(s: &str) -> Result<Rat, CliError> {
    let t = s.trim();
    if t.contains('/') || !t.contains(['.', 'e', 'E']) {
        return Ok(parse_rat(t)?);
    }
    let bad = || CliError::Usage(format!("not a number: {s:?}"));
    let (mant, exp) = match t.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int_part.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac}");
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut v = Rat::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exp - frac.len() as i32;
    let ten = Rat::from_integer(BigInt::from(10));
    let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
    v = if scale >= 0 { v * pow } else { v / pow };
    Ok(if neg { -v } else { v })
}

/// Parses a comma-separated list of exact numbers.
pub fn parse_points(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',').map(parse_number).collect()
}

/// Rejects indices beyond the exact size guard.
pub fn guard_index(flag: &str, v: i64) -> Result<(), CliError> {
    if v.abs() > EXACT_LIMIT {
        return Err(CliError::Guard(format!("--{flag} {v} exceeds the limit {EXACT_LIMIT}")));
    }
    Ok(())
}

/// Index that must be non-negative.
pub fn natural(flag: &str, v: i64) -> Result<u32, CliError> {
    if v < 0 {
        return Err(CliError::Usage(format!("--{flag} must be non-negative, got {v}")));
    }
    guard_index(flag, v)?;
    Ok(v as u32)
}

pub fn is_nonpositive_integer(r: &Rat) -> bool {
    r.denom().is_one() && !r.is_positive()
}

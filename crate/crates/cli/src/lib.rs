//! `polybern` command-line front end: exact tables, evaluation, and the
//! identity suites.
//!
//! Exit codes: 0 success, 1 verify failures, 2 bad input, 3 size guard,
//! 4 numeric non-convergence.

pub mod args;
pub mod output;
pub mod suites;

use std::time::Instant;

use polybern::generalized::{gpb_explicit, gpb_explicit_c};
use polybern::polybernoulli::{pb_number, pb_number_neg_closed};
use polybern::symmetrized::sym_def;
use polybern::zeta::{self, NumericValue, ZetaQuery, ZetaValue, MAX_PRECISION};
use polybern::num_traits::ToPrimitive;
use polybern::{format_rat, parse_rat, Error, Params, Rat};

use args::{guard_index, is_nonpositive_integer, natural, parse_number, parse_points, parse_range, Command, Kind, Method, Range, Request, VerifyArgs};
use output::{Coeffs, Entry, Report, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Guard(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::SizeGuard(_)) | CliError::Guard(_) => 3,
            CliError::Core(Error::NonConvergence { .. } | Error::ToleranceNotMet { .. }) => 4,
            CliError::Core(Error::Internal(_)) | CliError::Io(_) | CliError::Csv(_) => 1,
            CliError::Core(_) | CliError::Usage(_) | CliError::UnknownSuite(_) | CliError::Schema(_) | CliError::Json(_) => 2,
        }
    }
}

/// Rendered output and the exit code it goes with.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

/// Runs one parsed command. Timing goes to `timing`, never into `text`.
pub fn run(command: &Command, timing: &mut dyn FnMut(String)) -> Result<Outcome, CliError> {
    match command {
        Command::Table(req) => Ok(Outcome { text: table(req)?.render(req.format)?, code: 0 }),
        Command::Eval(req) => Ok(Outcome { text: eval(req)?.render(req.format)?, code: 0 }),
        Command::Verify(v) => {
            let start = Instant::now();
            let report = verify(v)?;
            timing(format!("wall time {:.3}s", start.elapsed().as_secs_f64()));
            let code = if report.failed() == 0 { 0 } else { 1 };
            Ok(Outcome { text: report.render(v.format)?, code })
        }
    }
}

fn params(req: &Request) -> Result<Params, CliError> {
    Ok(Params::with_gamma(parse_rat(&req.alpha)?, parse_rat(&req.beta)?, parse_rat(&req.gamma)?)?)
}

fn range(flag: &str, value: &Option<String>) -> Result<Range, CliError> {
    let s = value.as_deref().ok_or_else(|| CliError::Usage(format!("--{flag} is required")))?;
    let r = parse_range(flag, s)?;
    guard_index(flag, r.lo)?;
    guard_index(flag, r.hi)?;
    Ok(r)
}

fn single(flag: &str, value: &Option<String>) -> Result<i64, CliError> {
    range(flag, value)?.single().ok_or_else(|| CliError::Usage(format!("--{flag} takes a single value here")))
}

fn points(flag: &str, value: &Option<String>) -> Result<Vec<Rat>, CliError> {
    parse_points(value.as_deref().ok_or_else(|| CliError::Usage(format!("--{flag} is required")))?)
}

fn check_precision(p: usize) -> Result<(), CliError> {
    if p == 0 {
        return Err(CliError::Usage("--precision must be positive".into()));
    }
    if p > MAX_PRECISION {
        return Err(CliError::Guard(format!("--precision {p} exceeds {MAX_PRECISION} bits")));
    }
    Ok(())
}

/// The second index of `sym-poly` is `m`; `--k` is accepted as a synonym.
fn second_index(req: &Request) -> &Option<String> {
    if req.kind == Kind::SymPoly && req.m.is_some() {
        &req.m
    } else {
        &req.k
    }
}

fn second_flag(req: &Request) -> &'static str {
    if req.kind == Kind::SymPoly && req.m.is_some() {
        "m"
    } else {
        "k"
    }
}

fn entry(n: i64, k: i64) -> Entry {
    Entry { n: Some(n), k: Some(k), ..Entry::default() }
}

/// Exact value or coefficients of one cell.
fn cell(kind: Kind, n: i64, k: i64, pr: &Params, x: Option<&Rat>) -> Result<Entry, CliError> {
    let mut e = entry(n, k);
    let nn = natural("n", n)?;
    match kind {
        Kind::PbNumber => e.value = Some(format_rat(&pb_number(nn, k))),
        Kind::PbNeg => e.value = Some(pb_number_neg_closed(nn as u64, natural("k", k)? as u64).to_string()),
        Kind::GpbPoly => e.coeffs = Some(Coeffs::uni(&gpb_explicit(nn, k, pr))),
        Kind::GpbCPoly => e.coeffs = Some(Coeffs::uni(&gpb_explicit_c(nn, k, pr))),
        Kind::SymPoly => e.coeffs = Some(Coeffs::bi(&sym_def(nn, natural("m", k)?, pr)?)),
        Kind::Zeta => {
            let x = x.ok_or_else(|| CliError::Usage("--x is required for zeta".into()))?;
            e.value = Some(format_rat(&zeta::xi_exact_neg(k, nn, pr, x)));
        }
    }
    Ok(e)
}

/// Builds the table for `req`; rows run over `n`, then the second index.
pub fn table(req: &Request) -> Result<Table, CliError> {
    let pr = params(req)?;
    let ns = range("n", &req.n)?;
    let ks = range(second_flag(req), second_index(req))?;
    let x = match req.kind {
        Kind::Zeta => {
            if req.s.is_some() {
                return Err(CliError::Usage("zeta tables are exact over s = -n; use eval for other s".into()));
            }
            let mut xs = points("x", &req.x)?;
            if xs.len() != 1 {
                return Err(CliError::Usage("zeta tables take one --x".into()));
            }
            xs.pop()
        }
        _ => None,
    };
    let mut entries = Vec::new();
    for n in ns.iter() {
        for k in ks.iter() {
            entries.push(cell(req.kind, n, k, &pr, x.as_ref())?);
        }
    }
    Ok(Table { kind: req.kind.name().into(), params: (&pr).into(), entries })
}

/// Evaluates one value, at each `--x` (and `--y`) given.
pub fn eval(req: &Request) -> Result<Table, CliError> {
    let pr = params(req)?;
    let entries = match req.kind {
        Kind::PbNumber | Kind::PbNeg => vec![cell(req.kind, single("n", &req.n)?, single("k", &req.k)?, &pr, None)?],
        Kind::GpbPoly | Kind::GpbCPoly => {
            let (n, k) = (single("n", &req.n)?, single("k", &req.k)?);
            let nn = natural("n", n)?;
            let p = if req.kind == Kind::GpbPoly { gpb_explicit(nn, k, &pr) } else { gpb_explicit_c(nn, k, &pr) };
            points("x", &req.x)?
                .into_iter()
                .map(|x| Entry { x: Some(format_rat(&x)), value: Some(format_rat(&p.eval(&x))), ..entry(n, k) })
                .collect()
        }
        Kind::SymPoly => {
            let (n, m) = (single("n", &req.n)?, single(second_flag(req), second_index(req))?);
            let p = sym_def(natural("n", n)?, natural("m", m)?, &pr)?;
            let (xs, ys) = (points("x", &req.x)?, points("y", &req.y)?);
            if xs.len() != ys.len() {
                return Err(CliError::Usage("--x and --y need the same number of points".into()));
            }
            xs.iter()
                .zip(&ys)
                .map(|(x, y)| Entry {
                    x: Some(format_rat(x)),
                    y: Some(format_rat(y)),
                    value: Some(format_rat(&p.eval(x, y))),
                    ..entry(n, m)
                })
                .collect()
        }
        Kind::Zeta => {
            let k = req.k.as_deref().ok_or_else(|| CliError::Usage("--k is required".into()))?;
            let k = parse_range("k", k)?.single().ok_or_else(|| CliError::Usage("--k takes a single value".into()))?;
            let s = parse_number(req.s.as_deref().ok_or_else(|| CliError::Usage("--s is required".into()))?)?;
            points("x", &req.x)?.into_iter().map(|x| zeta_entry(req, k, &s, x, &pr)).collect::<Result<_, _>>()?
        }
    };
    Ok(Table { kind: req.kind.name().into(), params: (&pr).into(), entries })
}

fn zeta_entry(req: &Request, k: i64, s: &Rat, x: Rat, pr: &Params) -> Result<Entry, CliError> {
    check_precision(req.precision)?;
    let q = ZetaQuery { max_terms: req.max_terms, ..ZetaQuery::new(k, s.clone(), x, pr.clone(), req.precision) };
    let mut e = Entry { k: Some(k), s: Some(format_rat(s)), x: Some(format_rat(&q.x)), ..Entry::default() };
    if is_nonpositive_integer(s) {
        guard_index("s", (-s.to_integer()).to_i64().unwrap_or(i64::MAX))?;
        guard_index("k", k)?;
        if let ZetaValue::Exact(v) = zeta::evaluate(&q)? {
            e.value = Some(format_rat(&v));
            e.method = Some("exact".into());
            return Ok(e);
        }
    }
    let (method, v) = numeric(&q, req.method)?;
    let digits = (req.precision as f64 * std::f64::consts::LOG10_2).floor().max(1.0) as usize;
    e.value = Some(v.value.to_decimal(digits));
    e.method = Some(method.into());
    e.precision = Some(req.precision);
    e.error = Some(v.error.to_decimal(3));
    e.terms = Some(v.terms);
    Ok(e)
}

fn numeric(q: &ZetaQuery, method: Method) -> Result<(&'static str, NumericValue), CliError> {
    Ok(match method {
        Method::Series => ("series", zeta::xi_series(q)?),
        Method::Reduced => ("reduced", zeta::xi_reduced(q)?),
        Method::Quadrature => ("quadrature", zeta::xi_quadrature(q)?),
        Method::Auto if q.series_terms_estimate() > q.max_terms as f64 => ("quadrature", zeta::xi_quadrature(q)?),
        Method::Auto => match zeta::xi_series(q) {
            Ok(v) => ("series", v),
            Err(Error::NonConvergence { .. }) => ("quadrature", zeta::xi_quadrature(q)?),
            Err(e) => return Err(e.into()),
        },
    })
}

/// Runs one suite, or every registered suite for `all`.
pub fn verify(v: &VerifyArgs) -> Result<Report, CliError> {
    let chosen: Vec<_> = if v.suite == "all" {
        suites::all().collect()
    } else {
        vec![suites::find(&v.suite).ok_or_else(|| CliError::UnknownSuite(v.suite.clone()))?]
    };
    Ok(Report { seed: v.seed, runs: chosen.into_iter().map(|s| (s.statement, s.run(v.seed))).collect() })
}

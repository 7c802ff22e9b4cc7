//! JSON and CSV renderings of tables, evaluations and verify reports.

use serde::Serialize;
use serde_json::Value;

use polybern::verify::SuiteReport;
use polybern::{format_rat, parse_rat, BiPoly, Params, Poly, Rat};

use crate::args::{Format, Kind};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsOut {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
}

impl From<&Params> for ParamsOut {
    fn from(p: &Params) -> Self {
        ParamsOut { alpha: format_rat(&p.alpha), beta: format_rat(&p.beta), gamma: format_rat(&p.gamma) }
    }
}

/// Coefficients in ascending degree, or `[i, j, "p/q"]` triples for
/// bivariate polynomials.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Coeffs {
    Uni(Vec<String>),
    Bi(Vec<(usize, usize, String)>),
}

impl Coeffs {
    pub fn uni(p: &Poly<Rat>) -> Self {
        Coeffs::Uni(p.coeffs().iter().map(format_rat).collect())
    }

    pub fn bi(p: &BiPoly<Rat>) -> Self {
        Coeffs::Bi(p.terms().map(|(&(i, j), c)| (i, j, format_rat(c))).collect())
    }
}

/// One row. Tables fill `n`, `k` and one of `value`/`coeffs`;
/// evaluations add the point and, for numeric zeta values, the accuracy.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Entry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Coeffs>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<usize>,
}

const ENTRY_COLUMNS: [&str; 11] = ["n", "k", "s", "x", "y", "value", "coeffs", "method", "precision", "error", "terms"];

impl Entry {
    fn cell(&self, column: &str) -> Option<String> {
        match column {
            "n" => self.n.map(|v| v.to_string()),
            "k" => self.k.map(|v| v.to_string()),
            "s" => self.s.clone(),
            "x" => self.x.clone(),
            "y" => self.y.clone(),
            "value" => self.value.clone(),
            "coeffs" => self.coeffs.as_ref().map(|c| serde_json::to_string(c).expect("coefficients serialize")),
            "method" => self.method.clone(),
            "precision" => self.precision.map(|v| v.to_string()),
            "error" => self.error.clone(),
            "terms" => self.terms.map(|v| v.to_string()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub kind: String,
    pub params: ParamsOut,
    pub entries: Vec<Entry>,
}

impl Table {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.csv(),
        }
    }

    /// Header is `kind,alpha,beta,gamma` followed by every entry column
    /// that some row fills. Coefficient lists are embedded as JSON.
    fn csv(&self) -> Result<String, CliError> {
        let columns: Vec<&str> =
            ENTRY_COLUMNS.iter().copied().filter(|c| self.entries.iter().any(|e| e.cell(c).is_some())).collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["kind", "alpha", "beta", "gamma"];
        header.extend(&columns);
        w.write_record(&header)?;
        for e in &self.entries {
            let mut row = vec![self.kind.clone(), self.params.alpha.clone(), self.params.beta.clone(), self.params.gamma.clone()];
            row.extend(columns.iter().map(|c| e.cell(c).unwrap_or_default()));
            w.write_record(&row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn schema_err(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn rational_field(v: &Value, what: &str) -> Result<Rat, CliError> {
    let s = v.as_str().ok_or_else(|| schema_err(format!("{what} must be a \"p/q\" string")))?;
    let r = parse_rat(s).map_err(|_| schema_err(format!("{what}: {s:?} is not a rational")))?;
    if format_rat(&r) != s {
        return Err(schema_err(format!("{what}: {s:?} is not in lowest terms")));
    }
    Ok(r)
}

/// Checks a JSON table against the table schema.
pub fn validate_table(text: &str) -> Result<(), CliError> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc.as_object().ok_or_else(|| schema_err("top level must be an object"))?;
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    for key in &keys {
        if !["kind", "params", "entries"].contains(key) {
            return Err(schema_err(format!("unexpected key {key:?}")));
        }
    }
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .and_then(Kind::from_name)
        .ok_or_else(|| schema_err("kind missing or unknown"))?;
    let params = obj.get("params").and_then(Value::as_object).ok_or_else(|| schema_err("params must be an object"))?;
    if params.len() != 3 {
        return Err(schema_err("params must hold exactly alpha, beta, gamma"));
    }
    for p in ["alpha", "beta", "gamma"] {
        rational_field(params.get(p).ok_or_else(|| schema_err(format!("params.{p} missing")))?, p)?;
    }
    let entries = obj.get("entries").and_then(Value::as_array).ok_or_else(|| schema_err("entries must be an array"))?;
    for (i, e) in entries.iter().enumerate() {
        let e = e.as_object().ok_or_else(|| schema_err(format!("entry {i} must be an object")))?;
        for idx in ["n", "k"] {
            e.get(idx).and_then(Value::as_i64).ok_or_else(|| schema_err(format!("entry {i}: {idx} must be an integer")))?;
        }
        match (e.get("value"), e.get("coeffs")) {
            (Some(v), None) if e.len() == 3 => {
                rational_field(v, "value")?;
            }
            (None, Some(c)) if e.len() == 3 => validate_coeffs(c, kind == Kind::SymPoly, i)?,
            _ => return Err(schema_err(format!("entry {i}: needs n, k and exactly one of value/coeffs"))),
        }
    }
    Ok(())
}

fn validate_coeffs(c: &Value, bivariate: bool, i: usize) -> Result<(), CliError> {
    let list = c.as_array().ok_or_else(|| schema_err(format!("entry {i}: coeffs must be an array")))?;
    for t in list {
        if !bivariate {
            rational_field(t, "coefficient")?;
            continue;
        }
        let triple = t.as_array().filter(|a| a.len() == 3).ok_or_else(|| schema_err(format!("entry {i}: expected [i, j, \"p/q\"]")))?;
        if triple[0].as_u64().is_none() || triple[1].as_u64().is_none() {
            return Err(schema_err(format!("entry {i}: exponents must be non-negative integers")));
        }
        rational_field(&triple[2], "coefficient")?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct FailureOut<'a> {
    case: &'a str,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Debug, Serialize)]
struct SuiteOut<'a> {
    suite: &'a str,
    module: &'a str,
    statement: &'a str,
    cases: usize,
    failed: usize,
    failures: Vec<FailureOut<'a>>,
    notes: &'a [String],
}

#[derive(Debug, Serialize)]
struct ReportOut<'a> {
    seed: u64,
    suites: Vec<SuiteOut<'a>>,
    cases: usize,
    failed: usize,
}

/// Verify results with the statement each suite checks.
pub struct Report {
    pub seed: u64,
    pub runs: Vec<(&'static str, SuiteReport)>,
}

impl Report {
    pub fn cases(&self) -> usize {
        self.runs.iter().map(|(_, r)| r.cases).sum()
    }

    pub fn failed(&self) -> usize {
        self.runs.iter().map(|(_, r)| r.failures.len()).sum()
    }

    pub fn render(&self, format: Option<Format>) -> Result<String, CliError> {
        match format {
            None => Ok(self.text()),
            Some(Format::Json) => {
                let out = ReportOut {
                    seed: self.seed,
                    suites: self
                        .runs
                        .iter()
                        .map(|(statement, r)| SuiteOut {
                            suite: &r.suite,
                            module: &r.module,
                            statement,
                            cases: r.cases,
                            failed: r.failures.len(),
                            failures: r.failures.iter().map(|f| FailureOut { case: &f.case, lhs: &f.lhs, rhs: &f.rhs }).collect(),
                            notes: &r.notes,
                        })
                        .collect(),
                    cases: self.cases(),
                    failed: self.failed(),
                };
                Ok(serde_json::to_string_pretty(&out)? + "\n")
            }
            Some(Format::Csv) => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["suite", "module", "seed", "cases", "failed"])?;
                for (_, r) in &self.runs {
                    w.write_record([r.suite.clone(), r.module.clone(), self.seed.to_string(), r.cases.to_string(), r.failures.len().to_string()])?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
        }
    }

    fn text(&self) -> String {
        let mut out = format!("seed {}\n", self.seed);
        for (statement, r) in &self.runs {
            let tag = if r.passed() { "ok  " } else { "FAIL" };
            out += &format!("{tag} {} [{}] {} cases, {} failed: {statement}\n", r.suite, r.module, r.cases, r.failures.len());
            for note in &r.notes {
                out += &format!("     note: {note}\n");
            }
            for f in &r.failures {
                out += &format!("     case {}\n       lhs {}\n       rhs {}\n", f.case, f.lhs, f.rhs);
            }
        }
        out += &format!("{} suites, {} cases, {} failed\n", self.runs.len(), self.cases(), self.failed());
        out
    }
}

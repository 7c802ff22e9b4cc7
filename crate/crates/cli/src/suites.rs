//! Suites for the command-line invariants, and the combined registry.

use clap::Parser;

use polybern::verify::{Ctx, Suite, SUITES};

use crate::args::{Cli, Command, Format};
use crate::output::validate_table;
use crate::{eval, table};

/// Number of documented invariants per module; `registry` checks that
/// every one has a suite.
pub const COVERAGE: &[(&str, usize)] = &[
    ("exact_arith", 4),
    ("polyseries", 4),
    ("polybernoulli_core", 6),
    ("generalized_pb", 7),
    ("symmetrized", 4),
    ("zeta", 7),
    ("cli", 3),
];

pub const CLI_SUITES: &[Suite] = &[
    Suite::external("determinism", "cli", "identical invocations render byte-identical output", determinism),
    Suite::external("round-trip", "cli", "every emitted JSON table re-parses and validates against the schema", round_trip),
    Suite::external("registry", "cli", "every documented invariant of every module has a registered suite", registry),
];

pub fn all() -> impl Iterator<Item = &'static Suite> {
    SUITES.iter().chain(CLI_SUITES)
}

pub fn find(name: &str) -> Option<&'static Suite> {
    all().find(|s| s.name == name)
}

/// Table and eval invocations for a random rational parameter pair.
fn sample_lines(c: &mut Ctx) -> Vec<Vec<String>> {
    let p = c.params();
    let (a, b, g) = (polybern::format_rat(&p.alpha), polybern::format_rat(&p.beta), polybern::format_rat(&p.gamma));
    let x = polybern::format_rat(&c.rational());
    let y = polybern::format_rat(&c.rational());
    let with = |sub: &str, kind: &str, rest: &[&str]| -> Vec<String> {
        let mut v: Vec<String> = [sub, "--kind", kind, "--alpha", &a, "--beta", &b, "--gamma", &g].iter().map(|s| s.to_string()).collect();
        v.extend(rest.iter().map(|s| s.to_string()));
        v
    };
    vec![
        with("table", "pb-number", &["--n", "0..4", "--k", "-3..3"]),
        with("table", "pb-neg", &["--n", "0..4", "--k", "0..4"]),
        with("table", "gpb-poly", &["--n", "0..4", "--k", "-2..2"]),
        with("table", "gpb-c-poly", &["--n", "0..3", "--k", "-2..2"]),
        with("table", "sym-poly", &["--n", "0..2", "--m", "0..2"]),
        with("table", "zeta", &["--n", "0..3", "--k", "-1..2", "--x", &x]),
        with("eval", "gpb-poly", &["--n", "3", "--k", "-1", "--x", &x]),
        with("eval", "sym-poly", &["--n", "2", "--m", "1", "--x", &x, "--y", &y]),
    ]
}

fn render(line: &[String], format: Format) -> Result<String, String> {
    let cli = Cli::try_parse_from(std::iter::once("polybern".to_string()).chain(line.iter().cloned())).map_err(|e| e.to_string())?;
    let t = match &cli.command {
        Command::Table(r) => table(r),
        Command::Eval(r) => eval(r),
        Command::Verify(_) => unreachable!("sample lines are tables and evaluations"),
    }
    .map_err(|e| e.to_string())?;
    t.render(format).map_err(|e| e.to_string())
}

fn determinism(c: &mut Ctx) {
    for line in sample_lines(c) {
        for format in [Format::Json, Format::Csv] {
            let (a, b) = (render(&line, format), render(&line, format));
            c.check(a.is_ok() && a == b, || line.join(" "), || (format!("{a:?}"), format!("{b:?}")));
        }
    }
    let seed = 11;
    let s = polybern::verify::find("rational-arithmetic").expect("registered");
    c.check(s.run(seed) == s.run(seed), || "verify rational-arithmetic twice".into(), || ("differs".into(), String::new()));
}

fn round_trip(c: &mut Ctx) {
    for line in sample_lines(c).into_iter().filter(|l| l[0] == "table") {
        let result = render(&line, Format::Json).and_then(|t| validate_table(&t).map_err(|e| e.to_string()));
        c.check(result.is_ok(), || line.join(" "), || (format!("{result:?}"), "valid".into()));
    }
}

fn registry(c: &mut Ctx) {
    for &(module, want) in COVERAGE {
        let got = all().filter(|s| s.module == module).count();
        c.check(got == want, || format!("module {module}"), || (got.to_string(), want.to_string()));
    }
    let stray: Vec<_> = all().filter(|s| !COVERAGE.iter().any(|(m, _)| *m == s.module)).map(|s| s.name).collect();
    c.check(stray.is_empty(), || "suites outside documented modules".into(), || (format!("{stray:?}"), "[]".into()));
    let mut names: Vec<_> = all().map(|s| s.name).collect();
    names.sort();
    let before = names.len();
    names.dedup();
    c.check(names.len() == before, || "suite names unique".into(), || (names.len().to_string(), before.to_string()));
}

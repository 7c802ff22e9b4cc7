//! Seeded identity suites, one per documented invariant, and their
//! registry.
//!
//! Every suite draws its random rational parameters from a ChaCha stream
//! seeded with the caller's seed, so a report is a pure function of
//! `(suite, seed)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exact_arith::{binomial, eulerian, factorial, stirling2, stirling2_alternating};
use crate::generalized::{
    addition_formula, appell_derivative, gpb_explicit, gpb_explicit_c, multiplication_theorem, power_sum,
    recurrence_i, recurrence_ii, scale_from_classical,
};
use crate::oracle;
use crate::params::Params;
use crate::poly::{BiPoly, Poly};
use crate::polybernoulli::{
    bernoulli_poly, kaneko_recurrence, lonesum_count, pb_number, pb_number_neg_closed, pb_poly, reflect,
};
use crate::polyseries::{gf_kernel, polylog_neg_rational, polylog_series, Series};
use crate::scalar::{format_rat, rat_to_f64, Field, Rat, Ring};
use crate::symmetrized::{
    duality_check, duality_check_with, gf_value, sym_closed, sym_def, sym_def_rescaled, sym_gf_oracle, ClosedReading,
    SymDefinition,
};
use crate::zeta::real::Real;
use crate::zeta::{self, NumericValue, ZetaQuery};

/// One failed comparison, with both sides rendered.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub module: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Free-form findings, e.g. which reading of an identity held.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A registered suite: the module whose invariant it checks, a one-line
/// statement of that invariant, and its runner.
#[derive(Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub module: &'static str,
    pub statement: &'static str,
    run: fn(&mut Ctx),
}

impl std::fmt::Debug for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Suite").field("name", &self.name).field("module", &self.module).finish()
    }
}

impl Suite {
    /// A suite defined outside this crate.
    pub const fn external(
        name: &'static str,
        module: &'static str,
        statement: &'static str,
        run: fn(&mut Ctx),
    ) -> Self {
        Suite { name, module, statement, run }
    }

    pub fn run(&self, seed: u64) -> SuiteReport {
        let mut ctx = Ctx::new(seed);
        (self.run)(&mut ctx);
        SuiteReport {
            suite: self.name.to_string(),
            module: self.module.to_string(),
            seed,
            cases: ctx.cases,
            failures: ctx.failures,
            notes: ctx.notes,
        }
    }
}

/// Runner state: the random stream and the running tally.
pub struct Ctx {
    rng: ChaCha8Rng,
    cases: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Ctx {
    pub fn new(seed: u64) -> Self {
        Ctx { rng: ChaCha8Rng::seed_from_u64(seed), cases: 0, failures: Vec::new(), notes: Vec::new() }
    }

    /// Records one comparison; the closures run only on failure.
    pub fn check(&mut self, ok: bool, case: impl FnOnce() -> String, sides: impl FnOnce() -> (String, String)) {
        self.cases += 1;
        if !ok {
            let (lhs, rhs) = sides();
            self.failures.push(Failure { case: case(), lhs, rhs });
        }
    }

    pub fn check_eq<T: PartialEq>(&mut self, case: impl FnOnce() -> String, lhs: &T, rhs: &T, show: impl Fn(&T) -> String) {
        self.check(lhs == rhs, case, || (show(lhs), show(rhs)));
    }

    /// Records an error from a kernel as a failed case.
    pub fn error(&mut self, case: impl FnOnce() -> String, e: &Error) {
        self.cases += 1;
        self.failures.push(Failure { case: case(), lhs: format!("error: {e}"), rhs: String::new() });
    }

    pub fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    /// `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 9`.
    pub fn rational(&mut self) -> Rat {
        let p: i64 = self.rng.random_range(-9..=9);
        let q: i64 = self.rng.random_range(1..=9);
        Rat::new(p.into(), q.into())
    }

    /// A rational in `(0, hi]` with denominator at most 8.
    pub fn positive(&mut self, hi: i64) -> Rat {
        let q: i64 = self.rng.random_range(1..=8);
        let p: i64 = self.rng.random_range(1..=hi * q);
        Rat::new(p.into(), q.into())
    }

    /// A rational in `[lo, hi]` with denominator at most 8.
    pub fn between(&mut self, lo: i64, hi: i64) -> Rat {
        let q: i64 = self.rng.random_range(1..=8);
        let p: i64 = self.rng.random_range(lo * q..=hi * q);
        Rat::new(p.into(), q.into())
    }

    pub fn pick<T: Copy>(&mut self, from: &[T]) -> T {
        from[self.rng.random_range(0..from.len())]
    }

    /// Parameters with `ln a + ln b ≠ 0` and a random `ln c`.
    pub fn params(&mut self) -> Params {
        loop {
            let (alpha, beta) = (self.rational(), self.rational());
            if !(alpha.clone() + beta.clone()).is_zero() {
                let gamma = loop {
                    let g = self.rational();
                    if !g.is_zero() {
                        break g;
                    }
                };
                return Params { alpha, beta, gamma };
            }
        }
    }
}

pub fn show_rat(r: &Rat) -> String {
    format_rat(r)
}

pub fn show_poly(p: &Poly<Rat>) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(format_rat).collect();
    format!("[{}]", parts.join(", "))
}

pub fn show_bipoly(p: &BiPoly<Rat>) -> String {
    let parts: Vec<String> = p.terms().map(|((i, j), c)| format!("[{i}, {j}, \"{}\"]", format_rat(c))).collect();
    format!("[{}]", parts.join(", "))
}

fn show_params(p: &Params) -> String {
    format!("alpha={} beta={} gamma={}", format_rat(&p.alpha), format_rat(&p.beta), format_rat(&p.gamma))
}

fn show_series(s: &Series<Rat>) -> String {
    let parts: Vec<String> = s.coeffs().iter().map(format_rat).collect();
    format!("[{}]", parts.join(", "))
}

fn show_num(v: &NumericValue) -> String {
    format!("{} ± {}", v.value.to_decimal(24), v.error.to_decimal(3))
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn r(n: i64) -> Rat {
    Rat::from_integer(big(n))
}

// ---- exact_arith ----

fn eulerian_row_sum(c: &mut Ctx) {
    for rr in 1..=8u64 {
        let sum: BigInt = (0..rr as i64).map(|j| eulerian(rr, j)).sum();
        c.check_eq(|| format!("r={rr}"), &sum, &factorial(rr), |v| v.to_string());
    }
}

fn stirling_cross_check(c: &mut Ctx) {
    let mut row = vec![BigInt::one()];
    for n in 0..=20u64 {
        if n > 0 {
            let mut next = vec![BigInt::zero(); n as usize + 1];
            for m in 1..=n as usize {
                let stay = if m < row.len() { &row[m] * BigInt::from(m) } else { BigInt::zero() };
                next[m] = stay + &row[m - 1];
            }
            row = next;
        }
        for m in 0..=n {
            let want = &row[m as usize];
            match stirling2_alternating(n, m) {
                Ok(v) => c.check_eq(|| format!("S({n},{m}) alternating"), &v, want, |v| v.to_string()),
                Err(e) => c.error(|| format!("S({n},{m})"), &e),
            }
            c.check_eq(|| format!("S({n},{m}) table"), &stirling2(n, m), want, |v| v.to_string());
        }
    }
}

fn rat_arithmetic(c: &mut Ctx) {
    for i in 0..1000 {
        let a = c.rational();
        let b = c.rational();
        c.check_eq(|| format!("#{i} (a+b)-b"), &(a.clone() + b.clone() - b.clone()), &a, show_rat);
        if !b.is_zero() {
            c.check_eq(|| format!("#{i} (ab)/b"), &(a.clone() * b.clone() / b.clone()), &a, show_rat);
        }
    }
}

fn binomial_symmetry(c: &mut Ctx) {
    for n in 0..=30u64 {
        for k in 0..=n as i64 {
            c.check_eq(|| format!("C({n},{k})"), &binomial(n, k), &binomial(n, n as i64 - k), |v| v.to_string());
        }
    }
}

// ---- polyseries ----

fn polylog_rational(c: &mut Ctx) {
    for rr in 0..=6u64 {
        for order in 0..=12usize {
            let lhs: Series<Rat> = polylog_neg_rational(rr, order);
            let rhs = polylog_series(-(rr as i64), order);
            c.check_eq(|| format!("r={rr} N={order}"), &lhs, &rhs, show_series);
        }
    }
}

fn polylog_integration(c: &mut Ctx) {
    let order = 12;
    for k in -3..=3i64 {
        match polylog_series::<Rat>(k, order).integrate_over_t() {
            Ok(v) => c.check_eq(|| format!("k={k}"), &v, &polylog_series(k + 1, order), show_series),
            Err(e) => c.error(|| format!("k={k}"), &e),
        }
    }
}

fn gf_kernel_suite(c: &mut Ctx) {
    for _ in 0..5 {
        let p = c.params();
        let x = c.rational();
        for k in -3..=3 {
            let g = match gf_kernel(k, &p, &x, 8) {
                Ok(g) => g.egf_values(),
                Err(e) => {
                    c.error(|| format!("{} k={k}", show_params(&p)), &e);
                    continue;
                }
            };
            for n in 0..=8u32 {
                let want = gpb_explicit(n, k, &p).eval(&x);
                c.check_eq(
                    || format!("{} x={} k={k} n={n}", show_params(&p), format_rat(&x)),
                    &g[n as usize],
                    &want,
                    show_rat,
                );
            }
        }
    }
}

fn series2_inversion(c: &mut Ctx) {
    let oracle = match sym_gf_oracle(&Params::classical(), 8, 8) {
        Ok(o) => o,
        Err(e) => return c.error(|| "classical oracle".into(), &e),
    };
    let zero = Rat::zero();
    for n in 0..=8u32 {
        for k in 0..=(8 - n) {
            let v = gf_value(&oracle, n as usize, k as usize).eval(&zero, &zero);
            let want = Rat::from_integer(pb_number_neg_closed(n as u64, k as u64));
            c.check_eq(|| format!("n={n} k={k}"), &v, &want, show_rat);
        }
    }
}

// ---- polybernoulli_core ----

fn pb_duality(c: &mut Ctx) {
    for n in 0..=8u64 {
        for k in 0..=8u64 {
            c.check_eq(
                || format!("n={n} k={k}"),
                &pb_number_neg_closed(n, k),
                &pb_number_neg_closed(k, n),
                |v| v.to_string(),
            );
        }
    }
}

fn pb_explicit_closed(c: &mut Ctx) {
    for n in 0..=6u32 {
        for k in 0..=6u32 {
            let want = Rat::from_integer(pb_number_neg_closed(n as u64, k as u64));
            c.check_eq(|| format!("n={n} k={k}"), &pb_number(n, -(k as i64)), &want, show_rat);
        }
    }
}

fn kaneko(c: &mut Ctx) {
    for n in 0..=8u32 {
        for k in -3..=4i64 {
            c.check_eq(|| format!("n={n} k={k}"), &kaneko_recurrence(n, k), &pb_number(n, k), show_rat);
        }
    }
}

fn classical_relation(c: &mut Ctx) {
    for n in 0..=10u32 {
        let lhs = reflect(&pb_poly::<Rat>(n, 1), n);
        c.check_eq(|| format!("n={n}"), &lhs, &bernoulli_poly(n), show_poly);
    }
}

fn lonesum(c: &mut Ctx) {
    for n in 0..=12u32 {
        for k in 0..=12u32 {
            if n * k > 12 {
                continue;
            }
            match lonesum_count(n, k) {
                Ok(v) => c.check_eq(
                    || format!("n={n} k={k}"),
                    &v,
                    &pb_number_neg_closed(n as u64, k as u64),
                    |v| v.to_string(),
                ),
                Err(e) => c.error(|| format!("n={n} k={k}"), &e),
            }
        }
    }
}

fn pb_gf_oracle(c: &mut Ctx) {
    let classical = Params::classical();
    for _ in 0..3 {
        let x = c.rational();
        for k in -2..=3 {
            let g = match gf_kernel(k, &classical, &x, 8) {
                Ok(g) => g.egf_values(),
                Err(e) => {
                    c.error(|| format!("k={k}"), &e);
                    continue;
                }
            };
            for n in 0..=8u32 {
                let want = pb_poly::<Rat>(n, k).eval(&x);
                c.check_eq(|| format!("x={} k={k} n={n}", format_rat(&x)), &g[n as usize], &want, show_rat);
            }
        }
    }
}

// ---- generalized_pb ----

fn scaling(c: &mut Ctx) {
    for _ in 0..5 {
        let p = c.params();
        for n in 0..=8u32 {
            for k in -3..=4 {
                let case = || format!("{} n={n} k={k}", show_params(&p));
                match scale_from_classical(n, k, &p) {
                    Ok(v) => c.check_eq(case, &gpb_explicit(n, k, &p), &v, show_poly),
                    Err(e) => c.error(case, &e),
                }
            }
        }
    }
}

fn gpb_gf_oracle(c: &mut Ctx) {
    let zero = Rat::zero();
    for _ in 0..5 {
        let p = c.params();
        for k in -3..=4 {
            let g = match gf_kernel(k, &p, &zero, 8) {
                Ok(g) => g.egf_values(),
                Err(e) => {
                    c.error(|| format!("{} k={k}", show_params(&p)), &e);
                    continue;
                }
            };
            for n in 0..=8u32 {
                let want = gpb_explicit(n, k, &p).coeff(0);
                c.check_eq(|| format!("{} k={k} n={n}", show_params(&p)), &g[n as usize], &want, show_rat);
            }
        }
    }
}

fn recurrences(c: &mut Ctx) {
    for _ in 0..5 {
        let p = c.params();
        for n in 0..=8u32 {
            for k in -3..=4 {
                let e = gpb_explicit(n, k, &p);
                for (label, got) in [("I", recurrence_i(n, k, &p)), ("II", recurrence_ii(n, k, &p))] {
                    let case = || format!("recurrence {label} {} n={n} k={k}", show_params(&p));
                    match got {
                        Ok(v) => c.check_eq(case, &v, &e, show_poly),
                        Err(err) => c.error(case, &err),
                    }
                }
            }
        }
    }
    c.note("recurrence I uses (-ln a)^(m-l)".into());
}

fn appell(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        let k = c.pick(&[-3i64, -1, 0, 1, 2, 4]);
        for n in 1..=10u32 {
            let want = gpb_explicit(n - 1, k, &p).scale(&r(n as i64));
            c.check_eq(|| format!("{} n={n} k={k}", show_params(&p)), &appell_derivative(n, k, &p), &want, show_poly);
        }
    }
}

fn addition_multiplication(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        let y = c.rational();
        let k = c.pick(&[-2i64, 0, 1, 3]);
        for n in 0..=8u32 {
            let base = gpb_explicit(n, k, &p);
            let shifted = base.compose_affine(&Rat::one(), &y);
            c.check_eq(
                || format!("addition {} y={} n={n} k={k}", show_params(&p), format_rat(&y)),
                &addition_formula(n, k, &p, &y),
                &shifted,
                show_poly,
            );
            for m in 1..=4u32 {
                let case = || format!("multiplication {} m={m} n={n} k={k}", show_params(&p));
                let want = base.compose_affine(&r(m as i64), &Rat::zero());
                match multiplication_theorem(n, k, &p, m) {
                    Ok(v) => c.check_eq(case, &v, &want, show_poly),
                    Err(e) => c.error(case, &e),
                }
            }
        }
    }
}

fn leading_coefficient(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        for n in 0..=8u32 {
            for k in -3..=4 {
                let e = gpb_explicit(n, k, &p);
                let ok = e.degree() == Some(n as usize) && e.leading() == Rat::one();
                c.check(ok, || format!("monic {} n={n} k={k}", show_params(&p)), || (show_poly(&e), format!("degree {n}, leading 1")));
                let ec = gpb_explicit_c(n, k, &p);
                let want = p.gamma.pow_u(n);
                let ok = ec.degree().unwrap_or(0) <= n as usize && ec.coeff(n as usize) == want;
                c.check(
                    ok,
                    || format!("c-leading {} n={n} k={k}", show_params(&p)),
                    || (show_poly(&ec), format!("degree {n}, leading {}", format_rat(&want))),
                );
            }
        }
    }
}

fn power_sums(c: &mut Ctx) {
    for log_b in [r(1), Rat::new(big(1), big(2)), r(-2)] {
        for m_top in 1..=20u32 {
            for n in 0..=6u32 {
                let direct: Rat = (1..=m_top as i64).map(|j| r(j).pow_u(n)).sum();
                let case = || format!("lnb={} m={m_top} n={n}", format_rat(&log_b));
                match power_sum(m_top, n, &log_b) {
                    Ok(v) => c.check_eq(case, &v, &direct, show_rat),
                    Err(e) => c.error(case, &e),
                }
            }
        }
    }
}

// ---- symmetrized ----

fn sym_duality(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        let mut rescaled_ok = 0;
        for n in 0..=6u32 {
            for m in 0..=6u32 {
                let case = || format!("{} n={n} m={m}", show_params(&p));
                match duality_check(n, m, &p) {
                    Ok(rep) => c.check(rep.holds, case, || (show_bipoly(&rep.lhs), show_bipoly(&rep.rhs))),
                    Err(e) => c.error(case, &e),
                }
                if duality_check_with(n, m, &p, SymDefinition::Rescaled).is_ok_and(|r| r.holds) {
                    rescaled_ok += 1;
                }
            }
        }
        c.note(format!(
            "{} (ln a + ln b = {}): with the inner polynomial at (ln a + ln b) x, duality holds in {rescaled_ok}/49 cases",
            show_params(&p),
            format_rat(&p.log_ab())
        ));
    }
}

fn sym_closed_suite(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        let mut passed = [0usize; 3];
        let mut total = 0;
        for n in 0..=5u32 {
            for m in 0..=5u32 {
                total += 1;
                let case = || format!("{} n={n} m={m}", show_params(&p));
                let (def, y, x, rescaled) = match (
                    sym_def(n, m, &p),
                    sym_closed(n, m, &p, ClosedReading::SecondInY),
                    sym_closed(n, m, &p, ClosedReading::SecondInX),
                    sym_def_rescaled(n, m, &p),
                ) {
                    (Ok(a), Ok(b), Ok(c2), Ok(d)) => (a, b, c2, d),
                    (Err(e), ..) | (_, Err(e), ..) | (_, _, Err(e), _) | (.., Err(e)) => {
                        c.error(case, &e);
                        continue;
                    }
                };
                passed[0] += usize::from(y == def);
                passed[1] += usize::from(x == def);
                passed[2] += usize::from(y == rescaled);
                c.check_eq(case, &y, &def, show_bipoly);
            }
        }
        c.note(format!(
            "{}: y-reading matched the defining sum in {}/{total}, x-reading in {}/{total}; y-reading matched the rescaled sum in {}/{total}",
            show_params(&p),
            passed[0],
            passed[1],
            passed[2]
        ));
    }
}

fn sym_gf_suite(c: &mut Ctx) {
    let mut params = vec![Params::classical()];
    for _ in 0..3 {
        params.push(c.params());
    }
    for p in params {
        let oracle = match sym_gf_oracle(&p, 6, 6) {
            Ok(o) => o,
            Err(e) => {
                c.error(|| show_params(&p), &e);
                continue;
            }
        };
        for n in 0..=6u32 {
            for m in 0..=(6 - n) {
                let case = || format!("{} n={n} m={m}", show_params(&p));
                match sym_def(n, m, &p) {
                    Ok(d) => c.check_eq(case, &gf_value(&oracle, n as usize, m as usize), &d, show_bipoly),
                    Err(e) => c.error(case, &e),
                }
            }
        }
    }
}

fn sym_reduction(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        for n in 0..=8u32 {
            let case = || format!("{} n={n}", show_params(&p));
            let want = BiPoly::from_x(&gpb_explicit(n, 0, &p).scale(&p.log_ab().pow_i(-(n as i64))));
            match sym_def(n, 0, &p) {
                Ok(v) => c.check_eq(case, &v, &want, show_bipoly),
                Err(e) => c.error(case, &e),
            }
        }
    }
}

// ---- zeta ----

/// A numeric query whose reduced shift `(x + ln b)/(ln a + ln b)` lies in
/// `[24, 40]`, where the series reaches 128 bits within a few hundred terms.
pub fn numeric_query(c: &mut Ctx, k: i64, precision: usize) -> ZetaQuery {
    let alpha = c.positive(2);
    let beta = c.positive(2);
    let s = c.between(1, 8) / r(2);
    let shift = c.between(24, 40);
    let l = alpha.clone() + beta.clone();
    let x = l * shift - beta.clone();
    ZetaQuery::new(k, s, x, Params::new(alpha, beta).expect("positive parameters"), precision)
}

fn show_query(q: &ZetaQuery) -> String {
    format!(
        "k={} s={} x={} alpha={} beta={} p={}",
        q.k,
        format_rat(&q.s),
        format_rat(&q.x),
        format_rat(&q.params.alpha),
        format_rat(&q.params.beta),
        q.precision
    )
}

fn interpolation(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        let x = c.rational();
        for n in 0..=8u32 {
            for k in -3..=4 {
                c.check_eq(
                    || format!("{} x={} n={n} k={k}", show_params(&p), format_rat(&x)),
                    &zeta::xi_exact_neg(k, n, &p, &x),
                    &zeta::interpolated_value(k, n, &p, &x),
                    show_rat,
                );
            }
        }
    }
}

fn zeta_reduction(c: &mut Ctx) {
    for i in 0..10 {
        let k = [1, 2, 3][i % 3];
        let q = numeric_query(c, k, 128);
        match (zeta::xi_series(&q), zeta::xi_reduced(&q)) {
            (Ok(a), Ok(b)) => c.check(a.agrees_with(&b, 4.0), || show_query(&q), || (show_num(&a), show_num(&b))),
            (Err(e), _) | (_, Err(e)) => c.error(|| show_query(&q), &e),
        }
    }
}

/// Relative agreement demanded of the three evaluation paths.
pub const TRIANGLE_TOLERANCE: f64 = 1e-10;
/// Relative agreement demanded of the `k = 1` path against the oracle.
pub const HURWITZ_TOLERANCE: f64 = 1e-12;

fn zeta_triangle(c: &mut Ctx) {
    for i in 0..10 {
        let k = [1, 2, 3][i % 3];
        let q = numeric_query(c, k, 128);
        let paths = [
            ("series", zeta::xi_series(&q)),
            ("reduced", zeta::xi_reduced(&q)),
            ("quadrature", zeta::xi_quadrature(&q)),
        ];
        let mut values = Vec::new();
        for (name, v) in paths {
            match v {
                Ok(v) => values.push((name, v)),
                Err(e) => c.error(|| format!("{name} {}", show_query(&q)), &e),
            }
        }
        for a in 0..values.len() {
            for b in a + 1..values.len() {
                let ((na, va), (nb, vb)) = (&values[a], &values[b]);
                c.check(
                    va.relative_gap(vb) <= TRIANGLE_TOLERANCE,
                    || format!("{na} vs {nb} {}", show_query(&q)),
                    || (show_num(va), show_num(vb)),
                );
            }
        }
    }
}

fn zeta_k1(c: &mut Ctx) {
    for i in 0..6 {
        let q = numeric_query(c, 1, if i % 2 == 0 { 64 } else { 128 });
        let want = oracle::xi_k1(
            rat_to_f64(&q.s),
            rat_to_f64(&q.x),
            rat_to_f64(&q.params.alpha),
            rat_to_f64(&q.params.beta),
        );
        match zeta::xi_reduced(&q) {
            Ok(v) => {
                let got = v.value.to_f64();
                c.check(
                    (got - want).abs() <= HURWITZ_TOLERANCE * want.abs(),
                    || show_query(&q),
                    || (show_num(&v), format!("{want:e}")),
                );
            }
            Err(e) => c.error(|| show_query(&q), &e),
        }
    }
}

fn zeta_difference(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        let x = c.rational();
        for k in -3..=4 {
            for n in 0..=6u32 {
                let (lhs, rhs) = zeta::difference_exact(k, n, &p, &x);
                c.check_eq(|| format!("{} x={} n={n} k={k}", show_params(&p), format_rat(&x)), &lhs, &rhs, show_rat);
            }
        }
    }
    let q = numeric_query(c, 2, 96);
    match zeta::difference_numeric(&q) {
        Ok((a, b)) => c.check(a.agrees_with(&b, 4.0), || format!("numeric {}", show_query(&q)), || (show_num(&a), show_num(&b))),
        Err(e) => c.error(|| show_query(&q), &e),
    }
}

fn raabe(c: &mut Ctx) {
    for _ in 0..3 {
        let p = c.params();
        let x = c.rational();
        for k in -3..=3 {
            for n in 0..=6u32 {
                let (lhs, rhs) = zeta::raabe_poly(n, k, &p, &x);
                c.check_eq(|| format!("{} x={} n={n} k={k}", show_params(&p), format_rat(&x)), &lhs, &rhs, show_rat);
            }
        }
    }
    let mut q = numeric_query(c, 2, 64);
    q.s = q.s.clone() + r(1);
    match zeta::raabe_numeric(&q) {
        Ok((a, b)) => c.check(
            a.relative_gap(&b) <= 1e-8,
            || format!("numeric {}", show_query(&q)),
            || (show_num(&a), show_num(&b)),
        ),
        Err(e) => c.error(|| show_query(&q), &e),
    }
}

fn monotone_precision(c: &mut Ctx) {
    for i in 0..4 {
        let q = numeric_query(c, 1 + i % 3, 64);
        let hi = ZetaQuery { precision: 128, ..q.clone() };
        match (zeta::xi_series(&q), zeta::xi_series(&hi)) {
            (Ok(a), Ok(b)) => c.check(b.error <= a.error, || show_query(&q), || (show_num(&a), show_num(&b))),
            (Err(e), _) | (_, Err(e)) => c.error(|| show_query(&q), &e),
        }
    }
}

/// Suites for every documented invariant of the library modules.
pub const SUITES: &[Suite] = &[
    Suite { name: "eulerian-row-sum", module: "exact_arith", statement: "sum_j A(r,j) = r! for 1 <= r <= 8", run: eulerian_row_sum },
    Suite { name: "stirling", module: "exact_arith", statement: "alternating-sum and cached S(n,m) equal the triangle recurrence, n <= 20", run: stirling_cross_check },
    Suite { name: "rational-arithmetic", module: "exact_arith", statement: "(a+b)-b = a and (ab)/b = a on 1000 random rationals", run: rat_arithmetic },
    Suite { name: "binomial-symmetry", module: "exact_arith", statement: "C(n,k) = C(n,n-k) for n <= 30", run: binomial_symmetry },
    Suite { name: "polylog-rational", module: "polyseries", statement: "Eulerian rational form of Li_{-r} equals its series, r <= 6, N <= 12", run: polylog_rational },
    Suite { name: "polylog-integration", module: "polyseries", statement: "integrating Li_k(t)/t gives Li_{k+1}, -3 <= k <= 3", run: polylog_integration },
    Suite { name: "gf-kernel", module: "polyseries", statement: "n! [t^n] of the kernel equals B_n^(k)(x;a,b), n <= 8, -3 <= k <= 3", run: gf_kernel_suite },
    Suite { name: "series2-inversion", module: "polyseries", statement: "classical bivariate generating function gives B_n^(-k), n+k <= 8", run: series2_inversion },
    Suite { name: "pb-duality", module: "polybernoulli_core", statement: "B_n^(-k) = B_k^(-n), n,k <= 8", run: pb_duality },
    Suite { name: "pb-explicit-closed", module: "polybernoulli_core", statement: "explicit sum at x = 0 equals the Stirling closed form, n,k <= 6", run: pb_explicit_closed },
    Suite { name: "kaneko-recurrence", module: "polybernoulli_core", statement: "upper-index recurrence equals the explicit values, n <= 8, -3 <= k <= 4", run: kaneko },
    Suite { name: "classical-relation", module: "polybernoulli_core", statement: "(-1)^n B_n^(1)(-x) = B_n(x), n <= 10", run: classical_relation },
    Suite { name: "lonesum", module: "polybernoulli_core", statement: "lonesum matrix counts equal B_n^(-k), nk <= 12", run: lonesum },
    Suite { name: "pb-gf-oracle", module: "polybernoulli_core", statement: "classical kernel coefficients equal B_n^(k)(x), n <= 8, -2 <= k <= 3", run: pb_gf_oracle },
    Suite { name: "scaling", module: "generalized_pb", statement: "explicit formula equals the scaled classical polynomial, n <= 8, -3 <= k <= 4", run: scaling },
    Suite { name: "gpb-gf-oracle", module: "generalized_pb", statement: "kernel at x = 0 gives the constant terms, n <= 8", run: gpb_gf_oracle },
    Suite { name: "recurrences", module: "generalized_pb", statement: "recurrences I and II equal the explicit formula, n <= 8, -3 <= k <= 4", run: recurrences },
    Suite { name: "appell", module: "generalized_pb", statement: "d/dx B_n^(k) = n B_{n-1}^(k), n <= 10", run: appell },
    Suite { name: "addition-multiplication", module: "generalized_pb", statement: "addition and multiplication formulas equal x -> x+y and x -> mx, m <= 4", run: addition_multiplication },
    Suite { name: "leading-coefficient", module: "generalized_pb", statement: "B_n^(k)(x;a,b) is monic of degree n; the c-variant leads with (ln c)^n", run: leading_coefficient },
    Suite { name: "power-sum", module: "generalized_pb", statement: "power sums match direct summation, m <= 20, n <= 6", run: power_sums },
    Suite { name: "duality", module: "symmetrized", statement: "C_n^(-m)(x,y) = C_m^(-n)(y,x), n,m <= 6", run: sym_duality },
    Suite { name: "sym-closed", module: "symmetrized", statement: "closed Stirling form (second factor in y) equals the defining sum, n,m <= 5", run: sym_closed_suite },
    Suite { name: "sym-gf-oracle", module: "symmetrized", statement: "n! m! [t^n u^m] of the bivariate kernel equals the defining sum, n+m <= 6", run: sym_gf_suite },
    Suite { name: "sym-reduction", module: "symmetrized", statement: "C_n^(0) = (ln a + ln b)^(-n) B_n^(0)(x)", run: sym_reduction },
    Suite { name: "interpolation", module: "zeta", statement: "xi_k(-n, x) = (-1)^n B_n^(k)(-x), n <= 8, -3 <= k <= 4", run: interpolation },
    Suite { name: "zeta-reduction", module: "zeta", statement: "series and reduced series agree within 4x their error estimates", run: zeta_reduction },
    Suite { name: "zeta-triangle", module: "zeta", statement: "series, reduced series and quadrature agree to 1e-10 at 128 bits", run: zeta_triangle },
    Suite { name: "zeta-k1", module: "zeta", statement: "k = 1 values match s zeta(s+1, q) from the Hurwitz oracle to 1e-12", run: zeta_k1 },
    Suite { name: "zeta-difference", module: "zeta", statement: "difference identity, exactly for n <= 6 and numerically", run: zeta_difference },
    Suite { name: "raabe", module: "zeta", statement: "Raabe identity, exactly for n <= 6, -3 <= k <= 3, and numerically", run: raabe },
    Suite { name: "monotone-precision", module: "zeta", statement: "doubling the precision never increases the series error estimate", run: monotone_precision },
];

/// Looks up a library suite by name.
pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

//! The generalized Arakawa-Kaneko zeta function
//!
//! `ξ_k(s, x; a, b) = (1/Γ(s)) ∫_0^∞ Li_k(1 - (ab)^{-t}) / (b^t - a^{-t}) e^{-xt} t^{s-1} dt`
//!
//! evaluated three ways for `s > 0`: the alternating double series, the same
//! series in the reduced classical variable, and quadrature of the integral.
//! At `s = -n` the series is finite and evaluated exactly, along with the
//! difference and Raabe identities.
//!
//! Numeric values are [`Big`] floats with an absolute error estimate.

pub mod quad;
pub mod real;
pub mod special;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::binomial_row;
use crate::generalized::gpb_explicit;
use crate::params::Params;
use crate::scalar::{rat_to_f64, Rat, Ring};

use quad::{gauss_legendre, tanh_sinh};
use real::{Big, Real};
use special::{ln_gamma, PolylogRatio};

/// Largest accepted precision in bits.
pub const MAX_PRECISION: usize = 4096;
/// Default outer-term budget.
pub const DEFAULT_MAX_TERMS: usize = 4096;

const GUARD_BITS: usize = 40;
const FIRST_BLOCK: usize = 64;

/// Inputs of a numeric evaluation. `s` and `x` are exact rationals.
#[derive(Debug, Clone)]
pub struct ZetaQuery {
    pub k: i64,
    pub s: Rat,
    pub x: Rat,
    pub params: Params,
    /// Target precision in bits.
    pub precision: usize,
    /// Budget of outer series terms.
    pub max_terms: usize,
}

impl ZetaQuery {
    pub fn new(k: i64, s: Rat, x: Rat, params: Params, precision: usize) -> Self {
        ZetaQuery { k, s, x, params, precision, max_terms: DEFAULT_MAX_TERMS }
    }

    /// Same query at another shift `x`.
    pub fn at(&self, x: Rat) -> Self {
        ZetaQuery { x, ..self.clone() }
    }

    fn check_numeric(&self) -> Result<()> {
        if self.precision == 0 {
            return Err(Error::Domain("precision must be positive".into()));
        }
        if self.precision > MAX_PRECISION {
            return Err(Error::SizeGuard(format!("precision {} exceeds {MAX_PRECISION} bits", self.precision)));
        }
        if self.max_terms == 0 {
            return Err(Error::Domain("max_terms must be positive".into()));
        }
        if self.k < 1 {
            return Err(Error::Domain(format!("numeric evaluation needs k >= 1, got {}", self.k)));
        }
        if !self.s.is_positive() {
            return Err(Error::Domain("numeric evaluation needs s > 0".into()));
        }
        if !self.x.is_positive() {
            return Err(Error::Domain("numeric evaluation needs x > 0".into()));
        }
        Ok(())
    }

    fn check_reducible(&self) -> Result<()> {
        self.check_numeric()?;
        if !self.params.log_ab().is_positive() {
            return Err(Error::Domain("needs ln a + ln b > 0".into()));
        }
        if !(self.x.clone() + self.params.beta.clone()).is_positive() {
            return Err(Error::Domain("needs x + ln b > 0".into()));
        }
        Ok(())
    }

    fn check_series(&self) -> Result<()> {
        self.check_numeric()?;
        if !self.params.alpha.is_positive() || !self.params.beta.is_positive() {
            return Err(Error::Domain("series evaluation needs ln a > 0 and ln b > 0".into()));
        }
        Ok(())
    }

    /// `(x + ln b) / (ln a + ln b)`, the shift in the classical variable.
    pub fn reduced_x(&self) -> Rat {
        (self.x.clone() + self.params.beta.clone()) / self.params.log_ab()
    }

    /// Rough count of outer series terms needed: they decay like
    /// `n^{-(k + reduced_x)}` and stop below `2^{-p-8}`.
    pub fn series_terms_estimate(&self) -> f64 {
        let decay = self.k as f64 + rat_to_f64(&self.reduced_x());
        if decay <= 0.0 {
            return f64::INFINITY;
        }
        ((self.precision as f64 + 8.0) / decay).exp2()
    }

    fn input_precision(&self) -> usize {
        self.precision + 2 * GUARD_BITS
    }
}

/// A numeric result: the value at the target precision, an absolute error
/// estimate, and the number of series terms (or integrand evaluations) used.
#[derive(Debug, Clone)]
pub struct NumericValue {
    pub value: Big,
    pub error: Big,
    pub terms: usize,
}

impl NumericValue {
    /// `true` when `|self - other| ≤ factor · (err_self + err_other)`.
    pub fn agrees_with(&self, other: &NumericValue, factor: f64) -> bool {
        let diff = (self.value.clone() - other.value.clone()).abs();
        let bound = (self.error.clone() + other.error.clone()) * Big::from_f64(factor, 64);
        diff <= bound
    }

    /// `|self - other| / max(|self|, |other|)` as a double.
    pub fn relative_gap(&self, other: &NumericValue) -> f64 {
        let diff = (self.value.clone() - other.value.clone()).abs();
        let scale = if self.value.abs() > other.value.abs() { self.value.abs() } else { other.value.abs() };
        let gap = diff.log2_abs() - scale.log2_abs();
        if gap.is_nan() {
            0.0
        } else {
            2f64.powf(gap)
        }
    }

    fn scaled(self, by: &Big, prec: usize) -> NumericValue {
        let value = self.value * by.clone();
        let rounding = value.abs() * pow2(-(prec as i64) - 4);
        NumericValue {
            value: value.with_precision(prec),
            error: self.error * by.abs() + rounding,
            terms: self.terms,
        }
    }
}

fn pow2(e: i64) -> Big {
    let two = Big::from_i64(2, 64);
    if e >= 0 {
        two.powi(e as u32)
    } else {
        two.powi((-e) as u32).recip()
    }
}

fn error_floor(v: &Big, prec: usize) -> Big {
    (v.abs() * pow2(-(prec as i64))).with_precision(64)
}

/// `Σ_{n≥0} (n+1)^{-k} Σ_{j=0}^{n+o} (-1)^j C(n+o, j) (c + j h)^e`.
///
/// The inner sums are the diagonal of the forward difference table of
/// `f(j) = (c + j h)^e`, so the table is built once per block of terms at a
/// working precision that absorbs the `2^n` cancellation. The sum stops
/// after three consecutive terms below `2^{-p-8}`; the tail is estimated
/// from the asymptotic decay `n^{-(k + c/h)}`.
struct DiffSeries<'a> {
    k: i64,
    base: &'a Big,
    step: &'a Big,
    exponent: &'a Big,
    offset: usize,
    precision: usize,
    max_terms: usize,
}

impl DiffSeries<'_> {
    fn sum(&self) -> Result<NumericValue> {
        let p = self.precision;
        let threshold = -(p as f64) - 8.0;
        let decay = self.k as f64 + (self.base.to_f64() / self.step.to_f64());
        let log2_f0 = self.exponent.to_f64() * self.base.log2_abs();
        let mut block = FIRST_BLOCK.min(self.max_terms);
        loop {
            let len = block + self.offset;
            let log_len = (usize::BITS - len.leading_zeros()) as usize;
            let w = p + GUARD_BITS + len + log_len + log2_f0.max(0.0).ceil() as usize;
            let mut table: Vec<Big> = (0..=len)
                .map(|j| {
                    let at = self.base.with_precision(w) + self.step.with_precision(w) * Big::from_i64(j as i64, w);
                    at.powf(&self.exponent.with_precision(w))
                })
                .collect();
            let f0 = table[0].abs();
            let mut diagonal = Vec::with_capacity(len + 1);
            diagonal.push(table[0].clone());
            for order in 1..=len {
                for j in 0..=(len - order) {
                    table[j] = table[j + 1].clone() - table[j].clone();
                }
                diagonal.push(table[0].clone());
            }

            let mut acc = Big::zero(w);
            let mut small_run = 0;
            let mut last = Big::zero(64);
            for n in 0..block {
                let order = n + self.offset;
                let mut inner = diagonal[order].clone();
                if order % 2 == 1 {
                    inner = -inner;
                }
                let term = inner * weight(self.k, n, w);
                acc = acc + term.clone();
                last = term.abs().with_precision(64);
                if term.log2_abs() < threshold {
                    small_run += 1;
                } else {
                    small_run = 0;
                }
                if small_run == 3 {
                    let tail = last.clone() * Big::from_f64(2.0 * (n as f64 + 1.0) / (decay - 1.0).max(1e-3), 64);
                    let rounding = (f0 * Big::from_i64(2, 64).powi(len as u32) * Big::from_i64(len as i64 + 1, 64))
                        .with_precision(64)
                        * pow2(-(w as i64));
                    let error = tail + rounding + error_floor(&acc, p);
                    return Ok(NumericValue { value: acc.with_precision(p), error, terms: n + 1 });
                }
            }
            if block >= self.max_terms {
                let estimate = last.to_f64() * block as f64 / (decay - 1.0).max(1e-3);
                return Err(Error::NonConvergence { terms: block, estimate });
            }
            block = (2 * block).min(self.max_terms);
        }
    }
}

fn weight(k: i64, n: usize, prec: usize) -> Big {
    Big::from_i64(n as i64 + 1, prec).powi(k as u32).recip()
}

/// ξ_k(s, x; a, b) by the alternating double series with bases
/// `x + j ln a + (j+1) ln b`.
pub fn xi_series(q: &ZetaQuery) -> Result<NumericValue> {
    q.check_series()?;
    let ip = q.input_precision();
    let base = Big::from_rat(&(q.x.clone() + q.params.beta.clone()), ip);
    series_at(q, &base)
}

fn series_at(q: &ZetaQuery, base: &Big) -> Result<NumericValue> {
    let ip = q.input_precision();
    DiffSeries {
        k: q.k,
        base,
        step: &Big::from_rat(&q.params.log_ab(), ip),
        exponent: &Big::from_rat(&-q.s.clone(), ip),
        offset: 0,
        precision: q.precision,
        max_terms: q.max_terms,
    }
    .sum()
}

/// ξ_k(s, x; a, b) as `(ln a + ln b)^{-s} ξ_k(s, (x + ln b)/(ln a + ln b))`
/// with the classical series on the right.
pub fn xi_reduced(q: &ZetaQuery) -> Result<NumericValue> {
    q.check_reducible()?;
    let ip = q.input_precision();
    let inner = DiffSeries {
        k: q.k,
        base: &Big::from_rat(&q.reduced_x(), ip),
        step: &Big::one(ip),
        exponent: &Big::from_rat(&-q.s.clone(), ip),
        offset: 0,
        precision: q.precision,
        max_terms: q.max_terms,
    }
    .sum()?;
    let scale = Big::from_rat(&q.params.log_ab(), ip).powf(&Big::from_rat(&-q.s.clone(), ip));
    Ok(inner.scaled(&scale, q.precision))
}

/// ξ_k(s, x; a, b) by quadrature of its integral representation.
///
/// With `L = ln a + ln b` and `z = 1 - e^{-Lt}` the integrand is
/// `(Li_k(z)/z) e^{-(x + ln b) t} t^{s-1}`. The range is cut at `t = 1`,
/// refined geometrically on both sides, and truncated at a cutoff `T`
/// whose tail is bounded in closed form.
pub fn xi_quadrature(q: &ZetaQuery) -> Result<NumericValue> {
    q.check_reducible()?;
    let p = q.precision;
    let w = p + GUARD_BITS;
    let s = Big::from_rat(&q.s, w);
    let s_minus_one = s.clone() - Big::one(w);
    let decay_rat = q.x.clone() + q.params.beta.clone();
    let decay = Big::from_rat(&decay_rat, w);
    let log_ab = Big::from_rat(&q.params.log_ab(), w);
    let polylog = PolylogRatio::<Big>::new(q.k, w);

    let (c, l, s_f) = (rat_to_f64(&decay_rat), rat_to_f64(&q.params.log_ab()), rat_to_f64(&q.s));
    let ln_gamma_s = ln_gamma(&s);
    // log2 of Γ(s) c^{-s}, the size of the integral when Li_k(z)/z ≈ 1.
    let log2_scale = (ln_gamma_s.to_f64() - s_f * c.ln()) / std::f64::consts::LN_2;
    let log2_tol = log2_scale - p as f64 - 12.0;

    // Tail bound on [T, ∞): Li_k(z)/z ≤ G (1 + L t) with G = 2/(1 - e^{-L}),
    // and ∫_T^∞ t^m e^{-ct} ≤ 2 T^m e^{-cT}/c once cT ≥ 2(m + 1).
    let g = 2.0 / (1.0 - (-l).exp());
    let log2_tail = |t: f64| {
        let inner = t.powf(s_f - 1.0) + l * t.powf(s_f);
        (2.0 * g * inner / c).log2() - c * t / std::f64::consts::LN_2
    };
    let mut cutoff = (2.0 * (s_f + 2.0) / c).max(2.0);
    while log2_tail(cutoff) > log2_tol - 4.0 {
        cutoff *= 2.0;
    }

    let mut breaks = vec![0.0f64];
    let mut b = 1.0 / c;
    while b < 0.5 {
        breaks.push(b);
        b *= 2.0;
    }
    breaks.push(1.0);
    let mut b = 2.0;
    while b < cutoff {
        breaks.push(b);
        b *= 2.0;
    }
    breaks.push(cutoff);

    let integrand = |t: &Big, _: &Big| -> Big {
        let lt = log_ab.clone() * t.clone();
        let z = Big::one(w) - (-lt.clone()).exp();
        polylog.eval(&z, &lt) * (-(decay.clone() * t.clone())).exp() * t.powf(&s_minus_one)
    };
    let piece_tol = Big::from_i64(2, 64).powf(&Big::from_f64(log2_tol - (breaks.len() as f64).log2(), 64));
    let mut total = Big::zero(w);
    let mut error = Big::from_i64(2, 64).powf(&Big::from_f64(log2_tail(cutoff), 64));
    let mut evaluations = 0;
    for pair in breaks.windows(2) {
        let piece = tanh_sinh(integrand, &Big::from_f64(pair[0], w), &Big::from_f64(pair[1], w), &piece_tol, w)?;
        total = total + piece.value;
        error = error + piece.error.with_precision(64);
        evaluations += piece.evaluations;
    }
    let inv_gamma = (-ln_gamma_s).exp();
    let value = total * inv_gamma.clone();
    let error = error * inv_gamma.with_precision(64) + error_floor(&value, p);
    Ok(NumericValue { value: value.with_precision(p), error, terms: evaluations })
}

fn inverse_power(m: u64, k: i64) -> Rat {
    let base = Rat::from_integer(BigInt::from(m));
    if k >= 0 {
        Rat::from_integer(BigInt::from(1)) / base.pow_u(k as u32)
    } else {
        base.pow_u((-k) as u32)
    }
}

/// `Σ_{m=0}^{last} (m+1)^{-k} σ Σ_{j=0}^{m+o} (-1)^j C(m+o, j) (c + j h)^e`,
/// `σ = -1` when `negate`.
fn finite_diff_series(k: i64, base: &Rat, step: &Rat, e: u32, offset: usize, last: usize, negate: bool) -> Rat {
    let mut acc = Rat::zero();
    for m in 0..=last {
        let order = m + offset;
        let row = binomial_row(order as u64);
        let mut inner = Rat::zero();
        for (j, c) in row.iter().enumerate() {
            let term = Rat::from_integer(c.clone())
                * (base.clone() + step.clone() * Rat::from_integer(BigInt::from(j))).pow_u(e);
            if j % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        let t = inverse_power(m as u64 + 1, k) * inner;
        if negate {
            acc -= t;
        } else {
            acc += t;
        }
    }
    acc
}

/// ξ_k(-n, x; a, b) exactly: the series stops at outer index `n`.
pub fn xi_exact_neg(k: i64, n: u32, params: &Params, x: &Rat) -> Rat {
    finite_diff_series(k, &(x.clone() + params.beta.clone()), &params.log_ab(), n, 0, n as usize, false)
}

/// `(-1)^n B_n^{(k)}(-x; a, b)`, the polynomial side of the interpolation.
pub fn interpolated_value(k: i64, n: u32, params: &Params, x: &Rat) -> Rat {
    let v = gpb_explicit(n, k, params).eval(&-x.clone());
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Both sides of the difference identity at `s = -n`:
/// `ξ_k(-n, x + L) - ξ_k(-n, x)` through the polynomials, and the finite
/// right-hand series.
pub fn difference_exact(k: i64, n: u32, params: &Params, x: &Rat) -> (Rat, Rat) {
    let shifted = x.clone() + params.log_ab();
    let lhs = interpolated_value(k, n, params, &shifted) - interpolated_value(k, n, params, x);
    let rhs = if n == 0 {
        Rat::zero()
    } else {
        finite_diff_series(k, &(x.clone() + params.beta.clone()), &params.log_ab(), n, 1, n as usize - 1, true)
    };
    (lhs, rhs)
}

/// Both sides of the difference identity for `s > 0`: the direct
/// difference of two series evaluations, and the right-hand series.
pub fn difference_numeric(q: &ZetaQuery) -> Result<(NumericValue, NumericValue)> {
    let upper = xi_series(&q.at(q.x.clone() + q.params.log_ab()))?;
    let lower = xi_series(q)?;
    let lhs = NumericValue {
        value: upper.value - lower.value,
        error: upper.error + lower.error,
        terms: upper.terms.max(lower.terms),
    };
    let ip = q.input_precision();
    let rhs = DiffSeries {
        k: q.k,
        base: &Big::from_rat(&(q.x.clone() + q.params.beta.clone()), ip),
        step: &Big::from_rat(&q.params.log_ab(), ip),
        exponent: &Big::from_rat(&-q.s.clone(), ip),
        offset: 1,
        precision: q.precision,
        max_terms: q.max_terms,
    }
    .sum()?;
    let rhs = NumericValue { value: -rhs.value, ..rhs };
    Ok((lhs, rhs))
}

/// Both sides of the Raabe identity for `s > 1`:
/// `∫_0^L ξ_k(s, x + w) dw` by Gauss-Legendre over series evaluations, and
/// `(s-1)^{-1} Σ_m (m+1)^{-k} Σ_j (-1)^j C(m+1, j) (x + j ln a + (j+1) ln b)^{1-s}`.
pub fn raabe_numeric(q: &ZetaQuery) -> Result<(NumericValue, NumericValue)> {
    q.check_series()?;
    if q.s <= Rat::from_integer(BigInt::from(1)) {
        return Err(Error::Domain("the Raabe identity needs s > 1".into()));
    }
    let ip = q.input_precision();
    let base = Big::from_rat(&(q.x.clone() + q.params.beta.clone()), ip);
    let log_ab = Big::from_rat(&q.params.log_ab(), ip);
    let probe = series_at(q, &base)?;
    // Node values are only as good as their own error estimates.
    let tol = (probe.value.abs() * log_ab.clone()).with_precision(64) * pow2(-(q.precision as i64) - 4)
        + probe.error.clone() * log_ab.with_precision(64) * Big::from_i64(4, 64);
    let lhs = gauss_legendre(
        |w: &Big| {
            let v = series_at(q, &(base.clone() + w.clone()))?;
            Ok((v.value.with_precision(ip), v.error))
        },
        &Big::zero(ip),
        &log_ab,
        8,
        512,
        &tol,
        ip,
    )?;
    let lhs = NumericValue {
        value: lhs.value.with_precision(q.precision),
        error: lhs.error.with_precision(64),
        terms: lhs.evaluations,
    };

    let s_minus_one = Big::from_rat(&(q.s.clone() - Rat::from_integer(BigInt::from(1))), ip);
    let rhs = DiffSeries {
        k: q.k,
        base: &base,
        step: &log_ab,
        exponent: &-s_minus_one.clone(),
        offset: 1,
        precision: q.precision,
        max_terms: q.max_terms,
    }
    .sum()?;
    Ok((lhs, rhs.scaled(&s_minus_one.recip(), q.precision)))
}

/// Both sides of the polynomial Raabe identity, exactly:
/// `∫_0^L B_n^{(k)}(x - w) dw` and
/// `(n+1)^{-1} Σ_{m=0}^{n} (m+1)^{-k} Σ_j (-1)^j C(m+1, j) (x - j ln a - (j+1) ln b)^{n+1}`.
pub fn raabe_poly(n: u32, k: i64, params: &Params, x: &Rat) -> (Rat, Rat) {
    let poly = gpb_explicit(n, k, params);
    let l = params.log_ab();
    // ∫_0^L P(x - w) dw = ∫_{x-L}^{x} P(u) du
    let lhs = poly.definite_integral(&(x.clone() - l.clone()), x);
    let series = finite_diff_series(k, &(x.clone() - params.beta.clone()), &-l, n + 1, 1, n as usize, false);
    let rhs = series / Rat::from_integer(BigInt::from(n + 1));
    (lhs, rhs)
}

/// A zeta value in whichever mode `s` selects.
#[derive(Debug, Clone)]
pub enum ZetaValue {
    Exact(Rat),
    Numeric(NumericValue),
}

/// Exact mode when `s` is a non-positive integer, the series otherwise.
pub fn evaluate(q: &ZetaQuery) -> Result<ZetaValue> {
    if q.s.is_integer() && !q.s.is_positive() {
        let n = (-q.s.to_integer())
            .to_u32()
            .ok_or_else(|| Error::SizeGuard("exact order too large".into()))?;
        return Ok(ZetaValue::Exact(xi_exact_neg(q.k, n, &q.params, &q.x)));
    }
    xi_series(q).map(ZetaValue::Numeric)
}

#[cfg(test)]
mod tests;

//! Real scalars for the numeric zeta routines: `f64` for quick evaluation
//! and [`Big`], an arbitrary-precision binary float.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

use crate::scalar::{rat_to_f64, Rat};

const RM: RoundingMode = RoundingMode::ToEven;

/// Operations the numeric kernels need from a real scalar.
pub trait Real:
    Clone
    + fmt::Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Significand bits carried by values built at precision `prec`.
    fn precision(&self) -> usize;
    fn from_i64(n: i64, prec: usize) -> Self;
    fn from_f64(v: f64, prec: usize) -> Self;
    fn from_rat(r: &Rat, prec: usize) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;
    fn pi(prec: usize) -> Self;

    fn zero(prec: usize) -> Self {
        Self::from_i64(0, prec)
    }

    fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    /// `self^e` for `self > 0`.
    fn powf(&self, e: &Self) -> Self {
        (e.clone() * self.ln()).exp()
    }

    fn powi(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn recip(&self) -> Self {
        Self::one(self.precision()) / self.clone()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero(self.precision())
    }

    /// `log2 |self|` in double precision, `-inf` at zero.
    fn log2_abs(&self) -> f64;
}

impl Real for f64 {
    fn precision(&self) -> usize {
        53
    }
    fn from_i64(n: i64, _: usize) -> Self {
        n as f64
    }
    fn from_f64(v: f64, _: usize) -> Self {
        v
    }
    fn from_rat(r: &Rat, _: usize) -> Self {
        rat_to_f64(r)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn pi(_: usize) -> Self {
        std::f64::consts::PI
    }
    fn powf(&self, e: &Self) -> Self {
        f64::powf(*self, *e)
    }
    fn log2_abs(&self) -> f64 {
        f64::abs(*self).log2()
    }
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Binary floating-point number carrying its target precision in bits.
///
/// Binary operations round to the larger of the two operand precisions.
#[derive(Clone)]
pub struct Big {
    v: BigFloat,
    p: usize,
}

impl Big {
    pub fn new(v: BigFloat, p: usize) -> Self {
        let p = clamp(p);
        Big { v, p }
    }

    pub fn inner(&self) -> &BigFloat {
        &self.v
    }

    /// Re-rounds to `prec` bits.
    pub fn with_precision(&self, prec: usize) -> Self {
        let prec = clamp(prec);
        let mut v = self.v.clone();
        if !v.is_zero() && !v.is_nan() {
            let _ = v.set_precision(prec, RM);
        }
        Big { v, p: prec }
    }

    pub fn is_nan(&self) -> bool {
        self.v.is_nan()
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.v.is_zero() {
            return "0".into();
        }
        let s = with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        trim_decimal(&s, digits)
    }
}

/// Cuts a `d.ddde±x` string to `digits` significant digits, rounding half up.
fn trim_decimal(s: &str, digits: usize) -> String {
    let (sign, body) = match s.strip_prefix('-') {
        Some(b) => ("-", b),
        None => ("", s),
    };
    let (mant, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    let mut ds: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).map(|b| b - b'0').collect();
    // Exponent of the first digit.
    let mut e10 = exp + int_part.len() as i64 - 1;
    while ds.len() > 1 && ds[0] == 0 {
        ds.remove(0);
        e10 -= 1;
    }
    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    e10 += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    }
    while ds.len() > 1 && *ds.last().unwrap() == 0 {
        ds.pop();
    }
    let head = ds[0];
    let tail: String = ds[1..].iter().map(|d| char::from(b'0' + d)).collect();
    if tail.is_empty() {
        format!("{sign}{head}e{e10}")
    } else {
        format!("{sign}{head}.{tail}e{e10}")
    }
}

impl fmt::Debug for Big {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl fmt::Display for Big {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.p as f64) / std::f64::consts::LOG2_10).floor().max(1.0) as usize;
        write!(f, "{}", self.to_decimal(digits))
    }
}

impl PartialEq for Big {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl PartialOrd for Big {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

macro_rules! big_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Big {
            type Output = Big;
            fn $m(self, rhs: Big) -> Big {
                let p = self.p.max(rhs.p);
                Big { v: self.v.$m(&rhs.v, p, RM), p }
            }
        }
    };
}

big_binop!(Add, add);
big_binop!(Sub, sub);
big_binop!(Mul, mul);
big_binop!(Div, div);

impl Neg for Big {
    type Output = Big;
    fn neg(self) -> Big {
        Big { v: self.v.neg(), p: self.p }
    }
}

/// Smallest precision the backend rounds reliably at.
pub const MIN_PRECISION: usize = 64;

fn clamp(prec: usize) -> usize {
    prec.max(MIN_PRECISION)
}

fn bigint_to_float(n: &num_bigint::BigInt, p: usize) -> BigFloat {
    use num_traits::ToPrimitive;
    if let Some(i) = n.to_i64() {
        return BigFloat::from_i64(i, p);
    }
    let s = n.to_string();
    with_consts(|cc| BigFloat::parse(&s, Radix::Dec, p.max(n.bits() as usize + 64), RM, cc))
}

impl Real for Big {
    fn precision(&self) -> usize {
        self.p
    }
    fn from_i64(n: i64, prec: usize) -> Self {
        let prec = clamp(prec);
        Big { v: BigFloat::from_i64(n, prec), p: prec }
    }
    fn from_f64(v: f64, prec: usize) -> Self {
        let prec = clamp(prec);
        Big { v: BigFloat::from_f64(v, prec), p: prec }
    }
    fn from_rat(r: &Rat, prec: usize) -> Self {
        let prec = clamp(prec);
        let n = bigint_to_float(r.numer(), prec);
        let d = bigint_to_float(r.denom(), prec);
        Big { v: n.div(&d, prec, RM), p: prec }
    }
    fn exp(&self) -> Self {
        Big { v: with_consts(|cc| self.v.exp(self.p, RM, cc)), p: self.p }
    }
    fn ln(&self) -> Self {
        Big { v: with_consts(|cc| self.v.ln(self.p, RM, cc)), p: self.p }
    }
    fn sqrt(&self) -> Self {
        Big { v: self.v.sqrt(self.p, RM), p: self.p }
    }
    fn abs(&self) -> Self {
        Big { v: self.v.abs(), p: self.p }
    }
    fn to_f64(&self) -> f64 {
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        let Some(top) = words.last() else {
            return 0.0;
        };
        if *top == 0 {
            return 0.0;
        }
        // Mantissa is normalized to [1/2, 1) with its top bit in the last word.
        let mag = (*top as f64) * 2f64.powi(-64) * 2f64.powi(e / 2) * 2f64.powi(e - e / 2);
        match sign {
            Sign::Neg => -mag,
            Sign::Pos => mag,
        }
    }
    fn pi(prec: usize) -> Self {
        let prec = clamp(prec);
        Big { v: with_consts(|cc| cc.pi(prec, RM)), p: prec }
    }
    fn powi(&self, e: u32) -> Self {
        Big { v: self.v.powi(e as usize, self.p, RM), p: self.p }
    }
    fn log2_abs(&self) -> f64 {
        if self.v.is_zero() {
            return f64::NEG_INFINITY;
        }
        let Some((words, _, _, e, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        let top = *words.last().unwrap_or(&1) as f64;
        top.log2() - 64.0 + e as f64
    }
}

/// `true` when `|a - b| ≤ tol · max(|a|, |b|)`.
pub fn rel_close<R: Real>(a: &R, b: &R, tol: f64) -> bool {
    let diff = (a.clone() - b.clone()).abs().to_f64();
    let scale = a.abs().to_f64().max(b.abs().to_f64());
    diff <= tol * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn big_roundtrips_through_f64() {
        for v in [1.0, -3.5, 1e-300, 6.02e23, 0.1] {
            let b = Big::from_f64(v, 128);
            assert_eq!(b.to_f64(), v);
        }
        let third = Big::from_rat(&ratio(1, 3), 256);
        assert!((third.to_f64() - 1.0 / 3.0).abs() < 1e-16);
        assert!((third.log2_abs() - (1.0f64 / 3.0).log2()).abs() < 1e-12);
    }

    #[test]
    fn big_transcendentals() {
        let p = 200;
        let two = Big::from_i64(2, p);
        let x = two.ln().exp();
        assert!((x - two.clone()).abs().log2_abs() < -190.0);
        let pi = Big::pi(p);
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        let r = two.powf(&Big::from_rat(&ratio(1, 2), p));
        assert!((r.clone() * r - two).abs().log2_abs() < -190.0);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(trim_decimal("1.23456e2", 3), "1.23e2");
        assert_eq!(trim_decimal("9.996e-1", 3), "1e0");
        assert_eq!(trim_decimal("-2.5000000e0", 4), "-2.5e0");
        let b = Big::from_rat(&ratio(1, 3), 128);
        assert_eq!(b.to_decimal(5), "3.3333e-1");
        let big = Big::from_rat(&ratio(-2, 1), 64);
        assert_eq!(big.to_decimal(5), "-2e0");
    }

    #[test]
    fn huge_integers_convert() {
        let n = num_bigint::BigInt::from(10).pow(60);
        let r = Rat::from_integer(n);
        let b = Big::from_rat(&r, 128);
        assert!((b.to_f64() - 1e60).abs() / 1e60 < 1e-15);
    }
}

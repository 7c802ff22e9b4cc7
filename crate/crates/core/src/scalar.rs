//! Coefficient rings.
//!
//! Everything polynomial in this crate is generic over [`Ring`] (and over
//! [`Field`] where division is needed). The exact instantiation is
//! [`Rat`]; `f64` and `f32` are provided for quick floating-point
//! evaluation of the same formulas.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Commutative ring with unit, embeddable from the integers.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    /// `self^e` by repeated squaring.
    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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
}

/// A [`Ring`] with division.
pub trait Field: Ring + Div<Output = Self> {
    fn from_rat(r: &Rat) -> Self;

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `self^e` for any integer `e`; `0^0 = 1`.
    fn pow_i(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow_u(e as u32)
        } else {
            self.pow_u(e.unsigned_abs() as u32).recip()
        }
    }
}

impl Ring for Rat {
    fn from_integer(n: &BigInt) -> Self {
        Rat::from_integer(n.clone())
    }
}

impl Field for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

macro_rules! float_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn from_integer(n: &BigInt) -> Self {
                n.to_f64().unwrap_or(f64::NAN) as $t
            }
        }

        impl Field for $t {
            fn from_rat(r: &Rat) -> Self {
                rat_to_f64(r) as $t
            }
        }
    };
}

float_ring!(f64);
float_ring!(f32);

/// Nearest `f64` to a rational, robust to huge numerators and denominators.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    // Scale both down to 64 significant bits before dividing.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift_n = (nb - 64).max(0);
    let shift_d = (db - 64).max(0);
    let n = (r.numer() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    (n / d) * 2f64.powi((shift_n - shift_d) as i32)
}

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`; panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes as `"p/q"`, or `"p"` when `q = 1`. The sign lives on the numerator.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"` (optional leading `-` or `+`).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    if den.is_negative() {
        return Ok(Rat::new(-num, -den));
    }
    Ok(Rat::new(num, den))
}

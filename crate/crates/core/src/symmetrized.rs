//! Symmetrized two-variable polynomials `C_n^{(-m)}(x, y; a, b)`.
//!
//! [`sym_def`] is the defining finite sum. When `L = ln a + ln b ≠ 1` it
//! does not reproduce the bivariate generating function
//! `e^{(x+α/L)t} e^{(y+α/L)u} / (e^t + e^u - e^{t+u})`, and the duality and
//! closed-formula identities fail with it. Evaluating the inner polynomial
//! at `Lx` instead ([`SymDefinition::Rescaled`], i.e. using the `c = ab`
//! three-parameter polynomial) restores all three; both are provided so the
//! discrepancy stays visible and testable.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, stirling2};
use crate::generalized::gpb_explicit;
use crate::params::Params;
use crate::poly::{BiPoly, Poly};
use crate::polyseries::{BiSeries, Series};
use crate::scalar::Field;

/// Which sum defines `C_n^{(-m)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymDefinition {
    /// `L^{-n} Σ_k C(m,k) B_n^{(-k)}(x; a, b) (y - β/L)^{m-k}`.
    Literal,
    /// The same sum with `B_n^{(-k)}(Lx; a, b)`.
    Rescaled,
}

/// Which variable the second Stirling factor of the closed formula uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedReading {
    /// `(y + α/L)^{m-l}`.
    SecondInY,
    /// `(x + α/L)^{m-l}`.
    SecondInX,
}

fn log_ab<T: Field>(params: &Params<T>) -> Result<T> {
    let l = params.log_ab();
    if l.is_zero() {
        return Err(Error::InvalidParams("ln a + ln b must be non-zero".into()));
    }
    Ok(l)
}

fn big<T: Field>(n: &num_bigint::BigInt) -> T {
    T::from_integer(n)
}

/// `C_n^{(-m)}(x, y; a, b)` under the chosen definition.
pub fn sym_poly<T: Field>(n: u32, m: u32, params: &Params<T>, def: SymDefinition) -> Result<BiPoly<T>> {
    let l = log_ab(params)?;
    let shift = -params.beta.clone() / l.clone();
    let mut acc = BiPoly::zero();
    for k in 0..=m {
        let mut b = gpb_explicit(n, -(k as i64), params);
        if def == SymDefinition::Rescaled {
            b = b.compose_affine(&l, &T::zero());
        }
        let ypow = Poly::linear_pow(&shift, m - k).scale(&big(&binomial(m as u64, k as i64)));
        acc = acc + BiPoly::from_x(&b) * BiPoly::from_y(&ypow);
    }
    Ok(acc.scale(&l.pow_i(-(n as i64))))
}

/// `C_n^{(-m)}(x, y; a, b)` from its defining sum.
pub fn sym_def<T: Field>(n: u32, m: u32, params: &Params<T>) -> Result<BiPoly<T>> {
    sym_poly(n, m, params, SymDefinition::Literal)
}

/// [`sym_def`] with the inner polynomial evaluated at `Lx`.
pub fn sym_def_rescaled<T: Field>(n: u32, m: u32, params: &Params<T>) -> Result<BiPoly<T>> {
    sym_poly(n, m, params, SymDefinition::Rescaled)
}

/// `Σ_p C(n,p) S(p,j) (z + α/L)^{n-p}` as a polynomial in `z`.
fn stirling_factor<T: Field>(n: u32, j: u32, anchor: &T) -> Poly<T> {
    (j..=n).fold(Poly::zero(), |acc, p| {
        let c: T = big::<T>(&binomial(n as u64, p as i64)) * big(&stirling2(p as u64, j as u64));
        acc + Poly::linear_pow(anchor, n - p).scale(&c)
    })
}

/// `Σ_{j ≤ min(n,m)} (j!)^2 F_{n,j}(x) F_{m,j}(·)` with
/// `F_{n,j}(z) = Σ_p C(n,p) S(p,j) (z + α/L)^{n-p}`.
pub fn sym_closed<T: Field>(n: u32, m: u32, params: &Params<T>, reading: ClosedReading) -> Result<BiPoly<T>> {
    let l = log_ab(params)?;
    let anchor = params.alpha.clone() / l;
    let mut acc = BiPoly::zero();
    for j in 0..=n.min(m) {
        let f = factorial(j as u64);
        let w: T = big(&(&f * &f));
        let first = BiPoly::from_x(&stirling_factor(n, j, &anchor));
        let second_poly = stirling_factor(m, j, &anchor);
        let second = match reading {
            ClosedReading::SecondInY => BiPoly::from_y(&second_poly),
            ClosedReading::SecondInX => BiPoly::from_x(&second_poly),
        };
        acc = acc + (first * second).scale(&w);
    }
    Ok(acc)
}

/// `e^{(x+α/L)t} e^{(y+α/L)u} / (e^t + e^u - e^{t+u})` to orders `(n_max, m_max)`,
/// with coefficients carried as polynomials in `(x, y)`.
///
/// The denominator is inverted as the geometric series in
/// `(e^t - 1)(e^u - 1)`.
pub fn sym_gf_oracle<T: Field>(params: &Params<T>, n_max: usize, m_max: usize) -> Result<BiSeries<BiPoly<T>>> {
    let l = log_ab(params)?;
    let anchor = params.alpha.clone() / l;
    let exp_shifted = |order: usize, embed: fn(&Poly<T>) -> BiPoly<T>| {
        let coeffs: Vec<BiPoly<T>> = (0..=order)
            .map(|i| {
                let inv_fact = big::<T>(&factorial(i as u64)).recip();
                embed(&Poly::linear_pow(&anchor, i as u32)).scale(&inv_fact)
            })
            .collect();
        Series::new(coeffs, order)
    };
    let et = exp_shifted(n_max, BiPoly::from_x);
    let eu = exp_shifted(m_max, BiPoly::from_y);
    let em1 = |order: usize| {
        let s = Series::<T>::exp(&T::one(), order);
        let mut c: Vec<BiPoly<T>> = s.coeffs().iter().map(|v| BiPoly::constant(v.clone())).collect();
        c[0] = BiPoly::zero();
        Series::new(c, order)
    };
    let p = BiSeries::from_t(&em1(n_max), m_max).mul(&BiSeries::from_u(&em1(m_max), n_max));
    let inv = p.geometric_inverse()?;
    Ok(BiSeries::from_t(&et, m_max).mul(&BiSeries::from_u(&eu, n_max)).mul(&inv))
}

/// `n! m!` times coefficient `(n, m)` of an oracle expansion.
pub fn gf_value<T: Field>(oracle: &BiSeries<BiPoly<T>>, n: usize, m: usize) -> BiPoly<T> {
    let f: T = big::<T>(&factorial(n as u64)) * big(&factorial(m as u64));
    oracle.coeff(n, m).scale(&f)
}

/// Outcome of comparing `C_n^{(-m)}(x, y)` with `C_m^{(-n)}(y, x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualityReport<T> {
    pub n: u32,
    pub m: u32,
    pub holds: bool,
    pub lhs: BiPoly<T>,
    pub rhs: BiPoly<T>,
}

/// Compares `C_n^{(-m)}(x,y)` against `C_m^{(-n)}(y,x)` under `def`.
pub fn duality_check_with<T: Field>(
    n: u32,
    m: u32,
    params: &Params<T>,
    def: SymDefinition,
) -> Result<DualityReport<T>> {
    let lhs = sym_poly(n, m, params, def)?;
    let rhs = sym_poly(m, n, params, def)?.swap_xy();
    Ok(DualityReport { n, m, holds: lhs == rhs, lhs, rhs })
}

/// Duality for the defining sum.
pub fn duality_check<T: Field>(n: u32, m: u32, params: &Params<T>) -> Result<DualityReport<T>> {
    duality_check_with(n, m, params, SymDefinition::Literal)
}

/// Whether `p` is the constant polynomial 1.
pub fn is_unit<T: Field>(p: &BiPoly<T>) -> bool {
    *p == BiPoly::one()
}

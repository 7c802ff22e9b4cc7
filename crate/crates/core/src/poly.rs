//! Dense univariate and sparse bivariate polynomials over a [`Ring`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_arith::binomial_row;
use crate::scalar::{Field, Ring};

/// Univariate polynomial, lowest degree first.
///
/// Canonical form: no trailing zero coefficients. The zero polynomial is the
/// empty coefficient vector.
#[derive(Clone, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `c x^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        let mut v = vec![T::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    /// `(x + shift)^n`, expanded binomially.
    pub fn linear_pow(shift: &T, n: u32) -> Self {
        let row = binomial_row(n as u64);
        let mut pow = T::one();
        let mut coeffs = vec![T::zero(); n as usize + 1];
        for i in (0..=n as usize).rev() {
            coeffs[i] = T::from_integer(&row[i]) * pow.clone();
            pow = pow * shift.clone();
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    /// `p(scale·x + shift)`.
    pub fn compose_affine(&self, scale: &T, shift: &T) -> Self {
        let lin = Poly::new(vec![shift.clone(), scale.clone()]);
        self.compose(&lin)
    }

    /// `p(q(x))` by Horner's scheme.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * q.clone() + Self::constant(c.clone()))
    }
}

impl<T: Field> Poly<T> {
    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut v = vec![T::zero()];
        v.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() / T::from_i64(i as i64 + 1)),
        );
        Self::new(v)
    }

    /// `∫_lo^hi p(x) dx`.
    pub fn definite_integral(&self, lo: &T, hi: &T) -> T {
        let prim = self.integral();
        prim.eval(hi) - prim.eval(lo)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn from_integer(n: &BigInt) -> Self {
        Self::constant(T::from_integer(n))
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Bivariate polynomial in `(x, y)`, keyed by `(deg_x, deg_y)`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality and iteration order is lexicographic.
#[derive(Clone, PartialEq)]
pub struct BiPoly<T> {
    terms: BTreeMap<(usize, usize), T>,
}

impl<T: Ring> BiPoly<T> {
    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), T)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, v) in it {
            p.add_term(k, v);
        }
        p
    }

    pub fn constant(c: T) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    /// Embeds a polynomial in `x`.
    pub fn from_x(p: &Poly<T>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i, 0), c.clone())))
    }

    /// Embeds a polynomial in `y`.
    pub fn from_y(p: &Poly<T>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j), c.clone())))
    }

    fn add_term(&mut self, key: (usize, usize), v: T) {
        if v.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let s = old + v;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, v);
            }
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    /// Non-zero terms in lexicographic `(deg_x, deg_y)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &T)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v.clone() * c.clone())))
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(i, j), c)| {
            acc + c.clone() * x.pow_u(i as u32) * y.pow_u(j as u32)
        })
    }
}

impl<T: Ring> Zero for BiPoly<T> {
    fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for BiPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Add for BiPoly<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
        self
    }
}

impl<T: Ring> Sub for BiPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for BiPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        BiPoly { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl<T: Ring> Mul for BiPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Ring> Ring for BiPoly<T> {
    fn from_integer(n: &BigInt) -> Self {
        Self::constant(T::from_integer(n))
    }
}

impl<T: fmt::Debug> fmt::Debug for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

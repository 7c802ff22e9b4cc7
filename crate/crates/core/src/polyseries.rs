//! Truncated formal power series in one and two variables.
//!
//! These are the generating-function side of every identity: kernels such as
//! `Li_k(1 - (ab)^{-t}) e^{xt} / (b^t - a^{-t})` are expanded here directly,
//! without going through any closed formula, and the `n!`-scaled
//! coefficients are compared against the polynomial routines.

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, eulerian};
use crate::params::Params;
use crate::scalar::{Field, Ring};

/// `Σ_{i ≤ order} c_i t^i`; everything of degree above `order` is discarded.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Series<T> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![T::one()], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(vec![T::zero(), T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    /// Index of the first non-zero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new((0..=n).map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()).collect(), n)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new((0..=n).map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()).collect(), n)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(), self.order())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out, n)
    }

    /// `outer(inner(t))`; requires `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Composition);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }
}

impl<T: Field> Series<T> {
    /// `e^{ct}`, coefficients `c^n / n!`.
    pub fn exp(c: &T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = T::one();
        coeffs.push(term.clone());
        for n in 1..=order {
            term = term * c.clone() / T::from_i64(n as i64);
            coeffs.push(term.clone());
        }
        Self::new(coeffs, order)
    }

    /// Truncated quotient.
    ///
    /// When `rhs(0) = 0`, both operands are divided by `t^v` first, where `v`
    /// is the valuation of `rhs`; this needs `valuation(self) ≥ v` and costs
    /// `v` orders of precision.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let n = self.order().min(rhs.order());
        let v = rhs
            .truncate(n)
            .valuation()
            .ok_or_else(|| Error::Division("divisor vanishes to the truncation order".into()))?;
        if let Some(va) = self.truncate(n).valuation() {
            if va < v {
                return Err(Error::Division(format!(
                    "dividend valuation {va} is below divisor valuation {v}"
                )));
            }
        }
        let m = n - v;
        let a: Vec<T> = self.coeffs[v..=n].to_vec();
        let b: Vec<T> = rhs.coeffs[v..=n].to_vec();
        let inv_b0 = b[0].recip();
        let mut q: Vec<T> = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let mut acc = a[i].clone();
            for j in 1..=i {
                acc = acc - b[j].clone() * q[i - j].clone();
            }
            q.push(acc * inv_b0.clone());
        }
        Ok(Self::new(q, m))
    }

    /// `∫_0^z f(t)/t dt`; requires `f(0) = 0`.
    pub fn integrate_over_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("f(0) must vanish to integrate f(t)/t".into()));
        }
        let mut out = vec![T::zero(); self.order() + 1];
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out[i] = c.clone() / T::from_i64(i as i64);
        }
        Ok(Self::new(out, self.order()))
    }

    /// Multiplies coefficient `n` by `n!`, turning an exponential generating
    /// function into its sequence of values.
    pub fn egf_values(&self) -> Vec<T> {
        let mut fact = T::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = fact.clone() * T::from_i64(n as i64);
                }
                c.clone() * fact.clone()
            })
            .collect()
    }
}

/// `Li_k(z) = Σ_{n≥1} z^n / n^k` truncated at `order`, for any integer `k`.
pub fn polylog_series<T: Field>(k: i64, order: usize) -> Series<T> {
    let mut coeffs = vec![T::zero()];
    coeffs.extend((1..=order).map(|n| T::from_i64(n as i64).pow_i(-k)));
    Series::new(coeffs, order)
}

/// Which power of `x` each Eulerian number multiplies in the rational form
/// of `Li_{-r}(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerianExponent {
    /// `Σ_j ⟨r,j⟩ x^{j+1}`: agrees with `Li_{-r}` for every `r ≥ 0`.
    Ascending,
    /// `Σ_j ⟨r,j⟩ x^{r-j}`: agrees for `r ≥ 1` only, through the symmetry
    /// `⟨r,j⟩ = ⟨r,r-1-j⟩`; at `r = 0` it yields `1/(1-x)`.
    Descending,
}

/// Expands `(Σ_j ⟨r,j⟩ x^{e(j)}) / (1-x)^{r+1}` to the given order.
pub fn polylog_neg_rational_with<T: Field>(
    r: u64,
    order: usize,
    exponent: EulerianExponent,
) -> Series<T> {
    let mut num = vec![T::zero(); order + 1];
    for j in 0..=r as i64 {
        let e = match exponent {
            EulerianExponent::Ascending => j + 1,
            EulerianExponent::Descending => r as i64 - j,
        } as usize;
        if e <= order {
            num[e] = num[e].clone() + T::from_integer(&eulerian(r, j));
        }
    }
    // (1-x)^{-(r+1)} = Σ C(n+r, r) x^n
    let den_inv: Vec<T> =
        (0..=order).map(|n| T::from_integer(&binomial(n as u64 + r, r as i64))).collect();
    Series::new(num, order).mul(&Series::new(den_inv, order))
}

/// `Li_{-r}` through its Eulerian-number rational form.
pub fn polylog_neg_rational<T: Field>(r: u64, order: usize) -> Series<T> {
    polylog_neg_rational_with(r, order, EulerianExponent::Ascending)
}

/// `Li_k(1-(ab)^{-t}) e^{xt} / (b^t - a^{-t})` to order `order`.
///
/// Built as `Li_k ∘ (1 - e^{-(α+β)t})`, divided by `e^{βt}(1 - e^{-(α+β)t})`
/// and multiplied by `e^{xt}`. `n!` times coefficient `n` is
/// `B_n^{(k)}(x; a, b)`.
pub fn gf_kernel<T: Field>(k: i64, params: &Params<T>, x: &T, order: usize) -> Result<Series<T>> {
    let l = params.log_ab();
    if l.is_zero() {
        return Err(Error::InvalidParams("ln a + ln b must be non-zero".into()));
    }
    let n = order + 1;
    let z = Series::one(n).sub(&Series::exp(&-l, n));
    let li = polylog_series::<T>(k, n).compose(&z)?;
    let den = Series::exp(&params.beta, n).mul(&z);
    let ratio = li.div(&den)?;
    Ok(ratio.mul(&Series::exp(x, order)))
}

/// Rectangular truncation `Σ_{i≤N, j≤M} c_{ij} t^i u^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct BiSeries<T> {
    n: usize,
    m: usize,
    coeffs: Vec<T>,
}

impl<T: Ring> BiSeries<T> {
    pub fn zero(n: usize, m: usize) -> Self {
        BiSeries { n, m, coeffs: vec![T::zero(); (n + 1) * (m + 1)] }
    }

    pub fn one(n: usize, m: usize) -> Self {
        let mut s = Self::zero(n, m);
        s.coeffs[0] = T::one();
        s
    }

    /// Lifts a series in `t`.
    pub fn from_t(s: &Series<T>, m: usize) -> Self {
        let n = s.order();
        let mut out = Self::zero(n, m);
        for i in 0..=n {
            *out.at_mut(i, 0) = s.coeff(i);
        }
        out
    }

    /// Lifts a series in `u`.
    pub fn from_u(s: &Series<T>, n: usize) -> Self {
        let m = s.order();
        let mut out = Self::zero(n, m);
        for j in 0..=m {
            *out.at_mut(0, j) = s.coeff(j);
        }
        out
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.m + 1) + j
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        let k = self.idx(i, j);
        &mut self.coeffs[k]
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        if i > self.n || j > self.m {
            return T::zero();
        }
        self.coeffs[self.idx(i, j)].clone()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (n, m) = (self.n.min(rhs.n), self.m.min(rhs.m));
        let mut out = Self::zero(n, m);
        for i in 0..=n {
            for j in 0..=m {
                *out.at_mut(i, j) = self.coeff(i, j) + rhs.coeff(i, j);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (n, m) = (self.n.min(rhs.n), self.m.min(rhs.m));
        let mut out = Self::zero(n, m);
        for i1 in 0..=n {
            for j1 in 0..=m {
                let a = self.coeff(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=n - i1 {
                    for j2 in 0..=m - j1 {
                        let b = rhs.coeff(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        let slot = out.at_mut(i1 + i2, j1 + j2);
                        *slot = slot.clone() + a.clone() * b;
                    }
                }
            }
        }
        out
    }

    /// `1 / (1 - self)` as the geometric sum; requires `self(0,0) = 0`.
    pub fn geometric_inverse(&self) -> Result<Self> {
        if !self.coeff(0, 0).is_zero() {
            return Err(Error::Division("geometric inversion needs a zero constant term".into()));
        }
        let mut acc = Self::one(self.n, self.m);
        let mut power = Self::one(self.n, self.m);
        for _ in 0..(self.n + self.m) {
            power = power.mul(self);
            if power.coeffs.iter().all(|c| c.is_zero()) {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc)
    }
}

//! Poly-Bernoulli polynomials with `a, b` (and `c`) parameters.
//!
//! `B_n^{(k)}(x; a, b)` is defined by the explicit double sum in
//! [`gpb_explicit`]; every other construction here (scaling, both
//! recurrences, the Appell identities) is an independent route to the same
//! polynomial and is checked against it.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::binomial;
use crate::params::Params;
use crate::poly::Poly;
use crate::polybernoulli::{bernoulli_poly, explicit_sum, pb_poly};
use crate::scalar::Field;

fn require_log_ab<T: Field>(params: &Params<T>) -> Result<T> {
    let l = params.log_ab();
    if l.is_zero() {
        return Err(Error::InvalidParams("ln a + ln b must be non-zero".into()));
    }
    Ok(l)
}

fn binom<T: Field>(n: u32, k: u32) -> T {
    T::from_integer(&binomial(n as u64, k as i64))
}

/// `B_n^{(k)}(x; a, b) = Σ_m (m+1)^{-k} Σ_j (-1)^j C(m,j) (x - jα - (j+1)β)^n`.
pub fn gpb_explicit<T: Field>(n: u32, k: i64, params: &Params<T>) -> Poly<T> {
    let (a, b) = (params.alpha.clone(), params.beta.clone());
    explicit_sum(n, k, |j| T::from_i64(j as i64) * a.clone() + T::from_i64(j as i64 + 1) * b.clone())
}

/// `B_n^{(k)}(x; a, b, c)`: [`gpb_explicit`] at `γx`.
pub fn gpb_explicit_c<T: Field>(n: u32, k: i64, params: &Params<T>) -> Poly<T> {
    gpb_explicit(n, k, params).compose_affine(&params.gamma, &T::zero())
}

/// `L^n B_n^{(k)}((x - β)/L)` with `L = α + β`.
pub fn scale_from_classical<T: Field>(n: u32, k: i64, params: &Params<T>) -> Result<Poly<T>> {
    let l = require_log_ab(params)?;
    let inv = l.recip();
    Ok(pb_poly::<T>(n, k)
        .compose_affine(&inv, &(-params.beta.clone() * inv.clone()))
        .scale(&l.pow_u(n)))
}

/// A generalized poly-Bernoulli polynomial together with its indices.
#[derive(Debug, Clone, PartialEq)]
pub struct GpbPoly<T> {
    pub n: u32,
    pub k: i64,
    pub params: Params<T>,
    pub poly: Poly<T>,
}

impl<T: Field> GpbPoly<T> {
    pub fn explicit(n: u32, k: i64, params: &Params<T>) -> Self {
        GpbPoly { n, k, params: params.clone(), poly: gpb_explicit(n, k, params) }
    }

    /// Three-parameter variant, leading coefficient `γ^n`.
    pub fn explicit_c(n: u32, k: i64, params: &Params<T>) -> Self {
        GpbPoly { n, k, params: params.clone(), poly: gpb_explicit_c(n, k, params) }
    }

    pub fn eval(&self, x: &T) -> T {
        self.poly.eval(x)
    }
}

/// `B_n(x; a, b)` from the kernel `t e^{xt} / (b^t - a^t)`, given `ln a` and
/// `ln b`: `d^{n-1} B_n((x - ln a)/d)` with `d = ln b - ln a`.
pub fn gen_bernoulli_poly<T: Field>(n: u32, log_a: &T, log_b: &T) -> Result<Poly<T>> {
    let d = log_b.clone() - log_a.clone();
    if d.is_zero() {
        return Err(Error::InvalidParams("ln a = ln b makes b^t - a^t vanish identically".into()));
    }
    let inv = d.recip();
    Ok(bernoulli_poly::<T>(n)
        .compose_affine(&inv, &(-log_a.clone() * inv.clone()))
        .scale(&d.pow_i(n as i64 - 1)))
}

/// `B_n(x; a, b, c)` from the kernel `t c^{xt} / (b^t - a^t)`.
pub fn gen_bernoulli_poly_c<T: Field>(n: u32, log_a: &T, log_b: &T, log_c: &T) -> Result<Poly<T>> {
    Ok(gen_bernoulli_poly(n, log_a, log_b)?.compose_affine(log_c, &T::zero()))
}

/// Exponent of `-ln a` in the recurrence that expresses `B_n^{(k)}` through
/// `B^{(k-1)}` numbers and `B_l(x; a^{-1}, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentReading {
    /// `(-α)^{m-l}`: what the series rearrangement produces.
    Difference,
    /// `(-α)^{m+l}`.
    Sum,
}

/// `L Σ_m C(n,m) B_{n-m}^{(k-1)}(0;a,b) Σ_l (-α)^{e(m,l)} C(m,l) B_l(x; a^{-1}, b) / (n-l+1)`.
pub fn recurrence_i_with<T: Field>(
    n: u32,
    k: i64,
    params: &Params<T>,
    reading: ExponentReading,
) -> Result<Poly<T>> {
    let l_ab = require_log_ab(params)?;
    let neg_a = -params.alpha.clone();
    let inner: Vec<Poly<T>> =
        (0..=n).map(|l| gen_bernoulli_poly(l, &neg_a, &params.beta)).collect::<Result<_>>()?;
    let lower: Vec<T> = (0..=n).map(|i| gpb_explicit(i, k - 1, params).coeff(0)).collect();
    let mut acc = Poly::zero();
    for m in 0..=n {
        let outer = binom::<T>(n, m) * lower[(n - m) as usize].clone();
        for l in 0..=m {
            let e = match reading {
                ExponentReading::Difference => m - l,
                ExponentReading::Sum => m + l,
            };
            let c = outer.clone() * neg_a.pow_u(e) * binom::<T>(m, l) / T::from_i64((n - l + 1) as i64);
            acc = acc + inner[l as usize].scale(&c);
        }
    }
    Ok(acc.scale(&l_ab))
}

/// Recurrence I with the exponent that reproduces [`gpb_explicit`].
pub fn recurrence_i<T: Field>(n: u32, k: i64, params: &Params<T>) -> Result<Poly<T>> {
    recurrence_i_with(n, k, params, ExponentReading::Difference)
}

/// Which Bernoulli polynomial sits inside the classical (`a = e`, `b = 1`)
/// specialization of recurrence I.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerBernoulli {
    /// `B_l(x + 1)`, which is `B_l(x; e^{-1}, 1)`.
    Shifted,
    /// `B_l(x)`.
    Unshifted,
}

/// `Σ_m (-1)^m C(n,m) B_{n-m}^{(k-1)} Σ_l (-1)^l C(m,l) B_l(·) / (n-l+1)`.
pub fn classical_recurrence_i<T: Field>(n: u32, k: i64, inner: InnerBernoulli) -> Poly<T> {
    let shift = match inner {
        InnerBernoulli::Shifted => T::one(),
        InnerBernoulli::Unshifted => T::zero(),
    };
    let mut acc = Poly::zero();
    for m in 0..=n {
        let outer = binom::<T>(n, m) * pb_poly::<T>(n - m, k - 1).coeff(0);
        for l in 0..=m {
            let sign = if (m + l) % 2 == 1 { -T::one() } else { T::one() };
            let c = outer.clone() * sign * binom::<T>(m, l) / T::from_i64((n - l + 1) as i64);
            acc = acc + bernoulli_poly::<T>(l).compose_affine(&T::one(), &shift).scale(&c);
        }
    }
    acc
}

/// Form of the `n = 1` step of recurrence II.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearTermReading {
    /// `½ [B_1^{(k-1)}(x;a,b) + (x - β)]`, the scaled image of the classical step.
    Scaled,
    /// `½ [B_1^{(k-1)}(x;a,b) + (x - β)/L]`.
    Unscaled,
}

/// Recurrence II: `B_n^{(k)}` from `B_n^{(k-1)}` and `B_m^{(k)}`, `m < n`.
pub fn recurrence_ii_with<T: Field>(
    n: u32,
    k: i64,
    params: &Params<T>,
    reading: LinearTermReading,
) -> Result<Poly<T>> {
    let l = require_log_ab(params)?;
    let x_minus_b = Poly::new(vec![-params.beta.clone(), T::one()]);
    let half = T::from_i64(2).recip();
    match n {
        0 => Ok(Poly::one()),
        1 => {
            let lin = match reading {
                LinearTermReading::Scaled => x_minus_b,
                LinearTermReading::Unscaled => x_minus_b.scale(&l.recip()),
            };
            Ok((gpb_explicit(1, k - 1, params) + lin).scale(&half))
        }
        _ => {
            let mut acc = gpb_explicit(n, k - 1, params) + x_minus_b.scale(&l.pow_u(n - 1));
            for m in 1..n {
                let bm = gpb_explicit(m, k, params);
                let up = bm.scale(&(l.pow_u(n - m - 1) * binom::<T>(n, m))) * x_minus_b.clone();
                let down = bm.scale(&(l.pow_u(n - m) * binom::<T>(n, m - 1)));
                acc = acc + up - down;
            }
            Ok(acc.scale(&T::from_i64(n as i64 + 1).recip()))
        }
    }
}

pub fn recurrence_ii<T: Field>(n: u32, k: i64, params: &Params<T>) -> Result<Poly<T>> {
    recurrence_ii_with(n, k, params, LinearTermReading::Scaled)
}

/// `d/dx B_n^{(k)}(x; a, b)`; equals `n B_{n-1}^{(k)}(x; a, b)`.
pub fn appell_derivative<T: Field>(n: u32, k: i64, params: &Params<T>) -> Poly<T> {
    gpb_explicit(n, k, params).derivative()
}

/// `Σ_m C(n,m) B_m^{(k)}(x; a, b) y^{n-m}`, i.e. `B_n^{(k)}(x + y; a, b)`.
pub fn addition_formula<T: Field>(n: u32, k: i64, params: &Params<T>, y: &T) -> Poly<T> {
    (0..=n).fold(Poly::zero(), |acc, m| {
        acc + gpb_explicit(m, k, params).scale(&(binom::<T>(n, m) * y.pow_u(n - m)))
    })
}

/// `Σ_i C(n,i) B_i^{(k)}(x; a, b) (m-1)^{n-i} x^{n-i}`, i.e. `B_n^{(k)}(mx; a, b)`.
pub fn multiplication_theorem<T: Field>(n: u32, k: i64, params: &Params<T>, m: u32) -> Result<Poly<T>> {
    if m == 0 {
        return Err(Error::Domain("multiplication theorem needs m >= 1".into()));
    }
    let step = T::from_i64(m as i64 - 1);
    Ok((0..=n).fold(Poly::zero(), |acc, i| {
        let d = (n - i) as usize;
        acc + gpb_explicit(i, k, params) * Poly::monomial(binom::<T>(n, i) * step.pow_u(n - i), d)
    }))
}

/// `Σ_{j=1}^{m} j^n` as `[B_{n+1}(m+1; 1,b,b) - B_{n+1}(1; 1,b,b)] / ((n+1) (ln b)^n)`.
pub fn power_sum<T: Field>(m_top: u32, n: u32, log_b: &T) -> Result<T> {
    power_sum_from(m_top, n, log_b, T::one())
}

/// The same quotient with lower endpoint `0`, which counts `0^0 = 1` when
/// `n = 0`.
pub fn power_sum_from_zero<T: Field>(m_top: u32, n: u32, log_b: &T) -> Result<T> {
    power_sum_from(m_top, n, log_b, T::zero())
}

fn power_sum_from<T: Field>(m_top: u32, n: u32, log_b: &T, lower: T) -> Result<T> {
    if log_b.is_zero() {
        return Err(Error::InvalidParams("ln b must be non-zero".into()));
    }
    let p = gen_bernoulli_poly_c(n + 1, &T::zero(), log_b, log_b)?;
    let top = p.eval(&T::from_i64(m_top as i64 + 1));
    Ok((top - p.eval(&lower)) / (T::from_i64(n as i64 + 1) * log_b.pow_u(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyseries::{gf_kernel, Series};
    use crate::scalar::{rat, ratio, Rat, Ring};

    fn sample_params() -> Vec<Params<Rat>> {
        vec![
            Params::new(ratio(1, 3), ratio(5, 7)).unwrap(),
            Params::new(ratio(-2, 5), ratio(3, 4)).unwrap(),
            Params::new(rat(2), ratio(-1, 2)).unwrap(),
            Params::new(ratio(7, 3), rat(0)).unwrap(),
            Params::with_gamma(ratio(1, 2), ratio(1, 2), ratio(-3, 2)).unwrap(),
        ]
    }

    fn lin(c0: Rat, c1: Rat) -> Poly<Rat> {
        Poly::new(vec![c0, c1])
    }

    #[test]
    fn explicit_examples() {
        for p in sample_params() {
            for k in -3..=4 {
                assert_eq!(gpb_explicit(0, k, &p), Poly::one());
                let want = lin(
                    -p.beta.clone() + p.log_ab() * Rat::from_integer(2.into()).pow_i(-k),
                    rat(1),
                );
                assert_eq!(gpb_explicit(1, k, &p), want);
                assert_eq!(gpb_explicit_c(1, k, &p), want.compose_affine(&p.gamma, &rat(0)));
            }
        }
        let c = Params::<Rat>::classical();
        for n in 0..=6 {
            for k in -3..=3 {
                assert_eq!(gpb_explicit(n, k, &c), pb_poly::<Rat>(n, k));
                assert_eq!(gpb_explicit_c(n, k, &c), pb_poly::<Rat>(n, k));
            }
        }
    }

    #[test]
    fn scaling_examples() {
        let c = Params::<Rat>::classical();
        assert_eq!(scale_from_classical(4, 2, &c).unwrap(), pb_poly::<Rat>(4, 2));
        let p = Params::new(rat(1), rat(1)).unwrap();
        assert_eq!(scale_from_classical(1, 1, &p).unwrap(), Poly::x());
        let bad = Params { alpha: rat(1), beta: rat(-1), gamma: rat(1) };
        assert!(matches!(scale_from_classical(1, 1, &bad), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn explicit_equals_scaling() {
        for p in sample_params() {
            for n in 0..=8 {
                for k in -3..=4 {
                    assert_eq!(gpb_explicit(n, k, &p), scale_from_classical(n, k, &p).unwrap());
                }
            }
        }
    }

    #[test]
    fn degree_and_leading_coefficient() {
        for p in sample_params() {
            for n in 0..=6 {
                let g = GpbPoly::explicit(n, 2, &p);
                assert_eq!(g.poly.degree(), Some(n as usize));
                assert_eq!(g.poly.leading(), rat(1));
                let gc = GpbPoly::explicit_c(n, -1, &p);
                assert_eq!(gc.poly.leading(), p.gamma.pow_u(n));
            }
        }
    }

    #[test]
    fn gf_oracle_matches_explicit() {
        for p in sample_params() {
            for k in -3..=3 {
                for x in [rat(0), ratio(5, 3)] {
                    let vals = gf_kernel(k, &p, &x, 8).unwrap().egf_values();
                    for (n, v) in vals.iter().enumerate() {
                        assert_eq!(&gpb_explicit(n as u32, k, &p).eval(&x), v, "n={n} k={k}");
                    }
                }
            }
        }
    }

    fn gen_bernoulli_series(log_a: &Rat, log_b: &Rat, x: &Rat, order: usize) -> Series<Rat> {
        let n = order + 1;
        let t = Series::<Rat>::t(n);
        let den = Series::exp(log_b, n).sub(&Series::exp(log_a, n));
        t.mul(&Series::exp(x, n)).div(&den).unwrap().truncate(order)
    }

    #[test]
    fn gen_bernoulli_examples() {
        for (la, lb) in [(rat(0), rat(1)), (ratio(2, 3), ratio(-1, 4)), (rat(-1), rat(0))] {
            let d = lb.clone() - la.clone();
            assert_eq!(gen_bernoulli_poly(0, &la, &lb).unwrap(), Poly::constant(d.recip()));
            for x in [rat(0), ratio(7, 5)] {
                let vals = gen_bernoulli_series(&la, &lb, &x, 6).egf_values();
                for (n, v) in vals.iter().enumerate() {
                    assert_eq!(&gen_bernoulli_poly(n as u32, &la, &lb).unwrap().eval(&x), v);
                }
            }
        }
        assert_eq!(gen_bernoulli_poly(1, &rat(0), &rat(1)).unwrap(), lin(ratio(-1, 2), rat(1)));
        assert!(gen_bernoulli_poly(2, &ratio(1, 2), &ratio(1, 2)).is_err());
    }

    #[test]
    fn recurrence_i_exponent_resolution() {
        for p in sample_params() {
            for n in 0..=6 {
                for k in -3..=4 {
                    let e = gpb_explicit(n, k, &p);
                    assert_eq!(recurrence_i(n, k, &p).unwrap(), e, "n={n} k={k}");
                    let summed = recurrence_i_with(n, k, &p, ExponentReading::Sum).unwrap();
                    // The two readings only coincide when every m - l and m + l agree.
                    if n >= 2 {
                        assert_ne!(summed, e, "n={n} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn classical_recurrence_i_needs_shift() {
        let c = Params::<Rat>::classical();
        for n in 0..=6 {
            for k in 1..=4 {
                let pb = pb_poly::<Rat>(n, k);
                assert_eq!(classical_recurrence_i::<Rat>(n, k, InnerBernoulli::Shifted), pb);
                assert_eq!(recurrence_i(n, k, &c).unwrap(), pb);
                if n >= 1 {
                    assert_ne!(classical_recurrence_i::<Rat>(n, k, InnerBernoulli::Unshifted), pb);
                }
            }
        }
        for l in 0..=6 {
            assert_eq!(
                gen_bernoulli_poly(l, &rat(-1), &rat(0)).unwrap(),
                bernoulli_poly::<Rat>(l).compose_affine(&rat(1), &rat(1))
            );
        }
    }

    #[test]
    fn recurrence_ii_grid() {
        for p in sample_params() {
            for n in 0..=8 {
                for k in -3..=4 {
                    assert_eq!(recurrence_ii(n, k, &p).unwrap(), gpb_explicit(n, k, &p), "n={n} k={k}");
                }
            }
            let unscaled = recurrence_ii_with(1, 2, &p, LinearTermReading::Unscaled).unwrap();
            assert_eq!(unscaled == gpb_explicit(1, 2, &p), p.log_ab() == rat(1));
        }
        let c = Params::<Rat>::classical();
        for k in -2..=3 {
            let want = (pb_poly::<Rat>(1, k - 1) + Poly::x()).scale(&ratio(1, 2));
            assert_eq!(recurrence_ii(1, k, &c).unwrap(), want);
        }
    }

    #[test]
    fn appell_chain() {
        for p in sample_params() {
            assert!(appell_derivative(0, 3, &p).coeffs().is_empty());
            assert_eq!(appell_derivative(1, 3, &p), Poly::one());
            for n in 1..=10 {
                for k in [-2, 2] {
                    let d = appell_derivative(n, k, &p);
                    assert_eq!(d, gpb_explicit(n - 1, k, &p).scale(&rat(n as i64)));
                    // Pairing with B_n instead of B_{n-1} fails once the degree is positive.
                    assert_ne!(d, gpb_explicit(n, k, &p).scale(&rat(n as i64)));
                }
            }
        }
    }

    #[test]
    fn addition_and_multiplication() {
        for p in sample_params() {
            for n in 0..=6 {
                for k in [-3, 0, 2] {
                    let g = gpb_explicit(n, k, &p);
                    assert_eq!(addition_formula(n, k, &p, &rat(0)), g);
                    for y in [rat(1), ratio(-5, 2)] {
                        assert_eq!(addition_formula(n, k, &p, &y), g.compose_affine(&rat(1), &y));
                    }
                    for m in 1..=4u32 {
                        assert_eq!(
                            multiplication_theorem(n, k, &p, m).unwrap(),
                            g.compose_affine(&rat(m as i64), &rat(0))
                        );
                    }
                }
            }
        }
        // Expansion about x = 0 uses the numbers B_m^{(k)}(0; a, b).
        let p = &sample_params()[0];
        let x = ratio(2, 9);
        let direct: Rat = (0..=4u32)
            .map(|m| binom::<Rat>(4, m) * gpb_explicit(m, 3, p).coeff(0) * x.pow_u(4 - m))
            .sum();
        assert_eq!(direct, gpb_explicit(4, 3, p).eval(&x));
        assert!(multiplication_theorem(2, 1, p, 0).is_err());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, 0, &rat(1)).unwrap(), rat(1));
        assert_eq!(power_sum(3, 2, &rat(1)).unwrap(), rat(14));
        assert_eq!(power_sum(10, 3, &ratio(1, 2)).unwrap(), rat(3025));
        assert!(power_sum(3, 1, &rat(0)).is_err());
        for lb in [rat(1), ratio(1, 2), rat(-2)] {
            for m in 1..=20u32 {
                for n in 0..=6u32 {
                    let direct: Rat = (1..=m as i64).map(|j| rat(j).pow_u(n)).sum();
                    assert_eq!(power_sum(m, n, &lb).unwrap(), direct);
                    let from_zero = power_sum_from_zero(m, n, &lb).unwrap();
                    let off = if n == 0 { rat(1) } else { rat(0) };
                    assert_eq!(from_zero, direct + off);
                }
            }
        }
    }

    #[test]
    fn float_instantiation() {
        let p = Params::new(0.25f64, 0.5).unwrap();
        let pe = Params::new(ratio(1, 4), ratio(1, 2)).unwrap();
        let f = gpb_explicit(4, 2, &p);
        let e = gpb_explicit(4, 2, &pe);
        for (a, b) in e.coeffs().iter().zip(f.coeffs()) {
            assert!((crate::scalar::rat_to_f64(a) - b).abs() < 1e-12);
        }
    }
}

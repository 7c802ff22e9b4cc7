//! Tanh-sinh and Gauss-Legendre quadrature over [`Real`].

use crate::error::{Error, Result};
use super::real::Real;

/// Integral estimate with its absolute error estimate.
#[derive(Debug, Clone)]
pub struct Quadrature<R> {
    pub value: R,
    pub error: R,
    pub evaluations: usize,
}

const MAX_LEVEL: u32 = 12;
const U_CAP: f64 = 8.0;

/// `∫_a^b f` by the tanh-sinh rule.
///
/// Nodes are `a + (b-a) σ(2y)`, `y = (π/2) sinh u`, with `σ` the logistic
/// function, so points near `a` are formed without cancellation. `f`
/// receives the node and its distance to `a`. Levels halve the step until
/// two successive estimates differ by at most `tol_abs`.
pub fn tanh_sinh<R: Real>(
    f: impl Fn(&R, &R) -> R,
    a: &R,
    b: &R,
    tol_abs: &R,
    prec: usize,
) -> Result<Quadrature<R>> {
    let width = b.clone() - a.clone();
    let half_pi = R::pi(prec) / R::from_i64(2, prec);
    let one = R::one(prec);
    let two = R::from_i64(2, prec);
    let negligible = tol_abs.log2_abs() - 8.0;
    let mut evaluations = 0usize;

    // Weighted integrand at `u`; `None` once the node or the weighted value
    // has vanished.
    let term = |u: f64, evaluations: &mut usize| -> Option<R> {
        let eu = R::from_f64(u, prec).exp();
        let sinh = (eu.clone() - eu.recip()) / two.clone();
        let cosh = (eu.clone() + eu.recip()) / two.clone();
        let e = (-(two.clone() * half_pi.clone() * sinh)).exp();
        let sig = one.clone() / (one.clone() + e.clone());
        let sig_neg = e.clone() / (one.clone() + e);
        if !(sig.log2_abs().is_finite() && sig_neg.log2_abs().is_finite()) {
            return None;
        }
        let w = two.clone() * sig.clone() * sig_neg * half_pi.clone() * cosh * width.clone();
        let offset = width.clone() * sig;
        let x = a.clone() + offset.clone();
        *evaluations += 1;
        let t = w * f(&x, &offset);
        let mag = t.log2_abs();
        if mag.is_nan() || mag < negligible {
            return None;
        }
        Some(t)
    };

    // Walks outward from `first` in steps of `stride` on both sides.
    let sweep = |first: f64, stride: f64, evaluations: &mut usize| -> R {
        let mut acc = R::zero(prec);
        for dir in [1.0, -1.0] {
            let mut u = first;
            while u <= U_CAP {
                match term(dir * u, evaluations) {
                    Some(t) => acc = acc + t,
                    None if u >= 1.0 => break,
                    None => {}
                }
                u += stride;
            }
        }
        acc
    };

    let mut sum = term(0.0, &mut evaluations).unwrap_or_else(|| R::zero(prec));
    sum = sum + sweep(1.0, 1.0, &mut evaluations);
    let mut h = 1.0f64;
    let mut estimate = sum.clone();
    let mut last_diff = f64::INFINITY;
    for _level in 1..=MAX_LEVEL {
        h /= 2.0;
        sum = sum + sweep(h, 2.0 * h, &mut evaluations);
        let next = sum.clone() * R::from_f64(h, prec);
        let diff = (next.clone() - estimate.clone()).abs();
        estimate = next;
        if diff <= *tol_abs {
            return Ok(Quadrature { value: estimate, error: diff, evaluations });
        }
        last_diff = diff.to_f64();
    }
    Err(Error::ToleranceNotMet { achieved: last_diff, wanted: tol_abs.to_f64() })
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, refined by Newton
/// iteration at precision `prec`.
pub fn gauss_legendre_nodes<R: Real>(n: usize, prec: usize) -> Vec<(R, R)> {
    let one = R::one(prec);
    let two = R::from_i64(2, prec);
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = R::from_f64(guess, prec);
        let mut dp = one.clone();
        for _ in 0..100 {
            let (p, d) = legendre(n, &x, prec);
            dp = d.clone();
            let dx = p / d;
            x = x - dx.clone();
            if dx.log2_abs() < -(prec as f64) + 2.0 {
                let (_, d) = legendre(n, &x, prec);
                dp = d;
                break;
            }
        }
        let w = two.clone() / ((one.clone() - x.clone() * x.clone()) * dp.clone() * dp);
        out.push((x, w));
    }
    out
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre<R: Real>(n: usize, x: &R, prec: usize) -> (R, R) {
    let one = R::one(prec);
    let mut p0 = one.clone();
    let mut p1 = x.clone();
    for j in 2..=n {
        let jj = R::from_i64(j as i64, prec);
        let p2 = (R::from_i64(2 * j as i64 - 1, prec) * x.clone() * p1.clone()
            - R::from_i64(j as i64 - 1, prec) * p0.clone())
            / jj;
        p0 = p1;
        p1 = p2;
    }
    let d = R::from_i64(n as i64, prec) * (x.clone() * p1.clone() - p0) / (x.clone() * x.clone() - one);
    (p1, d)
}

/// `∫_a^b f` by Gauss-Legendre with doubling node counts, starting at
/// `n0`, until successive rules differ by at most `tol_abs`. `f` returns
/// a value and its own absolute error, which is propagated.
pub fn gauss_legendre<R: Real>(
    f: impl Fn(&R) -> Result<(R, R)>,
    a: &R,
    b: &R,
    n0: usize,
    max_nodes: usize,
    tol_abs: &R,
    prec: usize,
) -> Result<Quadrature<R>> {
    let two = R::from_i64(2, prec);
    let mid = (a.clone() + b.clone()) / two.clone();
    let half = (b.clone() - a.clone()) / two;
    let mut evaluations = 0usize;
    let rule = |n: usize, evaluations: &mut usize| -> Result<(R, R)> {
        let mut acc = R::zero(prec);
        let mut err = R::zero(prec);
        for (x, w) in gauss_legendre_nodes::<R>(n, prec) {
            let (v, e) = f(&(mid.clone() + half.clone() * x))?;
            *evaluations += 1;
            err = err + w.abs() * e;
            acc = acc + w * v;
        }
        Ok((acc * half.clone(), err * half.abs()))
    };
    let mut n = n0.max(2);
    let (mut prev, _) = rule(n, &mut evaluations)?;
    let mut last_diff = f64::INFINITY;
    while 2 * n <= max_nodes {
        n *= 2;
        let (cur, err) = rule(n, &mut evaluations)?;
        let diff = (cur.clone() - prev.clone()).abs();
        if diff <= *tol_abs {
            return Ok(Quadrature { value: cur, error: diff + err, evaluations });
        }
        last_diff = diff.to_f64();
        prev = cur;
    }
    Err(Error::ToleranceNotMet { achieved: last_diff, wanted: tol_abs.to_f64() })
}

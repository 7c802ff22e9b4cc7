//! Γ, Hurwitz ζ at real arguments, and `Li_k(z)/z` on `[0, 1]`, generic
//! over [`Real`].
//!
//! Γ uses the Stirling series after shifting the argument upward, ζ uses
//! Euler-Maclaurin summation; both draw their Bernoulli numbers from the
//! exact table. Precision targets are the operands' precision.

use crate::polybernoulli::bernoulli_at;
use crate::scalar::Rat;

use super::real::Real;

fn bern<R: Real>(i: usize, prec: usize) -> R {
    R::from_rat(&bernoulli_at(i), prec)
}

/// `ln Γ(z)` for `z > 0`.
pub fn ln_gamma<R: Real>(z: &R) -> R {
    let prec = z.precision();
    let target = -(prec as f64) - 4.0;
    let shift = (prec / 4).max(10);
    // ln Γ(z) = ln Γ(z + N) - ln(z (z+1) ... (z+N-1))
    let mut prod = R::one(prec);
    let mut w = z.clone();
    for _ in 0..shift {
        prod = prod * w.clone();
        w = w + R::one(prec);
    }
    let half = R::from_rat(&Rat::new(1.into(), 2.into()), prec);
    let two_pi = R::pi(prec) * R::from_i64(2, prec);
    let mut acc = (w.clone() - half.clone()) * w.ln() - w.clone() + half * two_pi.ln();
    let w2 = w.clone() * w.clone();
    let mut wpow = w.clone();
    let max_j = 2 * shift;
    for j in 1..=max_j {
        let denom = R::from_i64((2 * j * (2 * j - 1)) as i64, prec) * wpow.clone();
        let term = bern::<R>(2 * j, prec) / denom;
        let small = term.log2_abs() < target + acc.log2_abs().max(0.0);
        acc = acc + term;
        if small {
            break;
        }
        wpow = wpow * w2.clone();
    }
    acc - prod.ln()
}

/// `Γ(z)` for `z > 0`.
pub fn gamma<R: Real>(z: &R) -> R {
    ln_gamma(z).exp()
}

/// `ζ(s, q) = Σ_{n≥0} (n+q)^{-s}` for `s > 1`, `q > 0`.
pub fn hurwitz<R: Real>(s: &R, q: &R) -> R {
    let prec = s.precision().max(q.precision());
    let target = -(prec as f64) - 4.0;
    let one = R::one(prec);
    let n_direct = (prec / 4).max(10) + s.to_f64().abs().ceil() as usize;
    let mut acc = R::zero(prec);
    for n in 0..n_direct {
        acc = acc + (q.clone() + R::from_i64(n as i64, prec)).powf(&-s.clone());
    }
    let a = q.clone() + R::from_i64(n_direct as i64, prec);
    let a_pow = a.powf(&-s.clone());
    acc = acc + a_pow.clone() * a.clone() / (s.clone() - one.clone());
    acc = acc + a_pow.clone() / R::from_i64(2, prec);
    // Σ_j B_{2j}/(2j)! · s(s+1)...(s+2j-2) · a^{-s-2j+1}
    let max_j = 2 * n_direct;
    let a2 = a.clone() * a.clone();
    let mut rising = s.clone();
    let mut fact = R::from_i64(2, prec);
    let mut apow = a_pow / a.clone();
    for j in 1..=max_j {
        let term = bern::<R>(2 * j, prec) / fact.clone() * rising.clone() * apow.clone();
        let small = term.log2_abs() < target + acc.log2_abs().max(0.0);
        acc = acc + term;
        if small {
            break;
        }
        let jj = 2 * j as i64;
        rising = rising * (s.clone() + R::from_i64(jj - 1, prec)) * (s.clone() + R::from_i64(jj, prec));
        fact = fact * R::from_i64((jj + 1) * (jj + 2), prec);
        apow = apow / a2.clone();
    }
    acc
}

/// `ζ(n)` at an integer `n ≠ 1`; exact Bernoulli values for `n ≤ 0`.
pub fn zeta_int<R: Real>(n: i64, prec: usize) -> R {
    if n <= 0 {
        let m = (-n) as usize;
        let v = bernoulli_at(m + 1) / Rat::from_integer((m as i64 + 1).into());
        let v = if m % 2 == 1 { -v } else { v };
        return R::from_rat(&v, prec);
    }
    assert!(n >= 2, "ζ has a pole at 1");
    hurwitz(&R::from_i64(n, prec), &R::one(prec))
}

/// `Li_k(z)/z` for `0 ≤ z ≤ 1` and a fixed `k ≥ 1`.
///
/// Small `z` use the defining series directly. Above `1/2` the expansion in
/// `μ = ln z` is used:
/// `Li_k(z) = Σ_{j≠k-1} ζ(k-j) μ^j/j! + μ^{k-1}/(k-1)! (H_{k-1} - ln(-μ))`.
#[derive(Debug, Clone)]
pub struct PolylogRatio<R> {
    k: i64,
    prec: usize,
    /// `ζ(k-j)/j!` for `j ≠ k-1`, zero at `j = k-1`.
    coeffs: Vec<R>,
    harmonic: R,
    inv_fact_k1: R,
}

impl<R: Real> PolylogRatio<R> {
    pub fn new(k: i64, prec: usize) -> Self {
        assert!(k >= 1, "numeric polylogarithm needs k >= 1");
        // |μ| ≤ ln 2 and ζ(-m)/m! decays like (2π)^{-m}, so each term gains
        // about log2(2π/ln 2) ≈ 3.18 bits.
        let n_terms = ((prec as f64 + 8.0) / 3.18).ceil() as usize + k as usize + 4;
        let mut coeffs = Vec::with_capacity(n_terms);
        let mut fact = R::one(prec);
        for j in 0..n_terms {
            if j > 0 {
                fact = fact * R::from_i64(j as i64, prec);
            }
            let c = if j as i64 == k - 1 {
                R::zero(prec)
            } else {
                zeta_int::<R>(k - j as i64, prec) / fact.clone()
            };
            coeffs.push(c);
        }
        let harmonic = (1..k).fold(R::zero(prec), |h, i| h + R::from_i64(i, prec).recip());
        let inv_fact_k1 = (1..k).fold(R::one(prec), |f, i| f * R::from_i64(i, prec)).recip();
        PolylogRatio { k, prec, coeffs, harmonic, inv_fact_k1 }
    }

    /// `Li_k(z)/z`; `log_one_minus_z = -ln(1 - z)` is needed only for `k = 1`.
    pub fn eval(&self, z: &R, neg_log_one_minus_z: &R) -> R {
        let prec = self.prec;
        let half = R::from_rat(&Rat::new(1.into(), 2.into()), prec);
        if *z <= half {
            let target = -(prec as f64) - 4.0;
            let mut acc = R::zero(prec);
            let mut zp = R::one(prec);
            let mut n = 1i64;
            loop {
                let term = zp.clone() / R::from_i64(n, prec).powi(self.k as u32);
                acc = acc + term.clone();
                if term.log2_abs() < target || n > 4 * prec as i64 {
                    return acc;
                }
                zp = zp * z.clone();
                n += 1;
            }
        }
        if self.k == 1 {
            return neg_log_one_minus_z.clone() / z.clone();
        }
        let mu = z.ln();
        if mu.log2_abs() == f64::NEG_INFINITY {
            return self.coeffs[0].clone();
        }
        let mut acc = R::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc * mu.clone() + c.clone();
        }
        let mu_k1 = mu.powi((self.k - 1) as u32);
        acc = acc + mu_k1 * self.inv_fact_k1.clone() * (self.harmonic.clone() - (-mu).ln());
        acc / z.clone()
    }
}

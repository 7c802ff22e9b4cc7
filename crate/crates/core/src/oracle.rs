//! Independent double-precision reference values, sharing no code with the
//! exact or arbitrary-precision kernels.

/// `B_2, B_4, ..., B_20`.
const EVEN_BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Hurwitz `ζ(s, q)` for `s > 1`, `q > 0`: thirty direct terms, then
/// Euler-Maclaurin with ten correction terms.
pub fn hurwitz(s: f64, q: f64) -> f64 {
    const DIRECT: usize = 30;
    let mut acc: f64 = (0..DIRECT).map(|n| (q + n as f64).powf(-s)).sum();
    let a = q + DIRECT as f64;
    acc += a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    let mut rising = s;
    let mut fact = 2.0;
    let mut apow = a.powf(-s - 1.0);
    for (i, b) in EVEN_BERNOULLI.iter().enumerate() {
        acc += b / fact * rising * apow;
        let j = 2.0 * (i as f64 + 1.0);
        rising *= (s + j - 1.0) * (s + j);
        fact *= (j + 1.0) * (j + 2.0);
        apow /= a * a;
    }
    acc
}

/// `ξ_1(s, x; a, b) = L^{-s} s ζ(s + 1, (x + ln b)/L)` with `L = ln a + ln b`.
pub fn xi_k1(s: f64, x: f64, alpha: f64, beta: f64) -> f64 {
    let l = alpha + beta;
    l.powf(-s) * s * hurwitz(s + 1.0, (x + beta) / l)
}

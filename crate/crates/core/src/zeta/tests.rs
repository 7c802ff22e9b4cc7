use super::*;
use crate::oracle;
use crate::scalar::{rat, ratio};

fn params(alpha: Rat, beta: Rat) -> Params {
    Params::new(alpha, beta).unwrap()
}

fn query(k: i64, s: Rat, x: Rat, alpha: Rat, beta: Rat, p: usize) -> ZetaQuery {
    ZetaQuery::new(k, s, x, params(alpha, beta), p)
}

#[test]
fn exact_mode_small_orders() {
    let pr = params(ratio(2, 3), ratio(1, 5));
    let x = ratio(7, 3);
    assert_eq!(xi_exact_neg(3, 0, &pr, &x), rat(1));
    for k in -2..=3 {
        let want = x.clone() + pr.beta.clone() - pr.log_ab() * inverse_power(2, k);
        assert_eq!(xi_exact_neg(k, 1, &pr, &x), want);
    }
}

#[test]
fn exact_mode_interpolates_polynomials() {
    let pr = params(ratio(-3, 4), ratio(5, 2));
    for k in -3..=4 {
        for n in 0..=6 {
            let x = ratio(7, 3);
            assert_eq!(xi_exact_neg(k, n, &pr, &x), interpolated_value(k, n, &pr, &x), "k={k} n={n}");
        }
    }
}

#[test]
fn classical_exact_value() {
    let pr = Params::classical();
    // (−1)^2 B_2^{(1)}(−1) with B_2^{(1)}(x) = x^2 + 2x + 1/6 ... via the polynomial
    let want = gpb_explicit(2, 1, &pr).eval(&rat(-1));
    assert_eq!(xi_exact_neg(1, 2, &pr, &rat(1)), want);
}

#[test]
fn difference_identity_exact() {
    let pr = params(ratio(1, 3), ratio(-5, 7));
    for k in -2..=3 {
        for n in 0..=5 {
            let (lhs, rhs) = difference_exact(k, n, &pr, &ratio(3, 4));
            assert_eq!(lhs, rhs, "k={k} n={n}");
        }
    }
}

#[test]
fn raabe_polynomial_identity() {
    let pr = params(ratio(3, 2), ratio(-1, 4));
    let (lhs, rhs) = raabe_poly(0, 2, &pr, &ratio(1, 9));
    assert_eq!(lhs, pr.log_ab());
    assert_eq!(rhs, pr.log_ab());
    for k in -3..=3 {
        for n in 0..=5 {
            let (lhs, rhs) = raabe_poly(n, k, &pr, &ratio(5, 2));
            assert_eq!(lhs, rhs, "k={k} n={n}");
        }
    }
    let (lhs, rhs) = raabe_poly(1, 1, &Params::classical(), &rat(0));
    assert_eq!(lhs, rhs);
}

#[test]
fn k1_matches_hurwitz_oracle() {
    // shift chosen so the series converges in a few dozen terms
    let q = query(1, ratio(3, 2), ratio(59, 2), ratio(1, 2), ratio(1, 2), 64);
    let want = oracle::xi_k1(1.5, 29.5, 0.5, 0.5);
    for v in [xi_series(&q).unwrap(), xi_reduced(&q).unwrap(), xi_quadrature(&q).unwrap()] {
        assert!((v.value.to_f64() - want).abs() <= 1e-12 * want, "{} vs {want}", v.value);
    }
}

#[test]
fn classical_k1_at_low_precision() {
    // 2 ζ(3, 3/2); convergence is algebraic at this shift
    let q = query(1, rat(2), ratio(3, 2), rat(1), rat(0), 16);
    let want = 2.0 * oracle::hurwitz(3.0, 1.5);
    let v = xi_reduced(&q).unwrap();
    assert!((v.value.to_f64() - want).abs() <= 1e-4 * want);
    assert!((v.value.to_f64() - want).abs() <= v.error.to_f64());
}

#[test]
fn quadrature_classical_k1() {
    let q = query(1, rat(1), rat(2), rat(1), rat(0), 64);
    let v = xi_quadrature(&q).unwrap();
    let want = std::f64::consts::PI.powi(2) / 6.0 - 1.0;
    assert!((v.value.to_f64() - want).abs() < 1e-15);
    assert!(v.error.to_f64() < 1e-18);
}

#[test]
fn quadrature_matches_series_small_shift() {
    let q = query(2, ratio(3, 2), ratio(5, 2), ratio(1, 3), ratio(2, 3), 24);
    let a = xi_series(&q).unwrap();
    let b = xi_quadrature(&q).unwrap();
    assert!(a.relative_gap(&b) < 1e-6, "{} vs {}", a.value, b.value);
    let q = query(2, rat(1), rat(1), ratio(1, 2), ratio(1, 2), 16);
    let a = xi_series(&q).unwrap();
    let b = xi_quadrature(&q).unwrap();
    assert!(a.relative_gap(&b) < 1e-4);
}

#[test]
fn numeric_triangle_at_128_bits() {
    let q = query(2, ratio(5, 2), ratio(147, 4), ratio(1, 2), ratio(3, 4), 128);
    let a = xi_series(&q).unwrap();
    let b = xi_reduced(&q).unwrap();
    let c = xi_quadrature(&q).unwrap();
    assert!(a.relative_gap(&b) < 1e-30);
    assert!(a.relative_gap(&c) < 1e-30, "{} vs {}", a.value, c.value);
    assert!(a.agrees_with(&b, 4.0));
    assert!(a.agrees_with(&c, 4.0));
}

#[test]
fn doubling_precision_shrinks_error() {
    let q = query(3, ratio(1, 2), rat(40), rat(1), ratio(1, 3), 64);
    let lo = xi_series(&q).unwrap();
    let hi = xi_series(&ZetaQuery { precision: 128, ..q }).unwrap();
    assert!(hi.error <= lo.error);
    assert!(lo.agrees_with(&hi, 1.0));
}

#[test]
fn difference_identity_numeric() {
    let q = query(2, rat(2), rat(30), ratio(1, 2), ratio(1, 2), 96);
    let (lhs, rhs) = difference_numeric(&q).unwrap();
    assert!(lhs.relative_gap(&rhs) < 1e-20, "{} vs {}", lhs.value, rhs.value);
}

#[test]
fn raabe_identity_numeric() {
    for (k, s, x, alpha, beta) in [
        (1, rat(3), rat(30), ratio(1, 2), ratio(1, 2)),
        (2, ratio(5, 2), rat(40), ratio(1, 4), ratio(3, 4)),
        (1, rat(3), rat(2), ratio(1, 16), ratio(1, 16)),
    ] {
        let q = query(k, s, x, alpha, beta, 64);
        let (lhs, rhs) = raabe_numeric(&q).unwrap();
        assert!(lhs.relative_gap(&rhs) < 1e-8, "{} vs {}", lhs.value, rhs.value);
    }
}

#[test]
fn domain_errors() {
    let good = query(1, rat(2), rat(1), rat(1), rat(1), 32);
    assert!(matches!(xi_series(&ZetaQuery { k: 0, ..good.clone() }), Err(Error::Domain(_))));
    assert!(matches!(xi_series(&ZetaQuery { s: rat(0), ..good.clone() }), Err(Error::Domain(_))));
    assert!(matches!(xi_series(&ZetaQuery { x: rat(-1), ..good.clone() }), Err(Error::Domain(_))));
    assert!(matches!(xi_series(&ZetaQuery { precision: 5000, ..good.clone() }), Err(Error::SizeGuard(_))));
    let no_beta = query(1, rat(2), rat(30), rat(1), rat(0), 32);
    assert!(matches!(xi_series(&no_beta), Err(Error::Domain(_))));
    assert!(xi_reduced(&no_beta).is_ok());
    assert!(matches!(raabe_numeric(&ZetaQuery { s: rat(1), ..good.clone() }), Err(Error::Domain(_))));
}

#[test]
fn budget_exhaustion_reports_nonconvergence() {
    let q = ZetaQuery { max_terms: 100, ..query(1, rat(1), ratio(1, 10), ratio(1, 2), ratio(1, 2), 128) };
    match xi_series(&q) {
        Err(Error::NonConvergence { terms, estimate }) => {
            assert_eq!(terms, 100);
            assert!(estimate > 0.0);
        }
        other => panic!("expected non-convergence, got {other:?}"),
    }
}

#[test]
fn dispatch_by_sign_of_s() {
    let q = query(1, rat(-2), rat(1), rat(1), rat(0), 64);
    match evaluate(&q).unwrap() {
        ZetaValue::Exact(v) => assert_eq!(v, gpb_explicit(2, 1, &Params::classical()).eval(&rat(-1))),
        other => panic!("expected exact value, got {other:?}"),
    }
    let q = query(1, rat(2), rat(30), ratio(1, 2), ratio(1, 2), 64);
    assert!(matches!(evaluate(&q).unwrap(), ZetaValue::Numeric(_)));
}

#[test]
fn term_estimate_tracks_shift() {
    let far = query(1, rat(2), rat(30), ratio(1, 2), ratio(1, 2), 64);
    let near = far.at(rat(2));
    assert!(far.series_terms_estimate() < 10.0);
    assert!(near.series_terms_estimate() > DEFAULT_MAX_TERMS as f64);
    let used = xi_series(&far).unwrap().terms as f64;
    assert!(used <= 16.0 * far.series_terms_estimate().max(1.0));
}

use approx::assert_abs_diff_eq;
use fuzzy_core::numerics::{gauss_legendre, sym_tridiag_eigen};
use fuzzy_core::specfun::{
    hyp2f1_terminating, jacobi_norm_sq, jacobi_poly, pochhammer, product_formula_closed, product_formula_f,
    summation_suite, toeplitz_closed_form, JacobiParams,
};
use fuzzy_core::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn binom(n: f64, k: u32) -> f64 {
    (0..k).map(|i| (n - i as f64) / (i as f64 + 1.0)).product()
}

/// Explicit finite-sum form of the Jacobi polynomial.
fn jacobi_explicit(n: u32, a: u32, b: u32, x: f64) -> f64 {
    (0..=n)
        .map(|s| {
            binom((n + a) as f64, n - s)
                * binom((n + b) as f64, s)
                * ((x - 1.0) / 2.0).powi(s as i32)
                * ((x + 1.0) / 2.0).powi((n - s) as i32)
        })
        .sum()
}

proptest! {
    #[test]
    fn jacobi_matches_explicit_sum(n in 0u32..12, a in 0u32..6, b in 0u32..6, x in -1.0..1.0f64) {
        let got = jacobi_poly(JacobiParams { n: n as usize, alpha: a, beta: b, x });
        let want = jacobi_explicit(n, a, b, x);
        prop_assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0));
    }

    #[test]
    fn jacobi_through_hypergeometric(n in 0usize..10, a in 0u32..5, b in 0u32..5, x in -1.0..1.0f64) {
        let f = hyp2f1_terminating(n, (n as u32 + a + b + 1) as f64, a as f64 + 1.0, (1.0 - x) / 2.0).unwrap();
        let want = binom((n as u32 + a) as f64, n as u32) * f;
        let got = jacobi_poly(JacobiParams { n, alpha: a, beta: b, x });
        // the series alternates for x < 1; its absolute-term sum sets the attainable accuracy
        let terms = binom((n as u32 + a) as f64, n as u32)
            * hyp2f1_terminating(n, (n as u32 + a + b + 1) as f64, a as f64 + 1.0, (x - 1.0) / 2.0).unwrap();
        prop_assert!((got - want).abs() <= 1e-13 * terms.max(1.0));
    }

    #[test]
    fn toeplitz_matches_tridiagonal_solver(n in 1usize..12, a in -2.0..2.0f64, b in 0.1..2.0f64) {
        let spec = toeplitz_closed_form(n, a, b, b).unwrap();
        let solved = sym_tridiag_eigen(&vec![a; n], &vec![b; n.saturating_sub(1)]).unwrap();
        let mut closed = spec.real_eigenvalues();
        closed.sort_by(|x, y| y.total_cmp(x));
        for (x, y) in closed.iter().zip(&solved.eigenvalues) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }
}

#[test]
fn jacobi_orthogonality() {
    let rule = gauss_legendre(30).unwrap();
    for (a, b) in [(0u32, 0u32), (1, 2), (3, 1), (2, 2)] {
        for n in 0..6usize {
            for m in 0..6usize {
                let ip = rule.integrate(|x| {
                    (1.0 - x).powi(a as i32)
                        * (1.0 + x).powi(b as i32)
                        * jacobi_poly(JacobiParams { n, alpha: a, beta: b, x })
                        * jacobi_poly(JacobiParams { n: m, alpha: a, beta: b, x })
                });
                let want = if n == m { jacobi_norm_sq(n, a, b) } else { 0.0 };
                assert_abs_diff_eq!(ip, want, epsilon = 1e-11 * want.max(1.0));
            }
        }
    }
}

#[test]
fn hypergeometric_values() {
    // terminates as the Legendre polynomial P₂(0)
    assert_abs_diff_eq!(hyp2f1_terminating(2, 3.0, 1.0, 0.5).unwrap(), -0.5, epsilon = 1e-15);
    assert_abs_diff_eq!(hyp2f1_terminating(0, 3.0, 1.0, 0.9).unwrap(), 1.0, epsilon = 0.0);
    // Chu-Vandermonde: F(-n, b; c; 1) = (c-b)_n / (c)_n
    let (n, b, c) = (5, 2.5, 4.0);
    let want = pochhammer(c - b, n) / pochhammer(c, n);
    assert_abs_diff_eq!(hyp2f1_terminating(n, b, c, 1.0).unwrap(), want, epsilon = 1e-14);
    assert!(matches!(hyp2f1_terminating(4, 1.0, -2.0, 0.3), Err(Error::PochhammerPole { .. })));
}

#[test]
fn toeplitz_sign_cases() {
    let s = toeplitz_closed_form(3, 0.0, 1.0, -1.0).unwrap();
    assert!(s.complex);
    assert!(toeplitz_closed_form(3, 0.0, 0.0, 1.0).is_err());
}

#[test]
fn product_formulas_against_factorials() {
    let fact = |n: i64| -> BigInt { (2..=n).map(BigInt::from).product() };
    for l in 0..=8i64 {
        for s in -l..=l {
            for h in -l..=s {
                let want = fact(l - h) * fact(l + s) / (fact(l + h) * fact(l - s));
                assert_eq!(product_formula_closed(l, h, s).unwrap(), want);
            }
        }
    }
    assert!(matches!(product_formula_f(3, 2, 1), Err(Error::OrderingViolation { .. })));
}

#[test]
fn summation_identities_small_and_large() {
    for n in [2, 5, 50] {
        let sums = summation_suite(n, 32);
        assert_eq!(sums.len(), 12);
        for (name, r) in sums {
            assert!(r <= 1e-12, "{name} at n={n}: {r}");
        }
    }
}

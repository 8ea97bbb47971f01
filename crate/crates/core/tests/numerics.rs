use approx::assert_abs_diff_eq;
use fuzzy_core::numerics::{
    gauss_legendre, hermitian_eigen, make_rule, periodic_trapezoid, poly_eval, poly_roots, sym_tridiag_eigen,
    ComplexMatrix, QuadratureKind, SpectrumReport,
};
use fuzzy_core::Complex64;
use proptest::prelude::*;

fn hermitian_from(entries: &[(f64, f64)], n: usize) -> ComplexMatrix {
    let mut a = ComplexMatrix::zeros(n, n);
    let mut it = entries.iter();
    for i in 0..n {
        for j in i..n {
            let &(re, im) = it.next().unwrap();
            let z = if i == j { Complex64::new(re, 0.0) } else { Complex64::new(re, im) };
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    a
}

fn entries(n: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), n * (n + 1) / 2)
}

proptest! {
    #[test]
    fn hermitian_eigen_reconstructs((n, raw) in (1usize..7).prop_flat_map(|n| entries(n).prop_map(move |e| (n, e)))) {
        let a = hermitian_from(&raw, n);
        let r = hermitian_eigen(&a).unwrap();
        let v = &r.eigenvectors;
        let lam = ComplexMatrix::from_real_diagonal(&r.eigenvalues);
        let back = v.matmul(&lam).matmul(&v.adjoint());
        prop_assert!(back.max_abs_diff(&a) < 1e-11);
        prop_assert!(v.adjoint().matmul(v).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
        prop_assert!(r.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        let trace: f64 = r.eigenvalues.iter().sum();
        prop_assert!((trace - a.trace().re).abs() < 1e-11);
    }

    #[test]
    fn tridiagonal_agrees_with_dense(diag in prop::collection::vec(-2.0..2.0f64, 1..9), seed in 0.1..2.0f64) {
        let n = diag.len();
        let off: Vec<f64> = (0..n.saturating_sub(1)).map(|i| seed * ((i as f64) * 1.7).sin()).collect();
        let t = sym_tridiag_eigen(&diag, &off).unwrap();
        let dense = ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j { Complex64::new(diag[i], 0.0) }
            else if i.abs_diff(j) == 1 { Complex64::new(off[i.min(j)], 0.0) }
            else { Complex64::new(0.0, 0.0) }
        });
        let d = hermitian_eigen(&dense).unwrap();
        for (x, y) in t.eigenvalues.iter().zip(&d.eigenvalues) {
            prop_assert!((x - y).abs() < 1e-11);
        }
    }

    #[test]
    fn principal_submatrix_interlaces(raw in entries(6)) {
        let a = hermitian_from(&raw, 6);
        let big = hermitian_eigen(&a).unwrap();
        let small = hermitian_eigen(&a.submatrix(&[0, 1, 2, 3, 4])).unwrap();
        prop_assert!(SpectrumReport::interlaces(&big.eigenvalues, &small.eigenvalues, 1e-10));
    }

    #[test]
    fn roots_of_built_polynomial(roots in prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 1..9)) {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &(re, im) in &roots {
            let r = Complex64::new(re, im);
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] -= r * c;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        let found = poly_roots(&coeffs).unwrap();
        prop_assert_eq!(found.len(), roots.len());
        for z in found {
            let (p, _) = poly_eval(&coeffs, z);
            let scale: f64 = coeffs.iter().enumerate().map(|(i, c)| c.norm() * z.norm().powi(i as i32)).sum();
            prop_assert!(p.norm() <= 1e-10 * scale);
        }
    }
}

#[test]
fn gauss_legendre_exact_on_polynomials() {
    for n in 1..=20 {
        let rule = gauss_legendre(n).unwrap();
        assert_abs_diff_eq!(rule.weights.iter().sum::<f64>(), 2.0, epsilon = 1e-13);
        for k in 0..2 * n {
            let want = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            assert_abs_diff_eq!(rule.integrate(|x| x.powi(k as i32)), want, epsilon = 1e-12);
        }
    }
}

#[test]
fn trapezoid_resolves_fourier_modes() {
    let m = 7;
    let rule = periodic_trapezoid(m).unwrap();
    for d in -6i32..=6 {
        let s: Complex64 = rule.iter().map(|(a, w)| Complex64::from_polar(w, a * d as f64)).sum();
        let want = if d == 0 { 2.0 * std::f64::consts::PI } else { 0.0 };
        assert_abs_diff_eq!(s.re, want, epsilon = 1e-13);
        assert_abs_diff_eq!(s.im, 0.0, epsilon = 1e-13);
    }
    // mode 7 aliases onto the constant
    let s: f64 = rule.iter().map(|(a, w)| w * (7.0 * a).cos()).sum();
    assert_abs_diff_eq!(s, 2.0 * std::f64::consts::PI, epsilon = 1e-12);
}

#[test]
fn mapped_gauss_rule() {
    let rule = make_rule(QuadratureKind::GaussLegendre, 5, (0.0, 1.0)).unwrap();
    assert_abs_diff_eq!(rule.integrate(|x| x.powi(4)), 0.2, epsilon = 1e-14);
}

#[test]
fn symmetric_spectrum_flag() {
    let r = sym_tridiag_eigen(&[0.0, 0.0], &[0.7]).unwrap();
    assert_abs_diff_eq!(r.eigenvalues[0], 0.7, epsilon = 1e-15);
    assert!(r.flags.symmetric_spectrum && r.flags.simple);
    let r = sym_tridiag_eigen(&[1.0, 0.0], &[0.7]).unwrap();
    assert!(!r.flags.symmetric_spectrum);
}

use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use fuzzy_core::numerics::{expectation, random_states, BasisTag, ComplexMatrix, StateVector};
use fuzzy_core::sphere::{
    b0_max_gap, bm_coefficients, build_sphere, clebsch_a, gauss_decomposition_check, jacobi_lemma_check,
    projector_identity_check, random_rotations, rotate_state, so4_scale, sphere_bm_analysis, sphere_chi_tilde,
    sphere_resolution_check, sphere_scs_family, sphere_so4_check, sphere_ur_audit, theorem2_audit,
    verify_sphere_algebra, wigner_rotation, EulerAngles, ScsFamily, SphereNodes,
};
use fuzzy_core::{Complex64, Error, KPolicy};
use proptest::prelude::*;

#[test]
fn construction_constants() {
    assert_abs_diff_eq!(clebsch_a(1, 0, 0), (1.0f64 / 3.0).sqrt(), epsilon = 1e-15);
    let s = build_sphere(2, KPolicy::Explicit(36.0)).unwrap();
    assert_abs_diff_eq!(s.big_k(), 0.25, epsilon = 1e-15);
    assert_eq!(s.c(3), 0.0);
    assert_abs_diff_eq!(s.c(2), (1.0f64 + 4.0 / 36.0).sqrt(), epsilon = 1e-15);
    assert_eq!(s.index(2, -2), 4);
    for lambda in 1..=5 {
        let k = (lambda * lambda * (lambda + 1) * (lambda + 1)) as f64;
        assert_abs_diff_eq!(so4_scale(lambda, k, 0), 1.0 / ((lambda + 1) as f64).sqrt(), epsilon = 1e-15);
    }
    assert!(build_sphere(3, KPolicy::Explicit(100.0)).is_err());
}

#[test]
fn coordinate_square_by_block() {
    for lambda in 1..=6usize {
        let s = build_sphere(lambda, KPolicy::MinKineq).unwrap();
        let k = s.k();
        let x2 = s.x_sq();
        for l in 0..=lambda {
            let lf = l as f64;
            let lam = lambda as f64;
            let want = if l < lambda {
                1.0 + (lf * (lf + 1.0) + 1.0) / k
            } else {
                1.0 + (lam * (lam + 1.0) + 1.0) / k - (1.0 + (lam + 1.0).powi(2) / k) * (lam + 1.0) / (2.0 * lam + 1.0)
            };
            for i in s.block_range(l) {
                assert_abs_diff_eq!(x2[(i, i)].re, want, epsilon = 1e-13);
            }
        }
        // at the floor of k the top block sits just below 1/2
        let top = x2[(s.dim() - 1, s.dim() - 1)].re;
        let lam = lambda as f64;
        assert_abs_diff_eq!(top, 0.5 + (lam.powi(3) - k / 2.0) / (k * (2.0 * lam + 1.0)), epsilon = 1e-13);
    }
}

#[test]
fn so4_casimirs() {
    for lambda in 1..=5usize {
        let r = sphere_so4_check(&build_sphere(lambda, KPolicy::MinKineq).unwrap());
        assert!(r.brackets_residual < 1e-10);
        assert!(r.casimir_identity_residual < 1e-10);
        assert!(r.pseudo_casimir_residual < 1e-10);
        let lf = lambda as f64;
        assert_abs_diff_eq!(r.casimir_full_sum, 2.0 * lf * (lf + 2.0), epsilon = 1e-10);
        assert_abs_diff_eq!(r.convention_factor, 2.0, epsilon = 1e-12);
    }
}

#[test]
fn wigner_rotation_properties() {
    let s = build_sphere(3, KPolicy::MinKineq).unwrap();
    let n = s.dim();
    for g in random_rotations(10, 1) {
        let d = wigner_rotation(&s, &g);
        assert!(d.adjoint().matmul(&d).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-13);
    }
    let g = EulerAngles::new(0.7, 0.0, 0.2).unwrap();
    let d = wigner_rotation(&s, &g);
    for l in 0..=3usize {
        for m in -(l as i64)..=l as i64 {
            let i = s.index(l, m);
            assert!((d[(i, i)] - Complex64::from_polar(1.0, 0.9 * m as f64)).norm() < 1e-14);
        }
    }
    assert!(EulerAngles::new(0.0, 3.5, 0.0).is_err());
    assert!(EulerAngles::new(2.0 * PI, 0.0, 0.0).is_err());
}

#[test]
fn theorem2_examples() {
    let s = build_sphere(4, KPolicy::MinKineq).unwrap();
    assert_abs_diff_eq!(theorem2_audit(&s, &s.basis_state(3, 3)).unwrap(), 0.0, epsilon = 1e-12);
    for l in 0..=4usize {
        let want = (l * (l + 1)) as f64;
        assert_abs_diff_eq!(theorem2_audit(&s, &s.basis_state(l, 0)).unwrap(), want, epsilon = 1e-12);
    }
}

#[test]
fn resolution_examples() {
    let lambda = 2;
    let s = build_sphere(lambda, KPolicy::MinKineq).unwrap();
    let (omega, _) = sphere_scs_family(&s, ScsFamily::OmegaLL, &[0.0; 3], &EulerAngles::identity()).unwrap();
    let r = sphere_resolution_check(&s, &omega, SphereNodes::default_for(lambda)).unwrap();
    assert!(r.residual < 1e-11 && r.norm_condition && r.exact_nodes);
    assert_abs_diff_eq!(r.constant_measured, 8.0 * PI * PI / 9.0, epsilon = 1e-10);

    let top = s.basis_state(lambda, lambda as i64);
    let r = sphere_resolution_check(&s, &top, SphereNodes::default_for(lambda)).unwrap();
    assert!(!r.norm_condition);
    assert_abs_diff_eq!(r.profile_measured[0], 0.0, epsilon = 1e-13);
    assert_abs_diff_eq!(r.profile_measured[1], 0.0, epsilon = 1e-13);
    for (m, e) in r.profile_measured.iter().zip(&r.profile_expected) {
        assert_abs_diff_eq!(*m, *e, epsilon = 1e-12);
    }

    let under = SphereNodes { phi: 3, theta: 2, psi: Some(3) };
    let r = sphere_resolution_check(&s, &omega, under).unwrap();
    assert!(!r.exact_nodes && r.residual > 1e-3);
}

#[test]
fn scs_examples() {
    let id = EulerAngles::identity();
    let s1 = build_sphere(1, KPolicy::MinKineq).unwrap();
    let (_, d) = sphere_scs_family(&s1, ScsFamily::OmegaLL, &[0.0; 2], &id).unwrap();
    assert_abs_diff_eq!(d.disp_l2, 135.0 / 144.0, epsilon = 1e-12);
    let s2 = build_sphere(2, KPolicy::MinKineq).unwrap();
    let (_, d) = sphere_scs_family(&s2, ScsFamily::PhiL0, &[0.0; 3], &id).unwrap();
    assert_abs_diff_eq!(d.disp_l2, 4.0, epsilon = 1e-12);
    let (v, _) = sphere_scs_family(&s2, ScsFamily::PhiL0, &[0.3, 2.0, 5.1], &id).unwrap();
    let xp = s2.xplus().matvec(v.amplitudes());
    let mean: Complex64 = v.amplitudes().iter().zip(&xp).map(|(a, b)| a.conj() * b).sum();
    assert!(mean.norm() < 1e-15);
    for lambda in 1..=8usize {
        let s = build_sphere(lambda, KPolicy::MinKineq).unwrap();
        let (_, d) = sphere_scs_family(&s, ScsFamily::OmegaLL, &vec![0.0; lambda + 1], &id).unwrap();
        assert!(d.disp_x2 < 3.0 / (lambda as f64 + 1.0));
    }
    assert!(matches!(
        sphere_scs_family(&s2, ScsFamily::PhiL0, &[0.0; 2], &id),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn uncertainty_audit() {
    let lambda = 3;
    let s = build_sphere(lambda, KPolicy::MinKineq).unwrap();
    let mut worst = f64::INFINITY;
    for v in random_states(s.dim(), 1000, 23, BasisTag::Sphere { lambda }).unwrap() {
        worst = sphere_ur_audit(&s, &v).unwrap().values().copied().fold(worst, f64::min);
    }
    assert!(worst >= -1e-11, "{worst}");
    assert_eq!(sphere_ur_audit(&s, &s.basis_state(2, 0)).unwrap().len(), 13);

    // mirror-symmetric moduli give ⟨L₃′⟩ = 0
    let mut amps = vec![Complex64::new(0.0, 0.0); s.dim()];
    for l in 0..=lambda {
        for m in -(l as i64)..=l as i64 {
            amps[s.index(l, m)] = Complex64::from_polar(1.0 + 0.1 * (l as f64) + 0.05 * m.abs() as f64, 0.3 * m as f64);
        }
    }
    let v = s.state(amps).unwrap();
    let l3 = s.angular()[2];
    let weight = &ComplexMatrix::identity(s.dim()).scale_real(1.0 / s.k()) - &s.top_projector().scale_real(s.big_k());
    assert_abs_diff_eq!(expectation(&weight.matmul(l3), &v).unwrap(), 0.0, epsilon = 1e-15);
}

#[test]
fn bm_examples() {
    let s = build_sphere(1, KPolicy::MinKineq).unwrap();
    let a1 = (1.0 + 1.0 / s.k()).sqrt() / 3f64.sqrt();
    let r = sphere_bm_analysis(&s, 0).unwrap();
    assert_abs_diff_eq!(r.spectrum.eigenvalues[0], a1, epsilon = 1e-14);
    assert_abs_diff_eq!(r.spectrum.eigenvalues[1], -a1, epsilon = 1e-14);
    for lambda in 1..=12usize {
        let s = build_sphere(lambda, KPolicy::MinKineq).unwrap();
        for m in -(lambda as i64)..=lambda as i64 {
            let (_, off) = bm_coefficients(lambda, s.k(), m).unwrap();
            let r = sphere_bm_analysis(&s, m).unwrap();
            for (x, y) in off.iter().zip(&r.couplings) {
                assert_abs_diff_eq!(*x, *y, epsilon = 1e-14);
            }
            if m == 0 {
                assert!(off.iter().all(|&a| a > 0.5));
            }
        }
        assert!(b0_max_gap(lambda, s.k()).unwrap() > 0.0);
    }
    assert!(sphere_bm_analysis(&s, 2).is_err());
}

#[test]
fn chi_tilde_examples() {
    let s = build_sphere(3, KPolicy::MinKineq).unwrap();
    let (v, d, cmp) = sphere_chi_tilde(&s).unwrap();
    let norm: f64 = v.amplitudes().iter().map(|z| z.norm_sqr()).sum();
    assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-13);
    assert!(d.disp_x2 < PI * PI / 25.0 + 1.0 / 16.0);
    assert_eq!(cmp.below_sine_bound, Some(true));
    let s = build_sphere(10, KPolicy::MinKineq).unwrap();
    let (_, d, cmp) = sphere_chi_tilde(&s).unwrap();
    assert!(d.disp_x2 < 1.0 / 11.0);
    assert!(cmp.below_madore && cmp.below_coarse_bound == Some(true));
    let (_, _, cmp) = sphere_chi_tilde(&build_sphere(2, KPolicy::MinKineq).unwrap()).unwrap();
    assert_eq!(cmp.below_sine_bound, None);
}

#[test]
fn lemma_examples() {
    assert_abs_diff_eq!(jacobi_lemma_check(1, 1, 0, 0, 3).unwrap(), 2.0 / 3.0, epsilon = 1e-13);
    assert_abs_diff_eq!(jacobi_lemma_check(2, 3, 1, 1, 6).unwrap(), 0.0, epsilon = 1e-10);
    assert_abs_diff_eq!(jacobi_lemma_check(4, 4, 2, 1, 9).unwrap(), 2.0 / 9.0, epsilon = 1e-12);
    assert!(matches!(jacobi_lemma_check(4, 4, 2, 1, 8), Err(Error::InvalidNodeCount(8))));
    assert!(jacobi_lemma_check(2, 1, 2, 0, 4).is_err());

    let r = gauss_decomposition_check(2, PI / 3.0).unwrap();
    assert!(r.antinormal < 1e-12 && r.normal < 1e-12 && !r.ill_conditioned);
    let r = gauss_decomposition_check(3, 1e-9).unwrap();
    assert!(r.antinormal < 1e-14);
    assert!(gauss_decomposition_check(2, 0.95 * PI).unwrap().ill_conditioned);
    assert!(gauss_decomposition_check(2, PI).is_err());

    for l in 0..=5usize {
        for h in -(l as i64)..=l as i64 {
            assert!(projector_identity_check(l, h, 2 * l + 1).unwrap() < 1e-13);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rotations_preserve_dispersions(lambda in 1usize..5, seed in any::<u64>()) {
        let s = build_sphere(lambda, KPolicy::MinKineq).unwrap();
        let v: StateVector = random_states(s.dim(), 1, seed, BasisTag::Sphere { lambda }).unwrap().remove(0);
        let g = random_rotations(1, seed ^ 0x5a5a).remove(0);
        let (a, b) = (s.dispersion(&v).unwrap(), s.dispersion(&rotate_state(&s, &g, &v)).unwrap());
        prop_assert!((a.disp_x2 - b.disp_x2).abs() < 1e-10);
        prop_assert!((a.disp_l2 - b.disp_l2).abs() < 1e-10);
    }

    #[test]
    fn algebra_for_explicit_k(lambda in 1usize..7, extra in 0.0..1e5f64) {
        let floor = (lambda * lambda * (lambda + 1) * (lambda + 1)) as f64;
        let s = build_sphere(lambda, KPolicy::Explicit(floor + extra)).unwrap();
        for (name, r) in verify_sphere_algebra(&s) {
            prop_assert!(r <= 1e-11 * (lambda as f64 + 1.0), "{} {}", name, r);
        }
    }
}

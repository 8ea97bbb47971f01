use approx::assert_abs_diff_eq;
use fuzzy_core::numerics::ComplexMatrix;
use fuzzy_core::sphere::{random_rotations, EulerAngles};
use fuzzy_core::su2::{
    build_irrep, build_irreps, madore_fs, madore_min_dispersion, random_block_state, spin_coherent, theorem1_audit,
    BlockState,
};
use fuzzy_core::Complex64;
use proptest::prelude::*;

fn fact(n: i64) -> f64 {
    (2..=n).map(|i| i as f64).product()
}

/// Wigner's closed form for `⟨m'| e^{-iβJ_y} |m⟩`.
fn small_d(j: i64, mp: i64, m: i64, beta: f64) -> f64 {
    let (c, s) = ((beta / 2.0).cos(), (beta / 2.0).sin());
    let pref = (fact(j + mp) * fact(j - mp) * fact(j + m) * fact(j - m)).sqrt();
    let lo = 0.max(m - mp);
    let hi = (j + m).min(j - mp);
    (lo..=hi)
        .map(|k| {
            let sign = if (mp - m + k) % 2 == 0 { 1.0 } else { -1.0 };
            sign * pref / (fact(j + m - k) * fact(k) * fact(mp - m + k) * fact(j - mp - k))
                * c.powi((2 * j + m - mp - 2 * k) as i32)
                * s.powi((mp - m + 2 * k) as i32)
        })
        .sum()
}

proptest! {
    #[test]
    fn rotation_matches_wigner_formula(l in 0usize..7, theta in 0.0..std::f64::consts::PI) {
        let b = build_irrep(l);
        let r = b.exp_i_theta_l2(theta);
        let li = l as i64;
        for mp in -li..=li {
            for m in -li..=li {
                let got = r[((mp + li) as usize, (m + li) as usize)];
                let want = small_d(li, mp, m, -theta);
                prop_assert!((got - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn spin_coherent_states_saturate(l in 0usize..7, seed in any::<u64>()) {
        let b = build_irrep(l);
        let g = random_rotations(1, seed).remove(0);
        let v = spin_coherent(&b, &g);
        let d = b.dispersion(&v).unwrap();
        prop_assert!((d.disp_l2 - l as f64).abs() < 1e-10);
    }

    #[test]
    fn random_states_respect_bound(seed in any::<u64>()) {
        let irreps = build_irreps(5);
        prop_assert!(theorem1_audit(&irreps, &random_block_state(5, seed)) >= -1e-11);
    }
}

#[test]
fn generators_close_the_algebra() {
    for l in 0..=6 {
        let b = build_irrep(l);
        let [l1, l2, l3] = b.generators();
        let i = Complex64::new(0.0, 1.0);
        assert!(l1.commutator(l2).max_abs_diff(&l3.scale(i)) < 1e-13);
        assert!(l2.commutator(l3).max_abs_diff(&l1.scale(i)) < 1e-13);
        let cas = ComplexMatrix::identity(2 * l + 1).scale_real((l * (l + 1)) as f64);
        assert!(b.casimir().max_abs_diff(&cas) < 1e-12);
    }
}

#[test]
fn middle_element_is_cosine() {
    let b = build_irrep(1);
    for theta in [0.3, 1.1, 2.9] {
        assert_abs_diff_eq!(b.exp_i_theta_l2(theta)[(1, 1)].re, f64::cos(theta), epsilon = 1e-14);
    }
    let g = EulerAngles::new(0.4, 0.0, 1.3).unwrap();
    let r = b.rotation(&g);
    assert_abs_diff_eq!(r[(2, 2)].arg(), 1.7, epsilon = 1e-14);
}

#[test]
fn madore_sphere() {
    let fs = madore_fs(1).unwrap();
    let d = fs.dispersion(&fs.block().highest_weight()).unwrap();
    assert_abs_diff_eq!(d.disp_x2, 0.5, epsilon = 1e-14);
    for l in 1..=6 {
        assert_abs_diff_eq!(madore_min_dispersion(l).unwrap(), 1.0 / (l as f64 + 1.0), epsilon = 1e-14);
    }
    assert!(madore_fs(0).is_err());
}

#[test]
fn highest_weight_blocks_saturate() {
    let irreps = build_irreps(4);
    for l in 0..=4 {
        let s = BlockState::highest_weight(4, l).unwrap();
        assert_abs_diff_eq!(theorem1_audit(&irreps, &s), 0.0, epsilon = 1e-12);
    }
}

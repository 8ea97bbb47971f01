use num_complex::Complex64;

use super::space::{so4_scale, FuzzySphereSpace};
use crate::numerics::{product_residual, ComplexMatrix};
use crate::ResidualMap;

const I: Complex64 = Complex64::new(0.0, 1.0);

pub(crate) fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn levi_civita4(p: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    for a in 0..4 {
        for b in a + 1..4 {
            if p[a] == p[b] {
                return 0.0;
            }
            if p[a] > p[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Largest residual of `[A_i, B_j] - i ε_{ijk} C_k`, with `C_k` optionally
/// pre-multiplied by `pre`.
pub(crate) fn cyclic_residual(a: [&ComplexMatrix; 3], b: [&ComplexMatrix; 3], c: [&ComplexMatrix; 3], pre: Option<&ComplexMatrix>) -> f64 {
    let mut r: f64 = 0.0;
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            let lhs = ai.commutator(bj);
            let mut rhs = ComplexMatrix::zeros(lhs.rows(), lhs.cols());
            for (k, ck) in c.iter().enumerate() {
                let e = levi_civita(i, j, k);
                if e != 0.0 {
                    let term = match pre {
                        Some(p) => p.matmul(ck),
                        None => (*ck).clone(),
                    };
                    rhs = &rhs + &term.scale(I * e);
                }
            }
            r = r.max(lhs.max_abs_diff(&rhs));
        }
    }
    r
}

/// Residual of every defining relation of the fuzzy sphere.
pub fn verify_sphere_algebra(space: &FuzzySphereSpace) -> ResidualMap {
    let n = space.dim();
    let big = space.lambda();
    let k = space.k();
    let lf = big as f64;
    let id = ComplexMatrix::identity(n);
    let top = space.top_projector();
    let l = space.angular();
    let x = space.coordinates();
    let mut out = ResidualMap::new();

    let herm = l.iter().chain(x.iter()).map(|a| a.hermitian_residual()).fold(0.0, f64::max);
    out.insert("hermiticity".into(), herm);
    out.insert("x_plus_adjoint".into(), space.xplus().adjoint().max_abs_diff(space.xminus()));
    out.insert("L_L_commutator".into(), cyclic_residual(l, l, l, None));
    out.insert("L_x_commutator".into(), cyclic_residual(l, x, x, None));

    let x_dot_l = (0..3).fold(ComplexMatrix::zeros(n, n), |acc, i| &acc + &x[i].matmul(l[i]));
    out.insert("x_dot_L".into(), x_dot_l.max_abs());

    // [x_i, x_j] = i ε (-1/k + K P_Λ) L_k
    let pre = &id.scale_real(-1.0 / k) + &top.scale_real(space.big_k());
    out.insert("x_x_commutator".into(), cyclic_residual(x, x, l, Some(&pre)));

    let expected_x2 = &(&id.scale_real(1.0 + 1.0 / k) + &space.l_sq().scale_real(1.0 / k))
        - &top.scale_real((1.0 + (lf + 1.0) * (lf + 1.0) / k) * (lf + 1.0) / (2.0 * lf + 1.0));
    out.insert("x_squared".into(), space.x_sq().max_abs_diff(&expected_x2));

    let casimir_factors: Vec<ComplexMatrix> =
        (0..=big).map(|j| space.l_sq() - &id.scale_real((j * (j + 1)) as f64)).collect();
    out.insert("casimir_minimal_polynomial".into(), product_residual(&casimir_factors));

    // Π_m (L₃ - m) on each block
    let mut l3_poly: f64 = 0.0;
    for j in 0..=big {
        let r = space.block_range(j);
        let idx: Vec<usize> = r.collect();
        let l3 = space.angular()[2].submatrix(&idx);
        let eye = ComplexMatrix::identity(idx.len());
        let factors: Vec<ComplexMatrix> = (-(j as i64)..=j as i64).map(|m| &l3 - &eye.scale_real(m as f64)).collect();
        l3_poly = l3_poly.max(product_residual(&factors));
    }
    out.insert("L3_minimal_polynomial".into(), l3_poly);

    let e = (2 * big + 1) as u32;
    out.insert("x_plus_nilpotent".into(), space.xplus().pow(e).max_abs());
    out.insert("x_minus_nilpotent".into(), space.xminus().pow(e).max_abs());
    out.insert("x0_L0_commute".into(), space.x0().commutator(l[2]).max_abs());
    out
}

/// so(4) structure carried by `L_{ij} = ε_{ijk} L_k` and `L_{4i} = g⁻¹ x_i g⁻¹`.
#[derive(Debug, Clone, PartialEq)]
pub struct So4Report {
    /// Worst residual of the full set of so(4) brackets.
    pub brackets_residual: f64,
    /// Proportionality constant of `Σ_{μ,ν} L_{μν} L_{μν}` (all ordered pairs).
    pub casimir_full_sum: f64,
    /// `max |C - c I|` for the measured constant `c`.
    pub casimir_identity_residual: f64,
    /// Spread of the per-block averages of `C`; zero when the constant is `l`-independent.
    pub casimir_block_spread: f64,
    /// `casimir_full_sum / (Λ(Λ+2))`; 2 means the target value refers to a sum over `μ < ν`.
    pub convention_factor: f64,
    pub pseudo_casimir_residual: f64,
}

pub fn sphere_so4_check(space: &FuzzySphereSpace) -> So4Report {
    let n = space.dim();
    let big = space.lambda();
    let mut ginv = vec![0.0; n];
    for l in 0..=big {
        let g = so4_scale(big, space.k(), l);
        for i in space.block_range(l) {
            ginv[i] = 1.0 / g;
        }
    }
    let ginv = ComplexMatrix::from_real_diagonal(&ginv);
    let l = space.angular();
    let v: Vec<ComplexMatrix> = space.coordinates().iter().map(|x| ginv.matmul(x).matmul(&ginv)).collect();

    let zero = ComplexMatrix::zeros(n, n);
    let gen = |a: usize, b: usize| -> ComplexMatrix {
        match (a, b) {
            _ if a == b => zero.clone(),
            (3, i) => v[i].clone(),
            (i, 3) => v[i].scale_real(-1.0),
            (i, j) => {
                let k = 3 - i - j;
                l[k].scale_real(levi_civita(i, j, k))
            }
        }
    };
    let gens: Vec<Vec<ComplexMatrix>> = (0..4).map(|a| (0..4).map(|b| gen(a, b)).collect()).collect();
    let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };

    let mut brackets: f64 = 0.0;
    for (a, b) in (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))) {
        for (c, d) in (0..4).flat_map(|c| (c + 1..4).map(move |d| (c, d))) {
            let lhs = gens[a][b].commutator(&gens[c][d]);
            let rhs = [
                gens[b][d].scale_real(delta(a, c)),
                gens[b][c].scale_real(-delta(a, d)),
                gens[a][d].scale_real(-delta(b, c)),
                gens[a][c].scale_real(delta(b, d)),
            ]
            .iter()
            .fold(zero.clone(), |acc, t| &acc + t)
            .scale(I);
            brackets = brackets.max(lhs.max_abs_diff(&rhs));
        }
    }

    let mut casimir = zero.clone();
    for g in gens.iter().flatten() {
        casimir = &casimir + &g.matmul(g);
    }
    let constant = casimir.trace().re / n as f64;
    let casimir_identity_residual = casimir.max_abs_diff(&ComplexMatrix::identity(n).scale_real(constant));
    let block_means: Vec<f64> = (0..=big)
        .map(|j| {
            let r = space.block_range(j);
            r.clone().map(|i| casimir[(i, i)].re).sum::<f64>() / r.len() as f64
        })
        .collect();
    let spread = block_means.iter().cloned().fold(f64::MIN, f64::max) - block_means.iter().cloned().fold(f64::MAX, f64::min);

    let mut pseudo = zero.clone();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let e = levi_civita4([a, b, c, d]);
                    if e != 0.0 {
                        pseudo = &pseudo + &gens[a][b].matmul(&gens[c][d]).scale_real(e);
                    }
                }
            }
        }
    }
    let lf = big as f64;
    So4Report {
        brackets_residual: brackets,
        casimir_full_sum: constant,
        casimir_identity_residual,
        casimir_block_spread: spread,
        convention_factor: constant / (lf * (lf + 2.0)),
        pseudo_casimir_residual: pseudo.max_abs(),
    }
}

use std::f64::consts::PI;

use num_complex::Complex64;

use super::space::FuzzySphereSpace;
use crate::error::Result;
use crate::numerics::{gauss_legendre, periodic_trapezoid, ComplexMatrix, QuadratureRule, StateVector};
use crate::ResolutionReport;

/// Node counts of the product rule over the Euler angles; `psi = None`
/// integrates over the two-sphere coset `g = e^{iφL₃} e^{iθL₂}` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereNodes {
    pub phi: usize,
    pub theta: usize,
    pub psi: Option<usize>,
}

impl SphereNodes {
    /// `2Λ + 2` nodes per angle, one above the exactness threshold of the periodic rules.
    pub fn default_for(lambda: usize) -> Self {
        let m = 2 * lambda + 2;
        Self { phi: m, theta: m, psi: Some(m) }
    }

    pub fn coset(lambda: usize) -> Self {
        Self { psi: None, ..Self::default_for(lambda) }
    }
}

/// `Σ_j w_j e^{i α_j d}` for `d = -D..=D`, stored at `d + D`.
fn phase_sums(rule: &QuadratureRule, span: i64) -> Vec<Complex64> {
    (-span..=span)
        .map(|d| rule.iter().map(|(a, w)| Complex64::from_polar(w, a * d as f64)).sum())
        .collect()
}

/// Quadrature of `∫ dμ(g) D(g)|ω⟩⟨ω|D(g)†`, normalized so that it equals the
/// identity when the per-block weights of `ω` are `(2l+1)/(Λ+1)²`.
///
/// The sums over `φ` and `ψ` enter through the phase sums
/// `Σ_j w_j e^{iα_j(m-m')}`, which is the same quadrature regrouped.
pub fn sphere_resolution_check(space: &FuzzySphereSpace, omega: &StateVector, nodes: SphereNodes) -> Result<ResolutionReport> {
    let big = space.lambda();
    let n = space.dim();
    let span = 2 * big as i64;
    let phi_rule = periodic_trapezoid(nodes.phi)?;
    let theta_rule = gauss_legendre(nodes.theta)?;
    let s_phi = phase_sums(&phi_rule, span);

    let m_of: Vec<i64> = (0..=big).flat_map(|l| (-(l as i64))..=(l as i64)).collect();
    let w = omega.amplitudes();

    // Q = ω ω† with the ψ sum folded in.
    let mut q = ComplexMatrix::from_fn(n, n, |a, b| w[a] * w[b].conj());
    if let Some(mpsi) = nodes.psi {
        let s_psi = phase_sums(&periodic_trapezoid(mpsi)?, span);
        q = ComplexMatrix::from_fn(n, n, |a, b| q[(a, b)] * s_psi[(m_of[a] - m_of[b] + span) as usize]);
    }

    let mut raw = ComplexMatrix::zeros(n, n);
    for (x, wt) in theta_rule.iter() {
        let theta = x.clamp(-1.0, 1.0).acos();
        let mids: Vec<ComplexMatrix> = (0..=big).map(|l| space.irrep(l).exp_i_theta_l2(theta)).collect();
        // D_θ Q D_θ† with D_θ block diagonal
        let mut dq = ComplexMatrix::zeros(n, n);
        for (l, d) in mids.iter().enumerate() {
            let r = space.block_range(l);
            for i in 0..d.rows() {
                for k in 0..d.cols() {
                    let a = d[(i, k)];
                    if a == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    for b in 0..n {
                        dq[(r.start + i, b)] += a * q[(r.start + k, b)];
                    }
                }
            }
        }
        for (j, d) in mids.iter().enumerate() {
            let r = space.block_range(j);
            for a in 0..n {
                for i in 0..d.rows() {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for k in 0..d.cols() {
                        acc += dq[(a, r.start + k)] * d[(i, k)].conj();
                    }
                    let b = r.start + i;
                    raw[(a, b)] += acc * s_phi[(m_of[a] - m_of[b] + span) as usize] * wt;
                }
            }
        }
    }

    let nf = (big + 1) as f64;
    let constant_expected = match nodes.psi {
        Some(_) => 8.0 * PI * PI / (nf * nf),
        None => 4.0 * PI / (nf * nf),
    };
    let b = raw.scale_real(1.0 / constant_expected);
    let residual = b.max_abs_diff(&ComplexMatrix::identity(n));
    let constant_measured = raw.trace().re / n as f64;

    let block_weight = |l: usize| -> f64 { space.block_range(l).map(|i| w[i].norm_sqr()).sum() };
    let profile_expected: Vec<f64> = (0..=big).map(|l| block_weight(l) * nf * nf / (2 * l + 1) as f64).collect();
    let profile_measured: Vec<f64> = (0..=big)
        .map(|l| {
            let r = space.block_range(l);
            r.clone().map(|i| b[(i, i)].re).sum::<f64>() / r.len() as f64
        })
        .collect();
    let norm_condition = (0..=big).all(|l| (block_weight(l) - (2 * l + 1) as f64 / (nf * nf)).abs() <= 1e-12);
    let periodic_min = 2 * big + 1;
    let exact_nodes = nodes.phi >= periodic_min && nodes.psi.is_none_or(|m| m >= periodic_min) && nodes.theta > big;
    Ok(ResolutionReport {
        residual,
        constant_measured,
        constant_expected,
        profile_expected,
        profile_measured,
        norm_condition,
        exact_nodes,
    })
}

use std::f64::consts::PI;

use num_complex::Complex64;

use super::rotation::{rotate_state, EulerAngles};
use super::space::FuzzySphereSpace;
use crate::error::{Error, Result};
use crate::numerics::{DispersionReport, StateVector};

/// The two coherent-state families built on highest-weight or `m = 0` vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScsFamily {
    /// `Σ_l e^{iβ_l} √(2l+1)/(Λ+1) ψ_l^l`
    OmegaLL,
    /// `Σ_l e^{iβ_l} √(2l+1)/(Λ+1) ψ_l^0`
    PhiL0,
}

/// `(ΔL)²` on the unrotated `OmegaLL` state with zero phases.
pub fn omega_l_dispersion_closed(lambda: usize) -> f64 {
    let l = lambda as f64;
    l * (2.0 * l.powi(3) + 32.0 * l * l + 65.0 * l + 36.0) / (36.0 * (l + 1.0).powi(2))
}

/// `(ΔL)²` on every `PhiL0` state.
pub fn phi_l_dispersion_closed(lambda: usize) -> f64 {
    let l = lambda as f64;
    l * (l + 2.0) / 2.0
}

pub fn sphere_scs_family(
    space: &FuzzySphereSpace,
    family: ScsFamily,
    beta: &[f64],
    g: &EulerAngles,
) -> Result<(StateVector, DispersionReport)> {
    let big = space.lambda();
    if beta.len() != big + 1 {
        return Err(Error::DimensionMismatch { expected: big + 1, found: beta.len() });
    }
    let mut amps = vec![Complex64::new(0.0, 0.0); space.dim()];
    for (l, b) in beta.iter().enumerate() {
        let m = match family {
            ScsFamily::OmegaLL => l as i64,
            ScsFamily::PhiL0 => 0,
        };
        amps[space.index(l, m)] = Complex64::from_polar(((2 * l + 1) as f64).sqrt() / (big + 1) as f64, *b);
    }
    let v = rotate_state(space, g, &space.state(amps)?);
    let d = space.dispersion(&v)?;
    Ok((v, d))
}

/// The sine-profile state on the `m = 0` column and its localization bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiTildeComparison {
    pub disp_x2: f64,
    /// `π²/(Λ+2)² + 1/(Λ+1)²`, proved for `Λ ≥ 3`.
    pub sine_bound: f64,
    /// `11/(Λ+1)²`, the coarser form of the same bound.
    pub coarse_bound: f64,
    /// `1/(Λ+1)`, the minimum on the rescaled-generator sphere with the same cutoff.
    pub madore_min: f64,
    pub below_sine_bound: Option<bool>,
    pub below_coarse_bound: Option<bool>,
    pub below_madore: bool,
}

pub fn sphere_chi_tilde(space: &FuzzySphereSpace) -> Result<(StateVector, DispersionReport, ChiTildeComparison)> {
    let big = space.lambda();
    let lf = big as f64;
    let mut amps = vec![Complex64::new(0.0, 0.0); space.dim()];
    for l in 0..=big {
        let a = (2.0 / (lf + 2.0)).sqrt() * ((l + 1) as f64 * PI / (lf + 2.0)).sin();
        amps[space.index(l, 0)] = Complex64::new(a, 0.0);
    }
    let v = space.state(amps)?;
    let d = space.dispersion(&v)?;
    let sine_bound = PI * PI / (lf + 2.0).powi(2) + 1.0 / (lf + 1.0).powi(2);
    let coarse_bound = 11.0 / (lf + 1.0).powi(2);
    let madore_min = 1.0 / (lf + 1.0);
    let proved = big >= 3;
    let cmp = ChiTildeComparison {
        disp_x2: d.disp_x2,
        sine_bound,
        coarse_bound,
        madore_min,
        below_sine_bound: proved.then_some(d.disp_x2 < sine_bound),
        below_coarse_bound: proved.then_some(d.disp_x2 < coarse_bound),
        below_madore: d.disp_x2 < madore_min,
    };
    Ok((v, d, cmp))
}

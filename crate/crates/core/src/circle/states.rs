use std::f64::consts::PI;

use num_complex::Complex64;

use super::space::FuzzyCircleSpace;
use crate::error::{Error, Result};
use crate::kpolicy::KPolicy;
use crate::numerics::StateVector;

/// `Σ_m e^{i(αm + β_m)} ψ_m / √(2Λ+1)`; `beta[m + Λ]` is the phase of `ψ_m`.
/// The flag reports `β_{-m} = β_m`, under which the family is reflection covariant.
pub fn circle_scs_omega(space: &FuzzyCircleSpace, alpha: f64, beta: &[f64]) -> Result<(StateVector, bool)> {
    let d = space.dim();
    if beta.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: beta.len() });
    }
    let big = space.lambda() as i64;
    let norm = 1.0 / (d as f64).sqrt();
    let amps = (-big..=big)
        .zip(beta)
        .map(|(m, b)| Complex64::from_polar(norm, alpha * m as f64 + b))
        .collect();
    let symmetric = (0..d).all(|i| (beta[i] - beta[d - 1 - i]).abs() <= 1e-15);
    Ok((space.state(amps)?, symmetric))
}

/// Real state with components `cos(πm/(2Λ+2))`, the top eigenvector of the
/// Toeplitz part of `x₁`.
pub fn toeplitz_state(space: &FuzzyCircleSpace) -> StateVector {
    let big = space.lambda() as i64;
    let den = (2 * big + 2) as f64;
    let amps = (-big..=big).map(|m| Complex64::new((PI * m as f64 / den).cos(), 0.0)).collect();
    space.state(amps).expect("cosine profile is nonzero")
}

#[derive(Debug, Clone)]
pub struct Lambda1Minimizer {
    pub state: StateVector,
    /// `(Δx)²` on the minimizer, `7/32`.
    pub disp_x2: f64,
    /// `(Δx)²` on the top eigenvector of `x₁`, `1/4`.
    pub x1_eigenvector_disp_x2: f64,
}

/// Minimizer of the spatial dispersion at `Λ = 1`, where `b₀ = b₁ = 1` for every `k`.
pub fn circle_lambda1_minimizer() -> Result<Lambda1Minimizer> {
    let space = super::space::build_circle(1, KPolicy::MinKineq)?;
    let edge = 5f64.sqrt() / 4.0;
    let mid = (3.0f64 / 8.0).sqrt();
    let c = |x: f64| Complex64::new(x, 0.0);
    let state = space.state(vec![c(edge), c(mid), c(edge)])?;
    let top = space.state(vec![c(0.5), c(0.5 * 2f64.sqrt()), c(0.5)])?;
    Ok(Lambda1Minimizer {
        disp_x2: space.dispersion(&state)?.disp_x2,
        x1_eigenvector_disp_x2: space.dispersion(&top)?.disp_x2,
        state,
    })
}

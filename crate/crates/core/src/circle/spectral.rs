use super::space::{build_circle, FuzzyCircleSpace};
use super::states::toeplitz_state;
use crate::error::Result;
use crate::numerics::{sym_tridiag_eigen, SpectrumReport};

#[derive(Debug, Clone)]
pub struct X1Analysis {
    /// Spectrum of `x₁`; `flags.interlaces_previous` compares with cutoff `Λ - 1`.
    pub spectrum: SpectrumReport,
    pub toeplitz_disp_x2: f64,
    /// `3.5/(Λ+1)²`
    pub toeplitz_bound: f64,
}

fn x1_spectrum(space: &FuzzyCircleSpace) -> Result<SpectrumReport> {
    let big = space.lambda() as i64;
    let diag = vec![0.0; space.dim()];
    let off: Vec<f64> = (1 - big..=big).map(|n| 0.5 * space.b(n)).collect();
    sym_tridiag_eigen(&diag, &off)
}

/// Spectrum of the tridiagonal `x₁`, its interlacing with the next smaller
/// cutoff (same `k` policy) and the dispersion of the cosine-profile state.
pub fn circle_x1_analysis(space: &FuzzyCircleSpace) -> Result<X1Analysis> {
    let mut spectrum = x1_spectrum(space)?;
    if space.lambda() >= 2 {
        let prev = x1_spectrum(&build_circle(space.lambda() - 1, space.policy())?)?;
        spectrum.flags.interlaces_previous =
            Some(SpectrumReport::interlaces(&spectrum.eigenvalues, &prev.eigenvalues, 1e-12));
    }
    let toeplitz_disp_x2 = space.dispersion(&toeplitz_state(space))?.disp_x2;
    let lf = space.lambda() as f64 + 1.0;
    Ok(X1Analysis { spectrum, toeplitz_disp_x2, toeplitz_bound: 3.5 / (lf * lf) })
}

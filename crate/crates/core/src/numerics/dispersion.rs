use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::state::StateVector;
use crate::error::{Error, Result};

/// Imaginary parts of Hermitian expectations above this are rejected.
const IMAG_TOL: f64 = 1e-11;

/// Means and squared dispersions of a coordinate triple (or pair) and an
/// angular-momentum triple (or single generator) on one state.
#[derive(Debug, Clone, PartialEq)]
pub struct DispersionReport {
    pub mean_x: Vec<f64>,
    pub mean_l: Vec<f64>,
    /// `Σ ⟨x_i²⟩`
    pub mean_x2: f64,
    /// `Σ ⟨L_i²⟩`
    pub mean_l2: f64,
    /// `Σ ⟨x_i²⟩ - Σ ⟨x_i⟩²`
    pub disp_x2: f64,
    pub disp_l2: f64,
}

impl DispersionReport {
    /// `⟨x⟩²`, the squared length of the mean position.
    pub fn mean_x_sq(&self) -> f64 {
        self.mean_x.iter().map(|m| m * m).sum()
    }
}

/// `⟨v, A v⟩` for a Hermitian `A`.
pub fn expectation(a: &ComplexMatrix, v: &StateVector) -> Result<f64> {
    let z = complex_expectation(a, v)?;
    if z.im.abs() > IMAG_TOL * a.max_abs().max(1.0) {
        return Err(Error::ComplexExpectation { imag: z.im });
    }
    Ok(z.re)
}

pub(crate) fn complex_expectation(a: &ComplexMatrix, v: &StateVector) -> Result<Complex64> {
    if a.cols() != v.dim() || a.rows() != v.dim() {
        return Err(Error::DimensionMismatch { expected: a.cols(), found: v.dim() });
    }
    let av = a.matvec(v.amplitudes());
    Ok(v.amplitudes().iter().zip(&av).map(|(x, y)| x.conj() * y).sum())
}

fn moments(ops: &[&ComplexMatrix], v: &StateVector) -> Result<(Vec<f64>, f64)> {
    let mut means = Vec::with_capacity(ops.len());
    let mut second = 0.0;
    for a in ops {
        means.push(expectation(a, v)?);
        // ⟨A²⟩ = |A v|² for Hermitian A
        second += a.matvec(v.amplitudes()).iter().map(|z| z.norm_sqr()).sum::<f64>();
    }
    Ok((means, second))
}

pub fn dispersion_report(xs: &[&ComplexMatrix], ls: &[&ComplexMatrix], v: &StateVector) -> Result<DispersionReport> {
    let (mean_x, mean_x2) = moments(xs, v)?;
    let (mean_l, mean_l2) = moments(ls, v)?;
    let disp_x2 = mean_x2 - mean_x.iter().map(|m| m * m).sum::<f64>();
    let disp_l2 = mean_l2 - mean_l.iter().map(|m| m * m).sum::<f64>();
    Ok(DispersionReport { mean_x, mean_l, mean_x2, mean_l2, disp_x2, disp_l2 })
}

use super::space::{clebsch_a, FuzzySphereSpace};
use crate::error::{Error, Result};
use crate::numerics::{sym_tridiag_eigen, SpectrumReport};

/// Diagonal and off-diagonal of the block `B_m` of `x₀` on `L₀ = m`, from the
/// coupling formulas (basis `ψ_l^m`, `l = |m|..=Λ`).
pub fn bm_coefficients(lambda: usize, k: f64, m: i64) -> Result<(Vec<f64>, Vec<f64>)> {
    let big = lambda as i64;
    if m.abs() > big {
        return Err(Error::OutOfRange(format!("m = {m} outside -{lambda}..={lambda}")));
    }
    let lo = m.abs();
    let diag = vec![0.0; (big - lo + 1) as usize];
    let off = (lo + 1..=big)
        .map(|l| (1.0 + (l * l) as f64 / k).sqrt() * clebsch_a(l, 0, m))
        .collect();
    Ok((diag, off))
}

#[derive(Debug, Clone)]
pub struct BmReport {
    pub m: i64,
    pub spectrum: SpectrumReport,
    /// Largest coupling of the `L₀ = m` eigenspace to its complement.
    pub leakage: f64,
    /// Largest entry of the block outside its three central diagonals.
    pub non_tridiagonal: f64,
    /// Largest imaginary part of the block.
    pub imaginary: f64,
    /// Off-diagonal couplings, indexed by the upper `l`.
    pub couplings: Vec<f64>,
}

impl BmReport {
    pub fn alpha1(&self) -> f64 {
        self.spectrum.largest()
    }
}

/// Extracts `B_m` from the assembled `x₀` and diagonalizes it.
pub fn sphere_bm_analysis(space: &FuzzySphereSpace, m: i64) -> Result<BmReport> {
    let big = space.lambda() as i64;
    if m.abs() > big {
        return Err(Error::OutOfRange(format!("m = {m} outside -{big}..={big}")));
    }
    let idx: Vec<usize> = (m.abs()..=big).map(|l| space.index(l as usize, m)).collect();
    let x0 = space.x0();
    let block = x0.submatrix(&idx);
    let d = idx.len();
    let mut non_tridiagonal: f64 = 0.0;
    let mut imaginary: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            imaginary = imaginary.max(block[(i, j)].im.abs());
            if i.abs_diff(j) > 1 {
                non_tridiagonal = non_tridiagonal.max(block[(i, j)].norm());
            }
        }
    }
    let diag: Vec<f64> = (0..d).map(|i| block[(i, i)].re).collect();
    let couplings: Vec<f64> = (0..d.saturating_sub(1)).map(|i| block[(i, i + 1)].re).collect();
    let spectrum = sym_tridiag_eigen(&diag, &couplings)?;
    Ok(BmReport { m, spectrum, leakage: x0.leakage(&idx), non_tridiagonal, imaginary, couplings })
}

/// `α₁(Λ; m)` for `m = 0..=Λ`.
pub fn alpha1_chain(space: &FuzzySphereSpace) -> Result<Vec<f64>> {
    (0..=space.lambda() as i64).map(|m| sphere_bm_analysis(space, m).map(|r| r.alpha1())).collect()
}

/// Largest gap between consecutive eigenvalues of `B₀`.
pub fn b0_max_gap(lambda: usize, k: f64) -> Result<f64> {
    let (diag, off) = bm_coefficients(lambda, k, 0)?;
    let s = sym_tridiag_eigen(&diag, &off)?;
    Ok(s.eigenvalues.windows(2).map(|w| w[0] - w[1]).fold(0.0, f64::max))
}

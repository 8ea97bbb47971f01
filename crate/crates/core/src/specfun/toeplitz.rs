use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Closed-form spectrum of the `n x n` tridiagonal Toeplitz matrix with `a`
/// on the diagonal, `b` above and `c` below it.
#[derive(Debug, Clone)]
pub struct ToeplitzSpectrum {
    /// `λ_h`, `h = 1..n`.
    pub eigenvalues: Vec<Complex64>,
    /// Unnormalized `χ^h_k = (c/b)^{k/2} sin(hkπ/(n+1))`, `k = 1..n`.
    pub eigenvectors: Vec<Vec<Complex64>>,
    /// True when `bc < 0` and the spectrum leaves the real line.
    pub complex: bool,
}

impl ToeplitzSpectrum {
    pub fn real_eigenvalues(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(|z| z.re).collect()
    }
}

pub fn toeplitz_closed_form(n: usize, a: f64, b: f64, c: f64) -> Result<ToeplitzSpectrum> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if b == 0.0 || c == 0.0 {
        return Err(Error::Singular("Toeplitz closed form needs b and c nonzero".into()));
    }
    let sqrt_bc = Complex64::new(b * c, 0.0).sqrt();
    let ratio = Complex64::new(c / b, 0.0).sqrt();
    let theta = PI / (n + 1) as f64;
    let eigenvalues = (1..=n).map(|h| a + 2.0 * sqrt_bc * (h as f64 * theta).cos()).collect();
    let eigenvectors = (1..=n)
        .map(|h| (1..=n).map(|k| ratio.powu(k as u32) * (h as f64 * k as f64 * theta).sin()).collect())
        .collect();
    Ok(ToeplitzSpectrum { eigenvalues, eigenvectors, complex: b * c < 0.0 })
}

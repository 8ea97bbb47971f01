use std::f64::consts::PI;

use num_complex::Complex64;

use super::space::FuzzyCircleSpace;
use crate::error::Result;
use crate::numerics::{expectation, periodic_trapezoid, ComplexMatrix, StateVector};
use crate::{ResidualMap, ResolutionReport};

/// Slacks of the uncertainty relations on the fuzzy circle.
///
/// The Robertson-Schrödinger entry uses the covariance
/// `⟨{x₁, x₂}⟩ - 2⟨x₁⟩⟨x₂⟩`, which reduces to `⟨{x₁, x₂}⟩` whenever one mean vanishes.
pub fn circle_ur_audit(space: &FuzzyCircleSpace, v: &StateVector) -> Result<ResidualMap> {
    let var = |a: &ComplexMatrix| -> Result<(f64, f64)> {
        let m = expectation(a, v)?;
        let sq: f64 = a.matvec(v.amplitudes()).iter().map(|z| z.norm_sqr()).sum();
        Ok((m, sq - m * m))
    };
    let [x1, x2] = space.coordinates();
    let (_, vl) = var(space.l())?;
    let (m1, v1) = var(x1)?;
    let (m2, v2) = var(x2)?;
    let lp = expectation(&space.l_prime(), v)?;
    let cov = expectation(&x1.anticommutator(x2), v)? - 2.0 * m1 * m2;
    let mut out = ResidualMap::new();
    out.insert("HUR_L_x1".into(), vl * v1 - 0.25 * m2 * m2);
    out.insert("HUR_L_x2".into(), vl * v2 - 0.25 * m1 * m1);
    out.insert("HUR_L_x".into(), vl * (v1 + v2) - 0.25 * (m1 * m1 + m2 * m2));
    out.insert("robertson_x1x2".into(), 4.0 * v1 * v2 - lp * lp - cov * cov);
    Ok(out)
}

/// Quadrature of `((2Λ+1)/2π) ∫ dα e^{iαL}|ω⟩⟨ω|e^{-iαL}` with an `m`-node periodic rule.
pub fn circle_resolution_check(space: &FuzzyCircleSpace, omega: &StateVector, m: usize) -> Result<ResolutionReport> {
    let d = space.dim();
    let big = space.lambda() as i64;
    let rule = periodic_trapezoid(m)?;
    let w = omega.amplitudes();
    let span = 2 * big;
    let sums: Vec<Complex64> = (-span..=span)
        .map(|k| rule.iter().map(|(a, wt)| Complex64::from_polar(wt, a * k as f64)).sum())
        .collect();
    let raw = ComplexMatrix::from_fn(d, d, |i, j| w[i] * w[j].conj() * sums[(i as i64 - j as i64 + span) as usize]);
    let constant_expected = 2.0 * PI / d as f64;
    let b = raw.scale_real(1.0 / constant_expected);
    let profile_expected: Vec<f64> = w.iter().map(|z| d as f64 * z.norm_sqr()).collect();
    let profile_measured: Vec<f64> = (0..d).map(|i| b[(i, i)].re).collect();
    Ok(ResolutionReport {
        residual: b.max_abs_diff(&ComplexMatrix::identity(d)),
        constant_measured: raw.trace().re / d as f64,
        constant_expected,
        norm_condition: profile_expected.iter().all(|p| (p - 1.0).abs() <= 1e-12),
        profile_expected,
        profile_measured,
        exact_nodes: m >= d,
    })
}

use num_complex::Complex64;

use super::C0;
use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 500;
/// Backward-error threshold accepted for a root.
const ROOT_TOL: f64 = 1e-10;

/// Evaluates `Σ c_i z^i` (coefficients in ascending powers) and its derivative.
pub fn poly_eval(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = C0;
    let mut dp = C0;
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `Σ |c_i| |z|^i`, the natural scale of rounding error in `p(z)`.
fn eval_scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

fn backward_error(coeffs: &[Complex64], z: Complex64) -> f64 {
    let s = eval_scale(coeffs, z);
    if s == 0.0 {
        0.0
    } else {
        poly_eval(coeffs, z).0.norm() / s
    }
}

/// All roots of a polynomial given in ascending powers, by Aberth-Ehrlich
/// simultaneous iteration followed by a Newton polish.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.len() < 2 {
        return Err(Error::EmptyInput);
    }
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    if lead == C0 {
        return Err(Error::LeadingCoefficientZero);
    }
    if n == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }

    let radius = {
        let c0 = coeffs[0].norm();
        if c0 > 0.0 {
            (c0 / lead.norm()).powf(1.0 / n as f64)
        } else {
            1.0
        }
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut done = true;
        for k in 0..n {
            let (p, dp) = poly_eval(coeffs, z[k]);
            if p == C0 || p.norm() <= 4.0 * f64::EPSILON * eval_scale(coeffs, z[k]) {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[k] -= step;
            if step.norm() > 4.0 * f64::EPSILON * z[k].norm().max(f64::MIN_POSITIVE) {
                done = false;
            }
        }
        if done {
            break;
        }
    }

    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = poly_eval(coeffs, *zk);
            if dp == C0 {
                break;
            }
            let cand = *zk - p / dp;
            if backward_error(coeffs, cand) < backward_error(coeffs, *zk) {
                *zk = cand;
            } else {
                break;
            }
        }
    }

    let worst = z.iter().map(|&zk| backward_error(coeffs, zk)).fold(0.0, f64::max);
    // Clusters converge only linearly; accept them once the backward error is small.
    if worst > ROOT_TOL {
        return Err(Error::NoConvergence { iterations: MAX_ITERATIONS, residual: worst });
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn quadratic() {
        // z^2 + 1
        let mut r = poly_roots(&[c(1.0), c(0.0), c(1.0)]).unwrap();
        r.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((r[0] - Complex64::new(0.0, -1.0)).norm() < 1e-14);
        assert!((r[1] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn leading_zero_rejected() {
        assert_eq!(poly_roots(&[c(1.0), c(0.0)]), Err(Error::LeadingCoefficientZero));
    }

    #[test]
    fn triple_root_with_tiny_split() {
        // -8 z^3 - 1.8e-15 z
        let r = poly_roots(&[c(0.0), c(-1.8e-15), c(0.0), c(-8.0)]).unwrap();
        for z in r {
            assert!(z.norm() < 1e-7);
        }
    }
}

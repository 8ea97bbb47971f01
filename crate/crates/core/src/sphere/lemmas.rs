use std::f64::consts::PI;

use num_complex::Complex64;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::specfun::factorial_ratio;
use crate::numerics::{gauss_legendre, periodic_trapezoid, ComplexMatrix};
use crate::su2::build_irrep;

/// `Σ_k (tA)^k / k!` for nilpotent `A`, summed until the powers vanish.
pub fn exp_nilpotent(a: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let n = a.rows();
    let mut out = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=n {
        term = term.matmul(a).scale_real(t / k as f64);
        if term.max_abs() == 0.0 {
            break;
        }
        out = &out + &term;
    }
    out
}

/// `∫_0^π sinθ ⟨ψ_j^n, e^{iθL₂} ψ_j^h⟩ ⟨e^{iθL₂} ψ_l^h, ψ_l^n⟩ dθ` by
/// Gauss-Legendre in `cos θ`; the exact value is `2δ_{lj}/(2l+1)`.
pub fn jacobi_lemma_check(l: usize, j: usize, h: i64, n: i64, n_theta: usize) -> Result<f64> {
    let bound = l.min(j) as i64;
    if h.abs() > bound || n.abs() > bound {
        return Err(Error::OutOfRange(format!("|h|, |n| must not exceed {bound}")));
    }
    if n_theta < l + j + 1 {
        return Err(Error::InvalidNodeCount(n_theta));
    }
    let (bl, bj) = (build_irrep(l), build_irrep(j));
    let (li, ji) = (l as i64, j as i64);
    let rule = gauss_legendre(n_theta)?;
    let total: Complex64 = rule
        .iter()
        .map(|(x, w)| {
            let theta = x.clamp(-1.0, 1.0).acos();
            let dj = bj.exp_i_theta_l2(theta)[((n + ji) as usize, (h + ji) as usize)];
            let dl = bl.exp_i_theta_l2(theta)[((n + li) as usize, (h + li) as usize)];
            dj * dl.conj() * w
        })
        .sum();
    Ok(total.re)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussDecompositionReport {
    /// `|e^{iθL₂} - e^{-tL₋} e^{2 log cos(θ/2) L₀} e^{tL₊}|_max`, `t = tan(θ/2)`.
    pub antinormal: f64,
    /// `|e^{iθL₂} - e^{tL₊} e^{-2 log cos(θ/2) L₀} e^{-tL₋}|_max`.
    pub normal: f64,
    /// Set above `0.9π`, where `tan(θ/2)` amplifies rounding in `t` itself.
    pub ill_conditioned: bool,
}

fn factorial(n: i64) -> BigInt {
    (2..=n).map(BigInt::from).product()
}

/// Both triangular factorizations of `e^{iθL₂}` on the spin-`l` block.
///
/// The factors have entries of size `tan(θ/2)^{2l}` that cancel in the
/// product, so each entry is summed exactly: with `c² = 1/(1+t²)` every term
/// is rational in `t` apart from a square-root prefactor shared by the entry.
pub fn gauss_decomposition_check(l: usize, theta: f64) -> Result<GaussDecompositionReport> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::OutOfRange(format!("θ = {theta} must lie strictly inside (0, π)")));
    }
    let exact = build_irrep(l).exp_i_theta_l2(theta);
    let t = BigRational::from_float((0.5 * theta).tan()).ok_or(Error::NonFinite)?;
    let one_plus = BigRational::one() + &t * &t;
    let li = l as i64;
    let d = 2 * l + 1;
    let mut antinormal: f64 = 0.0;
    let mut normal: f64 = 0.0;
    for row in 0..d {
        for col in 0..d {
            let (mp, m) = (row as i64 - li, col as i64 - li);
            let mut sum = BigRational::zero();
            for k in mp.max(m)..=li {
                let sign = if (k - mp) % 2 == 0 { 1 } else { -1 };
                let coef = BigRational::new(
                    BigInt::from(sign) * factorial(li + k),
                    factorial(k - mp) * factorial(k - m) * factorial(li - k),
                );
                sum += coef * pow(t.clone(), (2 * k - m - mp) as usize) * signed_pow(&one_plus, -k);
            }
            let pref = factorial_ratio(&[(li - mp) as usize, (li - m) as usize], &[(li + mp) as usize, (li + m) as usize]).sqrt();
            let value = pref * sum.to_f64().ok_or(Error::NonFinite)?;
            antinormal = antinormal.max((exact[(row, col)] - value).norm());

            let mut sum = BigRational::zero();
            for k in -li..=mp.min(m) {
                let sign = if (m - k) % 2 == 0 { 1 } else { -1 };
                let coef = BigRational::new(
                    BigInt::from(sign) * factorial(li - k),
                    factorial(mp - k) * factorial(m - k) * factorial(li + k),
                );
                sum += coef * pow(t.clone(), (mp + m - 2 * k) as usize) * signed_pow(&one_plus, k);
            }
            let pref = factorial_ratio(&[(li + mp) as usize, (li + m) as usize], &[(li - mp) as usize, (li - m) as usize]).sqrt();
            let value = pref * sum.to_f64().ok_or(Error::NonFinite)?;
            normal = normal.max((exact[(row, col)] - value).norm());
        }
    }
    Ok(GaussDecompositionReport { antinormal, normal, ill_conditioned: theta > 0.9 * PI })
}

fn signed_pow(base: &BigRational, k: i64) -> BigRational {
    let p = pow(base.clone(), k.unsigned_abs() as usize);
    if k < 0 { p.recip() } else { p }
}

/// `|(1/2π) Σ_j w_j e^{iα_j(L₃ - h)} - P^h|_max` on the spin-`l` block with
/// an `m`-node periodic rule.
pub fn projector_identity_check(l: usize, h: i64, nodes: usize) -> Result<f64> {
    if h.unsigned_abs() as usize > l {
        return Err(Error::OutOfRange(format!("h = {h} outside -{l}..={l}")));
    }
    let rule = periodic_trapezoid(nodes)?;
    let r = (0..=2 * l)
        .map(|i| {
            let m = i as i64 - l as i64;
            let s: Complex64 = rule.iter().map(|(a, w)| Complex64::from_polar(w, a * (m - h) as f64)).sum::<Complex64>() / (2.0 * PI);
            let target = if m == h { 1.0 } else { 0.0 };
            (s - target).norm()
        })
        .fold(0.0, f64::max);
    Ok(r)
}

use num_complex::Complex64;

use super::space::FuzzyCircleSpace;
use crate::error::{Error, Result};
use crate::numerics::{poly_roots, ComplexMatrix, StateVector};

#[derive(Debug, Clone)]
pub struct AMuEigenpair {
    pub z: Complex64,
    pub state: StateVector,
    /// `‖(a - z)χ‖` for the normalized `χ`
    pub residual: f64,
}

/// `L - iμx₁`
pub fn a_mu_matrix(space: &FuzzyCircleSpace, mu: f64) -> ComplexMatrix {
    let [x1, _] = space.coordinates();
    space.l() + &x1.scale(Complex64::new(0.0, -mu))
}

/// Characteristic polynomial of `L - iμx₁` up to the factor `(-2)^{2Λ+1}`,
/// ascending powers of `z`.
///
/// Built from `P_{n+1} = 2(n - z)P_n + μ²b_n²P_{n-1}`, `P_{-Λ} = 1`, `P_{-Λ-1} = 0`.
pub fn a_mu_char_poly(space: &FuzzyCircleSpace, mu: f64) -> Vec<f64> {
    let big = space.lambda() as i64;
    let mut prev: Vec<f64> = Vec::new();
    let mut cur = vec![1.0];
    for n in -big..=big {
        let mut next = vec![0.0; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i] += 2.0 * n as f64 * c;
            next[i + 1] -= 2.0 * c;
        }
        let coupling = mu * mu * space.b(n).powi(2);
        for (i, c) in prev.iter().enumerate() {
            next[i] += coupling * c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `(Rχ)_n = (-1)ⁿ χ_{-n}`, which anticommutes with `L - iμx₁`.
pub fn mirror(space: &FuzzyCircleSpace, v: &StateVector) -> StateVector {
    let big = space.lambda() as i64;
    let amps = v.amplitudes();
    let out = (-big..=big)
        .map(|n| {
            let a = amps[space.index(-n)];
            if n.rem_euclid(2) == 0 { a } else { -a }
        })
        .collect();
    space.state(out).expect("mirror preserves the norm")
}

/// Eigenpairs of `L - iμx₁` from the roots of its characteristic polynomial.
///
/// Each eigenvector comes from the three-term recurrence run forward from
/// `n = -Λ` and backward from `n = Λ`, glued at the row that gives the
/// smallest residual.
pub fn circle_a_mu_eigen(space: &FuzzyCircleSpace, mu: f64) -> Result<Vec<AMuEigenpair>> {
    if !mu.is_finite() {
        return Err(Error::NonFinite);
    }
    let big = space.lambda() as i64;
    let a = a_mu_matrix(space, mu);
    if mu == 0.0 {
        return Ok((-big..=big)
            .map(|n| AMuEigenpair { z: Complex64::new(n as f64, 0.0), state: space.basis_state(n), residual: 0.0 })
            .collect());
    }
    let coeffs: Vec<Complex64> = a_mu_char_poly(space, mu).into_iter().map(|c| Complex64::new(c, 0.0)).collect();
    let mut roots = poly_roots(&coeffs)?;
    roots.sort_by(|p, q| p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im)));
    roots.into_iter().map(|z| eigenvector(space, &a, mu, z)).collect()
}

fn eigenvector(space: &FuzzyCircleSpace, a: &ComplexMatrix, mu: f64, z: Complex64) -> Result<AMuEigenpair> {
    let big = space.lambda() as i64;
    let d = space.dim();
    let half = Complex64::new(0.0, 0.5 * mu);
    // row n: (n - z)χ_n - iμ/2 (b_n χ_{n-1} + b_{n+1} χ_{n+1}) = 0
    let mut fwd = vec![Complex64::new(0.0, 0.0); d];
    fwd[0] = Complex64::new(1.0, 0.0);
    for n in -big..big {
        let i = space.index(n);
        let below = if i > 0 { fwd[i - 1] * space.b(n) } else { Complex64::new(0.0, 0.0) };
        fwd[i + 1] = ((n as f64 - z) * fwd[i] - half * below) / (half * space.b(n + 1));
        rescale(&mut fwd[..=i + 1]);
    }
    let mut bwd = vec![Complex64::new(0.0, 0.0); d];
    bwd[d - 1] = Complex64::new(1.0, 0.0);
    for n in (1 - big..=big).rev() {
        let i = space.index(n);
        let above = if i + 1 < d { bwd[i + 1] * space.b(n + 1) } else { Complex64::new(0.0, 0.0) };
        bwd[i - 1] = ((n as f64 - z) * bwd[i] - half * above) / (half * space.b(n));
        rescale(&mut bwd[i - 1..]);
    }
    let mut best: Option<AMuEigenpair> = None;
    for t in 0..d {
        if bwd[t].norm() == 0.0 || fwd[t].norm() == 0.0 {
            continue;
        }
        let ratio = fwd[t] / bwd[t];
        let amps: Vec<Complex64> = (0..d).map(|i| if i <= t { fwd[i] } else { bwd[i] * ratio }).collect();
        let Ok(state) = space.state(amps) else { continue };
        let av = a.matvec(state.amplitudes());
        let residual = av
            .iter()
            .zip(state.amplitudes())
            .map(|(x, y)| (x - z * y).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if best.as_ref().is_none_or(|b| residual < b.residual) {
            best = Some(AMuEigenpair { z, state, residual });
        }
    }
    best.ok_or(Error::Singular(format!("no eigenvector for z = {z}")))
}

fn rescale(v: &mut [Complex64]) {
    let m = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if m > 1e100 || (m > 0.0 && m < 1e-100) {
        v.iter_mut().for_each(|z| *z /= m);
    }
}

use super::algebra::levi_civita;
use super::space::FuzzySphereSpace;
use crate::error::Result;
use crate::numerics::{expectation, ComplexMatrix, StateVector};
use crate::ResidualMap;

fn l_moments(space: &FuzzySphereSpace, v: &StateVector) -> Result<([f64; 3], f64)> {
    let [a, b, c] = space.angular();
    Ok(([expectation(a, v)?, expectation(b, v)?, expectation(c, v)?], expectation(space.l_sq(), v)?))
}

fn slack(mean: [f64; 3], l2: f64) -> f64 {
    let m = mean.iter().map(|x| x * x).sum::<f64>().sqrt();
    l2 - m * (m + 1.0)
}

/// `⟨L²⟩ - |⟨L⟩|(|⟨L⟩| + 1)` on a pure state of the whole space.
pub fn theorem2_audit(space: &FuzzySphereSpace, v: &StateVector) -> Result<f64> {
    let (mean, l2) = l_moments(space, v)?;
    Ok(slack(mean, l2))
}

/// Same slack for the density operator `Σ p_i |v_i⟩⟨v_i|` (weights normalized here).
pub fn theorem2_audit_mixed(space: &FuzzySphereSpace, mixture: &[(f64, StateVector)]) -> Result<f64> {
    let total: f64 = mixture.iter().map(|(p, _)| p).sum();
    let mut mean = [0.0; 3];
    let mut l2 = 0.0;
    for (p, v) in mixture {
        let (m, q) = l_moments(space, v)?;
        for i in 0..3 {
            mean[i] += p / total * m[i];
        }
        l2 += p / total * q;
    }
    Ok(slack(mean, l2))
}

/// Slacks of the uncertainty relations implied by the commutators.
///
/// The Robertson-Schrödinger entries subtract the covariance term with the
/// means removed, `⟨{x_i, x_j}⟩ - 2⟨x_i⟩⟨x_j⟩`, which is the form that holds
/// on every state.
pub fn sphere_ur_audit(space: &FuzzySphereSpace, v: &StateVector) -> Result<ResidualMap> {
    let n = space.dim();
    let l = space.angular();
    let x = space.coordinates();
    let mean = |a: &ComplexMatrix| expectation(a, v);
    let var = |a: &ComplexMatrix| -> Result<f64> {
        let m = expectation(a, v)?;
        let sq: f64 = a.matvec(v.amplitudes()).iter().map(|z| z.norm_sqr()).sum();
        Ok(sq - m * m)
    };
    let ml = [mean(l[0])?, mean(l[1])?, mean(l[2])?];
    let mx = [mean(x[0])?, mean(x[1])?, mean(x[2])?];
    let vl = [var(l[0])?, var(l[1])?, var(l[2])?];
    let vx = [var(x[0])?, var(x[1])?, var(x[2])?];
    let names = ["1", "2", "3"];
    let mut out = ResidualMap::new();

    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        out.insert(format!("LUR_{}{}", names[i], names[j]), vl[i] * vl[j] - 0.25 * ml[k] * ml[k]);
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let k = 3 - i - j;
                out.insert(format!("HUR_L{}_x{}", names[i], names[j]), vl[i] * vx[j] - 0.25 * mx[k] * mx[k]);
            }
        }
    }

    // [x_i, x_j] = -i ε_{ijk} L'_k with L'_k = (I/k - K P_Λ) L_k
    let pre = &ComplexMatrix::identity(n).scale_real(1.0 / space.k()) - &space.top_projector().scale_real(space.big_k());
    let lp: Vec<f64> = (0..3).map(|k| mean(&pre.matmul(l[k]))).collect::<Result<_>>()?;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        debug_assert_eq!(levi_civita(i, j, k), 1.0);
        let cov = mean(&x[i].anticommutator(x[j]))? - 2.0 * mx[i] * mx[j];
        out.insert(format!("robertson_x{}x{}", names[i], names[j]), 4.0 * vx[i] * vx[j] - lp[k] * lp[k] - cov * cov);
    }
    let total_x: f64 = vx.iter().sum();
    let lp_sq: f64 = lp.iter().map(|a| a * a).sum();
    out.insert("x4_Lprime2".into(), total_x * total_x - 0.75 * lp_sq);
    Ok(out)
}

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kpolicy::KPolicy;
use crate::numerics::{dispersion_report, product_residual, BasisTag, ComplexMatrix, DispersionReport, StateVector};
use crate::su2::build_irrep;
use crate::ResidualMap;

/// Operators of the fuzzy circle with cutoff `Λ`, basis `ψ_n` at index `n + Λ`.
#[derive(Debug, Clone)]
pub struct FuzzyCircleSpace {
    lambda: usize,
    k: f64,
    policy: KPolicy,
    l: ComplexMatrix,
    xplus: ComplexMatrix,
    xminus: ComplexMatrix,
    x1: ComplexMatrix,
    x2: ComplexMatrix,
    x_sq: ComplexMatrix,
}

pub fn build_circle(lambda: usize, policy: KPolicy) -> Result<FuzzyCircleSpace> {
    let k = policy.resolve(lambda)?;
    let d = 2 * lambda + 1;
    let big = lambda as i64;
    let mut xplus = ComplexMatrix::zeros(d, d);
    for n in -big..big {
        xplus[((n + 1 + big) as usize, (n + big) as usize)] = Complex64::new(b_coefficient(lambda, k, n + 1), 0.0);
    }
    let xminus = xplus.adjoint();
    let l = ComplexMatrix::from_real_diagonal(&(-big..=big).map(|n| n as f64).collect::<Vec<_>>());
    let x1 = (&xplus + &xminus).scale_real(0.5);
    let x2 = (&xplus - &xminus).scale(Complex64::new(0.0, -0.5));
    let x_sq = &x1.matmul(&x1) + &x2.matmul(&x2);
    Ok(FuzzyCircleSpace { lambda, k, policy, l, xplus, xminus, x1, x2, x_sq })
}

/// `b_n = √(1 + n(n-1)/k)` for `1-Λ ≤ n ≤ Λ`, zero otherwise.
pub(crate) fn b_coefficient(lambda: usize, k: f64, n: i64) -> f64 {
    let big = lambda as i64;
    if n < 1 - big || n > big {
        0.0
    } else {
        (1.0 + (n * (n - 1)) as f64 / k).sqrt()
    }
}

/// `f₊(s) = √((1 + s(s-1)/k) / (Λ(Λ+1) - s(s-1)))`
pub fn f_plus(lambda: usize, k: f64, s: i64) -> f64 {
    let big = lambda as f64;
    let q = (s * (s - 1)) as f64;
    ((1.0 + q / k) / (big * (big + 1.0) - q)).sqrt()
}

/// `f₋(s) = √((1 + s(s+1)/k) / (Λ(Λ+1) - s(s+1)))`
pub fn f_minus(lambda: usize, k: f64, s: i64) -> f64 {
    let big = lambda as f64;
    let q = (s * (s + 1)) as f64;
    ((1.0 + q / k) / (big * (big + 1.0) - q)).sqrt()
}

impl FuzzyCircleSpace {
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn policy(&self) -> KPolicy {
        self.policy
    }

    pub fn dim(&self) -> usize {
        2 * self.lambda + 1
    }

    pub fn index(&self, n: i64) -> usize {
        (n + self.lambda as i64) as usize
    }

    pub fn b(&self, n: i64) -> f64 {
        b_coefficient(self.lambda, self.k, n)
    }

    pub fn l(&self) -> &ComplexMatrix {
        &self.l
    }

    pub fn xplus(&self) -> &ComplexMatrix {
        &self.xplus
    }

    pub fn xminus(&self) -> &ComplexMatrix {
        &self.xminus
    }

    pub fn coordinates(&self) -> [&ComplexMatrix; 2] {
        [&self.x1, &self.x2]
    }

    pub fn x_sq(&self) -> &ComplexMatrix {
        &self.x_sq
    }

    /// Projector onto `ψ_n`.
    pub fn projector(&self, n: i64) -> ComplexMatrix {
        let mut p = ComplexMatrix::zeros(self.dim(), self.dim());
        let i = self.index(n);
        p[(i, i)] = Complex64::new(1.0, 0.0);
        p
    }

    /// `L' = -L/k + (1 + Λ(Λ+1)/k)(P_Λ - P_{-Λ})/2`, so that `[x₁, x₂] = iL'`.
    pub fn l_prime(&self) -> ComplexMatrix {
        let big = self.lambda as i64;
        let edge = 1.0 + (self.lambda * (self.lambda + 1)) as f64 / self.k;
        &self.l.scale_real(-1.0 / self.k) + &(&self.projector(big) - &self.projector(-big)).scale_real(0.5 * edge)
    }

    pub fn state(&self, amplitudes: Vec<Complex64>) -> Result<StateVector> {
        if amplitudes.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: amplitudes.len() });
        }
        StateVector::new(amplitudes, BasisTag::Circle { lambda: self.lambda })
    }

    pub fn basis_state(&self, n: i64) -> StateVector {
        StateVector::basis_vector(self.dim(), self.index(n), BasisTag::Circle { lambda: self.lambda })
    }

    pub fn dispersion(&self, v: &StateVector) -> Result<DispersionReport> {
        dispersion_report(&self.coordinates(), &[&self.l], v)
    }
}

/// Residual of every defining relation of the fuzzy circle.
pub fn verify_circle_algebra(space: &FuzzyCircleSpace) -> ResidualMap {
    let big = space.lambda() as i64;
    let k = space.k();
    let id = ComplexMatrix::identity(space.dim());
    let edge = 1.0 + (big * (big + 1)) as f64 / k;
    let (l, xp, xm) = (space.l(), space.xplus(), space.xminus());
    let mut out = ResidualMap::new();

    let herm = [l, &space.x1, &space.x2].iter().map(|a| a.hermitian_residual()).fold(0.0, f64::max);
    out.insert("hermiticity".into(), herm);
    out.insert("x_plus_adjoint".into(), xp.adjoint().max_abs_diff(xm));
    out.insert("L_x_plus".into(), l.commutator(xp).max_abs_diff(xp));
    out.insert("L_x_minus".into(), l.commutator(xm).max_abs_diff(&xm.scale_real(-1.0)));

    let p_top = space.projector(big);
    let p_bot = space.projector(-big);
    let expected_comm = &l.scale_real(-2.0 / k) + &(&p_top - &p_bot).scale_real(edge);
    out.insert("x_plus_x_minus".into(), xp.commutator(xm).max_abs_diff(&expected_comm));

    let expected_sq = &(&id + &l.matmul(l).scale_real(1.0 / k)) - &(&p_top + &p_bot).scale_real(0.5 * edge);
    out.insert("x_squared".into(), space.x_sq().max_abs_diff(&expected_sq));

    let factors: Vec<ComplexMatrix> = (-big..=big).map(|m| l - &id.scale_real(m as f64)).collect();
    out.insert("L_minimal_polynomial".into(), product_residual(&factors));

    let e = (2 * big + 1) as u32;
    out.insert("x_plus_nilpotent".into(), xp.pow(e).max_abs());
    out.insert("x_minus_nilpotent".into(), xm.pow(e).max_abs());
    out
}

/// Largest deviation between `x_±` and `f_±(E₀) E_±` built from the spin-`Λ`
/// ladder operators.
pub fn circle_su2_check(space: &FuzzyCircleSpace) -> f64 {
    let big = space.lambda() as i64;
    let k = space.k();
    let irrep = build_irrep(space.lambda());
    let fp = ComplexMatrix::from_real_diagonal(&(-big..=big).map(|s| if s > -big { f_plus(space.lambda(), k, s) } else { 0.0 }).collect::<Vec<_>>());
    let fm = ComplexMatrix::from_real_diagonal(&(-big..=big).map(|s| if s < big { f_minus(space.lambda(), k, s) } else { 0.0 }).collect::<Vec<_>>());
    let up = fp.matmul(irrep.lplus());
    let down = fm.matmul(irrep.lminus());
    up.max_abs_diff(space.xplus()).max(down.max_abs_diff(space.xminus()))
}

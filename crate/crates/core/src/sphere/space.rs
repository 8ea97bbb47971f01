use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kpolicy::KPolicy;
use crate::numerics::{dispersion_report, BasisTag, ComplexMatrix, DispersionReport, StateVector};
use crate::su2::{build_irrep, ladder_coefficient, IrrepBlock};

/// Coupling of `ψ_l^m` to `ψ_{l-1}^{m+a}` under `x_a` (before the `c_l` factor).
pub fn clebsch_a(l: i64, a: i64, m: i64) -> f64 {
    if l <= 0 {
        return 0.0;
    }
    let den = ((2 * l + 1) * (2 * l - 1)) as f64;
    let num = match a {
        0 => (l + m) * (l - m),
        1 => (l - m) * (l - m - 1),
        -1 => (l + m) * (l + m - 1),
        _ => return 0.0,
    };
    let mag = (num.max(0) as f64 / den).sqrt();
    if a == -1 {
        -mag
    } else {
        mag
    }
}

/// Coupling of `ψ_l^m` to `ψ_{l+1}^{m+a}` under `x_a` (before `c_{l+1}`).
pub fn clebsch_b(l: i64, a: i64, m: i64) -> f64 {
    clebsch_a(l + 1, -a, m + a)
}

/// Diagonal factor `g(l)` relating the coordinates to the so(4) generators,
/// from its product form.
pub fn so4_scale(lambda: usize, k: f64, l: usize) -> f64 {
    let (big, l) = (lambda as f64, l as i64);
    let lf = l as f64;
    let num: f64 = (0..l).map(|h| big + lf - 2.0 * h as f64).product();
    let den: f64 = (0..=l).map(|h| big + lf + 1.0 - 2.0 * h as f64).product();
    let corr: f64 = if l == 0 {
        1.0
    } else {
        (0..=(l - 1) / 2)
            .map(|j| {
                let a = (l - 2 * j) as f64;
                let b = (l - 1 - 2 * j) as f64;
                (1.0 + a * a / k) / (1.0 + b * b / k)
            })
            .product()
    };
    (num / den * corr).sqrt()
}

/// Operators of the fuzzy sphere with cutoff `Λ`, basis `ψ_l^m` at index `l² + l + m`.
#[derive(Debug, Clone)]
pub struct FuzzySphereSpace {
    lambda: usize,
    k: f64,
    c: Vec<f64>,
    irreps: Vec<IrrepBlock>,
    lplus: ComplexMatrix,
    lminus: ComplexMatrix,
    l1: ComplexMatrix,
    l2: ComplexMatrix,
    l3: ComplexMatrix,
    xplus: ComplexMatrix,
    xminus: ComplexMatrix,
    x1: ComplexMatrix,
    x2: ComplexMatrix,
    x3: ComplexMatrix,
    x_sq: ComplexMatrix,
    l_sq: ComplexMatrix,
}

pub fn build_sphere(lambda: usize, policy: KPolicy) -> Result<FuzzySphereSpace> {
    let k = policy.resolve(lambda)?;
    let n = (lambda + 1) * (lambda + 1);
    let big = lambda as i64;
    let c: Vec<f64> = (0..=lambda + 1)
        .map(|l| if l == 0 || l == lambda + 1 { 0.0 } else { (1.0 + (l * l) as f64 / k).sqrt() })
        .collect();
    let idx = |l: i64, m: i64| (l * l + l + m) as usize;

    let mut lplus = ComplexMatrix::zeros(n, n);
    let mut x = [ComplexMatrix::zeros(n, n), ComplexMatrix::zeros(n, n), ComplexMatrix::zeros(n, n)];
    let mut l0 = vec![0.0; n];
    for l in 0..=big {
        for m in -l..=l {
            let col = idx(l, m);
            l0[col] = m as f64;
            if m < l {
                lplus[(idx(l, m + 1), col)] = Complex64::new(ladder_coefficient(l, m), 0.0);
            }
            for (slot, a) in [(0usize, -1i64), (1, 0), (2, 1)] {
                let mt = m + a;
                if mt.abs() < l {
                    x[slot][(idx(l - 1, mt), col)] = Complex64::new(c[l as usize] * clebsch_a(l, a, m), 0.0);
                }
                if l < big && mt.abs() <= l + 1 {
                    x[slot][(idx(l + 1, mt), col)] = Complex64::new(c[l as usize + 1] * clebsch_b(l, a, m), 0.0);
                }
            }
        }
    }
    let [xminus, x3, xplus] = x;
    let lminus = lplus.adjoint();
    let l1 = (&lplus + &lminus).scale_real(0.5);
    let l2 = (&lplus - &lminus).scale(Complex64::new(0.0, -0.5));
    let l3 = ComplexMatrix::from_real_diagonal(&l0);
    let x1 = (&xplus + &xminus).scale_real(0.5);
    let x2 = (&xplus - &xminus).scale(Complex64::new(0.0, -0.5));
    let square = |a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix| &(&a.matmul(a) + &b.matmul(b)) + &c.matmul(c);
    let x_sq = square(&x1, &x2, &x3);
    let l_sq = square(&l1, &l2, &l3);
    let irreps = (0..=lambda).map(build_irrep).collect();
    Ok(FuzzySphereSpace { lambda, k, c, irreps, lplus, lminus, l1, l2, l3, xplus, xminus, x1, x2, x3, x_sq, l_sq })
}

impl FuzzySphereSpace {
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn dim(&self) -> usize {
        (self.lambda + 1) * (self.lambda + 1)
    }

    pub fn index(&self, l: usize, m: i64) -> usize {
        ((l * l + l) as i64 + m) as usize
    }

    /// `c_l`, `l = 0..=Λ+1`; zero at both ends.
    pub fn c(&self, l: usize) -> f64 {
        self.c.get(l).copied().unwrap_or(0.0)
    }

    /// `K = 1/k + (1 + Λ²/k)/(2Λ + 1)`
    pub fn big_k(&self) -> f64 {
        let l = self.lambda as f64;
        1.0 / self.k + (1.0 + l * l / self.k) / (2.0 * l + 1.0)
    }

    pub fn irrep(&self, l: usize) -> &IrrepBlock {
        &self.irreps[l]
    }

    /// Index range of block `l`.
    pub fn block_range(&self, l: usize) -> std::ops::Range<usize> {
        l * l..(l + 1) * (l + 1)
    }

    pub fn angular(&self) -> [&ComplexMatrix; 3] {
        [&self.l1, &self.l2, &self.l3]
    }

    pub fn coordinates(&self) -> [&ComplexMatrix; 3] {
        [&self.x1, &self.x2, &self.x3]
    }

    pub fn lplus(&self) -> &ComplexMatrix {
        &self.lplus
    }

    pub fn lminus(&self) -> &ComplexMatrix {
        &self.lminus
    }

    pub fn xplus(&self) -> &ComplexMatrix {
        &self.xplus
    }

    pub fn xminus(&self) -> &ComplexMatrix {
        &self.xminus
    }

    /// `x₀ = x₃`
    pub fn x0(&self) -> &ComplexMatrix {
        &self.x3
    }

    pub fn x_sq(&self) -> &ComplexMatrix {
        &self.x_sq
    }

    pub fn l_sq(&self) -> &ComplexMatrix {
        &self.l_sq
    }

    /// Projector onto the top block `l = Λ`.
    pub fn top_projector(&self) -> ComplexMatrix {
        let r = self.block_range(self.lambda);
        ComplexMatrix::from_real_diagonal(&(0..self.dim()).map(|i| if r.contains(&i) { 1.0 } else { 0.0 }).collect::<Vec<_>>())
    }

    /// State from amplitudes in the `ψ_l^m` basis.
    pub fn state(&self, amplitudes: Vec<Complex64>) -> Result<StateVector> {
        if amplitudes.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: amplitudes.len() });
        }
        StateVector::new(amplitudes, BasisTag::Sphere { lambda: self.lambda })
    }

    pub fn basis_state(&self, l: usize, m: i64) -> StateVector {
        StateVector::basis_vector(self.dim(), self.index(l, m), BasisTag::Sphere { lambda: self.lambda })
    }

    pub fn dispersion(&self, v: &StateVector) -> Result<DispersionReport> {
        dispersion_report(&self.coordinates(), &self.angular(), v)
    }
}

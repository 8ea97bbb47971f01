//! Spin-`l` irreducible blocks, spin coherent states, the angular-momentum
//! uncertainty audit on direct sums of blocks, and the rescaled-generator
//! fuzzy sphere used as a localization reference.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::numerics::{dispersion_report, sym_tridiag_eigen, BasisTag, ComplexMatrix, DispersionReport, SpectrumReport, StateVector};
use crate::sphere::EulerAngles;

/// `√((l - m)(l + m + 1))`, the raising-operator matrix element.
pub fn ladder_coefficient(l: i64, m: i64) -> f64 {
    (((l - m) * (l + m + 1)) as f64).max(0.0).sqrt()
}

/// `i^m` for any integer `m`.
pub(crate) fn i_pow(m: i64) -> Complex64 {
    match m.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Spin-`l` irrep in the basis `|l, m⟩`, `m = -l..l` at index `m + l`.
#[derive(Debug, Clone)]
pub struct IrrepBlock {
    l: usize,
    lplus: ComplexMatrix,
    lminus: ComplexMatrix,
    l1: ComplexMatrix,
    l2: ComplexMatrix,
    l3: ComplexMatrix,
    /// Spectrum of the real tridiagonal matrix `S† L₂ S`, `S = diag(i^m)`.
    l2_spectrum: SpectrumReport,
}

pub fn build_irrep(l: usize) -> IrrepBlock {
    let d = 2 * l + 1;
    let li = l as i64;
    let mut lplus = ComplexMatrix::zeros(d, d);
    for idx in 0..d - 1 {
        let m = idx as i64 - li;
        lplus[(idx + 1, idx)] = Complex64::new(ladder_coefficient(li, m), 0.0);
    }
    let lminus = lplus.adjoint();
    let l1 = (&lplus + &lminus).scale_real(0.5);
    let l2 = (&lplus - &lminus).scale(Complex64::new(0.0, -0.5));
    let l3 = ComplexMatrix::from_real_diagonal(&(0..d).map(|i| i as f64 - l as f64).collect::<Vec<_>>());
    // S† L₂ S has off-diagonal -½√((l-m)(l+m+1)) between m and m+1.
    let off: Vec<f64> = (0..d - 1).map(|i| -0.5 * ladder_coefficient(li, i as i64 - li)).collect();
    let l2_spectrum = sym_tridiag_eigen(&vec![0.0; d], &off).expect("ladder tridiagonal is finite and nonempty");
    IrrepBlock { l, lplus, lminus, l1, l2, l3, l2_spectrum }
}

impl IrrepBlock {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        2 * self.l + 1
    }

    pub fn lplus(&self) -> &ComplexMatrix {
        &self.lplus
    }

    pub fn lminus(&self) -> &ComplexMatrix {
        &self.lminus
    }

    /// `[L₁, L₂, L₃]`
    pub fn generators(&self) -> [&ComplexMatrix; 3] {
        [&self.l1, &self.l2, &self.l3]
    }

    pub fn casimir(&self) -> ComplexMatrix {
        let [a, b, c] = self.generators();
        &(&a.matmul(a) + &b.matmul(b)) + &c.matmul(c)
    }

    /// `e^{iθL₂}` from the eigendecomposition of the Hermitian `L₂`.
    pub fn exp_i_theta_l2(&self, theta: f64) -> ComplexMatrix {
        let d = self.dim();
        let li = self.l as i64;
        let s: Vec<Complex64> = (0..d).map(|i| i_pow(i as i64 - li)).collect();
        let vecs = &self.l2_spectrum.eigenvectors;
        let phases: Vec<Complex64> =
            self.l2_spectrum.eigenvalues.iter().map(|&lam| Complex64::from_polar(1.0, theta * lam)).collect();
        ComplexMatrix::from_fn(d, d, |i, j| {
            let real: Complex64 = (0..d).map(|k| vecs[(i, k)] * phases[k] * vecs[(j, k)].conj()).sum();
            s[i] * real * s[j].conj()
        })
    }

    /// Diagonal entries of `e^{iαL₃}`.
    pub fn l3_phases(&self, alpha: f64) -> Vec<Complex64> {
        (0..self.dim()).map(|i| Complex64::from_polar(1.0, alpha * (i as f64 - self.l as f64))).collect()
    }

    /// `π_l(g) = e^{iφL₃} e^{iθL₂} e^{iψL₃}`.
    pub fn rotation(&self, g: &EulerAngles) -> ComplexMatrix {
        let left = self.l3_phases(g.phi());
        let right = self.l3_phases(g.psi());
        let mid = self.exp_i_theta_l2(g.theta());
        ComplexMatrix::from_fn(self.dim(), self.dim(), |i, j| left[i] * mid[(i, j)] * right[j])
    }

    pub fn highest_weight(&self) -> StateVector {
        StateVector::basis_vector(self.dim(), 2 * self.l, BasisTag::Irrep { l: self.l })
    }

    pub fn dispersion(&self, v: &StateVector) -> Result<DispersionReport> {
        let g = self.generators();
        dispersion_report(&g, &g, v)
    }
}

/// Spin coherent state `π_l(g)|l, l⟩`.
pub fn spin_coherent(block: &IrrepBlock, g: &EulerAngles) -> StateVector {
    let r = block.rotation(g);
    let v = r.column(2 * block.l());
    StateVector::new(v, BasisTag::Irrep { l: block.l() }).expect("rotation of a unit vector is a unit vector")
}

/// Pure state on `V_0 ⊕ V_1 ⊕ ... ⊕ V_L`, one amplitude vector per block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockState {
    blocks: Vec<Vec<Complex64>>,
}

impl BlockState {
    /// Normalizes jointly; block `l` must have length `2l + 1`.
    pub fn new(blocks: Vec<Vec<Complex64>>) -> Result<Self> {
        for (l, b) in blocks.iter().enumerate() {
            if b.len() != 2 * l + 1 {
                return Err(Error::DimensionMismatch { expected: 2 * l + 1, found: b.len() });
            }
        }
        let n2: f64 = blocks.iter().flatten().map(|z| z.norm_sqr()).sum();
        if n2 == 0.0 {
            return Err(Error::ZeroVector);
        }
        let s = n2.sqrt();
        Ok(Self { blocks: blocks.into_iter().map(|b| b.into_iter().map(|z| z / s).collect()).collect() })
    }

    /// `|l, l⟩` inside the sum up to `l_max`.
    pub fn highest_weight(l_max: usize, l: usize) -> Result<Self> {
        if l > l_max {
            return Err(Error::OutOfRange(format!("block {l} exceeds {l_max}")));
        }
        let mut blocks: Vec<Vec<Complex64>> = (0..=l_max).map(|j| vec![Complex64::new(0.0, 0.0); 2 * j + 1]).collect();
        blocks[l][2 * l] = Complex64::new(1.0, 0.0);
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[Vec<Complex64>] {
        &self.blocks
    }
}

/// Convex mixture of pure block states.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedBlockState {
    components: Vec<(f64, BlockState)>,
}

impl MixedBlockState {
    pub fn new(components: Vec<(f64, BlockState)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyInput);
        }
        if components.iter().any(|(p, _)| !(p.is_finite() && *p >= 0.0)) {
            return Err(Error::OutOfRange("mixture weights must be nonnegative".into()));
        }
        let total: f64 = components.iter().map(|(p, _)| p).sum();
        if total == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self { components: components.into_iter().map(|(p, s)| (p / total, s)).collect() })
    }
}

fn block_moments(irreps: &[IrrepBlock], state: &BlockState) -> ([f64; 3], f64) {
    let mut mean = [0.0; 3];
    let mut l2 = 0.0;
    for (block, amps) in irreps.iter().zip(state.blocks()) {
        let lf = block.l() as f64;
        let w: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        l2 += lf * (lf + 1.0) * w;
        for (i, op) in block.generators().iter().enumerate() {
            let av = op.matvec(amps);
            mean[i] += amps.iter().zip(&av).map(|(a, b)| (a.conj() * b).re).sum::<f64>();
        }
    }
    (mean, l2)
}

fn slack(mean: [f64; 3], l2: f64) -> f64 {
    let m = mean.iter().map(|x| x * x).sum::<f64>().sqrt();
    l2 - m * (m + 1.0)
}

/// `⟨L²⟩ - |⟨L⟩|(|⟨L⟩| + 1)` for a pure state; `irreps[l]` must be spin `l`.
pub fn theorem1_audit(irreps: &[IrrepBlock], state: &BlockState) -> f64 {
    let (mean, l2) = block_moments(irreps, state);
    slack(mean, l2)
}

pub fn theorem1_audit_mixed(irreps: &[IrrepBlock], rho: &MixedBlockState) -> f64 {
    let mut mean = [0.0; 3];
    let mut l2 = 0.0;
    for (p, s) in &rho.components {
        let (m, q) = block_moments(irreps, s);
        for i in 0..3 {
            mean[i] += p * m[i];
        }
        l2 += p * q;
    }
    slack(mean, l2)
}

pub fn build_irreps(l_max: usize) -> Vec<IrrepBlock> {
    (0..=l_max).map(build_irrep).collect()
}

/// Seeded random pure state on `⊕_{l ≤ l_max} V_l`.
pub fn random_block_state(l_max: usize, seed: u64) -> BlockState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks = (0..=l_max)
        .map(|l| {
            (0..2 * l + 1)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(&mut rng);
                    let im: f64 = StandardNormal.sample(&mut rng);
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect();
    BlockState::new(blocks).expect("gaussian draw is nonzero")
}

/// Seeded mixture of two to four random pure states with random weights.
pub fn random_mixed_block_state(l_max: usize, seed: u64) -> MixedBlockState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let count = 2 + (rand::Rng::random::<u32>(&mut rng) % 3) as usize;
    let components = (0..count)
        .map(|i| {
            let p: f64 = rand::Rng::random::<f64>(&mut rng) + 1e-3;
            (p, random_block_state(l_max, seed.wrapping_mul(31).wrapping_add(i as u64 + 1)))
        })
        .collect();
    MixedBlockState::new(components).expect("weights are positive")
}

/// Fuzzy sphere on one irrep with coordinates `x_i = 2 L_i / √(n² - 1)`, `n = 2l + 1`.
#[derive(Debug, Clone)]
pub struct MadoreFs {
    block: IrrepBlock,
    x: [ComplexMatrix; 3],
}

pub fn madore_fs(l: usize) -> Result<MadoreFs> {
    if l == 0 {
        return Err(Error::InvalidCutoff(0));
    }
    let block = build_irrep(l);
    let n = (2 * l + 1) as f64;
    let s = 2.0 / (n * n - 1.0).sqrt();
    let [a, b, c] = block.generators();
    let x = [a.scale_real(s), b.scale_real(s), c.scale_real(s)];
    Ok(MadoreFs { block, x })
}

impl MadoreFs {
    pub fn l(&self) -> usize {
        self.block.l()
    }

    pub fn block(&self) -> &IrrepBlock {
        &self.block
    }

    pub fn coordinates(&self) -> [&ComplexMatrix; 3] {
        [&self.x[0], &self.x[1], &self.x[2]]
    }

    /// `2 / √(n² - 1)`, the structure constant of the coordinate commutators.
    pub fn noncommutativity(&self) -> f64 {
        let n = (2 * self.l() + 1) as f64;
        2.0 / (n * n - 1.0).sqrt()
    }

    pub fn dispersion(&self, v: &StateVector) -> Result<DispersionReport> {
        dispersion_report(&self.coordinates(), &self.block.generators(), v)
    }
}

/// Spatial dispersion of the highest-weight state, the minimum over `V_l`.
pub fn madore_min_dispersion(l: usize) -> Result<f64> {
    let fs = madore_fs(l)?;
    Ok(fs.dispersion(&fs.block.highest_weight())?.disp_x2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_zero_is_trivial() {
        let b = build_irrep(0);
        assert!(b.generators().iter().all(|g| g.max_abs() == 0.0));
        assert_eq!(b.dim(), 1);
    }

    #[test]
    fn i_pow_cycles() {
        assert_eq!(i_pow(-1), Complex64::new(0.0, -1.0));
        assert_eq!(i_pow(6), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn madore_values() {
        assert!((madore_min_dispersion(1).unwrap() - 0.5).abs() < 1e-12);
        assert!((madore_min_dispersion(10).unwrap() - 1.0 / 11.0).abs() < 1e-12);
        assert!(madore_fs(0).is_err());
    }

    #[test]
    fn mixture_of_highest_weights_is_strict() {
        let irreps = build_irreps(2);
        let a = BlockState::highest_weight(2, 1).unwrap();
        let b = BlockState::highest_weight(2, 2).unwrap();
        assert!(theorem1_audit(&irreps, &a).abs() < 1e-14);
        let rho = MixedBlockState::new(vec![(0.5, a), (0.5, b)]).unwrap();
        // ⟨L²⟩ = 4, |⟨L⟩| = 3/2
        assert!((theorem1_audit_mixed(&irreps, &rho) - (4.0 - 1.5 * 2.5)).abs() < 1e-13);
    }
}

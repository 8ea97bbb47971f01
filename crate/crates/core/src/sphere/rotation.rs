use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::space::FuzzySphereSpace;
use crate::error::{Error, Result};
use crate::numerics::{ComplexMatrix, StateVector};

/// Euler angles of `g = e^{iφL₃} e^{iθL₂} e^{iψL₃}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerAngles {
    phi: f64,
    theta: f64,
    psi: f64,
}

impl EulerAngles {
    /// `φ, ψ ∈ [0, 2π)`, `θ ∈ [0, π]`.
    pub fn new(phi: f64, theta: f64, psi: f64) -> Result<Self> {
        let period = 0.0..2.0 * PI;
        if !period.contains(&phi) || !period.contains(&psi) || !(0.0..=PI).contains(&theta) {
            return Err(Error::OutOfRange(format!("Euler angles ({phi}, {theta}, {psi}) outside the chart")));
        }
        Ok(Self { phi, theta, psi })
    }

    pub fn identity() -> Self {
        Self { phi: 0.0, theta: 0.0, psi: 0.0 }
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    /// Haar-distributed angles: uniform `φ, ψ` and uniform `cos θ`.
    pub fn haar<R: Rng>(rng: &mut R) -> Self {
        let phi = rng.random::<f64>() * 2.0 * PI;
        let psi = rng.random::<f64>() * 2.0 * PI;
        let theta = (1.0 - 2.0 * rng.random::<f64>()).clamp(-1.0, 1.0).acos();
        Self { phi, theta, psi }
    }
}

pub fn random_rotations(count: usize, seed: u64) -> Vec<EulerAngles> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| EulerAngles::haar(&mut rng)).collect()
}

/// `D(g)`, block diagonal over `l`.
pub fn wigner_rotation(space: &FuzzySphereSpace, g: &EulerAngles) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(space.dim(), space.dim());
    for l in 0..=space.lambda() {
        let block = space.irrep(l).rotation(g);
        let off = space.block_range(l).start;
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                out[(off + i, off + j)] = block[(i, j)];
            }
        }
    }
    out
}

/// `D(g) v` computed blockwise.
pub fn rotate_state(space: &FuzzySphereSpace, g: &EulerAngles, v: &StateVector) -> StateVector {
    let amps = v.amplitudes();
    let mut out: Vec<Complex64> = Vec::with_capacity(amps.len());
    for l in 0..=space.lambda() {
        let r = space.block_range(l);
        out.extend(space.irrep(l).rotation(g).matvec(&amps[r]));
    }
    StateVector::new(out, v.basis()).expect("unitary image of a unit vector")
}

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::C0;
use crate::error::{Error, Result};

/// Which basis a state's amplitudes refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisTag {
    /// `ψ_n`, `n = -Λ..Λ`, stored at index `n + Λ`.
    Circle { lambda: usize },
    /// `ψ_l^m`, stored at index `l² + l + m`.
    Sphere { lambda: usize },
    /// Single spin-`l` irreducible block, `m = -l..l` at index `m + l`.
    Irrep { l: usize },
    Generic,
}

/// Unit vector of complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    basis: BasisTag,
}

impl StateVector {
    /// Normalizes the given amplitudes.
    pub fn new(amplitudes: Vec<Complex64>, basis: BasisTag) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyInput);
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        let amplitudes = amplitudes.into_iter().map(|z| z / norm).collect();
        Ok(Self { amplitudes, basis })
    }

    pub fn basis_vector(dim: usize, index: usize, basis: BasisTag) -> Self {
        let mut a = vec![C0; dim];
        a[index] = Complex64::new(1.0, 0.0);
        Self { amplitudes: a, basis }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }
}

/// Seeded Haar-random unit vector (i.i.d. complex normals, normalized).
pub fn random_state(dim: usize, seed: u64, basis: BasisTag) -> Result<StateVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw(dim, &mut rng, basis)
}

/// `count` independent random states from one seeded stream.
pub fn random_states(dim: usize, count: usize, seed: u64, basis: BasisTag) -> Result<Vec<StateVector>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw(dim, &mut rng, basis)).collect()
}

fn draw(dim: usize, rng: &mut ChaCha8Rng, basis: BasisTag) -> Result<StateVector> {
    if dim == 0 {
        return Err(Error::EmptyInput);
    }
    loop {
        let amps: Vec<Complex64> = (0..dim)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(re, im)
            })
            .collect();
        match StateVector::new(amps, basis) {
            Err(Error::ZeroVector) => continue,
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_normalized() {
        let a = random_state(5, 7, BasisTag::Generic).unwrap();
        let b = random_state(5, 7, BasisTag::Generic).unwrap();
        assert_eq!(a, b);
        assert!((a.inner(&a).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_dimensional_is_phase() {
        let a = random_state(1, 3, BasisTag::Generic).unwrap();
        assert!((a.amplitudes()[0].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(StateVector::new(vec![C0; 3], BasisTag::Generic), Err(Error::ZeroVector));
    }
}

use crate::error::{Error, Result};

/// Smallest admissible energy-scale parameter for cutoff `lambda`.
pub fn k_floor(lambda: usize) -> f64 {
    let l = lambda as f64;
    l * l * (l + 1.0) * (l + 1.0)
}

/// How the energy scale `k` is chosen for a given cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum KPolicy {
    /// The floor `Λ²(Λ+1)²` itself.
    #[default]
    MinKineq,
    /// `Λ⁶`, raised to the floor where it would fall below it (only Λ = 1).
    Lambda6,
    Explicit(f64),
}

impl KPolicy {
    pub fn resolve(&self, lambda: usize) -> Result<f64> {
        if lambda == 0 {
            return Err(Error::InvalidCutoff(0));
        }
        let floor = k_floor(lambda);
        match *self {
            KPolicy::MinKineq => Ok(floor),
            KPolicy::Lambda6 => Ok((lambda as f64).powi(6).max(floor)),
            KPolicy::Explicit(k) => {
                if !k.is_finite() || k < floor {
                    Err(Error::KBelowFloor { k, floor })
                } else {
                    Ok(k)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_values() {
        assert_eq!(KPolicy::MinKineq.resolve(2).unwrap(), 36.0);
        assert_eq!(KPolicy::Lambda6.resolve(3).unwrap(), 729.0);
        assert_eq!(KPolicy::Lambda6.resolve(1).unwrap(), 4.0);
        assert!(KPolicy::Explicit(35.0).resolve(2).is_err());
        assert!(KPolicy::MinKineq.resolve(0).is_err());
    }
}

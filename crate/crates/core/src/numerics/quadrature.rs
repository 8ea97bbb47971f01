use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureKind {
    /// Equally spaced nodes on a period, equal weights.
    PeriodicTrapezoid,
    GaussLegendre,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub kind: QuadratureKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }
}

/// `m` nodes `a + j (b-a)/m` with weights `(b-a)/m`; exact for trigonometric
/// polynomials of degree below `m` on a period `b - a`.
pub fn periodic_trapezoid(m: usize) -> Result<QuadratureRule> {
    make_rule(QuadratureKind::PeriodicTrapezoid, m, (0.0, 2.0 * PI))
}

/// `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    make_rule(QuadratureKind::GaussLegendre, n, (-1.0, 1.0))
}

pub fn make_rule(kind: QuadratureKind, n: usize, (a, b): (f64, f64)) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::InvalidNodeCount(0));
    }
    let len = b - a;
    match kind {
        QuadratureKind::PeriodicTrapezoid => {
            let h = len / n as f64;
            Ok(QuadratureRule { kind, nodes: (0..n).map(|j| a + j as f64 * h).collect(), weights: vec![h; n] })
        }
        QuadratureKind::GaussLegendre => {
            let (x, w) = legendre_nodes(n);
            let half = 0.5 * len;
            let mid = 0.5 * (a + b);
            Ok(QuadratureRule {
                kind,
                nodes: x.iter().map(|t| mid + half * t).collect(),
                weights: w.iter().map(|v| half * v).collect(),
            })
        }
    }
}

/// Legendre P_n and P_n' at `x` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut t = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, t);
            let dt = p / dp;
            t -= dt;
            if dt.abs() <= 1e-14 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, t);
        let wi = 2.0 / ((1.0 - t * t) * dp * dp);
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_nodes_rejected() {
        assert_eq!(gauss_legendre(0), Err(Error::InvalidNodeCount(0)));
        assert_eq!(periodic_trapezoid(0), Err(Error::InvalidNodeCount(0)));
    }

    #[test]
    fn three_point_rule() {
        let r = gauss_legendre(3).unwrap();
        let s = (0.6f64).sqrt();
        assert!((r.nodes[0] + s).abs() < 1e-15 && (r.nodes[2] - s).abs() < 1e-15);
        assert!((r.weights[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn mapped_interval() {
        let r = make_rule(QuadratureKind::GaussLegendre, 4, (0.0, 2.0)).unwrap();
        assert!((r.integrate(|x| x * x * x) - 4.0).abs() < 1e-14);
    }
}

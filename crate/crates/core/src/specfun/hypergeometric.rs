use crate::error::{Error, Result};

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`.
pub fn pochhammer(a: f64, m: usize) -> f64 {
    (0..m).map(|j| a + j as f64).product()
}

/// `F(-n, b; c; z) = Σ_{m=0}^{n} C(n,m) (-1)^m z^m (b)_m / (c)_m`,
/// summed with Kahan compensation.
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut sum = 1.0;
    let mut comp = 0.0;
    let mut term = 1.0;
    for m in 0..n {
        let denom = c + m as f64;
        if denom == 0.0 {
            return Err(Error::PochhammerPole { m: m + 1 });
        }
        let mf = m as f64;
        term *= (mf - n as f64) * (b + mf) / (denom * (mf + 1.0)) * z;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub n: usize,
    pub alpha: u32,
    pub beta: u32,
    pub x: f64,
}

/// `P_n^{(α,β)}(x)` by the standard three-term recurrence in `n`.
pub fn jacobi_poly(p: JacobiParams) -> f64 {
    let (a, b, x) = (p.alpha as f64, p.beta as f64, p.x);
    let mut prev = 1.0;
    if p.n == 0 {
        return prev;
    }
    let mut cur = 0.5 * (a - b + (a + b + 2.0) * x);
    for k in 2..=p.n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `∫_{-1}^{1} (1-x)^α (1+x)^β [P_n^{(α,β)}]² dx` for integer parameters.
pub fn jacobi_norm_sq(n: usize, alpha: u32, beta: u32) -> f64 {
    let (a, b) = (alpha as usize, beta as usize);
    // Γ(n+α+1)Γ(n+β+1) / (n! Γ(n+α+β+1)) as a telescoped ratio of factorials.
    let ratio = super::factorial_ratio(&[n + a, n + b], &[n, n + a + b]);
    2f64.powi((a + b + 1) as i32) / (2 * n + a + b + 1) as f64 * ratio
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_series() {
        assert_eq!(hyp2f1_terminating(0, 3.7, 1.2, 0.4).unwrap(), 1.0);
    }

    #[test]
    fn pole_named() {
        // (c)_m vanishes at m = 2 for c = -1.
        assert_eq!(hyp2f1_terminating(3, 1.0, -1.0, 0.5), Err(Error::PochhammerPole { m: 2 }));
    }

    #[test]
    fn low_degree_jacobi() {
        let p = |n, x| jacobi_poly(JacobiParams { n, alpha: 0, beta: 0, x });
        assert_eq!(p(0, 0.3), 1.0);
        assert!((p(1, 0.3) - 0.3).abs() < 1e-15);
        assert!((p(2, 0.3) - 0.5 * (3.0 * 0.09 - 1.0)).abs() < 1e-15);
    }
}

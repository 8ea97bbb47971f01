use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::C0;
use crate::error::{Error, Result};

/// Relative tolerance factor applied to `max|A|`.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

const MAX_JACOBI_SWEEPS: usize = 100;
const MAX_QL_ITERATIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpectrumFlags {
    /// Spectrum is invariant under `λ -> -λ`.
    pub symmetric_spectrum: bool,
    /// No two eigenvalues closer than the tolerance.
    pub simple: bool,
    /// Set only by callers that compare against a neighbouring spectrum.
    pub interlaces_previous: Option<bool>,
}

/// Eigenvalues in descending order with matching unit eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
    /// Largest `|A v - λ v|` entry over all pairs.
    pub residual: f64,
    pub flags: SpectrumFlags,
}

impl SpectrumReport {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, i: usize) -> Vec<Complex64> {
        self.eigenvectors.column(i)
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Weak interlacing against the spectrum of a smaller matrix: with both
    /// sorted descending and `d = larger.len() - smaller.len()`,
    /// `larger[i] >= smaller[i] >= larger[i + d]`, and no open gap of the
    /// larger spectrum holds more than one smaller eigenvalue.
    pub fn interlaces(larger: &[f64], smaller: &[f64], tol: f64) -> bool {
        if smaller.len() > larger.len() {
            return false;
        }
        let d = larger.len() - smaller.len();
        let bracketed = smaller
            .iter()
            .enumerate()
            .all(|(i, &s)| larger[i] >= s - tol && s >= larger[i + d] - tol);
        let gaps_ok = larger.windows(2).all(|w| {
            smaller.iter().filter(|&&s| s < w[0] - tol && s > w[1] + tol).count() <= 1
        });
        bracketed && gaps_ok
    }
}

fn flags_for(eigenvalues: &[f64], tol: f64) -> SpectrumFlags {
    let n = eigenvalues.len();
    let symmetric_spectrum = (0..n).all(|i| (eigenvalues[i] + eigenvalues[n - 1 - i]).abs() <= tol);
    let simple = eigenvalues.windows(2).all(|w| w[0] - w[1] > tol);
    SpectrumFlags { symmetric_spectrum, simple, interlaces_previous: None }
}

/// Rotates a vector's phase so its largest-modulus component (first on ties)
/// is real and positive.
pub(crate) fn fix_phase(v: &mut [Complex64]) {
    let mut best = 0;
    let mut best_abs = -1.0;
    for (i, z) in v.iter().enumerate() {
        let a = z.norm();
        if a > best_abs * (1.0 + 1e-12) {
            best = i;
            best_abs = a;
        }
    }
    if best_abs > 0.0 {
        let phase = v[best].conj() / best_abs;
        for z in v.iter_mut() {
            *z *= phase;
        }
    }
}

fn sort_and_pack(values: Vec<f64>, vectors: Vec<Vec<Complex64>>, a_apply: impl Fn(&[Complex64]) -> Vec<Complex64>, scale: f64) -> SpectrumReport {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    let mut residual: f64 = 0.0;
    for (col, &i) in order.iter().enumerate() {
        let mut v = vectors[i].clone();
        fix_phase(&mut v);
        let av = a_apply(&v);
        for (r, (avr, vr)) in av.iter().zip(&v).enumerate() {
            residual = residual.max((avr - vr * eigenvalues[col]).norm());
            eigenvectors[(r, col)] = *vr;
        }
    }
    let flags = flags_for(&eigenvalues, DEFAULT_REL_TOL * scale.max(f64::MIN_POSITIVE));
    SpectrumReport { eigenvalues, eigenvectors, residual, flags }
}

/// Cyclic Jacobi diagonalization of a dense Hermitian matrix.
pub fn hermitian_eigen(a: &ComplexMatrix) -> Result<SpectrumReport> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: a.cols() });
    }
    let n = a.rows();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let scale = a.max_abs();
    let herm = a.hermitian_residual();
    if herm > DEFAULT_REL_TOL * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::NotHermitian { residual: herm });
    }

    // Work on the upper triangle, mirrored.
    let mut m = ComplexMatrix::from_fn(n, n, |i, j| {
        if i < j {
            a[(i, j)]
        } else if i > j {
            a[(j, i)].conj()
        } else {
            Complex64::new(a[(i, i)].re, 0.0)
        }
    });
    let mut v = ComplexMatrix::identity(n);
    let fro = m.frobenius();

    let off = |m: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += m[(i, j)].norm_sqr();
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let o = off(&m);
        if o <= f64::EPSILON * fro || o == 0.0 {
            break;
        }
        if sweeps == MAX_JACOBI_SWEEPS {
            return Err(Error::NoConvergence { iterations: sweeps, residual: o });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let g = apq.norm();
                if g == 0.0 || g <= 1e-3 * f64::EPSILON * fro {
                    continue;
                }
                let phase = apq.conj() / g; // e^{-i arg apq}
                let theta = (m[(q, q)].re - m[(p, p)].re) / (2.0 * g);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + theta.hypot(1.0))
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // U = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on (p, q)
                let upp = Complex64::new(c, 0.0);
                let upq = Complex64::new(s, 0.0);
                let uqp = phase * (-s);
                let uqq = phase * c;
                for r in 0..n {
                    let (arp, arq) = (m[(r, p)], m[(r, q)]);
                    m[(r, p)] = arp * upp + arq * uqp;
                    m[(r, q)] = arp * upq + arq * uqq;
                    let (vrp, vrq) = (v[(r, p)], v[(r, q)]);
                    v[(r, p)] = vrp * upp + vrq * uqp;
                    v[(r, q)] = vrp * upq + vrq * uqq;
                }
                for r in 0..n {
                    let (apr, aqr) = (m[(p, r)], m[(q, r)]);
                    m[(p, r)] = upp.conj() * apr + uqp.conj() * aqr;
                    m[(q, r)] = upq.conj() * apr + uqq.conj() * aqr;
                }
                m[(p, q)] = C0;
                m[(q, p)] = C0;
                m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);
            }
        }
    }

    let values: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    let vectors: Vec<Vec<Complex64>> = (0..n).map(|j| v.column(j)).collect();
    Ok(sort_and_pack(values, vectors, |x| a.matvec(x), scale))
}

/// Implicit-shift QL for a real symmetric tridiagonal matrix given by its
/// diagonal and its off-diagonal (`off[i]` couples `i` and `i + 1`).
pub fn sym_tridiag_eigen(diag: &[f64], off: &[f64]) -> Result<SpectrumReport> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if off.len() + 1 != n {
        return Err(Error::DimensionMismatch { expected: n - 1, found: off.len() });
    }
    if diag.iter().chain(off).any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let scale = diag.iter().chain(off).fold(0.0_f64, |a, x| a.max(x.abs()));

    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m] == 0.0 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence { iterations: iter, residual: e[l].abs() });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for row in z.iter_mut() {
                    let f = row[i + 1];
                    row[i + 1] = s * row[i] + c * f;
                    row[i] = c * row[i] - s * f;
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let vectors: Vec<Vec<Complex64>> =
        (0..n).map(|j| (0..n).map(|i| Complex64::new(z[i][j], 0.0)).collect()).collect();
    let apply = |x: &[Complex64]| -> Vec<Complex64> {
        (0..n)
            .map(|i| {
                let mut acc = x[i] * diag[i];
                if i > 0 {
                    acc += x[i - 1] * off[i - 1];
                }
                if i + 1 < n {
                    acc += x[i + 1] * off[i];
                }
                acc
            })
            .collect()
    };
    Ok(sort_and_pack(d, vectors, apply, scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_complex() {
        // [[1, i], [-i, 1]] has eigenvalues 2 and 0.
        let a = ComplexMatrix::from_vec(
            2,
            2,
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0), Complex64::new(1.0, 0.0)],
        )
        .unwrap();
        let r = hermitian_eigen(&a).unwrap();
        assert!((r.eigenvalues[0] - 2.0).abs() < 1e-14);
        assert!(r.eigenvalues[1].abs() < 1e-14);
        assert!(r.residual < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut a = ComplexMatrix::identity(2);
        a[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(matches!(hermitian_eigen(&a), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn diagonal_input_sorted() {
        let a = ComplexMatrix::from_real_diagonal(&[1.0, 3.0, 2.0]);
        let r = hermitian_eigen(&a).unwrap();
        assert_eq!(r.eigenvalues, vec![3.0, 2.0, 1.0]);
        assert_eq!(r.eigenvector(0)[1], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn path_graph_tridiagonal() {
        // 2 cos(hπ/(n+1)) for the adjacency matrix of a path.
        let n = 9;
        let r = sym_tridiag_eigen(&vec![0.0; n], &vec![1.0; n - 1]).unwrap();
        for (h, lam) in r.eigenvalues.iter().enumerate() {
            let exact = 2.0 * ((h + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((lam - exact).abs() < 1e-13);
        }
        assert!(r.flags.symmetric_spectrum && r.flags.simple);
        assert!(r.residual < 1e-13);
    }

    #[test]
    fn interlacing_rule() {
        assert!(SpectrumReport::interlaces(&[3.0, 1.0, -1.0, -3.0], &[2.0, -2.0], 1e-12));
        assert!(!SpectrumReport::interlaces(&[3.0, 1.0, -1.0, -3.0], &[2.5, 2.0], 1e-12));
    }
}

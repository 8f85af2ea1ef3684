//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `h_pq` with a diagonal
//! unitary and then applies the classic real plane rotation, so the diagonal
//! stays exactly real throughout. Cost is `O(n³)` per sweep; convergence is
//! quadratic once the off-diagonal mass is small. Intended for `n ≤ 8`.

use num_complex::Complex64;

use super::{ComplexMatrix, HERMITIAN_TOL};
use crate::error::{Error, Result};

/// Sweep budget before giving up with [`Error::NoConvergence`].
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order; column `k` of `eigenvectors` pairs with
/// `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenSystem {
    /// `max_k ‖H v_k − λ_k v_k‖∞`.
    pub fn residual(&self, h: &ComplexMatrix) -> f64 {
        let mut worst = 0.0_f64;
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let v = self.eigenvectors.column(k);
            let hv = h.apply(&v);
            for (a, b) in hv.iter().zip(&v) {
                worst = worst.max((a - b * lambda).norm());
            }
        }
        worst
    }

    /// Rebuilds `V diag(f(λ)) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &w) in weights.iter().enumerate() {
                    if w != 0.0 {
                        acc += v[(i, k)] * v[(j, k)].conj() * w;
                    }
                }
                if i == j {
                    out[(i, i)] = Complex64::new(acc.re, 0.0);
                } else {
                    out[(i, j)] = acc;
                    out[(j, i)] = acc.conj();
                }
            }
        }
        out
    }
}

/// Full spectral decomposition of a Hermitian matrix.
pub fn hermitian_eigensystem(h: &ComplexMatrix) -> Result<EigenSystem> {
    let deviation = h.hermiticity_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let n = h.dim();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm())
            .sum();
        if off == 0.0 {
            converged = true;
            break;
        }
        // Skip small pivots during the first sweeps, as in the classic cyclic scheme.
        let threshold = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in (p + 1)..n {
                let r = a[(p, q)].norm();
                if r == 0.0 {
                    continue;
                }
                let g = 100.0 * r;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = Complex64::new(0.0, 0.0);
                    a[(q, p)] = Complex64::new(0.0, 0.0);
                    continue;
                }
                if r <= threshold {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let columns: Vec<Vec<Complex64>> = order.iter().map(|&k| v.column(k)).collect();
    Ok(EigenSystem {
        eigenvalues,
        eigenvectors: ComplexMatrix::from_columns(&columns),
    })
}

/// Ascending eigenvalues only.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    hermitian_eigensystem(h).map(|es| es.eigenvalues)
}

/// Annihilates `a[(p, q)]` with `a ← J† a J`, `v ← v J`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim();
    let h = a[(p, q)];
    let r = h.norm();
    let phase = h / r;
    let phase_conj = phase.conj();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = diag(1, conj(phase)) · [[c, s], [-s, c]] restricted to (p, q).
    let j_qp = -phase_conj * s;
    let j_qq = phase_conj * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * j_qp;
        a[(k, q)] = akp * s + akq * j_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * j_qp.conj();
        a[(q, k)] = apk * s + aqk * j_qq.conj();
    }
    a[(p, p)] = Complex64::new(app - t * r, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * r, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * j_qp;
        v[(k, q)] = vkp * s + vkq * j_qq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    #[test]
    fn sigma_z_spectrum() {
        let es = hermitian_eigensystem(&pauli::z()).unwrap();
        assert_eq!(es.eigenvalues, vec![-1.0, 1.0]);
    }

    #[test]
    fn identity_spectrum_and_orthonormal_columns() {
        let es = hermitian_eigensystem(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(es.eigenvalues, vec![1.0; 4]);
        assert!(es.eigenvectors.unitarity_deviation() < 1e-15);
    }

    #[test]
    fn sigma_x_matches_closed_form_quadratic() {
        // For [[a, b], [b*, d]]: λ = (a+d)/2 ∓ sqrt(((a-d)/2)² + |b|²).
        let (a, d, b) = (0.0_f64, 0.0_f64, 1.0_f64);
        let mid = (a + d) / 2.0;
        let rad = (((a - d) / 2.0).powi(2) + b * b).sqrt();
        let es = hermitian_eigensystem(&pauli::x()).unwrap();
        assert!((es.eigenvalues[0] - (mid - rad)).abs() < 1e-15);
        assert!((es.eigenvalues[1] - (mid + rad)).abs() < 1e-15);

        // Eigenvectors (|0> ∓ |1>)/√2 up to a global phase.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let minus = es.eigenvectors.column(0);
        let plus = es.eigenvectors.column(1);
        let overlap = |v: &[Complex64], w: [f64; 2]| (v[0] * w[0] + v[1] * w[1]).norm();
        assert!((overlap(&minus, [h, -h]) - 1.0).abs() < 1e-14);
        assert!((overlap(&plus, [h, h]) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_pivot_is_handled() {
        // σ_y has purely imaginary off-diagonals.
        let es = hermitian_eigensystem(&pauli::y()).unwrap();
        assert!((es.eigenvalues[0] + 1.0).abs() < 1e-15);
        assert!((es.eigenvalues[1] - 1.0).abs() < 1e-15);
        assert!(es.residual(&pauli::y()) < 1e-15);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real(&[1.0, 2.0, 0.0, 1.0]);
        assert!(matches!(
            hermitian_eigensystem(&m),
            Err(Error::NotHermitian { .. })
        ));
    }
}

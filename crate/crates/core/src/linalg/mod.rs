//! Dense complex linear algebra for systems of up to three qubits.
//!
//! Qubit 0 is the leftmost ket label and the most significant bit of a
//! row index, so `|q0 q1 q2>` sits at row `4·q0 + 2·q1 + q2`.

mod eigen;
mod matrix;

pub use eigen::{hermitian_eigensystem, hermitian_eigenvalues, EigenSystem, MAX_SWEEPS};
pub use matrix::ComplexMatrix;

use crate::error::{Error, Result};

/// Gate for `max |H − H†|`.
pub const HERMITIAN_TOL: f64 = 1e-9;
/// Gate for `max |U†U − I|`.
pub const UNITARY_TOL: f64 = 1e-10;
/// Eigenvalues in `[−NEGATIVE_CLAMP, 0)` are treated as zero.
pub const NEGATIVE_CLAMP: f64 = 1e-10;

pub mod pauli {
    use super::ComplexMatrix;
    use num_complex::Complex64;

    pub fn x() -> ComplexMatrix {
        ComplexMatrix::from_real(&[0.0, 1.0, 1.0, 0.0])
    }

    pub fn y() -> ComplexMatrix {
        ComplexMatrix::from_vec(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ])
    }

    pub fn z() -> ComplexMatrix {
        ComplexMatrix::from_real(&[1.0, 0.0, 0.0, -1.0])
    }

    /// `[σ_x, σ_y, σ_z]`.
    pub fn all() -> [ComplexMatrix; 3] {
        [x(), y(), z()]
    }
}

/// Kronecker product `A ⊗ B`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.dim(), b.dim());
    let mut out = ComplexMatrix::zeros(na * nb);
    for i in 0..na {
        for j in 0..na {
            let aij = a[(i, j)];
            for k in 0..nb {
                for l in 0..nb {
                    out[(i * nb + k, j * nb + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Number of qubits `n` with `dim = 2^n`, if `dim` is a power of two.
pub fn qubit_count(dim: usize) -> Option<usize> {
    dim.is_power_of_two().then(|| dim.trailing_zeros() as usize)
}

/// Traces out qubit `traced` of an `n`-qubit operator.
pub fn partial_trace(m: &ComplexMatrix, traced: usize) -> Result<ComplexMatrix> {
    let qubits = qubit_count(m.dim()).ok_or(Error::DimensionMismatch {
        expected: m.dim().next_power_of_two(),
        found: m.dim(),
    })?;
    if qubits < 2 || traced >= qubits {
        return Err(Error::BadIndex {
            index: traced,
            qubits,
        });
    }
    let bit = qubits - 1 - traced;
    let low_mask = (1usize << bit) - 1;
    let expand = |reduced: usize, b: usize| ((reduced & !low_mask) << 1) | (b << bit) | (reduced & low_mask);

    let out_dim = m.dim() / 2;
    let mut out = ComplexMatrix::zeros(out_dim);
    for i in 0..out_dim {
        for j in 0..out_dim {
            out[(i, j)] = m[(expand(i, 0), expand(j, 0))] + m[(expand(i, 1), expand(j, 1))];
        }
    }
    Ok(out)
}

/// `U† M U`: entry `(i, j)` is `<u_i|M|u_j>` for the columns `u_i` of `U`.
pub fn conjugate_by_unitary(m: &ComplexMatrix, u: &ComplexMatrix) -> Result<ComplexMatrix> {
    if m.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: u.dim(),
        });
    }
    let deviation = u.unitarity_deviation();
    if deviation > UNITARY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(&(&u.adjoint() * m) * u)
}

/// Principal square root of a positive semidefinite Hermitian matrix.
pub fn psd_sqrt(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let es = hermitian_eigensystem(h)?;
    let lowest = es.eigenvalues[0];
    if lowest < -NEGATIVE_CLAMP {
        return Err(Error::NotPsd { eigenvalue: lowest });
    }
    Ok(es.reconstruct_with(|l| l.max(0.0).sqrt()))
}

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigensystem, hermitian_eigenvalues, kron, pauli, ComplexMatrix};
use crate::states::DensityMatrix;

/// Largest entry allowed off the diagonal and anti-diagonal of an X-state.
pub const X_STATE_TOL: f64 = 1e-10;

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() == 4 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        })
    }
}

/// `(σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y)`, computed in computational coordinates.
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubits(rho)?;
    let comp = rho.to_computational()?;
    let yy = kron(&pauli::y(), &pauli::y());
    Ok(&(&yy * &comp.matrix().conj()) * &yy)
}

/// Eigenvalues of `ρ` at or below this are treated as exact zeros when
/// factoring `ρ = W W†`.
pub const RANK_CUTOFF: f64 = 1e-14;

/// Two-qubit concurrence `max(0, λ₁ − λ₂ − λ₃ − λ₄)`.
///
/// The `λ` are the square roots of the eigenvalues of `ρρ̃`, equivalently of
/// the Hermitian `√ρ ρ̃ √ρ`. They are obtained as the singular values of
/// `τ = Wᵀ (σ_y ⊗ σ_y) W`, where `ρ = W W†` keeps only the nonzero part of
/// the spectrum; the singular values come from the Hermitian embedding
/// `[[0, τ], [τ†, 0]]`, whose eigenvalues are `±λ` with absolute (not
/// square-root) accuracy. States in a non-computational basis are first
/// rewritten in the computational basis, where the spin flip is defined.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let comp = rho.to_computational()?;
    let es = hermitian_eigensystem(comp.matrix())?;
    let columns: Vec<Vec<Complex64>> = es
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &mu)| mu > RANK_CUTOFF)
        .map(|(k, &mu)| es.eigenvectors.column(k).into_iter().map(|z| z * mu.sqrt()).collect())
        .collect();
    let r = columns.len();
    let yy = kron(&pauli::y(), &pauli::y());
    // τ_kl = w_kᵀ Y w_l
    let mut embed = ComplexMatrix::zeros(2 * r);
    for k in 0..r {
        let yw = yy.apply(&columns[k]);
        for l in 0..r {
            let tau: Complex64 = columns[l].iter().zip(&yw).map(|(a, b)| a * b).sum();
            embed[(k, r + l)] = tau;
            embed[(r + l, k)] = tau.conj();
        }
    }
    let mut lambdas: Vec<f64> = hermitian_eigenvalues(&embed)?.into_iter().rev().take(r).collect();
    lambdas.resize(4, 0.0);
    let value = lambdas[0] - lambdas[1..].iter().map(|l| l.max(0.0)).sum::<f64>();
    Ok(value.clamp(0.0, 1.0))
}

/// Closed form for X-shaped states: `2·max(0, |f| − √(ad), |g| − √(bc))`,
/// with `a..d` the diagonal, `f = ρ₁₂` and `g = ρ₀₃`.
pub fn concurrence_xstate(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let comp = rho.to_computational()?;
    let m = comp.matrix();
    let mut stray = 0.0_f64;
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                stray = stray.max(m[(i, j)].norm());
            }
        }
    }
    if stray > X_STATE_TOL {
        return Err(Error::NotXState { magnitude: stray });
    }
    let diag = |k: usize| m[(k, k)].re.max(0.0);
    let (a, b, c, d) = (diag(0), diag(1), diag(2), diag(3));
    let f = m[(1, 2)].norm();
    let g = m[(0, 3)].norm();
    let value = 2.0 * (f - (a * d).sqrt()).max(g - (b * c).sqrt()).max(0.0);
    Ok(value.min(1.0))
}

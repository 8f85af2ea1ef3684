use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, kron, pauli, ComplexMatrix, NEGATIVE_CLAMP};
use crate::states::DensityMatrix;

/// `t[s][u] = Tr(ρ σ_s ⊗ σ_u)` for `s, u ∈ {x, y, z}`, plus the eigenvalues
/// of `TᵀT` in descending order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTensor {
    pub t: [[f64; 3]; 3],
    pub u_eigs: [f64; 3],
}

/// `N = Σ √u_i`, fidelity `(1 + N/3)/2`; useful iff `N > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Teleportation {
    pub n_value: f64,
    pub fidelity: f64,
    pub useful: bool,
}

/// `M = u₁ + u₂`; the CHSH inequality is violated iff `M > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chsh {
    pub m_value: f64,
    pub violates: bool,
}

pub fn correlation_tensor(rho: &DensityMatrix) -> Result<CorrelationTensor> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let comp = rho.to_computational()?;
    let paulis = pauli::all();
    let mut t = [[0.0; 3]; 3];
    for (s, sigma_s) in paulis.iter().enumerate() {
        for (u, sigma_u) in paulis.iter().enumerate() {
            let value = (comp.matrix() * &kron(sigma_s, sigma_u)).trace();
            debug_assert!(value.im.abs() <= 1e-10, "Tr(ρ σσ) has imaginary part {}", value.im);
            t[s][u] = value.re;
        }
    }

    let mut gram = ComplexMatrix::zeros(3);
    for i in 0..3 {
        for j in 0..3 {
            gram[(i, j)].re = (0..3).map(|k| t[k][i] * t[k][j]).sum();
        }
    }
    let eigs = hermitian_eigenvalues(&gram)?;
    debug_assert!(eigs[0] >= -NEGATIVE_CLAMP);
    // Ascending from the solver; store descending.
    let u_eigs = [eigs[2].max(0.0), eigs[1].max(0.0), eigs[0].max(0.0)];
    Ok(CorrelationTensor { t, u_eigs })
}

impl CorrelationTensor {
    pub fn teleportation(&self) -> Teleportation {
        let n_value: f64 = self.u_eigs.iter().map(|u| u.sqrt()).sum();
        Teleportation {
            n_value,
            fidelity: 0.5 * (1.0 + n_value / 3.0),
            useful: n_value > 1.0,
        }
    }

    pub fn chsh(&self) -> Chsh {
        let m_value = self.u_eigs[0] + self.u_eigs[1];
        Chsh {
            m_value,
            violates: m_value > 1.0,
        }
    }
}

pub fn teleportation_fidelity(rho: &DensityMatrix) -> Result<Teleportation> {
    Ok(correlation_tensor(rho)?.teleportation())
}

pub fn chsh_m(rho: &DensityMatrix) -> Result<Chsh> {
    Ok(correlation_tensor(rho)?.chsh())
}

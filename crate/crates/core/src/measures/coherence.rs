use crate::error::Result;
use crate::linalg::hermitian_eigenvalues;
use crate::states::{BasisSpec, DensityMatrix};

/// Sum of `|ρ_ij|` over `i ≠ j`, with `ρ` written in basis `basis`.
pub fn l1_coherence(rho: &DensityMatrix, basis: &BasisSpec) -> Result<f64> {
    let r = in_basis(rho, basis)?;
    let n = r.dim();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                total += r.get(i, j).norm();
            }
        }
    }
    Ok(total)
}

/// `S(ρ_d) − S(ρ)` where `ρ_d` keeps only the diagonal in `basis`; entropies in bits.
pub fn relative_entropy_coherence(rho: &DensityMatrix, basis: &BasisSpec) -> Result<f64> {
    let r = in_basis(rho, basis)?;
    let dephased: Vec<f64> = r.matrix().diagonal().iter().map(|z| z.re).collect();
    let spectrum = hermitian_eigenvalues(r.matrix())?;
    Ok((shannon_entropy(&dephased) - shannon_entropy(&spectrum)).max(0.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(shannon_entropy(&hermitian_eigenvalues(rho.matrix())?))
}

/// `−Σ p log₂ p` with `0·log 0 = 0`; tiny negative weights count as zero.
pub(crate) fn shannon_entropy(weights: &[f64]) -> f64 {
    weights
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

fn in_basis<'a>(rho: &'a DensityMatrix, basis: &BasisSpec) -> Result<std::borrow::Cow<'a, DensityMatrix>> {
    if rho.basis() == basis {
        Ok(std::borrow::Cow::Borrowed(rho))
    } else {
        rho.express_in_basis(basis).map(std::borrow::Cow::Owned)
    }
}

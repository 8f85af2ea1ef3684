//! Coherence, entanglement, mixedness, teleportation and nonlocality measures.
//!
//! Basis-dependent quantities (the two coherences) are evaluated in the
//! requested basis. Everything else is evaluated on the computational-basis
//! representation, so it does not depend on how the input was labelled.

mod coherence;
mod concurrence;
mod correlation;

pub use coherence::{l1_coherence, relative_entropy_coherence, von_neumann_entropy};
pub use concurrence::{concurrence, concurrence_xstate, spin_flip, RANK_CUTOFF, X_STATE_TOL};
pub use correlation::{
    chsh_m, correlation_tensor, teleportation_fidelity, Chsh, CorrelationTensor, Teleportation,
};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};
use crate::states::{BasisSpec, DensityMatrix};

/// Partial-transpose eigenvalues below `−PPT_TOL` signal entanglement.
pub const PPT_TOL: f64 = 1e-10;

/// `d/(d − 1) · (1 − Tr ρ²)`.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    let d = rho.dim() as f64;
    let purity: f64 = rho.matrix().entries().iter().map(|z| z.norm_sqr()).sum();
    (d / (d - 1.0) * (1.0 - purity)).clamp(0.0, 1.0)
}

/// Partial transpose over the second qubit.
pub fn partial_transpose(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let comp = rho.to_computational()?;
    let m = comp.matrix();
    let mut out = ComplexMatrix::zeros(4);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    out[(2 * a + b, 2 * c + d)] = m[(2 * a + d, 2 * c + b)];
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptCheck {
    pub min_eigenvalue: f64,
    pub entangled: bool,
}

pub fn ppt_check(rho: &DensityMatrix) -> Result<PptCheck> {
    let min_eigenvalue = hermitian_eigenvalues(&partial_transpose(rho)?)?[0];
    Ok(PptCheck {
        min_eigenvalue,
        entangled: min_eigenvalue < -PPT_TOL,
    })
}

/// Every measure for one two-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub c_l1: f64,
    pub c_rel_ent: f64,
    pub concurrence: f64,
    pub linear_entropy: f64,
    pub n_value: f64,
    pub teleport_fidelity: f64,
    pub useful_for_teleportation: bool,
    pub chsh_m: f64,
    pub violates_chsh: bool,
    pub ppt_min_eigenvalue: f64,
    pub is_ppt_separable_candidate: bool,
    pub basis_used: BasisSpec,
}

impl MeasureReport {
    /// `(name, value)` pairs in a fixed order; booleans map to 0/1.
    pub fn fields(&self) -> [(&'static str, f64); 11] {
        let flag = |b: bool| if b { 1.0 } else { 0.0 };
        [
            ("c_l1", self.c_l1),
            ("c_rel_ent", self.c_rel_ent),
            ("concurrence", self.concurrence),
            ("linear_entropy", self.linear_entropy),
            ("n_value", self.n_value),
            ("teleport_fidelity", self.teleport_fidelity),
            ("useful_for_teleportation", flag(self.useful_for_teleportation)),
            ("chsh_m", self.chsh_m),
            ("violates_chsh", flag(self.violates_chsh)),
            ("ppt_min_eigenvalue", self.ppt_min_eigenvalue),
            ("is_ppt_separable_candidate", flag(self.is_ppt_separable_candidate)),
        ]
    }
}

pub fn full_report(rho: &DensityMatrix, basis: &BasisSpec) -> Result<MeasureReport> {
    let comp = rho.to_computational()?;
    let tensor = correlation_tensor(&comp)?;
    let teleport = tensor.teleportation();
    let chsh = tensor.chsh();
    let ppt = ppt_check(&comp)?;
    Ok(MeasureReport {
        c_l1: l1_coherence(rho, basis)?,
        c_rel_ent: relative_entropy_coherence(rho, basis)?,
        concurrence: concurrence(&comp)?,
        linear_entropy: linear_entropy(&comp),
        n_value: teleport.n_value,
        teleport_fidelity: teleport.fidelity,
        useful_for_teleportation: teleport.useful,
        chsh_m: chsh.m_value,
        violates_chsh: chsh.violates,
        ppt_min_eigenvalue: ppt.min_eigenvalue,
        is_ppt_separable_candidate: !ppt.entangled,
        basis_used: basis.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, class1_state, class2_state, family_state, BellKind, Ket, StateFamily};

    #[test]
    fn linear_entropy_examples() {
        let c1 = class1_state(BellKind::PhiPlus, Ket::K00, 0.5).unwrap();
        assert!((linear_entropy(&c1) - 1.0 / 3.0).abs() < 1e-15);
        let c2 = class2_state(BellKind::PhiPlus, Ket::K01, 0.5).unwrap();
        assert!((linear_entropy(&c2) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(linear_entropy(&bell_state(BellKind::PsiMinus)), 0.0);
        let w = family_state(&StateFamily::WReduced).unwrap();
        assert!((linear_entropy(&w) - 16.0 / 27.0).abs() < 1e-15);
    }

    #[test]
    fn ppt_examples() {
        let ppt = ppt_check(&bell_state(BellKind::PhiPlus)).unwrap();
        assert!((ppt.min_eigenvalue + 0.5).abs() < 1e-12);
        assert!(ppt.entangled);

        let mixed = DensityMatrix::computational(ComplexMatrix::identity(4).scale(0.25)).unwrap();
        let ppt = ppt_check(&mixed).unwrap();
        assert!((ppt.min_eigenvalue - 0.25).abs() < 1e-15);
        assert!(!ppt.entangled);

        assert!(!ppt_check(&class1_state(BellKind::PhiPlus, Ket::K00, 0.0).unwrap())
            .unwrap()
            .entangled);
        assert!(ppt_check(&class1_state(BellKind::PhiPlus, Ket::K00, 0.5).unwrap())
            .unwrap()
            .entangled);
    }

    #[test]
    fn report_for_pure_bell_endpoint() {
        let rho = class1_state(BellKind::PhiPlus, Ket::K00, 1.0).unwrap();
        let r = full_report(&rho, &BasisSpec::Computational).unwrap();
        assert!((r.c_l1 - 1.0).abs() < 1e-12);
        assert!((r.concurrence - 1.0).abs() < 1e-9);
        assert!(r.linear_entropy.abs() < 1e-12);
        assert!((r.teleport_fidelity - 1.0).abs() < 1e-12);
        assert!((r.chsh_m - 2.0).abs() < 1e-12);
        assert!(r.violates_chsh && r.useful_for_teleportation && !r.is_ppt_separable_candidate);
    }

    #[test]
    fn report_for_mix_w_wtilde() {
        let p: f64 = 0.3;
        let rho = family_state(&StateFamily::MixWWTilde { p }).unwrap();
        let r = full_report(&rho, &BasisSpec::Computational).unwrap();
        assert!((r.c_l1 - 2.0 / 3.0).abs() < 1e-12);
        assert!((r.concurrence - (2.0 / 3.0 - 2.0 * (p * (1.0 - p)).sqrt() / 3.0)).abs() < 1e-9);
        assert!((r.linear_entropy - 8.0 / 27.0 * (2.0 + p - p * p)).abs() < 1e-12);
        assert!((r.teleport_fidelity - 7.0 / 9.0).abs() < 1e-12);
    }
}

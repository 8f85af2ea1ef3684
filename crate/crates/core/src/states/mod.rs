//! Validated density matrices, reference bases and the state families.

mod families;
mod io;

pub use families::{
    bell_state, bell_vector, class1_state, class2_state, family_state, tripartite_state,
    tripartite_vector, werner_state, BellKind, Ket, StarCut, StateFamily, TripartiteKind,
    STAR_CENTRAL_QUBIT, STAR_PERIPHERAL_QUBIT,
};
pub use io::{load_density_matrix, parse_density_matrix, save_density_matrix, write_density_matrix};

use std::fmt;
use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Invariant, Result};
use crate::linalg::{self, conjugate_by_unitary, ComplexMatrix, UNITARY_TOL};

/// Tolerance for every density-matrix invariant (hermiticity, trace, positivity).
pub const VALIDATION_TOL: f64 = 1e-9;

/// Reference basis in which a density matrix's entries are expressed.
#[derive(Debug, Clone, PartialEq)]
pub enum BasisSpec {
    /// `{|00>, |01>, |10>, |11>}` (or the analogous product basis).
    Computational,
    /// `{φ+, ψ+, ψ−, φ−}` with real coefficients; two qubits only.
    Bell,
    /// Columns are the basis vectors in computational coordinates.
    Custom(ComplexMatrix),
}

impl BasisSpec {
    pub fn custom(unitary: ComplexMatrix) -> Result<Self> {
        let deviation = unitary.unitarity_deviation();
        if deviation > UNITARY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(BasisSpec::Custom(unitary))
    }

    pub fn name(&self) -> &'static str {
        match self {
            BasisSpec::Computational => "computational",
            BasisSpec::Bell => "bell",
            BasisSpec::Custom(_) => "custom",
        }
    }

    /// Change-of-basis matrix whose columns are the basis vectors.
    pub fn unitary(&self, dim: usize) -> Result<ComplexMatrix> {
        match self {
            BasisSpec::Computational => Ok(ComplexMatrix::identity(dim)),
            BasisSpec::Bell if dim == 4 => Ok(bell_basis_matrix()),
            BasisSpec::Bell => Err(Error::DimensionMismatch {
                expected: 4,
                found: dim,
            }),
            BasisSpec::Custom(u) if u.dim() == dim => Ok(u.clone()),
            BasisSpec::Custom(u) => Err(Error::DimensionMismatch {
                expected: dim,
                found: u.dim(),
            }),
        }
    }
}

impl fmt::Display for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Columns `φ+, ψ+, ψ−, φ−` in computational coordinates.
pub fn bell_basis_matrix() -> ComplexMatrix {
    let h = FRAC_1_SQRT_2;
    ComplexMatrix::from_real(&[
        h, 0.0, 0.0, h, //
        0.0, h, h, 0.0, //
        0.0, h, -h, 0.0, //
        h, 0.0, 0.0, -h,
    ])
}

/// Hermitian, unit-trace, positive semidefinite matrix on `n` qubits,
/// tagged with the basis its entries are written in.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    qubits: usize,
    basis: BasisSpec,
}

impl DensityMatrix {
    /// Validates every invariant and stores the exact Hermitian part.
    pub fn new(matrix: ComplexMatrix, basis: BasisSpec) -> Result<Self> {
        let qubits = linalg::qubit_count(matrix.dim()).ok_or_else(|| Error::Validation {
            invariant: Invariant::Dimension,
            detail: format!("dimension {} is not a power of two", matrix.dim()),
        })?;
        if !matrix.is_finite() {
            return Err(Error::Validation {
                invariant: Invariant::Finite,
                detail: "matrix contains NaN or infinite entries".into(),
            });
        }
        let deviation = matrix.hermiticity_deviation();
        if deviation > VALIDATION_TOL {
            return Err(Error::Validation {
                invariant: Invariant::Hermiticity,
                detail: format!("max |rho - rho^dagger| = {deviation:.3e}"),
            });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > VALIDATION_TOL {
            return Err(Error::Validation {
                invariant: Invariant::Trace,
                detail: format!("trace = {trace}"),
            });
        }
        let matrix = matrix.hermitian_part();
        let lowest = linalg::hermitian_eigenvalues(&matrix)?[0];
        if lowest < -VALIDATION_TOL {
            return Err(Error::Validation {
                invariant: Invariant::Positivity,
                detail: format!("minimum eigenvalue = {lowest:.3e}"),
            });
        }
        basis.unitary(matrix.dim())?;
        if let BasisSpec::Custom(u) = &basis {
            let deviation = u.unitarity_deviation();
            if deviation > UNITARY_TOL {
                return Err(Error::NotUnitary { deviation });
            }
        }
        Ok(DensityMatrix {
            matrix,
            qubits,
            basis,
        })
    }

    /// Computational-basis state.
    pub fn computational(matrix: ComplexMatrix) -> Result<Self> {
        Self::new(matrix, BasisSpec::Computational)
    }

    /// Pure state `|ψ><ψ|/<ψ|ψ>` from a computational-basis vector.
    ///
    /// Dividing by the computed norm absorbs the rounding in amplitudes such
    /// as `1/√2`, so e.g. the GHZ projector has corners of exactly `1/2`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm_sqr: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        Self::computational(ComplexMatrix::outer(psi).scale(1.0 / norm_sqr))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn basis(&self) -> &BasisSpec {
        &self.basis
    }

    /// Entry `(i, j)` in the recorded basis.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.matrix[(i, j)]
    }

    /// The same state written in basis `target`.
    pub fn express_in_basis(&self, target: &BasisSpec) -> Result<DensityMatrix> {
        let dim = self.dim();
        let in_computational = match &self.basis {
            BasisSpec::Computational => self.matrix.clone(),
            source => {
                let u = source.unitary(dim)?;
                conjugate_by_unitary(&self.matrix, &u.adjoint())?
            }
        };
        let matrix = match target {
            BasisSpec::Computational => in_computational,
            target => conjugate_by_unitary(&in_computational, &target.unitary(dim)?)?,
        };
        Ok(DensityMatrix {
            matrix: matrix.hermitian_part(),
            qubits: self.qubits,
            basis: target.clone(),
        })
    }

    /// Computational-basis representation (borrowed when already there).
    pub fn to_computational(&self) -> Result<std::borrow::Cow<'_, DensityMatrix>> {
        if self.basis == BasisSpec::Computational {
            Ok(std::borrow::Cow::Borrowed(self))
        } else {
            self.express_in_basis(&BasisSpec::Computational)
                .map(std::borrow::Cow::Owned)
        }
    }

    /// Reduced state after tracing out `qubit` (0 = leftmost label).
    ///
    /// The partial trace is taken in computational coordinates; the result is
    /// labelled computational.
    pub fn partial_trace(&self, qubit: usize) -> Result<DensityMatrix> {
        let comp = self.to_computational()?;
        let reduced = linalg::partial_trace(&comp.matrix, qubit)?;
        DensityMatrix::computational(reduced)
    }

    /// Convex combination `w·self + (1 − w)·other`, both in computational coordinates.
    pub fn mix(&self, other: &DensityMatrix, weight: f64) -> Result<DensityMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let a = self.to_computational()?;
        let b = other.to_computational()?;
        DensityMatrix::computational(&a.matrix.scale(weight) + &b.matrix.scale(1.0 - weight))
    }
}

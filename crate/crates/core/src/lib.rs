//! Quantum coherence, entanglement, mixedness, teleportation fidelity and
//! Bell-CHSH nonlocality for two-qubit mixed states.
//!
//! * [`linalg`]: dense complex matrices, Jacobi eigensolver, Kronecker
//!   products and partial traces.
//! * [`states`]: validated density matrices, the Bell/computational bases,
//!   every state family and the text file format.
//! * [`measures`]: the quantifiers and the aggregated [`measures::MeasureReport`].
//! * [`report`]: parameter sweeps, CSV/SVG output and the reconciliation of
//!   reference summary values.

pub mod error;
pub mod linalg;
pub mod measures;
pub mod report;
pub mod states;

pub use error::{Error, Invariant, Result};
pub use linalg::ComplexMatrix;
pub use measures::{full_report, MeasureReport};
pub use states::{BasisSpec, BellKind, DensityMatrix, Ket, StarCut, StateFamily};

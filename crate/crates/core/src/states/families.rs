use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// The four Bell states: `φ± = (|00> ± |11>)/√2`, `ψ± = (|01> ± |10>)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellKind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PhiPlus,
        BellKind::PhiMinus,
        BellKind::PsiPlus,
        BellKind::PsiMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BellKind::PhiPlus => "phi+",
            BellKind::PhiMinus => "phi-",
            BellKind::PsiPlus => "psi+",
            BellKind::PsiMinus => "psi-",
        }
    }

    /// Computational kets the state is supported on.
    pub fn support(self) -> [Ket; 2] {
        match self {
            BellKind::PhiPlus | BellKind::PhiMinus => [Ket::K00, Ket::K11],
            BellKind::PsiPlus | BellKind::PsiMinus => [Ket::K01, Ket::K10],
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BellKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        BellKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown Bell state '{s}' (expected phi+, phi-, psi+ or psi-)"))
    }
}

/// Two-qubit computational basis ket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ket {
    K00,
    K01,
    K10,
    K11,
}

impl Ket {
    pub const ALL: [Ket; 4] = [Ket::K00, Ket::K01, Ket::K10, Ket::K11];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Ket::K00 => "00",
            Ket::K01 => "01",
            Ket::K10 => "10",
            Ket::K11 => "11",
        }
    }
}

impl fmt::Display for Ket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}>", self.label())
    }
}

impl FromStr for Ket {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bare = s.trim_start_matches('|').trim_end_matches('>');
        Ket::ALL
            .into_iter()
            .find(|k| k.label() == bare)
            .ok_or_else(|| format!("unknown ket '{s}' (expected 00, 01, 10 or 11)"))
    }
}

/// Three-qubit pure states whose reductions are studied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripartiteKind {
    Ghz,
    W,
    WTilde,
    WWTilde,
    Star,
}

/// Which qubit of the star state is traced out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarCut {
    Central,
    Peripheral,
}

/// Tracing this qubit of `(|000> + |100> + |101> + |111>)/2` leaves the
/// separable reduction; it is the qubit the other two are entangled with.
pub const STAR_CENTRAL_QUBIT: usize = 2;
/// Tracing this qubit gives the entangled peripheral reduction. Tracing
/// qubit 1 gives a different matrix with the same measure values.
pub const STAR_PERIPHERAL_QUBIT: usize = 0;

/// Parameterized two-qubit state families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateFamily {
    /// `p|B><B| + (1 − p)|k><k|` with `k` in the support of `B`.
    Class1 { bell: BellKind, filler: Ket, p: f64 },
    /// `p|B><B| + (1 − p)|k><k|` with `k` outside the support of `B`.
    Class2 { bell: BellKind, filler: Ket, p: f64 },
    /// Parameterized by singlet fraction.
    Werner { fidelity: f64 },
    GhzReduced,
    WReduced,
    WWTildeReduced,
    StarReduced(StarCut),
    /// Reduction of `p|GHZ><GHZ| + (1 − p)|W><W|`.
    MixGhzW { p: f64 },
    /// Reduction of `p|W><W| + (1 − p)|W̃><W̃|`.
    MixWWTilde { p: f64 },
}

impl StateFamily {
    /// Free mixing parameter, if the family has one.
    pub fn parameter(&self) -> Option<f64> {
        match *self {
            StateFamily::Class1 { p, .. }
            | StateFamily::Class2 { p, .. }
            | StateFamily::MixGhzW { p }
            | StateFamily::MixWWTilde { p } => Some(p),
            StateFamily::Werner { fidelity } => Some(fidelity),
            _ => None,
        }
    }

    /// Copy with the mixing parameter replaced; parameterless families are returned unchanged.
    pub fn with_parameter(&self, value: f64) -> StateFamily {
        let mut out = *self;
        match &mut out {
            StateFamily::Class1 { p, .. }
            | StateFamily::Class2 { p, .. }
            | StateFamily::MixGhzW { p }
            | StateFamily::MixWWTilde { p } => *p = value,
            StateFamily::Werner { fidelity } => *fidelity = value,
            _ => {}
        }
        out
    }

    /// Identifier without the parameter value, e.g. `class1:phi+:00`.
    pub fn name(&self) -> String {
        match self {
            StateFamily::Class1 { bell, filler, .. } => format!("class1:{bell}:{}", filler.label()),
            StateFamily::Class2 { bell, filler, .. } => format!("class2:{bell}:{}", filler.label()),
            StateFamily::Werner { .. } => "werner".into(),
            StateFamily::GhzReduced => "ghz".into(),
            StateFamily::WReduced => "w".into(),
            StateFamily::WWTildeReduced => "ww-tilde".into(),
            StateFamily::StarReduced(StarCut::Central) => "star-central".into(),
            StateFamily::StarReduced(StarCut::Peripheral) => "star-peripheral".into(),
            StateFamily::MixGhzW { .. } => "mix-ghz-w".into(),
            StateFamily::MixWWTilde { .. } => "mix-w-wtilde".into(),
        }
    }

    pub fn state(&self) -> Result<DensityMatrix> {
        family_state(self)
    }
}

fn check_probability(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            range: "[0, 1]",
        })
    }
}

fn real_vector(entries: &[f64]) -> Vec<Complex64> {
    entries.iter().map(|&x| Complex64::new(x, 0.0)).collect()
}

/// Bell amplitudes up to the common factor 1/√2.
fn bell_signs(kind: BellKind) -> [f64; 4] {
    match kind {
        BellKind::PhiPlus => [1.0, 0.0, 0.0, 1.0],
        BellKind::PhiMinus => [1.0, 0.0, 0.0, -1.0],
        BellKind::PsiPlus => [0.0, 1.0, 1.0, 0.0],
        BellKind::PsiMinus => [0.0, 1.0, -1.0, 0.0],
    }
}

pub fn bell_vector(kind: BellKind) -> Vec<Complex64> {
    real_vector(&bell_signs(kind).map(|x| x * FRAC_1_SQRT_2))
}

/// `|B><B|` as ½ times an outer product of ±1 amplitudes, so every entry is
/// exact (squaring 1/√2 gives 0.5000000000000001).
fn bell_projector(kind: BellKind) -> ComplexMatrix {
    ComplexMatrix::outer(&real_vector(&bell_signs(kind))).scale(0.5)
}

pub fn bell_state(kind: BellKind) -> DensityMatrix {
    DensityMatrix::computational(bell_projector(kind)).expect("Bell projector is a valid state")
}

fn bell_with_filler(bell: BellKind, filler: Ket, p: f64) -> Result<DensityMatrix> {
    let mut m = bell_projector(bell).scale(p);
    let k = filler.index();
    m[(k, k)] += 1.0 - p;
    DensityMatrix::computational(m)
}

/// `p|B><B| + (1 − p)|k><k|` with `k` one of the two kets `B` is built from.
pub fn class1_state(bell: BellKind, filler: Ket, p: f64) -> Result<DensityMatrix> {
    check_probability("p1", p)?;
    if !bell.support().contains(&filler) {
        return Err(Error::IncompatibleFiller {
            bell: bell.name(),
            filler: filler.label(),
            class: "class-1",
        });
    }
    bell_with_filler(bell, filler, p)
}

/// `p|B><B| + (1 − p)|k><k|` with `k` orthogonal to both kets of `B`.
pub fn class2_state(bell: BellKind, filler: Ket, p: f64) -> Result<DensityMatrix> {
    check_probability("p2", p)?;
    if bell.support().contains(&filler) {
        return Err(Error::IncompatibleFiller {
            bell: bell.name(),
            filler: filler.label(),
            class: "class-2",
        });
    }
    bell_with_filler(bell, filler, p)
}

/// `(1 − F)/3 · I + (4F − 1)/3 · |ψ−><ψ−|`.
///
/// Any `F` is accepted here; validation rejects values that leave the
/// result indefinite.
pub fn werner_state(fidelity: f64) -> Result<DensityMatrix> {
    let singlet = bell_projector(BellKind::PsiMinus);
    let m = &ComplexMatrix::identity(4).scale((1.0 - fidelity) / 3.0)
        + &singlet.scale((4.0 * fidelity - 1.0) / 3.0);
    DensityMatrix::computational(m)
}

pub fn tripartite_vector(kind: TripartiteKind) -> Vec<Complex64> {
    let mut amps = [0.0_f64; 8];
    let mut put = |kets: &[usize], amplitude: f64| {
        for &k in kets {
            amps[k] += amplitude;
        }
    };
    let w = [0b001, 0b010, 0b100];
    let w_tilde = [0b110, 0b101, 0b011];
    let third = 1.0 / 3.0_f64.sqrt();
    match kind {
        TripartiteKind::Ghz => put(&[0b000, 0b111], FRAC_1_SQRT_2),
        TripartiteKind::W => put(&w, third),
        TripartiteKind::WTilde => put(&w_tilde, third),
        TripartiteKind::WWTilde => {
            put(&w, third * FRAC_1_SQRT_2);
            put(&w_tilde, third * FRAC_1_SQRT_2);
        }
        TripartiteKind::Star => put(&[0b000, 0b100, 0b101, 0b111], 0.5),
    }
    real_vector(&amps)
}

pub fn tripartite_state(kind: TripartiteKind) -> DensityMatrix {
    DensityMatrix::pure(&tripartite_vector(kind)).expect("tripartite projector is a valid state")
}

/// Two-qubit state for any family member.
///
/// Symmetric reductions trace out the last qubit; by symmetry any qubit
/// gives the same matrix.
pub fn family_state(family: &StateFamily) -> Result<DensityMatrix> {
    match *family {
        StateFamily::Class1 { bell, filler, p } => class1_state(bell, filler, p),
        StateFamily::Class2 { bell, filler, p } => class2_state(bell, filler, p),
        StateFamily::Werner { fidelity } => werner_state(fidelity),
        StateFamily::GhzReduced => tripartite_state(TripartiteKind::Ghz).partial_trace(2),
        StateFamily::WReduced => tripartite_state(TripartiteKind::W).partial_trace(2),
        StateFamily::WWTildeReduced => tripartite_state(TripartiteKind::WWTilde).partial_trace(2),
        StateFamily::StarReduced(cut) => {
            let qubit = match cut {
                StarCut::Central => STAR_CENTRAL_QUBIT,
                StarCut::Peripheral => STAR_PERIPHERAL_QUBIT,
            };
            tripartite_state(TripartiteKind::Star).partial_trace(qubit)
        }
        StateFamily::MixGhzW { p } => {
            check_probability("p", p)?;
            tripartite_state(TripartiteKind::Ghz)
                .mix(&tripartite_state(TripartiteKind::W), p)?
                .partial_trace(2)
        }
        StateFamily::MixWWTilde { p } => {
            check_probability("p", p)?;
            tripartite_state(TripartiteKind::W)
                .mix(&tripartite_state(TripartiteKind::WTilde), p)?
                .partial_trace(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rho: &DensityMatrix) -> Vec<f64> {
        rho.matrix().entries().iter().map(|z| z.re).collect()
    }

    fn assert_matrix(rho: &DensityMatrix, expected: &[f64]) {
        let got = real(rho);
        for (k, (g, e)) in got.iter().zip(expected).enumerate() {
            assert!((g - e).abs() < 1e-12, "entry {k}: {g} vs {e}\n{rho:?}");
        }
        assert!(rho.matrix().entries().iter().all(|z| z.im.abs() < 1e-15));
    }

    #[test]
    fn bell_states_match_definitions() {
        assert_matrix(
            &bell_state(BellKind::PhiPlus),
            &[0.5, 0., 0., 0.5, 0., 0., 0., 0., 0., 0., 0., 0., 0.5, 0., 0., 0.5],
        );
        assert_matrix(
            &bell_state(BellKind::PsiMinus),
            &[0., 0., 0., 0., 0., 0.5, -0.5, 0., 0., -0.5, 0.5, 0., 0., 0., 0., 0.],
        );
        for kind in BellKind::ALL {
            assert!((bell_state(kind).matrix().trace().re - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn class1_examples() {
        let rho = class1_state(BellKind::PhiPlus, Ket::K00, 1.0).unwrap();
        assert!(rho.matrix().approx_eq(bell_state(BellKind::PhiPlus).matrix(), 1e-15));
        assert_matrix(
            &class1_state(BellKind::PhiPlus, Ket::K00, 0.5).unwrap(),
            &[0.75, 0., 0., 0.25, 0., 0., 0., 0., 0., 0., 0., 0., 0.25, 0., 0., 0.25],
        );
        let rho = class1_state(BellKind::PsiPlus, Ket::K01, 0.0).unwrap();
        assert_matrix(&rho, &[0., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.]);
    }

    #[test]
    fn class2_examples() {
        assert_matrix(
            &class2_state(BellKind::PhiPlus, Ket::K01, 0.5).unwrap(),
            &[0.25, 0., 0., 0.25, 0., 0.5, 0., 0., 0., 0., 0., 0., 0.25, 0., 0., 0.25],
        );
        let rho = class2_state(BellKind::PsiMinus, Ket::K11, 1.0).unwrap();
        assert!(rho.matrix().approx_eq(bell_state(BellKind::PsiMinus).matrix(), 1e-15));
        let rho = class2_state(BellKind::PhiMinus, Ket::K10, 0.0).unwrap();
        assert_matrix(&rho, &[0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0.]);
    }

    #[test]
    fn filler_pairing_is_enforced() {
        assert!(matches!(
            class1_state(BellKind::PhiPlus, Ket::K01, 0.5),
            Err(Error::IncompatibleFiller { class: "class-1", .. })
        ));
        assert!(matches!(
            class2_state(BellKind::PsiPlus, Ket::K10, 0.5),
            Err(Error::IncompatibleFiller { class: "class-2", .. })
        ));
        assert!(matches!(
            class1_state(BellKind::PhiPlus, Ket::K00, 1.5),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn werner_examples() {
        assert!(werner_state(0.25)
            .unwrap()
            .matrix()
            .approx_eq(&ComplexMatrix::identity(4).scale(0.25), 1e-15));
        assert!(werner_state(1.0)
            .unwrap()
            .matrix()
            .approx_eq(bell_state(BellKind::PsiMinus).matrix(), 1e-15));
        let s = 1.0 / 6.0;
        assert_matrix(
            &werner_state(0.5).unwrap(),
            &[s, 0., 0., 0., 0., 2. * s, -s, 0., 0., -s, 2. * s, 0., 0., 0., 0., s],
        );
        // Singlet fraction equals the parameter.
        let psi = bell_vector(BellKind::PsiMinus);
        for f in [0.0, 0.3, 0.7, 1.0] {
            let rho = werner_state(f).unwrap();
            let rpsi = rho.matrix().apply(&psi);
            let overlap: Complex64 = psi.iter().zip(&rpsi).map(|(a, b)| a.conj() * b).sum();
            assert!((overlap.re - f).abs() < 1e-12);
        }
        assert!(werner_state(1.2).is_err());
    }

    #[test]
    fn tripartite_examples() {
        let ghz = tripartite_state(TripartiteKind::Ghz);
        for (i, j) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
            assert!((ghz.get(i, j).re - 0.5).abs() < 1e-15);
        }
        let w = tripartite_state(TripartiteKind::W);
        for i in [1, 2, 4] {
            for j in [1, 2, 4] {
                assert!((w.get(i, j).re - 1.0 / 3.0).abs() < 1e-15);
            }
        }
        let ww = tripartite_state(TripartiteKind::WWTilde);
        assert!((ww.matrix().trace().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn star_cuts_reproduce_reference_reductions() {
        let central = family_state(&StateFamily::StarReduced(StarCut::Central)).unwrap();
        assert_matrix(
            &central,
            &[0.25, 0., 0.25, 0., 0., 0., 0., 0., 0.25, 0., 0.5, 0.25, 0., 0., 0.25, 0.25],
        );
        let peripheral = family_state(&StateFamily::StarReduced(StarCut::Peripheral)).unwrap();
        assert_matrix(
            &peripheral,
            &[0.5, 0.25, 0., 0.25, 0.25, 0.25, 0., 0.25, 0., 0., 0., 0., 0.25, 0.25, 0., 0.25],
        );
    }

    #[test]
    fn parameter_round_trip() {
        let f = StateFamily::Class2 {
            bell: BellKind::PhiMinus,
            filler: Ket::K01,
            p: 0.2,
        };
        assert_eq!(f.with_parameter(0.9).parameter(), Some(0.9));
        assert_eq!(StateFamily::GhzReduced.with_parameter(0.4).parameter(), None);
        assert_eq!(f.name(), "class2:phi-:01");
    }
}

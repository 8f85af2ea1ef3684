//! State construction, basis changes and the file format.

mod common;

use common::*;
use qcorr::states::{
    load_density_matrix, parse_density_matrix, save_density_matrix, tripartite_state, StarCut, TripartiteKind,
};
use qcorr::{BasisSpec, ComplexMatrix, DensityMatrix, Error, Invariant, StateFamily};

#[test]
fn symmetric_states_have_identical_reductions() {
    for kind in [TripartiteKind::Ghz, TripartiteKind::W, TripartiteKind::WTilde, TripartiteKind::WWTilde] {
        let full = tripartite_state(kind);
        let cuts: Vec<DensityMatrix> = (0..3).map(|q| full.partial_trace(q).unwrap()).collect();
        for c in &cuts[1..] {
            assert!(c.matrix().approx_eq(cuts[0].matrix(), 1e-15), "{kind:?}");
        }
    }
}

#[test]
fn star_cuts_differ() {
    let central = StateFamily::StarReduced(StarCut::Central).state().unwrap();
    let peripheral = StateFamily::StarReduced(StarCut::Peripheral).state().unwrap();
    assert!(!central.matrix().approx_eq(peripheral.matrix(), 1e-3));
}

#[test]
fn basis_round_trip_restores_entries() {
    let mut r = rng(3);
    let custom = BasisSpec::custom(qcorr::states::bell_basis_matrix().adjoint()).unwrap();
    for _ in 0..200 {
        let rho = random_density(&mut r, 4);
        for target in [BasisSpec::Bell, custom.clone()] {
            let there = rho.express_in_basis(&target).unwrap();
            assert_eq!(there.basis(), &target);
            let back = there.express_in_basis(&BasisSpec::Computational).unwrap();
            assert!(back.matrix().approx_eq(rho.matrix(), 1e-14));
        }
    }
}

#[test]
fn files_round_trip_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let mut r = rng(4);
    for k in 0..50 {
        let rho = random_density(&mut r, 4);
        let rho = if k % 2 == 0 { rho } else { rho.express_in_basis(&BasisSpec::Bell).unwrap() };
        let path = dir.path().join(format!("rho{k}.txt"));
        save_density_matrix(&rho, &path).unwrap();
        let back = load_density_matrix(&path).unwrap();
        assert_eq!(back.basis(), rho.basis());
        assert!(back.matrix().approx_eq(rho.matrix(), 0.0));
    }
}

fn invariant_of(text: &str) -> Invariant {
    match parse_density_matrix(text) {
        Err(Error::Validation { invariant, .. }) => invariant,
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn each_invariant_is_named() {
    let header = "dim=4\nbasis=computational\n";
    let rows = |m: [[&str; 4]; 4]| m.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n");
    let z = "0";
    assert_eq!(
        invariant_of(&format!("{header}{}", rows([["0.5", z, z, z], [z, "0.5", z, z], [z, z, "0.5", z], [z, z, z, "0.5"]]))),
        Invariant::Trace
    );
    assert_eq!(
        invariant_of(&format!("{header}{}", rows([["0.25", "0.1", z, z], [z, "0.25", z, z], [z, z, "0.25", z], [z, z, z, "0.25"]]))),
        Invariant::Hermiticity
    );
    assert_eq!(
        invariant_of(&format!("{header}{}", rows([["1.25", z, z, z], [z, "-0.25", z, z], [z, z, z, z], [z, z, z, z]]))),
        Invariant::Positivity
    );
    assert_eq!(
        invariant_of(&format!("{header}{}", rows([["NaN", z, z, z], [z, "0.5", z, z], [z, z, "0.5", z], [z, z, z, z]]))),
        Invariant::Finite
    );
    assert_eq!(invariant_of("dim=3\nbasis=computational\n1 0 0\n0 0 0\n0 0 0\n"), Invariant::Dimension);
}

#[test]
fn constructor_rejects_bad_matrices() {
    let not_psd = ComplexMatrix::from_diagonal(&[0.75, 0.5, -0.25, 0.0]);
    assert!(matches!(
        DensityMatrix::computational(not_psd),
        Err(Error::Validation { invariant: Invariant::Positivity, .. })
    ));
    assert!(StateFamily::Werner { fidelity: 1.5 }.state().is_err());
    assert!(class1(qcorr::BellKind::PhiPlus, qcorr::Ket::K00, -0.1).state().is_err());
}

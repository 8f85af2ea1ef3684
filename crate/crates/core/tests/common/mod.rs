//! Shared generators for the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use qcorr::states::{BellKind, Ket};
use qcorr::{ComplexMatrix, DensityMatrix, StateFamily};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `{0, 0.01, …, 1}` computed as `i/100` so every point is the nearest double.
pub fn unit_grid() -> Vec<f64> {
    (0..=100).map(|i| i as f64 / 100.0).collect()
}

fn gaussian_like(r: &mut impl Rng) -> f64 {
    // Sum of uniforms: cheap, symmetric, good enough for test matrices.
    (0..4).map(|_| r.gen_range(-1.0..1.0)).sum::<f64>() / 2.0
}

pub fn random_hermitian(r: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        m[(i, i)] = Complex64::new(gaussian_like(r), 0.0);
        for j in (i + 1)..dim {
            let z = Complex64::new(gaussian_like(r), gaussian_like(r));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

/// `A A† / Tr(A A†)` for a random complex `A`; full rank almost surely.
pub fn random_density(r: &mut impl Rng, dim: usize) -> DensityMatrix {
    let mut a = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            a[(i, j)] = Complex64::new(gaussian_like(r), gaussian_like(r));
        }
    }
    let g = &a * &a.adjoint();
    let tr = g.trace().re;
    DensityMatrix::computational(g.scale(1.0 / tr)).expect("Gram matrix is a state")
}

/// Random X-shaped two-qubit state; coherences are drawn inside the
/// positivity bounds `|ρ₀₃|² ≤ ρ₀₀ρ₃₃`, `|ρ₁₂|² ≤ ρ₁₁ρ₂₂`.
pub fn random_x_state(r: &mut impl Rng) -> DensityMatrix {
    let w: Vec<f64> = (0..4).map(|_| r.gen_range(0.0..1.0_f64)).collect();
    let total: f64 = w.iter().sum();
    let d: Vec<f64> = w.iter().map(|x| x / total).collect();
    let phase = |r: &mut dyn rand::RngCore| Complex64::from_polar(1.0, r.gen_range(0.0..std::f64::consts::TAU));
    let outer = phase(r) * (d[0] * d[3]).sqrt() * r.gen_range(0.0..1.0);
    let inner = phase(r) * (d[1] * d[2]).sqrt() * r.gen_range(0.0..1.0);
    let mut m = ComplexMatrix::from_diagonal(&d);
    m[(0, 3)] = outer;
    m[(3, 0)] = outer.conj();
    m[(1, 2)] = inner;
    m[(2, 1)] = inner.conj();
    DensityMatrix::computational(m).expect("X-state within positivity bounds")
}

/// Every valid `(bell, filler)` pair for class 1 (`in_support`) or class 2.
pub fn class_pairs(in_support: bool) -> Vec<(BellKind, Ket)> {
    let mut out = Vec::new();
    for bell in BellKind::ALL {
        for ket in Ket::ALL {
            if bell.support().contains(&ket) == in_support {
                out.push((bell, ket));
            }
        }
    }
    out
}

pub fn class1(bell: BellKind, filler: Ket, p: f64) -> StateFamily {
    StateFamily::Class1 { bell, filler, p }
}

pub fn class2(bell: BellKind, filler: Ket, p: f64) -> StateFamily {
    StateFamily::Class2 { bell, filler, p }
}

/// Every family that has a parameter, at every grid point, plus the fixed reductions.
pub fn all_family_states() -> Vec<(String, f64, DensityMatrix)> {
    use qcorr::states::StarCut;
    let mut templates: Vec<StateFamily> = Vec::new();
    for (b, k) in class_pairs(true) {
        templates.push(class1(b, k, 0.0));
    }
    for (b, k) in class_pairs(false) {
        templates.push(class2(b, k, 0.0));
    }
    templates.extend([
        StateFamily::Werner { fidelity: 0.0 },
        StateFamily::MixGhzW { p: 0.0 },
        StateFamily::MixWWTilde { p: 0.0 },
    ]);
    let mut out = Vec::new();
    for t in &templates {
        for p in unit_grid() {
            out.push((t.name(), p, t.with_parameter(p).state().unwrap()));
        }
    }
    for f in [
        StateFamily::GhzReduced,
        StateFamily::WReduced,
        StateFamily::WWTildeReduced,
        StateFamily::StarReduced(StarCut::Central),
        StateFamily::StarReduced(StarCut::Peripheral),
    ] {
        out.push((f.name(), f64::NAN, f.state().unwrap()));
    }
    out
}

//! Shared helpers for the integration tests: seeded sampling and reference
//! implementations that do not go through the library's own pipeline.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tripartite_core::gsd::GsdPattern;
use tripartite_core::linalg::{eig_hermitian, sqrt_psd, ComplexMatrix};
use tripartite_core::states::random::{haar_pure, haar_unitary_2x2};
use tripartite_core::states::{apply_local_unitary, basis_index, DensityMatrix, PureState};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_lu(rng: &mut ChaCha8Rng) -> [ComplexMatrix; 3] {
    [haar_unitary_2x2(rng), haar_unitary_2x2(rng), haar_unitary_2x2(rng)]
}

pub fn apply_lu(psi: &PureState, u: &[ComplexMatrix; 3]) -> PureState {
    apply_local_unitary(psi, &u[0], &u[1], &u[2]).unwrap()
}

/// Complex number with modulus in `[0.2, 1]` and uniform phase.
pub fn random_coefficient(rng: &mut ChaCha8Rng) -> Complex64 {
    let r = rng.random_range(0.2..1.0);
    Complex64::from_polar(r, rng.random_range(0.0..core::f64::consts::TAU))
}

/// Normalized canonical form with the given nonzero slots drawn at random.
/// Slots are `[α, β, δ, ε, ω]`.
pub fn canonical(rng: &mut ChaCha8Rng, support: [bool; 5]) -> PureState {
    let idx =
        [basis_index(0, 0, 0), basis_index(1, 0, 0), basis_index(1, 1, 0), basis_index(1, 0, 1), basis_index(1, 1, 1)];
    let mut a = [c(0.0, 0.0); 8];
    for (slot, on) in support.iter().enumerate() {
        if *on {
            a[idx[slot]] = random_coefficient(rng);
        }
    }
    PureState::normalized(a).unwrap()
}

/// Catalog patterns with the support that generates them (`α` always on,
/// except for `B`).
pub fn pattern_supports() -> Vec<(GsdPattern, [bool; 5])> {
    vec![
        (GsdPattern::Product, [true, true, false, false, false]),
        (GsdPattern::B, [false, true, true, true, true]),
        (GsdPattern::BPrime, [true, true, false, true, false]),
        (GsdPattern::BDoublePrime, [true, true, true, false, false]),
        (GsdPattern::Ghz, [true, false, false, false, true]),
        (GsdPattern::IV, [true, true, false, false, true]),
        (GsdPattern::IVPrime, [true, false, false, true, true]),
        (GsdPattern::IVDoublePrime, [true, false, true, false, true]),
        (GsdPattern::S, [true, true, false, true, true]),
        (GsdPattern::SPrime, [true, true, true, false, true]),
        (GsdPattern::WLike, [true, false, true, true, false]),
        (GsdPattern::WLike, [true, true, true, true, true]),
    ]
}

pub fn haar(rng: &mut ChaCha8Rng) -> PureState {
    haar_pure(rng)
}

fn spin_flip() -> ComplexMatrix {
    let y = ComplexMatrix::mat2(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0));
    y.kron(&y)
}

/// Concurrence from the spectrum of `√ρ·ρ̃·√ρ`. Reliable on full-rank states.
pub fn concurrence_hermitian(rho: &DensityMatrix) -> f64 {
    let yy = spin_flip();
    let tilde = &(&yy * &rho.matrix().conj()) * &yy;
    let s = sqrt_psd(rho.matrix()).unwrap();
    let r = &(&s * &tilde) * &s;
    let mut l: Vec<f64> =
        eig_hermitian(&r.hermitian_part(), 1e-8).unwrap().eigenvalues.iter().map(|x| x.max(0.0).sqrt()).collect();
    l.sort_by(|a, b| b.total_cmp(a));
    (l[0] - l[1] - l[2] - l[3]).max(0.0)
}

/// Three-tangle as `4|hyperdeterminant|`.
pub fn hyperdeterminant_tangle(psi: &PureState) -> f64 {
    let a = |i, j, k| psi.amplitude(i, j, k);
    let d1 = a(0, 0, 0).powi(2) * a(1, 1, 1).powi(2)
        + a(0, 0, 1).powi(2) * a(1, 1, 0).powi(2)
        + a(0, 1, 0).powi(2) * a(1, 0, 1).powi(2)
        + a(1, 0, 0).powi(2) * a(0, 1, 1).powi(2);
    let d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1)
        + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    let d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm()
}

/// `N = C = 2|ad − bc|` for the two-qubit pure state `a|00⟩+b|01⟩+c|10⟩+d|11⟩`.
pub fn two_qubit_pure_concurrence(v: [Complex64; 4]) -> f64 {
    2.0 * (v[0] * v[3] - v[1] * v[2]).norm()
}

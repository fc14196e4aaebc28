//! Random states and local unitaries for property tests and batch runs.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{DensityMatrix, PureState, Qubit};
use crate::linalg::ComplexMatrix;

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state: i.i.d. standard complex Gaussians, normalized.
pub fn haar_pure<R: Rng + ?Sized>(rng: &mut R) -> PureState {
    loop {
        let amps: [Complex64; 8] = core::array::from_fn(|_| gaussian(rng));
        if let Ok(psi) = PureState::normalized(amps) {
            return psi;
        }
    }
}

/// Deterministic Haar sample; the same seed always gives the same state.
pub fn sample_haar_pure(seed: u64) -> PureState {
    haar_pure(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Haar-random element of U(2).
pub fn haar_unitary_2x2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let (a, b) = loop {
        let (a, b) = (gaussian(rng), gaussian(rng));
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if n > 0.0 {
            break (a / n, b / n);
        }
    };
    let phase = Complex64::from_polar(1.0, rng.random_range(0.0..core::f64::consts::TAU));
    ComplexMatrix::mat2(a * phase, -b.conj() * phase, b * phase, a.conj() * phase)
}

/// Hilbert–Schmidt random mixed state `G·G† / Tr(G·G†)` with Gaussian `G`.
pub fn hilbert_schmidt_mixed<R: Rng + ?Sized>(rng: &mut R, layout: &[Qubit]) -> DensityMatrix {
    let dim = 1usize << layout.len();
    let g = ComplexMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    let matrix = gg.scale(Complex64::new(1.0 / tr, 0.0)).hermitian_part();
    DensityMatrix::new(matrix, layout).expect("Gram matrices are valid states")
}

/// Random mixture of `rank` Haar pure states with Dirichlet-like weights.
pub fn random_pure_mixture<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> DensityMatrix {
    let weights: Vec<f64> = (0..rank.max(1)).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let mut acc = ComplexMatrix::zeros(8, 8);
    for w in weights {
        let rho = haar_pure(rng).to_density();
        acc = &acc + &rho.matrix().scale(Complex64::new(w / total, 0.0));
    }
    DensityMatrix::three_qubit(acc.hermitian_part()).expect("mixtures of pure states are valid")
}

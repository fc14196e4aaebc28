//! Entanglement measures.
//!
//! Negativities use the doubled convention `N = −2 Σ (negative eigenvalues
//! of the partial transpose)`, so a Bell pair has `N = 1`. Entropies are in
//! bits. The geometric-mean measures vanish whenever any one-versus-two cut
//! is unentangled, which is what separates them from the arithmetic-mean
//! variants.

use num_complex::Complex64;

use crate::linalg::{eig_hermitian, singular_values, ComplexMatrix, LinalgError};
use crate::states::{DensityMatrix, Pair, PureState, Qubit, State, StateError};

/// Hermiticity tolerance handed to the eigensolver. Inputs are already
/// validated states, so this only has to absorb round-off.
const EIG_TOL: f64 = 1e-9;

/// Eigenvalues of `ρ` at or below this are treated as exact zeros when
/// factoring `ρ = W·W†` for the concurrence.
const RANK_TOL: f64 = 1e-14;

/// Entropy terms with `p ≤ 1e-14` contribute nothing, and neither do terms
/// with `1 − p ≤ 1e-14` (their value is round-off of the same size).
const ENTROPY_FLOOR: f64 = 1e-14;

/// Partial-transpose eigenvalues in `(-1e-13, 0)` are eigensolver noise. The
/// cube roots in the geometric means would otherwise turn `1e-16` into `1e-5`.
const NEGATIVITY_FLOOR: f64 = 1e-13;

/// Three-tangle values in `[-1e-10, 0)` are reported as zero.
const TANGLE_CLAMP: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MeasureError {
    #[error("expected a {expected}x{expected} density matrix, got {dim}x{dim}")]
    WrongDimension { expected: usize, dim: usize },
    #[error("this measure is defined for pure states only")]
    MixedStateUnsupported,
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn require_dim(rho: &DensityMatrix, expected: usize) -> Result<(), MeasureError> {
    if rho.dim() == expected {
        Ok(())
    } else {
        Err(MeasureError::WrongDimension { expected, dim: rho.dim() })
    }
}

/// Negativity across the cut that isolates `side`.
///
/// Works for any layout containing `side`: a one-versus-two cut of a
/// three-qubit state or the single cut of a two-qubit state.
pub fn negativity(rho: &DensityMatrix, side: Qubit) -> Result<f64, MeasureError> {
    let pt = rho.partial_transpose(side)?;
    let eig = eig_hermitian(&pt, EIG_TOL)?;
    let negative: f64 = eig.eigenvalues.iter().filter(|&&l| l <= -NEGATIVITY_FLOOR).sum();
    Ok(-2.0 * negative)
}

/// `[N_{A-BC}, N_{B-AC}, N_{C-AB}]`.
pub fn bipartite_negativities(rho: &DensityMatrix) -> Result<[f64; 3], MeasureError> {
    require_dim(rho, 8)?;
    Ok([negativity(rho, Qubit::A)?, negativity(rho, Qubit::B)?, negativity(rho, Qubit::C)?])
}

/// Geometric mean of three non-negative numbers; exactly zero if any is.
fn geometric_mean(values: [f64; 3]) -> f64 {
    let product = values[0].max(0.0) * values[1].max(0.0) * values[2].max(0.0);
    product.cbrt()
}

/// `N_ABC = (N_{A-BC} · N_{B-AC} · N_{C-AB})^{1/3}`.
pub fn tripartite_negativity(rho: &DensityMatrix) -> Result<f64, MeasureError> {
    Ok(geometric_mean(bipartite_negativities(rho)?))
}

/// `σ_y ⊗ σ_y` in the two-qubit computational basis.
fn spin_flip() -> ComplexMatrix {
    ComplexMatrix::from_real(4, 4, &[0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0])
        .expect("static shape")
}

/// Wootters concurrence of a two-qubit state.
///
/// The square roots `√λᵢ` of the spectrum of `ρ·ρ̃` are the singular values
/// of `τ = Wᵀ (σ_y⊗σ_y) W`, where `ρ = W·W†` comes from the eigen
/// decomposition. Taking singular values directly avoids square roots of
/// round-off sized eigenvalues.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64, MeasureError> {
    require_dim(rho, 4)?;
    let eig = eig_hermitian(rho.matrix(), EIG_TOL)?;
    let v = &eig.eigenvectors;
    let w = ComplexMatrix::from_fn(4, 4, |r, c| {
        let p = eig.eigenvalues[c];
        if p > RANK_TOL {
            v[(r, c)] * p.sqrt()
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let tau = &(&w.transpose() * &spin_flip()) * &w;
    let sv = singular_values(&tau)?;
    Ok((sv[0] - sv[1] - sv[2] - sv[3]).max(0.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64, MeasureError> {
    let eig = eig_hermitian(rho.matrix(), EIG_TOL)?;
    let s: f64 =
        eig.eigenvalues.iter().filter(|&&p| p > ENTROPY_FLOOR && 1.0 - p > ENTROPY_FLOOR).map(|&p| -p * p.log2()).sum();
    Ok(s.max(0.0))
}

/// `C_{I-JK} = 2·√det ρ^{(I)}` for a pure three-qubit state.
pub fn pure_bipartite_concurrence(psi: &PureState, side: Qubit) -> Result<f64, MeasureError> {
    let rho = psi.to_density().single_qubit(side)?;
    let m = rho.matrix();
    let det = m[(0, 0)].re * m[(1, 1)].re - m[(0, 1)].norm_sqr();
    Ok(2.0 * det.max(0.0).sqrt())
}

/// Bipartite quantity fed into the additive and multiplicative combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseMeasure {
    /// `N_{I-JK}`.
    Negativity,
    /// `N_{I-JK}²`, the squared pure-state concurrence.
    Tangle,
    /// Entropy of the single-qubit reduction `ρ^{(I)}`.
    Entropy,
}

fn base_values(psi: &PureState, base: BaseMeasure) -> Result<[f64; 3], MeasureError> {
    let rho = psi.to_density();
    let mut out = [0.0; 3];
    for (slot, q) in out.iter_mut().zip(Qubit::ALL) {
        *slot = match base {
            BaseMeasure::Negativity => negativity(&rho, q)?,
            BaseMeasure::Tangle => negativity(&rho, q)?.powi(2),
            BaseMeasure::Entropy => von_neumann_entropy(&rho.single_qubit(q)?)?,
        };
    }
    Ok(out)
}

/// `⅓(M_{A-BC} + M_{B-AC} + M_{C-AB})`. Non-zero on biseparable states.
pub fn additive_measure(psi: &PureState, base: BaseMeasure) -> Result<f64, MeasureError> {
    let v = base_values(psi, base)?;
    Ok((v[0] + v[1] + v[2]) / 3.0)
}

/// `(M_{A-BC} · M_{B-AC} · M_{C-AB})^{1/3}`.
pub fn multiplicative_measure(psi: &PureState, base: BaseMeasure) -> Result<f64, MeasureError> {
    Ok(geometric_mean(base_values(psi, base)?))
}

/// Multiplicative global entanglement `Q` (geometric mean of tangles).
pub fn q_multiplicative(psi: &PureState) -> Result<f64, MeasureError> {
    multiplicative_measure(psi, BaseMeasure::Tangle)
}

/// Multiplicative `η⁽³⁾` (geometric mean of single-qubit entropies).
pub fn eta3_multiplicative(psi: &PureState) -> Result<f64, MeasureError> {
    multiplicative_measure(psi, BaseMeasure::Entropy)
}

/// Residual three-tangle `C²_{A-BC} − C²(ρ^{(AB)}) − C²(ρ^{(AC)})`.
pub fn three_tangle(psi: &PureState) -> Result<f64, MeasureError> {
    let rho = psi.to_density();
    let c_a = pure_bipartite_concurrence(psi, Qubit::A)?;
    let c_ab = concurrence(&rho.reduced_pair(Pair::AB)?)?;
    let c_ac = concurrence(&rho.reduced_pair(Pair::AC)?)?;
    let tau = c_a * c_a - c_ab * c_ab - c_ac * c_ac;
    Ok(if (-TANGLE_CLAMP..0.0).contains(&tau) { 0.0 } else { tau })
}

/// Every measure of a three-qubit state in one place.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureSet {
    pub n_a_bc: f64,
    pub n_b_ac: f64,
    pub n_c_ab: f64,
    pub n_abc: f64,
    pub neg_bc: f64,
    pub neg_ac: f64,
    pub neg_ab: f64,
    pub conc_bc: f64,
    pub conc_ac: f64,
    pub conc_ab: f64,
    pub s_a: f64,
    pub s_b: f64,
    pub s_c: f64,
    /// Pure states only.
    pub q_mult: Option<f64>,
    /// Pure states only.
    pub eta_mult: Option<f64>,
    /// Pure states only.
    pub three_tangle: Option<f64>,
}

impl MeasureSet {
    /// Measures defined for mixed states; the pure-only fields are `None`.
    pub fn of_density(rho: &DensityMatrix) -> Result<Self, MeasureError> {
        let [n_a_bc, n_b_ac, n_c_ab] = bipartite_negativities(rho)?;
        let bc = rho.reduced_pair(Pair::BC)?;
        let ac = rho.reduced_pair(Pair::AC)?;
        let ab = rho.reduced_pair(Pair::AB)?;
        Ok(Self {
            n_a_bc,
            n_b_ac,
            n_c_ab,
            n_abc: geometric_mean([n_a_bc, n_b_ac, n_c_ab]),
            neg_bc: negativity(&bc, Qubit::B)?,
            neg_ac: negativity(&ac, Qubit::A)?,
            neg_ab: negativity(&ab, Qubit::A)?,
            conc_bc: concurrence(&bc)?,
            conc_ac: concurrence(&ac)?,
            conc_ab: concurrence(&ab)?,
            s_a: von_neumann_entropy(&rho.single_qubit(Qubit::A)?)?,
            s_b: von_neumann_entropy(&rho.single_qubit(Qubit::B)?)?,
            s_c: von_neumann_entropy(&rho.single_qubit(Qubit::C)?)?,
            q_mult: None,
            eta_mult: None,
            three_tangle: None,
        })
    }

    pub fn of_pure(psi: &PureState) -> Result<Self, MeasureError> {
        let mut set = Self::of_density(&psi.to_density())?;
        let tangles = [set.n_a_bc, set.n_b_ac, set.n_c_ab].map(|n| n * n);
        set.q_mult = Some(geometric_mean(tangles));
        set.eta_mult = Some(geometric_mean([set.s_a, set.s_b, set.s_c]));
        let c_a = pure_bipartite_concurrence(psi, Qubit::A)?;
        let tau = c_a * c_a - set.conc_ab * set.conc_ab - set.conc_ac * set.conc_ac;
        set.three_tangle = Some(if (-TANGLE_CLAMP..0.0).contains(&tau) { 0.0 } else { tau });
        Ok(set)
    }

    pub fn of_state(state: &State) -> Result<Self, MeasureError> {
        match state {
            State::Pure(psi) => Self::of_pure(psi),
            State::Mixed(rho) => Self::of_density(rho),
        }
    }

    pub fn bipartite(&self, side: Qubit) -> f64 {
        match side {
            Qubit::A => self.n_a_bc,
            Qubit::B => self.n_b_ac,
            Qubit::C => self.n_c_ab,
        }
    }

    pub fn reduced_negativity(&self, pair: Pair) -> f64 {
        match pair {
            Pair::BC => self.neg_bc,
            Pair::AC => self.neg_ac,
            Pair::AB => self.neg_ab,
        }
    }

    pub fn reduced_concurrence(&self, pair: Pair) -> f64 {
        match pair {
            Pair::BC => self.conc_bc,
            Pair::AC => self.conc_ac,
            Pair::AB => self.conc_ab,
        }
    }

    pub fn entropy(&self, q: Qubit) -> f64 {
        match q {
            Qubit::A => self.s_a,
            Qubit::B => self.s_b,
            Qubit::C => self.s_c,
        }
    }

    /// Named scalar fields, pure-only ones included when present.
    pub fn fields(&self) -> impl Iterator<Item = (&'static str, f64)> {
        let always = [
            ("n_a_bc", self.n_a_bc),
            ("n_b_ac", self.n_b_ac),
            ("n_c_ab", self.n_c_ab),
            ("n_abc", self.n_abc),
            ("neg_bc", self.neg_bc),
            ("neg_ac", self.neg_ac),
            ("neg_ab", self.neg_ab),
            ("conc_bc", self.conc_bc),
            ("conc_ac", self.conc_ac),
            ("conc_ab", self.conc_ab),
            ("s_a", self.s_a),
            ("s_b", self.s_b),
            ("s_c", self.s_c),
        ];
        let optional = [("q_mult", self.q_mult), ("eta_mult", self.eta_mult), ("three_tangle", self.three_tangle)];
        always.into_iter().chain(optional.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))))
    }

    /// Largest absolute difference over shared fields.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for ((_, a), (_, b)) in self.fields().zip(other.fields()) {
            worst = worst.max((a - b).abs());
        }
        worst
    }
}

impl State {
    /// The pure vector, or [`MeasureError::MixedStateUnsupported`].
    pub fn require_pure(&self) -> Result<&PureState, MeasureError> {
        self.as_pure().ok_or(MeasureError::MixedStateUnsupported)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn state(entries: &[(usize, f64)]) -> PureState {
        let mut a = [c(0.0); 8];
        for &(i, x) in entries {
            a[i] = c(x);
        }
        PureState::normalized(a).unwrap()
    }

    fn two_qubit(v: [Complex64; 4]) -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::from_fn(4, 4, |r, col| v[r] * v[col].conj()), &[Qubit::B, Qubit::C]).unwrap()
    }

    #[test]
    fn product_state_is_ppt() {
        let rho = PureState::basis(0, 1, 0).to_density();
        assert_eq!(tripartite_negativity(&rho).unwrap(), 0.0);
        for q in Qubit::ALL {
            assert!(negativity(&rho, q).unwrap().abs() < 1e-15);
        }
    }

    #[test]
    fn bell_pair_measures() {
        let bell = two_qubit([c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)]);
        assert!((negativity(&bell, Qubit::B).unwrap() - 1.0).abs() < 1e-14);
        assert!((concurrence(&bell).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn separable_diagonal_has_no_concurrence() {
        let rho = DensityMatrix::new(ComplexMatrix::from_real_diagonal(&[0.1, 0.2, 0.3, 0.4]), &[Qubit::A, Qubit::B])
            .unwrap();
        assert_eq!(concurrence(&rho).unwrap(), 0.0);
        assert!(matches!(
            concurrence(&PureState::basis(0, 0, 0).to_density()),
            Err(MeasureError::WrongDimension { expected: 4, dim: 8 })
        ));
    }

    #[test]
    fn entropy_examples() {
        assert!(von_neumann_entropy(&PureState::basis(1, 0, 1).to_density()).unwrap().abs() < 1e-15);
        let mixed = DensityMatrix::maximally_mixed(&[Qubit::A]).unwrap();
        assert!((von_neumann_entropy(&mixed).unwrap() - 1.0).abs() < 1e-15);
        let third =
            DensityMatrix::new(ComplexMatrix::from_real_diagonal(&[1.0 / 3.0, 2.0 / 3.0]), &[Qubit::A]).unwrap();
        // −⅓log₂⅓ − ⅔log₂⅔
        assert!((von_neumann_entropy(&third).unwrap() - 0.918_295_834_054_489_6).abs() < 1e-12);
    }

    #[test]
    fn ghz_values() {
        let ghz = state(&[(0, 1.0), (7, 1.0)]);
        let m = MeasureSet::of_pure(&ghz).unwrap();
        assert!((m.n_abc - 1.0).abs() < 1e-12);
        assert!((m.q_mult.unwrap() - 1.0).abs() < 1e-12);
        assert!((m.eta_mult.unwrap() - 1.0).abs() < 1e-12);
        assert!((m.three_tangle.unwrap() - 1.0).abs() < 1e-12);
        for base in [BaseMeasure::Negativity, BaseMeasure::Tangle, BaseMeasure::Entropy] {
            assert!((additive_measure(&ghz, base).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn biseparable_state() {
        // |0⟩_A ⊗ (|00⟩+|11⟩)/√2
        let psi = state(&[(0, 1.0), (3, 1.0)]);
        assert!(q_multiplicative(&psi).unwrap() < 1e-9);
        assert!(eta3_multiplicative(&psi).unwrap() < 1e-9);
        // tangles across the three cuts are 0, 1, 1
        assert!((additive_measure(&psi, BaseMeasure::Tangle).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!(three_tangle(&psi).unwrap().abs() < 1e-12);
    }

    #[test]
    fn product_state_pure_measures() {
        let psi = PureState::basis(0, 0, 0);
        assert_eq!(q_multiplicative(&psi).unwrap(), 0.0);
        assert!(three_tangle(&psi).unwrap().abs() < 1e-15);
        assert!(additive_measure(&psi, BaseMeasure::Negativity).unwrap().abs() < 1e-15);
    }

    #[test]
    fn mixed_state_refuses_pure_only_measures() {
        let rho = DensityMatrix::maximally_mixed(&[Qubit::A, Qubit::B, Qubit::C]).unwrap();
        let st = State::Mixed(rho.clone());
        assert_eq!(st.require_pure().unwrap_err(), MeasureError::MixedStateUnsupported);
        let m = MeasureSet::of_density(&rho).unwrap();
        assert!(m.q_mult.is_none() && m.three_tangle.is_none());
        assert!((m.s_a - 1.0).abs() < 1e-12);
    }
}

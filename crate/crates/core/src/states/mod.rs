//! Three-qubit states: pure vectors, density matrices and the subsystem
//! operations (partial trace, partial transpose, local unitaries).
//!
//! Basis convention: `|ijk⟩` has index `4i + 2j + k`, with `i` the state of
//! qubit A, `j` of B and `k` of C. Qubit A is the most significant bit, and
//! the same ordering applies to reduced states (`[B, C]` puts B high).

pub mod random;

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::linalg::{eig_hermitian, ComplexMatrix, LinalgError};

/// Tolerance on `Σ|a|² = 1` for pure states.
pub const NORM_TOL: f64 = 1e-10;
/// Tolerance on Hermiticity, unit trace and the PSD floor for density matrices.
pub const DENSITY_TOL: f64 = 1e-10;
/// Negative eigenvalues smaller than this in magnitude are eigensolver noise.
const REPAIR_FLOOR: f64 = 1e-14;
/// Tolerance on `U†U = 1` for local unitaries.
pub const UNITARY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StateError {
    #[error("norm is {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("density matrix deviates from Hermitian by {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },
    #[error("density matrix has eigenvalue {min_eigenvalue:e}, below -1e-10")]
    NotPsd { min_eigenvalue: f64 },
    #[error("qubit {0} is not present in the subsystem layout")]
    QubitNotPresent(Qubit),
    #[error("invalid subsystem layout: {0}")]
    InvalidLayout(&'static str),
    #[error("matrix dimension {dim} does not match a layout of {qubits} qubit(s)")]
    LayoutMismatch { dim: usize, qubits: usize },
    #[error("local operator on qubit {qubit} deviates from unitary by {deviation:e}")]
    NotUnitary { qubit: Qubit, deviation: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The two qubits that remain when this one is traced out.
    pub fn complement(self) -> Pair {
        match self {
            Qubit::A => Pair::BC,
            Qubit::B => Pair::AC,
            Qubit::C => Pair::AB,
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Qubit::A => "A",
            Qubit::B => "B",
            Qubit::C => "C",
        })
    }
}

/// A reduced two-qubit pair, named by the qubits it keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    BC,
    AC,
    AB,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::BC, Pair::AC, Pair::AB];

    /// The qubit traced out to obtain this pair.
    pub fn traced(self) -> Qubit {
        match self {
            Pair::BC => Qubit::A,
            Pair::AC => Qubit::B,
            Pair::AB => Qubit::C,
        }
    }

    pub fn qubits(self) -> [Qubit; 2] {
        match self {
            Pair::BC => [Qubit::B, Qubit::C],
            Pair::AC => [Qubit::A, Qubit::C],
            Pair::AB => [Qubit::A, Qubit::B],
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pair::BC => "BC",
            Pair::AC => "AC",
            Pair::AB => "AB",
        })
    }
}

/// One-versus-two cut `I|JK` of the three qubits, named by the single side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition(pub Qubit);

impl Bipartition {
    pub const ALL: [Bipartition; 3] = [Bipartition(Qubit::A), Bipartition(Qubit::B), Bipartition(Qubit::C)];

    pub fn side(self) -> Qubit {
        self.0
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.0, self.0.complement())
    }
}

impl From<Qubit> for Bipartition {
    fn from(q: Qubit) -> Self {
        Bipartition(q)
    }
}

/// Normalized three-qubit state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: [Complex64; 8],
}

impl PureState {
    pub fn new(amplitudes: [Complex64; 8]) -> Result<Self, StateError> {
        let norm = norm_of(&amplitudes);
        if !((norm * norm - 1.0).abs() <= NORM_TOL) {
            return Err(StateError::NotNormalized { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Scales the amplitudes to unit norm; fails only for the zero vector.
    pub fn normalized(amplitudes: [Complex64; 8]) -> Result<Self, StateError> {
        let norm = norm_of(&amplitudes);
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(StateError::NotNormalized { norm });
        }
        Ok(Self { amplitudes: amplitudes.map(|a| a / norm) })
    }

    /// Basis state `|ijk⟩`.
    pub fn basis(i: usize, j: usize, k: usize) -> Self {
        let mut amplitudes = [Complex64::new(0.0, 0.0); 8];
        amplitudes[basis_index(i, j, k)] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    /// `|a⟩ ⊗ |b⟩ ⊗ |c⟩` for normalized single-qubit vectors.
    pub fn product(a: [Complex64; 2], b: [Complex64; 2], c: [Complex64; 2]) -> Result<Self, StateError> {
        let mut amplitudes = [Complex64::new(0.0, 0.0); 8];
        for (idx, amp) in amplitudes.iter_mut().enumerate() {
            *amp = a[idx >> 2] * b[(idx >> 1) & 1] * c[idx & 1];
        }
        Self::new(amplitudes)
    }

    pub(crate) fn from_amplitudes_unchecked(amplitudes: [Complex64; 8]) -> Self {
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex64; 8] {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.amplitudes[basis_index(i, j, k)]
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amplitudes)
    }

    /// `|ψ⟩⟨ψ|` with layout `[A, B, C]`.
    pub fn to_density(&self) -> DensityMatrix {
        let a = &self.amplitudes;
        let matrix = ComplexMatrix::from_fn(8, 8, |r, c| a[r] * a[c].conj());
        DensityMatrix { matrix, layout: Layout::ABC }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    /// Relabel qubits: slot `s` of the result holds input qubit `order[s]`.
    ///
    /// `order = [C, A, B]` turns `|abc⟩` into `|cab⟩`.
    pub fn permuted(&self, order: [Qubit; 3]) -> Result<PureState, StateError> {
        Layout::new(&order)?;
        let mut out = [Complex64::new(0.0, 0.0); 8];
        for (idx, amp) in self.amplitudes.iter().enumerate() {
            let bit = |q: Qubit| (idx >> (2 - q.index())) & 1;
            out[basis_index(bit(order[0]), bit(order[1]), bit(order[2]))] = *amp;
        }
        Ok(PureState { amplitudes: out })
    }
}

/// Index of `|ijk⟩` in the computational basis.
pub fn basis_index(i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < 2 && j < 2 && k < 2);
    4 * i + 2 * j + k
}

fn norm_of(amplitudes: &[Complex64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Ordered qubit labels of a (possibly reduced) state, most significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    qubits: [Option<Qubit>; 3],
}

impl Layout {
    pub const ABC: Layout = Layout { qubits: [Some(Qubit::A), Some(Qubit::B), Some(Qubit::C)] };

    pub fn new(qubits: &[Qubit]) -> Result<Self, StateError> {
        if qubits.is_empty() || qubits.len() > 3 {
            return Err(StateError::InvalidLayout("expected one to three qubits"));
        }
        for (n, q) in qubits.iter().enumerate() {
            if qubits[..n].contains(q) {
                return Err(StateError::InvalidLayout("repeated qubit label"));
            }
        }
        let mut slots = [None; 3];
        for (slot, &q) in slots.iter_mut().zip(qubits) {
            *slot = Some(q);
        }
        Ok(Self { qubits: slots })
    }

    pub fn qubits(&self) -> impl Iterator<Item = Qubit> + '_ {
        self.qubits.iter().map_while(|q| *q)
    }

    pub fn len(&self) -> usize {
        self.qubits().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn position(&self, q: Qubit) -> Option<usize> {
        self.qubits().position(|x| x == q)
    }

    pub fn contains(&self, q: Qubit) -> bool {
        self.position(q).is_some()
    }

    /// Bit position of `q` inside a basis index (0 = least significant).
    fn bit_of(&self, q: Qubit) -> Result<usize, StateError> {
        let pos = self.position(q).ok_or(StateError::QubitNotPresent(q))?;
        Ok(self.len() - 1 - pos)
    }

    fn without(&self, q: Qubit) -> Layout {
        let kept: Vec<Qubit> = self.qubits().filter(|&x| x != q).collect();
        let mut slots = [None; 3];
        for (slot, q) in slots.iter_mut().zip(kept) {
            *slot = Some(q);
        }
        Layout { qubits: slots }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in self.qubits() {
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// Hermitian, unit-trace, positive semidefinite state operator on one to
/// three qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    layout: Layout,
}

impl DensityMatrix {
    /// Validates and wraps `matrix`.
    ///
    /// Deviations from Hermiticity up to `1e-10` are symmetrized away.
    /// Eigenvalues in `[-1e-10, -1e-14)` are clamped to zero and the trace is
    /// renormalized; anything further out is rejected.
    pub fn new(matrix: ComplexMatrix, layout: &[Qubit]) -> Result<Self, StateError> {
        let layout = Layout::new(layout)?;
        let dim = 1usize << layout.len();
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(StateError::LayoutMismatch { dim: matrix.rows().max(matrix.cols()), qubits: layout.len() });
        }
        let deviation = matrix.hermiticity_deviation();
        if !(deviation <= DENSITY_TOL) {
            return Err(StateError::NotHermitian { deviation });
        }
        let matrix = matrix.hermitian_part();
        let trace = matrix.trace().re;
        if !((trace - 1.0).abs() <= DENSITY_TOL) {
            return Err(StateError::NotUnitTrace { trace });
        }
        let eig = eig_hermitian(&matrix, DENSITY_TOL)?;
        let min_eigenvalue = eig.min_eigenvalue();
        if min_eigenvalue < -DENSITY_TOL {
            return Err(StateError::NotPsd { min_eigenvalue });
        }
        // eigenvalues just below zero at solver round-off are left alone:
        // rebuilding from the spectrum would add more error than it removes
        if min_eigenvalue < -REPAIR_FLOOR {
            let clamped_trace: f64 = eig.eigenvalues.iter().map(|l| l.max(0.0)).sum();
            let repaired = eig.map_spectrum(|l| l.max(0.0) / clamped_trace).hermitian_part();
            return Ok(Self { matrix: repaired, layout });
        }
        Ok(Self { matrix, layout })
    }

    /// Three-qubit state with layout `[A, B, C]`.
    pub fn three_qubit(matrix: ComplexMatrix) -> Result<Self, StateError> {
        Self::new(matrix, &[Qubit::A, Qubit::B, Qubit::C])
    }

    /// Maximally mixed state on the given layout.
    pub fn maximally_mixed(layout: &[Qubit]) -> Result<Self, StateError> {
        let layout = Layout::new(layout)?;
        let dim = 1usize << layout.len();
        let matrix = ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0));
        Ok(Self { matrix, layout })
    }

    /// Convex combination `Σ wᵢ ρᵢ` of states sharing one layout.
    ///
    /// # Panics
    /// If `parts` is empty or the layouts differ.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self, StateError> {
        let (_, first) = parts[0];
        let dim = first.dim();
        let mut acc = ComplexMatrix::zeros(dim, dim);
        for &(w, rho) in parts {
            assert_eq!(rho.layout, first.layout, "mixture of states with different layouts");
            acc = &acc + &rho.matrix.scale(Complex64::new(w, 0.0));
        }
        let layout: Vec<Qubit> = first.layout.qubits().collect();
        Self::new(acc, &layout)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Traces out `traced`; the result keeps the remaining qubits in order.
    pub fn partial_trace(&self, traced: Qubit) -> Result<DensityMatrix, StateError> {
        let bit = self.layout.bit_of(traced)?;
        if self.layout.len() == 1 {
            return Err(StateError::InvalidLayout("cannot trace out the last qubit"));
        }
        let half = self.dim() / 2;
        let insert = |x: usize, b: usize| ((x >> bit) << (bit + 1)) | (b << bit) | (x & ((1 << bit) - 1));
        let matrix = ComplexMatrix::from_fn(half, half, |r, c| {
            self.matrix[(insert(r, 0), insert(c, 0))] + self.matrix[(insert(r, 1), insert(c, 1))]
        });
        Ok(DensityMatrix { matrix, layout: self.layout.without(traced) })
    }

    /// Reduced state of a qubit pair of a three-qubit state.
    pub fn reduced_pair(&self, pair: Pair) -> Result<DensityMatrix, StateError> {
        self.partial_trace(pair.traced())
    }

    /// Reduced single-qubit state.
    pub fn single_qubit(&self, keep: Qubit) -> Result<DensityMatrix, StateError> {
        if !self.layout.contains(keep) {
            return Err(StateError::QubitNotPresent(keep));
        }
        let mut rho = self.clone();
        let others: Vec<Qubit> = self.layout.qubits().filter(|&q| q != keep).collect();
        for q in others {
            rho = rho.partial_trace(q)?;
        }
        Ok(rho)
    }

    /// `ρ^{T_side}`: `⟨i,j|ρ^T|k,l⟩ = ⟨k,j|ρ|i,l⟩` with `i, k` indexing `side`.
    /// The map is an involution, bit for bit.
    pub fn partial_transpose(&self, side: impl Into<Bipartition>) -> Result<ComplexMatrix, StateError> {
        let bit = self.layout.bit_of(side.into().side())?;
        let mask = 1usize << bit;
        let n = self.dim();
        Ok(ComplexMatrix::from_fn(n, n, |r, c| {
            let (rb, cb) = (r & mask, c & mask);
            self.matrix[((r & !mask) | cb, (c & !mask) | rb)]
        }))
    }
}

/// Pure or mixed three-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl State {
    pub fn density(&self) -> DensityMatrix {
        match self {
            State::Pure(psi) => psi.to_density(),
            State::Mixed(rho) => rho.clone(),
        }
    }

    pub fn as_pure(&self) -> Option<&PureState> {
        match self {
            State::Pure(psi) => Some(psi),
            State::Mixed(_) => None,
        }
    }
}

impl From<PureState> for State {
    fn from(psi: PureState) -> Self {
        State::Pure(psi)
    }
}

impl From<DensityMatrix> for State {
    fn from(rho: DensityMatrix) -> Self {
        State::Mixed(rho)
    }
}

/// `(u_a ⊗ u_b ⊗ u_c)|ψ⟩`.
pub fn apply_local_unitary(
    psi: &PureState,
    u_a: &ComplexMatrix,
    u_b: &ComplexMatrix,
    u_c: &ComplexMatrix,
) -> Result<PureState, StateError> {
    for (qubit, u) in Qubit::ALL.into_iter().zip([u_a, u_b, u_c]) {
        if u.rows() != 2 || u.cols() != 2 {
            return Err(StateError::NotUnitary { qubit, deviation: f64::INFINITY });
        }
        let deviation = u.unitarity_deviation();
        if !(deviation <= UNITARY_TOL) {
            return Err(StateError::NotUnitary { qubit, deviation });
        }
    }
    Ok(apply_local_unchecked(psi, u_a, u_b, u_c))
}

pub(crate) fn apply_local_unchecked(
    psi: &PureState,
    u_a: &ComplexMatrix,
    u_b: &ComplexMatrix,
    u_c: &ComplexMatrix,
) -> PureState {
    let mut amps = *psi.amplitudes();
    for (bit, u) in [(2usize, u_a), (1, u_b), (0, u_c)] {
        let mask = 1usize << bit;
        for idx in 0..8 {
            if idx & mask != 0 {
                continue;
            }
            let (lo, hi) = (amps[idx], amps[idx | mask]);
            amps[idx] = u[(0, 0)] * lo + u[(0, 1)] * hi;
            amps[idx | mask] = u[(1, 0)] * lo + u[(1, 1)] * hi;
        }
    }
    PureState::from_amplitudes_unchecked(amps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig_hermitian;
    use alloc::string::ToString;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ghz() -> PureState {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let mut a = [c(0.0, 0.0); 8];
        a[0] = c(h, 0.0);
        a[7] = c(h, 0.0);
        PureState::new(a).unwrap()
    }

    fn bell_bc(sign: f64) -> [Complex64; 4] {
        // (|10⟩ ± |01⟩)/√2 on BC
        let h = core::f64::consts::FRAC_1_SQRT_2;
        [c(0.0, 0.0), c(sign * h, 0.0), c(h, 0.0), c(0.0, 0.0)]
    }

    #[test]
    fn basis_density() {
        let rho = PureState::basis(0, 0, 0).to_density();
        for r in 0..8 {
            for col in 0..8 {
                let expected = if r == 0 && col == 0 { 1.0 } else { 0.0 };
                assert_eq!(rho.matrix()[(r, col)], c(expected, 0.0));
            }
        }
    }

    #[test]
    fn ghz_density_entries() {
        let rho = ghz().to_density();
        for (r, col) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
            assert!((rho.matrix()[(r, col)] - c(0.5, 0.0)).norm() < 1e-15);
        }
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-15);
        assert!((rho.purity() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized() {
        let err = PureState::new([c(0.0, 0.0); 8]).unwrap_err();
        assert_eq!(err.to_string(), "norm is 0, expected 1");
        assert!(PureState::normalized([c(0.0, 0.0); 8]).is_err());
    }

    #[test]
    fn trace_of_product_keeps_the_rest() {
        // |0⟩_A ⊗ Bell_BC
        let b = bell_bc(1.0);
        let mut a = [c(0.0, 0.0); 8];
        a[..4].copy_from_slice(&b);
        let rho = PureState::new(a).unwrap().to_density();
        let bc = rho.partial_trace(Qubit::A).unwrap();
        let expected = ComplexMatrix::from_fn(4, 4, |r, col| b[r] * b[col].conj());
        assert!(bc.matrix().max_abs_diff(&expected) < 1e-15);
        assert_eq!(bc.layout(), &Layout::new(&[Qubit::B, Qubit::C]).unwrap());
    }

    #[test]
    fn ghz_reduction_is_classical() {
        let bc = ghz().to_density().partial_trace(Qubit::A).unwrap();
        let expected = ComplexMatrix::from_real_diagonal(&[0.5, 0.0, 0.0, 0.5]);
        assert!(bc.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn bell_mixture_reduction_is_separable_diagonal() {
        // ρ₀ = ½|1⟩⟨1|_A ⊗ Ψ+ + ½|0⟩⟨0|_A ⊗ Ψ−
        let plus = bell_bc(1.0);
        let minus = bell_bc(-1.0);
        let mut v1 = [c(0.0, 0.0); 8];
        v1[4..].copy_from_slice(&plus);
        let mut v0 = [c(0.0, 0.0); 8];
        v0[..4].copy_from_slice(&minus);
        let r1 = PureState::new(v1).unwrap().to_density();
        let r0 = PureState::new(v0).unwrap().to_density();
        let rho = DensityMatrix::mixture(&[(0.5, &r1), (0.5, &r0)]).unwrap();
        let bc = rho.partial_trace(Qubit::A).unwrap();
        // ½|10⟩⟨10| + ½|01⟩⟨01|
        let expected = ComplexMatrix::from_real_diagonal(&[0.0, 0.5, 0.5, 0.0]);
        assert!(bc.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn trace_errors() {
        let bc = ghz().to_density().partial_trace(Qubit::A).unwrap();
        assert_eq!(bc.partial_trace(Qubit::A), Err(StateError::QubitNotPresent(Qubit::A)));
        let a = ghz().to_density().single_qubit(Qubit::A).unwrap();
        assert!(a.partial_trace(Qubit::A).is_err());
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let v = [c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)];
        let rho =
            DensityMatrix::new(ComplexMatrix::from_fn(4, 4, |r, col| v[r] * v[col].conj()), &[Qubit::B, Qubit::C])
                .unwrap();
        let pt = rho.partial_transpose(Qubit::B).unwrap();
        let eig = eig_hermitian(&pt, 1e-12).unwrap();
        let expected = [0.5, 0.5, 0.5, -0.5];
        for (l, e) in eig.eigenvalues.iter().zip(expected) {
            assert!((l - e).abs() < 1e-15);
        }
        assert_eq!(rho.partial_transpose(Qubit::A), Err(StateError::QubitNotPresent(Qubit::A)));
    }

    #[test]
    fn density_validation() {
        let not_unit = ComplexMatrix::from_real_diagonal(&[0.5, 0.4]);
        assert!(matches!(DensityMatrix::new(not_unit, &[Qubit::A]), Err(StateError::NotUnitTrace { .. })));
        let negative = ComplexMatrix::from_real_diagonal(&[1.1, -0.1]);
        assert!(matches!(DensityMatrix::new(negative, &[Qubit::A]), Err(StateError::NotPsd { .. })));
        let tiny_negative = ComplexMatrix::from_real_diagonal(&[1.0 + 5e-11, -5e-11]);
        let rho = DensityMatrix::new(tiny_negative, &[Qubit::A]).unwrap();
        assert!(rho.matrix()[(1, 1)].re >= 0.0);
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-15);
        let mut skew = ComplexMatrix::from_real_diagonal(&[0.5, 0.5]);
        skew[(0, 1)] = c(0.1, 0.0);
        assert!(matches!(DensityMatrix::new(skew, &[Qubit::A]), Err(StateError::NotHermitian { .. })));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::identity(2), &[Qubit::A, Qubit::B]),
            Err(StateError::LayoutMismatch { .. })
        ));
        assert!(matches!(Layout::new(&[Qubit::A, Qubit::A]), Err(StateError::InvalidLayout(_))));
    }

    #[test]
    fn local_unitary_examples() {
        let id = ComplexMatrix::identity(2);
        let psi = ghz();
        assert_eq!(apply_local_unitary(&psi, &id, &id, &id).unwrap(), psi);
        let x = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let flipped = apply_local_unitary(&PureState::basis(0, 0, 0), &x, &x, &x).unwrap();
        assert_eq!(flipped, PureState::basis(1, 1, 1));
        let not_unitary = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            apply_local_unitary(&psi, &id, &not_unitary, &id),
            Err(StateError::NotUnitary { qubit: Qubit::B, .. })
        ));
    }

    #[test]
    fn local_unitary_acts_on_the_right_qubit() {
        let x = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let id = ComplexMatrix::identity(2);
        let out = apply_local_unitary(&PureState::basis(0, 0, 0), &id, &x, &id).unwrap();
        assert_eq!(out, PureState::basis(0, 1, 0));
        let out = apply_local_unitary(&PureState::basis(0, 0, 0), &id, &id, &x).unwrap();
        assert_eq!(out, PureState::basis(0, 0, 1));
    }

    #[test]
    fn permutation_moves_qubits() {
        let psi = PureState::basis(1, 0, 0);
        assert_eq!(psi.permuted([Qubit::B, Qubit::C, Qubit::A]).unwrap(), PureState::basis(0, 0, 1));
        assert_eq!(psi.permuted([Qubit::A, Qubit::B, Qubit::C]).unwrap(), psi);
        assert!(matches!(psi.permuted([Qubit::A, Qubit::A, Qubit::C]), Err(StateError::InvalidLayout(_))));
    }

    #[test]
    fn display_labels() {
        assert_eq!(alloc::format!("{}", Bipartition(Qubit::B)), "B|AC");
        assert_eq!(alloc::format!("{}", Qubit::C.complement()), "AB");
        assert_eq!(Pair::AC.traced(), Qubit::B);
    }
}

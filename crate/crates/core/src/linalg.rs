//! Dense complex linear algebra for matrices of dimension at most 8.
//!
//! Everything here is sized for three-qubit work: density matrices are at
//! most 8×8, reduced states 4×4 or 2×2. The kernels are Jacobi-type
//! (two-sided for Hermitian eigenproblems, one-sided for singular values),
//! which are simple and accurate at this size.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

/// Largest supported row or column count.
pub const MAX_DIM: usize = 8;

/// Sweep cap for the Jacobi iterations.
pub const MAX_SWEEPS: usize = 100;

/// Convergence threshold for the Hermitian eigensolver, relative to the
/// Frobenius norm of the input.
const EIG_OFF_DIAGONAL_REL_TOL: f64 = 1e-14;

/// Column-orthogonality threshold for the one-sided Jacobi SVD.
const SVD_ORTHOGONALITY_TOL: f64 = 1e-15;

/// Eigenvalues below this are rejected by [`sqrt_psd`]; the ones between it
/// and zero are clamped.
pub const PSD_FLOOR: f64 = -1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix shape {rows}x{cols} is outside the supported range 1..=8")]
    UnsupportedDimension { rows: usize, cols: usize },
    #[error("{len} entries cannot fill a {rows}x{cols} matrix")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is {rows}x{cols}, expected {expected}x{expected}")]
    WrongDimension { rows: usize, cols: usize, expected: usize },
    #[error("matrix deviates from Hermitian by {deviation:e} (tolerance {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },
    #[error("matrix has eigenvalue {min_eigenvalue:e}, below the PSD floor -1e-10")]
    NotPsd { min_eigenvalue: f64 },
    #[error("Jacobi iteration stopped after {sweeps} sweeps with off-diagonal norm {off_norm:e}")]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self, LinalgError> {
        check_shape(rows, cols)?;
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch { rows, cols, len: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    /// # Panics
    /// If either dimension is outside `1..=MAX_DIM`.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(check_shape(rows, cols).is_ok(), "unsupported shape {rows}x{cols}");
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |r, c| if r == c { Complex64::new(diag[r], 0.0) } else { ZERO })
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self, LinalgError> {
        Self::new(rows, cols, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// 2×2 matrix from its four entries, row-major.
    pub fn mat2(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        Self { rows: 2, cols: 2, data: vec![m00, m01, m10, m11] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * factor).collect() }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    ///
    /// # Panics
    /// If the shapes differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `max |a_ij - conj(a_ji)|`; infinite for non-square input.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut dev = 0.0f64;
        for r in 0..n {
            for c in r..n {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        dev
    }

    /// `(a + a†) / 2` with an exactly real diagonal.
    pub fn hermitian_part(&self) -> Self {
        let n = self.rows;
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Complex64::new(self[(r, r)].re, 0.0)
            } else {
                (self[(r, c)] + self[(c, r)].conj()) * 0.5
            }
        })
    }

    /// `‖a†a − 1‖_max`; infinite for non-square input.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        (&self.adjoint() * self).max_abs_diff(&Self::identity(self.rows))
    }

    /// Kronecker product `self ⊗ other`.
    ///
    /// # Panics
    /// If the product exceeds `MAX_DIM` in either axis.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Self::from_fn(rows, cols, |r, c| {
            self[(r / other.rows, c / other.cols)] * other[(r % other.rows, c % other.cols)]
        })
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|r| (0..self.cols).map(|c| self[(r, c)] * v[c]).sum()).collect()
    }
}

fn check_shape(rows: usize, cols: usize) -> Result<(), LinalgError> {
    if (1..=MAX_DIM).contains(&rows) && (1..=MAX_DIM).contains(&cols) {
        Ok(())
    } else {
        Err(LinalgError::UnsupportedDimension { rows, cols })
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        ComplexMatrix::from_fn(self.rows, rhs.cols, |r, c| (0..self.cols).map(|k| self[(r, k)] * rhs[(k, c)]).sum())
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Spectrum and eigenbasis of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Sorted descending; ties keep the order in which the solver produced them.
    pub eigenvalues: Vec<f64>,
    /// Unitary; column `i` belongs to `eigenvalues[i]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn max_abs_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, l| m.max(l.abs()))
    }

    /// `V · diag(f(λ)) · V†`.
    pub fn map_spectrum(&self, mut f: impl FnMut(f64) -> f64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.rows();
        let mapped: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |r, c| (0..n).map(|k| v[(r, k)] * v[(c, k)].conj() * mapped[k]).sum())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|l| l)
    }
}

/// Unitary `J` (entries `jpp, jpq, jqp, jqq`) such that `J† H J` is diagonal
/// for the 2×2 Hermitian block `H = [[app, apq], [conj(apq), aqq]]`.
fn jacobi_rotation(app: f64, aqq: f64, apq: Complex64) -> [Complex64; 4] {
    let g = apq.norm();
    // conj of the phase of apq; moves the block to real symmetric form
    let phase_conj = apq.conj() / g;
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.is_finite() {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + theta.hypot(1.0))
    } else {
        0.0
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    [Complex64::new(c, 0.0), Complex64::new(s, 0.0), phase_conj * (-s), phase_conj * c]
}

/// `M ← M · J` on columns `p`, `q`.
fn rotate_columns(m: &mut ComplexMatrix, p: usize, q: usize, j: &[Complex64; 4]) {
    for k in 0..m.rows() {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * j[0] + mkq * j[2];
        m[(k, q)] = mkp * j[1] + mkq * j[3];
    }
}

/// `M ← J† · M` on rows `p`, `q`.
fn rotate_rows(m: &mut ComplexMatrix, p: usize, q: usize, j: &[Complex64; 4]) {
    for k in 0..m.cols() {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = j[0].conj() * mpk + j[2].conj() * mqk;
        m[(q, k)] = j[1].conj() * mpk + j[3].conj() * mqk;
    }
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc += m[(r, c)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// The input is symmetrized to `(a + a†)/2` once its deviation from
/// Hermiticity has been checked against `hermiticity_tol`. Iteration stops
/// when the off-diagonal Frobenius norm drops to `1e-14·‖a‖_F`.
pub fn eig_hermitian(a: &ComplexMatrix, hermiticity_tol: f64) -> Result<HermitianEigen, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let deviation = a.hermiticity_deviation();
    if !(deviation <= hermiticity_tol) {
        return Err(LinalgError::NotHermitian { deviation, tolerance: hermiticity_tol });
    }
    let n = a.rows();
    let mut m = a.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = EIG_OFF_DIAGONAL_REL_TOL * m.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&m);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == ZERO {
                    continue;
                }
                let j = jacobi_rotation(m[(p, p)].re, m[(q, q)].re, apq);
                rotate_columns(&mut m, p, q, &j);
                rotate_rows(&mut m, p, q, &j);
                rotate_columns(&mut v, p, q, &j);
                m[(p, q)] = ZERO;
                m[(q, p)] = ZERO;
                m[(p, p)].im = 0.0;
                m[(q, q)].im = 0.0;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: equal eigenvalues keep their solver order
    order.sort_by(|&x, &y| m[(y, y)].re.total_cmp(&m[(x, x)].re));
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { eigenvalues, eigenvectors })
}

/// One-sided Jacobi orthogonalization: returns `(G, V)` with `G = M·V`,
/// `V` unitary and the columns of `G` mutually orthogonal.
fn orthogonalize_columns(m: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix), LinalgError> {
    let n = m.cols();
    let mut g = m.clone();
    let mut v = ComplexMatrix::identity(n);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = ZERO;
                for k in 0..g.rows() {
                    alpha += g[(k, p)].norm_sqr();
                    beta += g[(k, q)].norm_sqr();
                    gamma += g[(k, p)].conj() * g[(k, q)];
                }
                if gamma == ZERO || gamma.norm() <= SVD_ORTHOGONALITY_TOL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let j = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(&mut g, p, q, &j);
                rotate_columns(&mut v, p, q, &j);
            }
        }
        if !rotated {
            return Ok((g, v));
        }
    }
    let mut worst = 0.0f64;
    for p in 0..n {
        for q in p + 1..n {
            let gamma: Complex64 = (0..g.rows()).map(|k| g[(k, p)].conj() * g[(k, q)]).sum();
            worst = worst.max(gamma.norm());
        }
    }
    Err(LinalgError::NoConvergence { sweeps: MAX_SWEEPS, off_norm: worst })
}

/// Singular values, descending.
///
/// Computed as column norms after one-sided Jacobi, so small singular values
/// carry absolute error of order `ε·‖m‖` rather than `√ε·‖m‖`.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>, LinalgError> {
    let (g, _) = orthogonalize_columns(m)?;
    let mut sv: Vec<f64> =
        (0..g.cols()).map(|c| (0..g.rows()).map(|r| g[(r, c)].norm_sqr()).sum::<f64>().sqrt()).collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// Full SVD of a 2×2 matrix: `m = u · diag(singulars) · v†`.
#[derive(Debug, Clone)]
pub struct Svd2 {
    pub u: ComplexMatrix,
    pub singulars: [f64; 2],
    pub v: ComplexMatrix,
}

pub fn svd_2x2(m: &ComplexMatrix) -> Result<Svd2, LinalgError> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(LinalgError::WrongDimension { rows: m.rows(), cols: m.cols(), expected: 2 });
    }
    let (mut g, mut v) = orthogonalize_columns(m)?;
    let norm = |g: &ComplexMatrix, c: usize| (g[(0, c)].norm_sqr() + g[(1, c)].norm_sqr()).sqrt();
    if norm(&g, 1) > norm(&g, 0) {
        g = ComplexMatrix::mat2(g[(0, 1)], g[(0, 0)], g[(1, 1)], g[(1, 0)]);
        v = ComplexMatrix::mat2(v[(0, 1)], v[(0, 0)], v[(1, 1)], v[(1, 0)]);
    }
    let s1 = norm(&g, 0);
    if s1 == 0.0 {
        return Ok(Svd2 { u: ComplexMatrix::identity(2), singulars: [0.0, 0.0], v });
    }
    let u0 = [g[(0, 0)] / s1, g[(1, 0)] / s1];
    // second left vector is the orthogonal complement of the first, phased so
    // that u1† g1 is real and non-negative
    let mut u1 = [-u0[1].conj(), u0[0].conj()];
    let h = u1[0].conj() * g[(0, 1)] + u1[1].conj() * g[(1, 1)];
    let s2 = h.norm();
    if s2 > 0.0 {
        let phase = h / s2;
        u1 = [u1[0] * phase, u1[1] * phase];
    }
    let u = ComplexMatrix::mat2(u0[0], u1[0], u0[1], u1[1]);
    Ok(Svd2 { u, singulars: [s1, s2], v })
}

/// Principal square root of a Hermitian positive semidefinite matrix.
///
/// Eigenvalues in `[-1e-10, 0)` are clamped to zero.
pub fn sqrt_psd(a: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    let eig = eig_hermitian(a, 1e-10)?;
    let min_eigenvalue = eig.min_eigenvalue();
    if min_eigenvalue < PSD_FLOOR {
        return Err(LinalgError::NotPsd { min_eigenvalue });
    }
    // eigenvalues at rounding level are zeros; their square roots would not be
    let noise = 64.0 * f64::EPSILON * eig.max_abs_eigenvalue().max(f64::MIN_POSITIVE);
    Ok(eig.map_spectrum(|l| if l <= noise { 0.0 } else { l.sqrt() }).hermitian_part())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(rows: usize, entries: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real(rows, entries.len() / rows, entries).unwrap()
    }

    #[test]
    fn identity_spectrum() {
        let e = eig_hermitian(&ComplexMatrix::identity(2), 1e-12).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0]);
    }

    #[test]
    fn diagonal_is_already_solved() {
        let e = eig_hermitian(&real(2, &[3.0, 0.0, 0.0, -1.0]), 1e-12).unwrap();
        assert_eq!(e.eigenvalues, vec![3.0, -1.0]);
        assert_eq!(e.eigenvectors, ComplexMatrix::identity(2));
    }

    #[test]
    fn ascending_diagonal_is_reordered() {
        let e = eig_hermitian(&real(2, &[-1.0, 0.0, 0.0, 3.0]), 1e-12).unwrap();
        assert_eq!(e.eigenvalues, vec![3.0, -1.0]);
        assert_eq!(e.eigenvectors[(1, 0)], ONE);
    }

    #[test]
    fn pauli_x_spectrum() {
        // characteristic polynomial λ² − 1
        let e = eig_hermitian(&real(2, &[0.0, 1.0, 1.0, 0.0]), 1e-12).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-15);
        assert!((e.eigenvalues[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn pauli_y_spectrum_and_vectors() {
        let y = ComplexMatrix::mat2(ZERO, c(0.0, -1.0), c(0.0, 1.0), ZERO);
        let e = eig_hermitian(&y, 1e-12).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-15);
        assert!(e.reconstruct().max_abs_diff(&y) < 1e-15);
        assert!(e.eigenvectors.unitarity_deviation() < 1e-15);
    }

    #[test]
    fn rejects_non_square_and_non_hermitian() {
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(eig_hermitian(&rect, 1e-10), Err(LinalgError::NotSquare { .. })));
        let skew = real(2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(eig_hermitian(&skew, 1e-10), Err(LinalgError::NotHermitian { .. })));
        // small deviations inside the tolerance are symmetrized away
        let nearly = real(2, &[1.0, 1e-12, 0.0, 1.0]);
        assert!(eig_hermitian(&nearly, 1e-10).is_ok());
    }

    #[test]
    fn zero_matrix() {
        let e = eig_hermitian(&ComplexMatrix::zeros(4, 4), 1e-12).unwrap();
        assert_eq!(e.eigenvalues, vec![0.0; 4]);
    }

    #[test]
    fn shape_checks() {
        assert!(matches!(ComplexMatrix::new(9, 1, vec![ZERO; 9]), Err(LinalgError::UnsupportedDimension { .. })));
        assert!(matches!(ComplexMatrix::new(2, 2, vec![ZERO; 3]), Err(LinalgError::ShapeMismatch { .. })));
    }

    #[test]
    fn svd_examples() {
        let s = svd_2x2(&ComplexMatrix::identity(2)).unwrap();
        assert_eq!(s.singulars, [1.0, 1.0]);
        let s = svd_2x2(&real(2, &[1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(s.singulars, [1.0, 0.0]);
        // m†m = diag(1, 4)
        let m = real(2, &[0.0, 2.0, 1.0, 0.0]);
        let s = svd_2x2(&m).unwrap();
        assert!((s.singulars[0] - 2.0).abs() < 1e-15 && (s.singulars[1] - 1.0).abs() < 1e-15);
        let rebuilt = &(&s.u * &ComplexMatrix::from_real_diagonal(&s.singulars)) * &s.v.adjoint();
        assert!(rebuilt.max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn svd_of_zero_and_wrong_shape() {
        let s = svd_2x2(&ComplexMatrix::zeros(2, 2)).unwrap();
        assert_eq!(s.singulars, [0.0, 0.0]);
        assert!(svd_2x2(&ComplexMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_psd(&ComplexMatrix::identity(2)).unwrap(), ComplexMatrix::identity(2));
        let r = sqrt_psd(&real(2, &[4.0, 0.0, 0.0, 9.0])).unwrap();
        assert!(r.max_abs_diff(&real(2, &[2.0, 0.0, 0.0, 3.0])) < 1e-15);
        let proj = real(2, &[0.5, 0.5, 0.5, 0.5]);
        assert!(sqrt_psd(&proj).unwrap().max_abs_diff(&proj) < 1e-15);
    }

    #[test]
    fn sqrt_rejects_negative_spectrum() {
        let m = real(2, &[1.0, 0.0, 0.0, -1e-6]);
        assert!(matches!(sqrt_psd(&m), Err(LinalgError::NotPsd { .. })));
        let m = real(2, &[1.0, 0.0, 0.0, -1e-12]);
        let r = sqrt_psd(&m).unwrap();
        assert_eq!(r[(1, 1)], ZERO);
    }

    #[test]
    fn kron_of_identities() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.kron(&i2).kron(&i2), ComplexMatrix::identity(8));
    }
}

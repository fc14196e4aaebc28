//! Generalized Schmidt decomposition of pure three-qubit states.
//!
//! Every pure state is LU-equivalent to
//! `α|000⟩ + β|100⟩ + δ|110⟩ + ε|101⟩ + ω|111⟩`. The reduction picks a
//! combination `x₀T₀ + x₁T₁` of the two `2×2` slices of the amplitude tensor
//! with vanishing determinant, rotates qubit A onto it and diagonalizes the
//! resulting rank-one slice on B and C.

use core::fmt;

use num_complex::Complex64;

use crate::classify::SubtypeLabel;
use crate::linalg::{eig_hermitian, svd_2x2, ComplexMatrix};
use crate::states::{apply_local_unchecked, basis_index, Pair, PureState, Qubit, NORM_TOL};

/// Magnitude above which a coefficient that should vanish is reported as a
/// numerical failure.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Default zero threshold for pattern matching.
pub const DEFAULT_PATTERN_TOL: f64 = 1e-8;

/// Discriminants this small are treated as an exact double root.
const DISC_FLOOR: f64 = 1e-13;

/// Quadratics with all coefficients this small are treated as identically zero.
const POLY_FLOOR: f64 = 1e-13;

/// Relative gap below which two candidate `α` are considered tied.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GsdError {
    #[error("norm is {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("numerical degeneracy: {detail} (residual {residual:e})")]
    NumericalDegeneracy { detail: &'static str, residual: f64 },
    #[error("{quantity} = {value:e} is within a factor 10 of the zero threshold {tol:e}")]
    AmbiguousNearThreshold { quantity: &'static str, value: f64, tol: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseMode {
    /// No phase fixing beyond what the construction produces (`α ≥ 0`).
    Raw,
    /// `α, δ, ε, ω` real and non-negative; only `β` keeps a phase.
    Normal,
}

/// Canonical coefficients and the local unitaries that produce them.
#[derive(Debug, Clone)]
pub struct GsdForm {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub delta: Complex64,
    pub epsilon: Complex64,
    pub omega: Complex64,
    pub mode: PhaseMode,
    pub u_a: ComplexMatrix,
    pub u_b: ComplexMatrix,
    pub u_c: ComplexMatrix,
}

impl GsdForm {
    /// `[α, β, δ, ε, ω]`.
    pub fn coefficients(&self) -> [Complex64; 5] {
        [self.alpha, self.beta, self.delta, self.epsilon, self.omega]
    }

    pub fn magnitudes(&self) -> [f64; 5] {
        self.coefficients().map(|z| z.norm())
    }

    /// The canonical state as an eight-component vector.
    pub fn to_state(&self) -> PureState {
        let mut a = [Complex64::new(0.0, 0.0); 8];
        a[basis_index(0, 0, 0)] = self.alpha;
        a[basis_index(1, 0, 0)] = self.beta;
        a[basis_index(1, 1, 0)] = self.delta;
        a[basis_index(1, 0, 1)] = self.epsilon;
        a[basis_index(1, 1, 1)] = self.omega;
        PureState::from_amplitudes_unchecked(a)
    }
}

fn det2(m: [[Complex64; 2]; 2]) -> Complex64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn slice(psi: &PureState, i: usize) -> [[Complex64; 2]; 2] {
    [[psi.amplitude(i, 0, 0), psi.amplitude(i, 0, 1)], [psi.amplitude(i, 1, 0), psi.amplitude(i, 1, 1)]]
}

/// Unit vector with the phase removed so the first entry is real and
/// non-negative. `None` for the zero vector.
fn normalize_direction(x: [Complex64; 2]) -> Option<[Complex64; 2]> {
    let n = (x[0].norm_sqr() + x[1].norm_sqr()).sqrt();
    if n == 0.0 || !n.is_finite() {
        return None;
    }
    let (x0, x1) = (x[0] / n, x[1] / n);
    let r = x0.norm();
    if r == 0.0 {
        return Some([Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);
    }
    let phase = x0.conj() / r;
    Some([Complex64::new(r, 0.0), x1 * phase])
}

/// Directions `(x₀, x₁)` with `det(x₀T₀ + x₁T₁) = 0`.
fn root_directions(psi: &PureState) -> ([Option<[Complex64; 2]>; 2], bool) {
    let (t0, t1) = (slice(psi, 0), slice(psi, 1));
    let a = det2(t1);
    let c = det2(t0);
    let b = t0[0][0] * t1[1][1] + t1[0][0] * t0[1][1] - t0[0][1] * t1[1][0] - t1[0][1] * t0[1][0];
    if a.norm().max(b.norm()).max(c.norm()) <= POLY_FLOOR {
        return ([None, None], true);
    }
    // c·x₀² + b·x₀x₁ + a·x₁² = 0, solved in the cancellation-free form
    let disc = b * b - a * c * 4.0;
    let mut sq = if disc.norm() <= DISC_FLOOR { Complex64::new(0.0, 0.0) } else { disc.sqrt() };
    if (b.conj() * sq).re < 0.0 {
        sq = -sq;
    }
    let q = -(b + sq) / 2.0;
    ([normalize_direction([a, q]), normalize_direction([q, c])], false)
}

/// Direction maximizing `‖x₀T₀ + x₁T₁‖`, used when every combination is
/// singular.
fn dominant_direction(psi: &PureState) -> [Complex64; 2] {
    let t = [slice(psi, 0), slice(psi, 1)];
    let gram = ComplexMatrix::from_fn(2, 2, |i, j| {
        t[i].iter().flatten().zip(t[j].iter().flatten()).map(|(x, y)| x.conj() * y).sum()
    });
    eig_hermitian(&gram, 1e-9)
        .ok()
        .and_then(|e| normalize_direction([e.eigenvectors[(0, 0)], e.eigenvectors[(1, 0)]]))
        .unwrap_or([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)])
}

struct Candidate {
    alpha: f64,
    z: f64,
    u_a: ComplexMatrix,
    u_b: ComplexMatrix,
    u_c: ComplexMatrix,
}

fn build_candidate(psi: &PureState, x: [Complex64; 2]) -> Result<Candidate, GsdError> {
    let (t0, t1) = (slice(psi, 0), slice(psi, 1));
    let u_a = ComplexMatrix::mat2(x[0], x[1], -x[1].conj(), x[0].conj());
    let t = ComplexMatrix::from_fn(2, 2, |j, k| x[0] * t0[j][k] + x[1] * t1[j][k]);
    let svd = svd_2x2(&t).map_err(|_| GsdError::NumericalDegeneracy {
        detail: "singular value decomposition of the rotated slice failed",
        residual: f64::NAN,
    })?;
    let z = if x[0].norm() == 0.0 { f64::INFINITY } else { x[1].norm() / x[0].norm() };
    if svd.singulars[0] <= RESIDUAL_TOL {
        // the slice vanishes, so any basis on B and C works; keeping the input's
        // makes an already canonical state a fixed point
        let id = ComplexMatrix::identity(2);
        return Ok(Candidate { alpha: svd.singulars[0], z, u_a, u_b: id.clone(), u_c: id });
    }
    Ok(Candidate { alpha: svd.singulars[0], z, u_a, u_b: svd.u.adjoint(), u_c: svd.v.transpose() })
}

fn better(new: &Candidate, best: &Candidate) -> bool {
    let scale = new.alpha.max(best.alpha);
    if (new.alpha - best.alpha).abs() <= TIE_TOL * scale {
        new.z < best.z
    } else {
        new.alpha > best.alpha
    }
}

fn arg_or_zero(z: Complex64) -> f64 {
    if z.norm() == 0.0 {
        0.0
    } else {
        z.arg()
    }
}

fn phase_diag(theta: f64) -> ComplexMatrix {
    ComplexMatrix::mat2(
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::from_polar(1.0, theta),
    )
}

/// Reduce `psi` to canonical form.
pub fn gsd(psi: &PureState, mode: PhaseMode) -> Result<GsdForm, GsdError> {
    let norm = psi.norm();
    if !((norm * norm - 1.0).abs() <= NORM_TOL) {
        return Err(GsdError::NotNormalized { norm });
    }
    let (roots, degenerate) = root_directions(psi);
    let directions: [Option<[Complex64; 2]>; 2] =
        if degenerate { [Some(dominant_direction(psi)), None] } else { roots };

    let mut best: Option<Candidate> = None;
    for x in directions.into_iter().flatten() {
        let cand = build_candidate(psi, x)?;
        if best.as_ref().is_none_or(|b| better(&cand, b)) {
            best = Some(cand);
        }
    }
    let best = match best {
        Some(b) => b,
        None => build_candidate(psi, [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)])?,
    };
    let Candidate { mut u_a, mut u_b, mut u_c, .. } = best;

    let out = apply_local_unchecked(psi, &u_a, &u_b, &u_c);
    let residual =
        [(0, 0, 1), (0, 1, 0), (0, 1, 1)].iter().map(|&(i, j, k)| out.amplitude(i, j, k).norm()).fold(0.0, f64::max);
    if !(residual <= RESIDUAL_TOL) {
        return Err(GsdError::NumericalDegeneracy { detail: "non-canonical coefficients survive", residual });
    }

    let coeff = |i, j, k| out.amplitude(i, j, k);
    let (mut alpha, mut beta, mut delta, mut epsilon, mut omega) =
        (coeff(0, 0, 0), coeff(1, 0, 0), coeff(1, 1, 0), coeff(1, 0, 1), coeff(1, 1, 1));

    if mode == PhaseMode::Normal {
        let g = -arg_or_zero(alpha);
        let t_delta = -g - arg_or_zero(delta);
        let t_epsilon = -g - arg_or_zero(epsilon);
        let t_omega = -g - arg_or_zero(omega);
        let pa = t_delta + t_epsilon - t_omega;
        let pb = t_delta - pa;
        let pc = t_epsilon - pa;
        u_a = (&phase_diag(pa) * &u_a).scale(Complex64::from_polar(1.0, g));
        u_b = &phase_diag(pb) * &u_b;
        u_c = &phase_diag(pc) * &u_c;
        let fixed = apply_local_unchecked(psi, &u_a, &u_b, &u_c);
        let real = |z: Complex64| Complex64::new(z.norm(), 0.0);
        alpha = real(fixed.amplitude(0, 0, 0));
        beta = fixed.amplitude(1, 0, 0);
        delta = real(fixed.amplitude(1, 1, 0));
        epsilon = real(fixed.amplitude(1, 0, 1));
        omega = real(fixed.amplitude(1, 1, 1));
    } else {
        // the construction already makes α a non-negative singular value
        alpha = Complex64::new(alpha.norm(), 0.0);
    }

    Ok(GsdForm { alpha, beta, delta, epsilon, omega, mode, u_a, u_b, u_c })
}

/// Coefficient patterns of the canonical catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GsdPattern {
    /// Only `α` (and possibly `β`), or `α = 0` with `βω = δε`.
    Product,
    /// `α = 0`, `βω ≠ δε`: qubit A factors out.
    B,
    /// `α, ε` (and possibly `β`): qubit B factors out.
    BPrime,
    /// `α, δ` (and possibly `β`): qubit C factors out.
    BDoublePrime,
    /// `α, ω` only.
    Ghz,
    /// `α, β, ω`: only BC entangled.
    IV,
    /// `α, ε, ω`: only AC entangled.
    IVPrime,
    /// `α, δ, ω`: only AB entangled.
    IVDoublePrime,
    /// `α, β, ε, ω`: AB separable.
    S,
    /// `α, β, δ, ω`: AC separable.
    SPrime,
    /// `α, δ, ε` nonzero.
    WLike,
}

impl GsdPattern {
    pub fn name(self) -> &'static str {
        match self {
            GsdPattern::Product => "product",
            GsdPattern::B => "B",
            GsdPattern::BPrime => "B'",
            GsdPattern::BDoublePrime => "B''",
            GsdPattern::Ghz => "GHZ",
            GsdPattern::IV => "IV",
            GsdPattern::IVPrime => "IV'",
            GsdPattern::IVDoublePrime => "IV''",
            GsdPattern::S => "S",
            GsdPattern::SPrime => "S'",
            GsdPattern::WLike => "W",
        }
    }

    pub fn subtype(self) -> SubtypeLabel {
        match self {
            GsdPattern::Product => SubtypeLabel::FullySeparable,
            GsdPattern::B => SubtypeLabel::SimplyBiseparable { separable: Qubit::A },
            GsdPattern::BPrime => SubtypeLabel::SimplyBiseparable { separable: Qubit::B },
            GsdPattern::BDoublePrime => SubtypeLabel::SimplyBiseparable { separable: Qubit::C },
            GsdPattern::Ghz => SubtypeLabel::GhzLike,
            GsdPattern::IV => SubtypeLabel::TwoOne { entangled: Pair::BC },
            GsdPattern::IVPrime => SubtypeLabel::TwoOne { entangled: Pair::AC },
            GsdPattern::IVDoublePrime => SubtypeLabel::TwoOne { entangled: Pair::AB },
            GsdPattern::S => SubtypeLabel::TwoTwo { separable: Pair::AB },
            GsdPattern::SPrime => SubtypeLabel::TwoTwo { separable: Pair::AC },
            GsdPattern::WLike => SubtypeLabel::WLike,
        }
    }
}

impl fmt::Display for GsdPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_margin(quantity: &'static str, value: f64, tol: f64) -> Result<bool, GsdError> {
    if value > tol / 10.0 && value < tol * 10.0 {
        return Err(GsdError::AmbiguousNearThreshold { quantity, value, tol });
    }
    Ok(value > tol)
}

/// Match the zero pattern of `form` against the catalog.
///
/// The `βω − δε` side condition is only consulted when `α` vanishes, the one
/// case where it decides the pattern.
pub fn classify_gsd_pattern(form: &GsdForm, zero_tol: f64) -> Result<GsdPattern, GsdError> {
    let alpha = check_margin("|alpha|", form.alpha.norm(), zero_tol)?;
    let beta = check_margin("|beta|", form.beta.norm(), zero_tol)?;
    let delta = check_margin("|delta|", form.delta.norm(), zero_tol)?;
    let epsilon = check_margin("|epsilon|", form.epsilon.norm(), zero_tol)?;
    let omega = check_margin("|omega|", form.omega.norm(), zero_tol)?;

    if !alpha {
        let d = (form.beta * form.omega - form.delta * form.epsilon).norm();
        return Ok(if check_margin("|beta*omega - delta*epsilon|", d, zero_tol)? {
            GsdPattern::B
        } else {
            GsdPattern::Product
        });
    }
    Ok(match (beta, delta, epsilon, omega) {
        (_, true, true, _) => GsdPattern::WLike,
        (_, false, false, false) => GsdPattern::Product,
        (_, true, false, false) => GsdPattern::BDoublePrime,
        (_, false, true, false) => GsdPattern::BPrime,
        (false, false, false, true) => GsdPattern::Ghz,
        (true, false, false, true) => GsdPattern::IV,
        (false, false, true, true) => GsdPattern::IVPrime,
        (false, true, false, true) => GsdPattern::IVDoublePrime,
        (true, false, true, true) => GsdPattern::S,
        (true, true, false, true) => GsdPattern::SPrime,
    })
}

//! Named states, parametric families and their closed-form values.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;
use core::fmt;

use num_complex::Complex64;

use crate::classify::{classify_mixed, classify_pure, Claim, MixedVerdict, SubtypeLabel};
use crate::linalg::ComplexMatrix;
use crate::measures::{MeasureError, MeasureSet};
use crate::states::{DensityMatrix, PureState, State, StateError};

/// Tolerance on `α² + ε² + δ² = 1` for the canonical W-like family.
pub const COEFF_NORM_TOL: f64 = 1e-10;

/// Default number of grid points per family.
pub const DEFAULT_POINTS: usize = 101;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} takes {expected} parameter(s), got {got}")]
    WrongArity { family: Family, expected: usize, got: usize },
    #[error("{family}: {param} = {value} is outside {domain}")]
    ParamOutOfDomain { family: Family, param: &'static str, value: f64, domain: &'static str },
    #[error("{family} has no closed form for {quantity}")]
    NoOracle { family: Family, quantity: OracleQuantity },
    #[error("grid is empty")]
    EmptyGrid,
    #[error("at parameters {params:?}: {source}")]
    PointFailed { params: Vec<f64>, source: MeasureError },
    #[error(transparent)]
    State(#[from] StateError),
}

/// Parametric families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `α|000⟩ + √(1−α²)|111⟩`, `α ∈ [0, 1]`.
    GhzLike,
    /// `α|000⟩ + ε|101⟩ + δ|110⟩`, real coefficients with unit norm.
    WCanonical,
    /// `p·GHZ + (1−p)·W′`, `p ∈ [0, 1]`.
    GhzWMix,
    /// `p·GHZ + (1−p)/8·𝟙`, `p ∈ [0, 1]`.
    GhzNoise,
    /// Bound-entangled `2×4` family embedded on three qubits, `b ∈ (0, 1)`.
    SigmaB,
    /// `½(1+ε)|1⟩⟨1| ⊗ Ψ₊ + ½(1−ε)|0⟩⟨0| ⊗ Ψ₋`, `|ε| ≤ 1`.
    RhoEpsilon,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::GhzLike, Family::WCanonical, Family::GhzWMix, Family::GhzNoise, Family::SigmaB, Family::RhoEpsilon];

    pub fn id(self) -> &'static str {
        match self {
            Family::GhzLike => "ghz_like",
            Family::WCanonical => "w_canonical",
            Family::GhzWMix => "ghz_w_mix",
            Family::GhzNoise => "ghz_noise",
            Family::SigmaB => "sigma_b",
            Family::RhoEpsilon => "rho_epsilon",
        }
    }

    pub fn from_id(id: &str) -> Result<Self, FamilyError> {
        Family::ALL.into_iter().find(|f| f.id() == id).ok_or_else(|| FamilyError::UnknownFamily(id.into()))
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::GhzLike => &["alpha"],
            Family::WCanonical => &["alpha", "epsilon", "delta"],
            Family::GhzWMix | Family::GhzNoise => &["p"],
            Family::SigmaB => &["b"],
            Family::RhoEpsilon => &["epsilon"],
        }
    }

    /// Whether `make_state` returns a pure vector.
    pub fn is_pure(self) -> bool {
        matches!(self, Family::GhzLike | Family::WCanonical)
    }

    /// `points` grid points over the family's natural range.
    ///
    /// Closed ranges include both endpoints; open ranges use the interior
    /// points `i/(points+1)`. The GHZ-like family runs over `α ∈ [0, 1/√2]`
    /// and the W-like family over `α ∈ (0, 1)` with `ε = δ`.
    pub fn default_grid(self, points: usize) -> Vec<Vec<f64>> {
        let closed = |lo: f64, hi: f64| -> Vec<f64> {
            match points {
                0 => Vec::new(),
                1 => alloc::vec![lo],
                n => (0..n).map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 }).collect(),
            }
        };
        let open = || -> Vec<f64> { (1..=points).map(|i| i as f64 / (points + 1) as f64).collect() };
        match self {
            Family::GhzLike => closed(0.0, FRAC_1_SQRT_2).into_iter().map(|a| alloc::vec![a]).collect(),
            Family::WCanonical => open()
                .into_iter()
                .map(|a| {
                    let e = ((1.0 - a * a) / 2.0).sqrt();
                    alloc::vec![a, e, e]
                })
                .collect(),
            Family::GhzWMix | Family::GhzNoise => closed(0.0, 1.0).into_iter().map(|p| alloc::vec![p]).collect(),
            Family::SigmaB => open().into_iter().map(|b| alloc::vec![b]).collect(),
            Family::RhoEpsilon => closed(-1.0, 1.0).into_iter().map(|e| alloc::vec![e]).collect(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A family together with the parameter points to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub grid: Vec<Vec<f64>>,
}

impl FamilySpec {
    pub fn with_default_grid(family: Family, points: usize) -> Self {
        Self { family, grid: family.default_grid(points) }
    }
}

/// Fixed named states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedState {
    /// `(|000⟩ + |111⟩)/√2`.
    Ghz,
    /// `(|000⟩ + |101⟩ + |110⟩)/√3`.
    W,
    /// `(|001⟩ + |010⟩ + |100⟩)/√3`.
    WPrime,
    /// `½|1⟩⟨1| ⊗ Ψ₊ + ½|0⟩⟨0| ⊗ Ψ₋`.
    Rho0,
}

impl NamedState {
    pub const ALL: [NamedState; 4] = [NamedState::Ghz, NamedState::W, NamedState::WPrime, NamedState::Rho0];

    pub fn id(self) -> &'static str {
        match self {
            NamedState::Ghz => "ghz",
            NamedState::W => "w",
            NamedState::WPrime => "w_prime",
            NamedState::Rho0 => "rho_0",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        NamedState::ALL.into_iter().find(|s| s.id() == id)
    }

    pub fn state(self) -> State {
        match self {
            NamedState::Ghz => State::Pure(ghz()),
            NamedState::W => State::Pure(sparse_pure(&[(0, 1.0), (5, 1.0), (6, 1.0)])),
            NamedState::WPrime => State::Pure(w_prime()),
            NamedState::Rho0 => State::Mixed(rho_epsilon(0.0).expect("ε = 0 is in range")),
        }
    }
}

fn sparse_pure(entries: &[(usize, f64)]) -> PureState {
    let mut a = [Complex64::new(0.0, 0.0); 8];
    for &(i, x) in entries {
        a[i] = Complex64::new(x, 0.0);
    }
    PureState::normalized(a).expect("fixed nonzero vector")
}

/// `(|000⟩ + |111⟩)/√2`, the representative used in every mixture.
pub fn ghz() -> PureState {
    sparse_pure(&[(0, 1.0), (7, 1.0)])
}

/// `(|001⟩ + |010⟩ + |100⟩)/√3`.
pub fn w_prime() -> PureState {
    sparse_pure(&[(1, 1.0), (2, 1.0), (4, 1.0)])
}

fn check(family: Family, param: &'static str, value: f64, ok: bool, domain: &'static str) -> Result<(), FamilyError> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(FamilyError::ParamOutOfDomain { family, param, value, domain })
    }
}

pub fn ghz_like(alpha: f64) -> Result<PureState, FamilyError> {
    check(Family::GhzLike, "alpha", alpha, (0.0..=1.0).contains(&alpha), "[0, 1]")?;
    let mut a = [Complex64::new(0.0, 0.0); 8];
    a[0] = Complex64::new(alpha, 0.0);
    a[7] = Complex64::new((1.0 - alpha * alpha).max(0.0).sqrt(), 0.0);
    Ok(PureState::new(a)?)
}

pub fn w_canonical(alpha: f64, epsilon: f64, delta: f64) -> Result<PureState, FamilyError> {
    let norm = alpha * alpha + epsilon * epsilon + delta * delta;
    check(
        Family::WCanonical,
        "alpha^2 + epsilon^2 + delta^2",
        norm,
        (norm - 1.0).abs() <= COEFF_NORM_TOL,
        "1 ± 1e-10",
    )?;
    let mut a = [Complex64::new(0.0, 0.0); 8];
    a[0] = Complex64::new(alpha, 0.0);
    a[5] = Complex64::new(epsilon, 0.0);
    a[6] = Complex64::new(delta, 0.0);
    Ok(PureState::new(a)?)
}

pub fn ghz_w_mix(p: f64) -> Result<DensityMatrix, FamilyError> {
    check(Family::GhzWMix, "p", p, (0.0..=1.0).contains(&p), "[0, 1]")?;
    let (g, w) = (ghz().to_density(), w_prime().to_density());
    Ok(DensityMatrix::mixture(&[(p, &g), (1.0 - p, &w)])?)
}

pub fn ghz_noise(p: f64) -> Result<DensityMatrix, FamilyError> {
    check(Family::GhzNoise, "p", p, (0.0..=1.0).contains(&p), "[0, 1]")?;
    let g = ghz().to_density();
    let noise = ComplexMatrix::identity(8).scale(Complex64::new((1.0 - p) / 8.0, 0.0));
    Ok(DensityMatrix::three_qubit(&g.matrix().scale(Complex64::new(p, 0.0)) + &noise)?)
}

pub fn sigma_b(b: f64) -> Result<DensityMatrix, FamilyError> {
    check(Family::SigmaB, "b", b, b > 0.0 && b < 1.0, "(0, 1)")?;
    let d = (1.0 + b) / 2.0;
    let o = (1.0 - b * b).sqrt() / 2.0;
    #[rustfmt::skip]
    let entries = [
        b,   0.0, 0.0, 0.0, 0.0, b,   0.0, 0.0,
        0.0, b,   0.0, 0.0, 0.0, 0.0, b,   0.0,
        0.0, 0.0, b,   0.0, 0.0, 0.0, 0.0, b,
        0.0, 0.0, 0.0, b,   0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, d,   0.0, 0.0, o,
        b,   0.0, 0.0, 0.0, 0.0, b,   0.0, 0.0,
        0.0, b,   0.0, 0.0, 0.0, 0.0, b,   0.0,
        0.0, 0.0, b,   0.0, o,   0.0, 0.0, d,
    ];
    let scaled = entries.map(|x| x / (7.0 * b + 1.0));
    Ok(DensityMatrix::three_qubit(ComplexMatrix::from_real(8, 8, &scaled).expect("8x8"))?)
}

pub fn rho_epsilon(epsilon: f64) -> Result<DensityMatrix, FamilyError> {
    check(Family::RhoEpsilon, "epsilon", epsilon, epsilon.abs() <= 1.0, "[-1, 1]")?;
    // |1⟩_A ⊗ (|10⟩ + |01⟩)/√2 and |0⟩_A ⊗ (|10⟩ − |01⟩)/√2
    let plus = sparse_pure(&[(6, 1.0), (5, 1.0)]).to_density();
    let minus = sparse_pure(&[(2, 1.0), (1, -1.0)]).to_density();
    Ok(DensityMatrix::mixture(&[((1.0 + epsilon) / 2.0, &plus), ((1.0 - epsilon) / 2.0, &minus)])?)
}

fn arity(family: Family, params: &[f64]) -> Result<(), FamilyError> {
    let expected = family.param_names().len();
    if params.len() == expected {
        Ok(())
    } else {
        Err(FamilyError::WrongArity { family, expected, got: params.len() })
    }
}

/// The state of `family` at `params`.
pub fn make_state(family: Family, params: &[f64]) -> Result<State, FamilyError> {
    arity(family, params)?;
    Ok(match family {
        Family::GhzLike => State::Pure(ghz_like(params[0])?),
        Family::WCanonical => State::Pure(w_canonical(params[0], params[1], params[2])?),
        Family::GhzWMix => State::Mixed(ghz_w_mix(params[0])?),
        Family::GhzNoise => State::Mixed(ghz_noise(params[0])?),
        Family::SigmaB => State::Mixed(sigma_b(params[0])?),
        Family::RhoEpsilon => State::Mixed(rho_epsilon(params[0])?),
    })
}

/// Quantities that may have a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleQuantity {
    NABc,
    NBAc,
    NCAb,
    NAbc,
    NegBc,
    NegAc,
    NegAb,
}

impl OracleQuantity {
    pub const ALL: [OracleQuantity; 7] = [
        OracleQuantity::NABc,
        OracleQuantity::NBAc,
        OracleQuantity::NCAb,
        OracleQuantity::NAbc,
        OracleQuantity::NegBc,
        OracleQuantity::NegAc,
        OracleQuantity::NegAb,
    ];

    /// Column name matching the [`MeasureSet`] field.
    pub fn name(self) -> &'static str {
        match self {
            OracleQuantity::NABc => "n_a_bc",
            OracleQuantity::NBAc => "n_b_ac",
            OracleQuantity::NCAb => "n_c_ab",
            OracleQuantity::NAbc => "n_abc",
            OracleQuantity::NegBc => "neg_bc",
            OracleQuantity::NegAc => "neg_ac",
            OracleQuantity::NegAb => "neg_ab",
        }
    }

    pub fn of(self, m: &MeasureSet) -> f64 {
        match self {
            OracleQuantity::NABc => m.n_a_bc,
            OracleQuantity::NBAc => m.n_b_ac,
            OracleQuantity::NCAb => m.n_c_ab,
            OracleQuantity::NAbc => m.n_abc,
            OracleQuantity::NegBc => m.neg_bc,
            OracleQuantity::NegAc => m.neg_ac,
            OracleQuantity::NegAb => m.neg_ab,
        }
    }
}

impl fmt::Display for OracleQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closed-form values, one slot per [`OracleQuantity`] in `ALL` order.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OracleValues(pub [Option<f64>; 7]);

impl OracleValues {
    pub fn get(&self, q: OracleQuantity) -> Option<f64> {
        self.0[q as usize]
    }

    fn set(&mut self, q: OracleQuantity, v: f64) {
        self.0[q as usize] = Some(v);
    }

    /// `|computed − oracle|` wherever an oracle exists.
    pub fn deviations(&self, m: &MeasureSet) -> OracleValues {
        let mut out = OracleValues::default();
        for q in OracleQuantity::ALL {
            if let Some(v) = self.get(q) {
                out.set(q, (q.of(m) - v).abs());
            }
        }
        out
    }

    pub fn max(&self) -> Option<f64> {
        self.0.iter().flatten().copied().reduce(f64::max)
    }
}

/// Negativity of the BC reduction of `β|100⟩ + δ|110⟩ + ε|101⟩ + ω|111⟩`.
pub fn b_form_neg_bc(beta: Complex64, delta: Complex64, epsilon: Complex64, omega: Complex64) -> f64 {
    2.0 * (beta * omega - delta * epsilon).norm()
}

/// Negativity of the BC reduction of `α|000⟩ + β|100⟩ + ω|111⟩`.
pub fn iv_form_neg_bc(beta: Complex64, omega: Complex64) -> f64 {
    2.0 * (beta * omega).norm()
}

/// `[C(ρ^{(BC)}), C(ρ^{(AC)})]` of `α|000⟩ + β|100⟩ + ε|101⟩ + ω|111⟩`.
pub fn s_form_concurrences(alpha: Complex64, beta: Complex64, epsilon: Complex64, omega: Complex64) -> [f64; 2] {
    [2.0 * (beta * omega).norm(), 2.0 * (alpha * epsilon).norm()]
}

/// `[N(ρ^{(BC)}), N(ρ^{(AC)}), N(ρ^{(AB)})]` of `α|000⟩ + ε|101⟩ + δ|110⟩`.
pub fn w_form_negativities(alpha: Complex64, epsilon: Complex64, delta: Complex64) -> [f64; 3] {
    let (a, e, d) = (alpha.norm(), epsilon.norm(), delta.norm());
    [
        (a.powi(4) + 4.0 * (e * d).powi(2)).sqrt() - a * a,
        (d.powi(4) + 4.0 * (e * a).powi(2)).sqrt() - d * d,
        (e.powi(4) + 4.0 * (a * d).powi(2)).sqrt() - e * e,
    ]
}

fn cube_root_product(v: [f64; 3]) -> f64 {
    (v[0] * v[1] * v[2]).cbrt()
}

/// Closed-form values of `family` at `params`.
pub fn oracle(family: Family, params: &[f64]) -> Result<OracleValues, FamilyError> {
    make_state(family, params)?;
    use OracleQuantity::*;
    let mut o = OracleValues::default();
    match family {
        Family::GhzLike => {
            let a = params[0];
            let n = 2.0 * a * (1.0 - a * a).max(0.0).sqrt();
            for q in [NABc, NBAc, NCAb, NAbc] {
                o.set(q, n);
            }
            for q in [NegBc, NegAc, NegAb] {
                o.set(q, 0.0);
            }
        }
        Family::WCanonical => {
            let (a, e, d) = (params[0].abs(), params[1].abs(), params[2].abs());
            let cuts = [
                2.0 * a * (e * e + d * d).sqrt(),
                2.0 * d * (1.0 - d * d).max(0.0).sqrt(),
                2.0 * e * (1.0 - e * e).max(0.0).sqrt(),
            ];
            o.set(NABc, cuts[0]);
            o.set(NBAc, cuts[1]);
            o.set(NCAb, cuts[2]);
            o.set(NAbc, cube_root_product(cuts));
            let c = |x: f64| Complex64::new(x, 0.0);
            let [bc, ac, ab] = w_form_negativities(c(a), c(e), c(d));
            o.set(NegBc, bc);
            o.set(NegAc, ac);
            o.set(NegAb, ab);
        }
        Family::GhzWMix => {
            let p = params[0];
            let n =
                ((41.0 * p * p - 64.0 * p + 32.0).sqrt() + 2.0 * (10.0 * p * p - 2.0 * p + 1.0).sqrt() - p - 2.0) / 6.0;
            for q in [NABc, NBAc, NCAb, NAbc] {
                o.set(q, n);
            }
        }
        Family::GhzNoise => {
            let p = params[0];
            let n = if p <= 0.2 { 0.0 } else { (5.0 * p - 1.0) / 4.0 };
            for q in [NABc, NBAc, NCAb, NAbc] {
                o.set(q, n);
            }
            for q in [NegBc, NegAc, NegAb] {
                o.set(q, 0.0);
            }
        }
        Family::SigmaB => {
            let b = params[0];
            let n = ((3.0 * b * b + 1.0).sqrt() - 2.0 * b) / (7.0 * b + 1.0);
            o.set(NABc, 0.0);
            o.set(NBAc, n);
            o.set(NCAb, n);
            o.set(NAbc, 0.0);
        }
        Family::RhoEpsilon => {
            o.set(NABc, 0.0);
            o.set(NegBc, params[0].abs());
            o.set(NegAc, 0.0);
            o.set(NegAb, 0.0);
        }
    }
    Ok(o)
}

/// A single closed-form value, or [`FamilyError::NoOracle`].
pub fn oracle_value(family: Family, params: &[f64], quantity: OracleQuantity) -> Result<f64, FamilyError> {
    oracle(family, params)?.get(quantity).ok_or(FamilyError::NoOracle { family, quantity })
}

/// Classification outcome attached to a sweep row.
#[derive(Debug, Clone)]
pub enum Verdict {
    Pure { label: SubtypeLabel, ambiguous: bool },
    Mixed(MixedVerdict),
}

impl Verdict {
    pub fn is_ambiguous(&self) -> bool {
        match self {
            Verdict::Pure { ambiguous, .. } => *ambiguous,
            Verdict::Mixed(v) => v.ambiguous,
        }
    }

    /// One-line summary: the subtype code for pure states, the certified
    /// claims joined by `;` for mixed ones.
    pub fn summary(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        match self {
            Verdict::Pure { label, .. } => {
                let _ = write!(s, "{label}");
            }
            Verdict::Mixed(v) => {
                for (i, c) in v.certificates.iter().enumerate() {
                    if i > 0 {
                        s.push_str("; ");
                    }
                    let _ = match c.claim {
                        Claim::Undetermined => write!(s, "undetermined"),
                        other => write!(s, "{other}"),
                    };
                }
            }
        }
        if self.is_ambiguous() {
            s.push_str(" [near threshold]");
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub params: Vec<f64>,
    pub measures: MeasureSet,
    pub verdict: Verdict,
    pub oracle: OracleValues,
    pub deviation: OracleValues,
}

/// Evaluate one grid point.
pub fn sweep_point(family: Family, params: &[f64], zero_tol: f64) -> Result<SweepRow, FamilyError> {
    let state = make_state(family, params)?;
    let failed = |source| FamilyError::PointFailed { params: params.to_vec(), source };
    let (measures, verdict) = match &state {
        State::Pure(psi) => {
            let c = classify_pure(psi, zero_tol).map_err(failed)?;
            (c.measures, Verdict::Pure { label: c.label, ambiguous: c.ambiguous })
        }
        State::Mixed(rho) => {
            let v = classify_mixed(rho, zero_tol).map_err(failed)?;
            (v.measures.clone(), Verdict::Mixed(v))
        }
    };
    let oracle = oracle(family, params)?;
    let deviation = oracle.deviations(&measures);
    Ok(SweepRow { params: params.to_vec(), measures, verdict, oracle, deviation })
}

/// Evaluate every grid point in order; the first failure aborts.
pub fn sweep(spec: &FamilySpec, zero_tol: f64) -> Result<Vec<SweepRow>, FamilyError> {
    if spec.grid.is_empty() {
        return Err(FamilyError::EmptyGrid);
    }
    spec.grid.iter().map(|p| sweep_point(spec.family, p, zero_tol)).collect()
}

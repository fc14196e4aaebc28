//! Entanglement subtypes.
//!
//! Pure states get exactly one label, from factorizability of each qubit
//! and the entanglement of the three reduced pairs. Mixed states only get
//! certificates that rule things out, each backed by a negativity.

use alloc::vec::Vec;
use core::fmt;

use crate::measures::{MeasureError, MeasureSet};
use crate::states::{DensityMatrix, Pair, PureState, Qubit};

pub const DEFAULT_ZERO_TOL: f64 = 1e-8;

/// Subtype of a pure three-qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubtypeLabel {
    /// `0-0`.
    FullySeparable,
    /// `1¹-1`: one qubit factors out, the other two are entangled.
    SimplyBiseparable { separable: Qubit },
    /// `2-0`: no reduced pair entangled.
    GhzLike,
    /// `2-1`: exactly one reduced pair entangled.
    TwoOne { entangled: Pair },
    /// `2-2`: exactly one reduced pair separable.
    TwoTwo { separable: Pair },
    /// `2-3`: every reduced pair entangled.
    WLike,
}

impl SubtypeLabel {
    /// Short code such as `2-1` or `1^1-1`.
    pub fn code(self) -> &'static str {
        match self {
            SubtypeLabel::FullySeparable => "0-0",
            SubtypeLabel::SimplyBiseparable { .. } => "1^1-1",
            SubtypeLabel::GhzLike => "2-0",
            SubtypeLabel::TwoOne { .. } => "2-1",
            SubtypeLabel::TwoTwo { .. } => "2-2",
            SubtypeLabel::WLike => "2-3",
        }
    }

    pub fn is_type_two(self) -> bool {
        matches!(
            self,
            SubtypeLabel::GhzLike | SubtypeLabel::TwoOne { .. } | SubtypeLabel::TwoTwo { .. } | SubtypeLabel::WLike
        )
    }

    /// Reduced pairs that are entangled, as implied by the label.
    pub fn entangled_pairs(self) -> Vec<Pair> {
        match self {
            SubtypeLabel::FullySeparable | SubtypeLabel::GhzLike => Vec::new(),
            SubtypeLabel::SimplyBiseparable { separable } => alloc::vec![separable.complement()],
            SubtypeLabel::TwoOne { entangled } => alloc::vec![entangled],
            SubtypeLabel::TwoTwo { separable } => Pair::ALL.into_iter().filter(|&p| p != separable).collect(),
            SubtypeLabel::WLike => Pair::ALL.to_vec(),
        }
    }
}

impl fmt::Display for SubtypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubtypeLabel::FullySeparable => write!(f, "0-0 (fully separable)"),
            SubtypeLabel::SimplyBiseparable { separable } => write!(f, "1^1-1 (qubit {separable} separable)"),
            SubtypeLabel::GhzLike => write!(f, "2-0 (GHZ-like)"),
            SubtypeLabel::TwoOne { entangled } => write!(f, "2-1 ({entangled} entangled)"),
            SubtypeLabel::TwoTwo { separable } => write!(f, "2-2 ({separable} separable)"),
            SubtypeLabel::WLike => write!(f, "2-3 (W-like)"),
        }
    }
}

/// What a thresholded comparison was about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionKind {
    /// `1 − Tr[(ρ^{(JK)})²]` for the pair complementary to the qubit.
    PairImpurity(Qubit),
    /// Negativity of the reduced pair.
    PairNegativity(Pair),
    /// `N_{I-JK}`, checked against the factorizability decision.
    Bipartite(Qubit),
}

/// One thresholded comparison: `value` against `threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decision {
    pub kind: DecisionKind,
    pub value: f64,
    pub threshold: f64,
}

impl Decision {
    pub fn above(&self) -> bool {
        self.value > self.threshold
    }

    /// `true` when `value` lies within a factor 10 of the threshold.
    pub fn is_ambiguous(&self) -> bool {
        in_band(self.value, self.threshold)
    }
}

fn in_band(value: f64, tol: f64) -> bool {
    value > tol / 10.0 && value < tol * 10.0
}

#[derive(Debug, Clone)]
pub struct PureClassification {
    pub label: SubtypeLabel,
    pub measures: MeasureSet,
    pub decisions: Vec<Decision>,
    /// Set when a deciding value sits near its threshold or two thresholded
    /// quantities disagree. The label is still the best available guess.
    pub ambiguous: bool,
}

/// Classify a pure state.
pub fn classify_pure(psi: &PureState, zero_tol: f64) -> Result<PureClassification, MeasureError> {
    let measures = MeasureSet::of_pure(psi)?;
    let rho = psi.to_density();
    let mut decisions = Vec::new();
    let mut ambiguous = false;

    // for a pure state 1 − Tr(ρ^{(JK)})² equals 1 − Tr(ρ^{(I)})²
    let mut impurity = [0.0; 3];
    for q in Qubit::ALL {
        let d = (1.0 - rho.single_qubit(q)?.purity()).max(0.0);
        impurity[q.index()] = d;
        let dec = Decision { kind: DecisionKind::PairImpurity(q), value: d, threshold: zero_tol };
        ambiguous |= dec.is_ambiguous();
        decisions.push(dec);
    }
    let factorizable: Vec<Qubit> = Qubit::ALL.into_iter().filter(|q| impurity[q.index()] < zero_tol).collect();

    // the negativity and purity thresholds must tell the same story
    for q in Qubit::ALL {
        let dec = Decision { kind: DecisionKind::Bipartite(q), value: measures.bipartite(q), threshold: zero_tol };
        if dec.above() == factorizable.contains(&q) {
            ambiguous = true;
        }
        decisions.push(dec);
    }

    let label = match factorizable.len() {
        0 => {
            let mut entangled = Vec::new();
            for pair in Pair::ALL {
                let dec = Decision {
                    kind: DecisionKind::PairNegativity(pair),
                    value: measures.reduced_negativity(pair),
                    threshold: zero_tol,
                };
                ambiguous |= dec.is_ambiguous();
                if dec.above() {
                    entangled.push(pair);
                }
                decisions.push(dec);
            }
            match entangled.len() {
                0 => SubtypeLabel::GhzLike,
                1 => SubtypeLabel::TwoOne { entangled: entangled[0] },
                2 => {
                    let separable = Pair::ALL.into_iter().find(|p| !entangled.contains(p)).expect("one pair left");
                    SubtypeLabel::TwoTwo { separable }
                }
                _ => SubtypeLabel::WLike,
            }
        }
        1 => {
            let q = factorizable[0];
            let rest = q.complement().qubits();
            if rest.iter().all(|r| impurity[r.index()] < zero_tol) {
                SubtypeLabel::FullySeparable
            } else {
                SubtypeLabel::SimplyBiseparable { separable: q }
            }
        }
        _ => {
            if impurity.iter().all(|&d| d < 10.0 * zero_tol) {
                SubtypeLabel::FullySeparable
            } else {
                ambiguous = true;
                let q = Qubit::ALL
                    .into_iter()
                    .min_by(|a, b| impurity[a.index()].total_cmp(&impurity[b.index()]))
                    .expect("three qubits");
                SubtypeLabel::SimplyBiseparable { separable: q }
            }
        }
    };

    Ok(PureClassification { label, measures, decisions, ambiguous })
}

/// A claim that can be certified for a mixed state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    NotFullySeparable,
    /// Not of the form `ρ^{(I)} ⊗ ρ^{(JK)}` mixtures with `I` split off.
    NotSimplyBiseparable(Qubit),
    GhzDistillable,
    ReducedPairEntangled(Pair),
    /// Generalized biseparability versus full inseparability is not decided.
    Undetermined,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::NotFullySeparable => write!(f, "not fully separable"),
            Claim::NotSimplyBiseparable(q) => write!(f, "not simply biseparable w.r.t. qubit {q}"),
            Claim::GhzDistillable => write!(f, "GHZ-distillable"),
            Claim::ReducedPairEntangled(p) => write!(f, "reduced pair {p} entangled"),
            Claim::Undetermined => write!(f, "undetermined: generalized biseparable or fully inseparable"),
        }
    }
}

/// A claim with the number that backs it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certificate {
    pub claim: Claim,
    pub witness: f64,
}

#[derive(Debug, Clone)]
pub struct MixedVerdict {
    pub certificates: Vec<Certificate>,
    pub measures: MeasureSet,
    /// Some witness lies within a factor 10 of the threshold.
    pub ambiguous: bool,
}

impl MixedVerdict {
    pub fn has(&self, claim: Claim) -> bool {
        self.certificates.iter().any(|c| c.claim == claim)
    }

    pub fn witness(&self, claim: Claim) -> Option<f64> {
        self.certificates.iter().find(|c| c.claim == claim).map(|c| c.witness)
    }
}

/// Certify what the negativities can certify about a three-qubit state.
///
/// Only exclusions are ever claimed. The `Undetermined` entry is always
/// present because no negativity pattern separates generalized
/// biseparability from full inseparability; its witness is `N_ABC`.
pub fn classify_mixed(rho: &DensityMatrix, zero_tol: f64) -> Result<MixedVerdict, MeasureError> {
    let measures = MeasureSet::of_density(rho)?;
    let mut certificates = Vec::new();
    let mut ambiguous = false;

    let strongest = Qubit::ALL.into_iter().map(|q| measures.bipartite(q)).fold(0.0, f64::max);
    if strongest > zero_tol {
        certificates.push(Certificate { claim: Claim::NotFullySeparable, witness: strongest });
    }
    for q in Qubit::ALL {
        let n = measures.bipartite(q);
        ambiguous |= in_band(n, zero_tol);
        if n > zero_tol {
            certificates.push(Certificate { claim: Claim::NotSimplyBiseparable(q), witness: n });
        }
    }
    ambiguous |= in_band(measures.n_abc, zero_tol);
    if measures.n_abc > zero_tol {
        certificates.push(Certificate { claim: Claim::GhzDistillable, witness: measures.n_abc });
    }
    for pair in Pair::ALL {
        let n = measures.reduced_negativity(pair);
        ambiguous |= in_band(n, zero_tol);
        if n > zero_tol {
            certificates.push(Certificate { claim: Claim::ReducedPairEntangled(pair), witness: n });
        }
    }
    certificates.push(Certificate { claim: Claim::Undetermined, witness: measures.n_abc });

    Ok(MixedVerdict { certificates, measures, ambiguous })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_complex::Complex64;

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

    #[test]
    fn ghz_is_two_zero() {
        let r = classify_pure(&state(&[(0, 1.0), (7, 1.0)]), DEFAULT_ZERO_TOL).unwrap();
        assert_eq!(r.label, SubtypeLabel::GhzLike);
        assert!(!r.ambiguous);
    }

    #[test]
    fn symmetric_w_is_two_three() {
        let r = classify_pure(&state(&[(1, 1.0), (2, 1.0), (4, 1.0)]), DEFAULT_ZERO_TOL).unwrap();
        assert_eq!(r.label, SubtypeLabel::WLike);
    }

    #[test]
    fn bell_times_qubit_is_biseparable() {
        let r = classify_pure(&state(&[(0, 1.0), (3, 1.0)]), DEFAULT_ZERO_TOL).unwrap();
        assert_eq!(r.label, SubtypeLabel::SimplyBiseparable { separable: Qubit::A });
        assert_eq!(r.label.to_string(), "1^1-1 (qubit A separable)");
    }

    #[test]
    fn star_state_is_two_two() {
        // α = β = ε = ω = ½
        let r = classify_pure(&state(&[(0, 0.5), (4, 0.5), (5, 0.5), (7, 0.5)]), DEFAULT_ZERO_TOL).unwrap();
        assert_eq!(r.label, SubtypeLabel::TwoTwo { separable: Pair::AB });
        assert_eq!(r.label.code(), "2-2");
    }

    #[test]
    fn product_is_fully_separable() {
        let r = classify_pure(&state(&(0..8).map(|i| (i, 1.0)).collect::<Vec<_>>()), DEFAULT_ZERO_TOL).unwrap();
        assert_eq!(r.label, SubtypeLabel::FullySeparable);
        assert!(!r.ambiguous);
    }

    #[test]
    fn near_boundary_is_flagged() {
        // GHZ-like with a tiny |111⟩ weight: the impurity sits near the threshold
        let r = classify_pure(&state(&[(0, 1.0), (7, 5e-5)]), DEFAULT_ZERO_TOL).unwrap();
        assert!(r.ambiguous);
    }

    #[test]
    fn maximally_mixed_certifies_nothing() {
        let rho = DensityMatrix::maximally_mixed(&[Qubit::A, Qubit::B, Qubit::C]).unwrap();
        let v = classify_mixed(&rho, DEFAULT_ZERO_TOL).unwrap();
        assert_eq!(v.certificates.len(), 1);
        assert!(v.has(Claim::Undetermined));
    }

    #[test]
    fn ghz_projector_is_distillable() {
        let rho = state(&[(0, 1.0), (7, 1.0)]).to_density();
        let v = classify_mixed(&rho, DEFAULT_ZERO_TOL).unwrap();
        assert!(v.has(Claim::GhzDistillable) && v.has(Claim::NotFullySeparable));
        assert!((v.witness(Claim::GhzDistillable).unwrap() - 1.0).abs() < 1e-12);
        assert!(Pair::ALL.into_iter().all(|p| !v.has(Claim::ReducedPairEntangled(p))));
    }
}

mod common;

use common::*;
use proptest::prelude::*;
use tripartite_core::classify::DEFAULT_ZERO_TOL;
use tripartite_core::families::{
    ghz, ghz_w_mix, make_state, oracle, rho_epsilon, sigma_b, sweep, sweep_point, w_prime, Family, FamilyError,
    FamilySpec, NamedState, OracleQuantity, DEFAULT_POINTS,
};
use tripartite_core::measures::{negativity, MeasureSet};
use tripartite_core::states::{Pair, PureState, Qubit, State};

const TOL: f64 = DEFAULT_ZERO_TOL;

fn pure_projector_measures(psi: &PureState) -> MeasureSet {
    MeasureSet::of_density(&psi.to_density()).unwrap()
}

#[test]
fn oracles_agree_on_default_grids() {
    for family in Family::ALL {
        let rows = sweep(&FamilySpec::with_default_grid(family, DEFAULT_POINTS), TOL).unwrap();
        assert_eq!(rows.len(), DEFAULT_POINTS);
        for row in rows {
            let worst = row.deviation.max().expect("every family has an oracle");
            assert!(worst < 1e-9, "{family} at {:?}: deviation {worst}", row.params);
        }
    }
}

#[test]
fn sigma_b_has_no_negativity_across_a() {
    for i in 1..=9 {
        let b = i as f64 / 10.0;
        let row = sweep_point(Family::SigmaB, &[b], TOL).unwrap();
        assert!(row.measures.n_a_bc < 1e-10, "b = {b}: {}", row.measures.n_a_bc);
        for q in [OracleQuantity::NBAc, OracleQuantity::NCAb] {
            assert!(row.deviation.get(q).unwrap() < 1e-9);
        }
        assert!(row.measures.n_b_ac > 1e-3 && row.measures.n_c_ab > 1e-3);
    }
}

#[test]
fn mixture_endpoints_match_pure_members() {
    let at = |family, p: f64| sweep_point(family, &[p], TOL).unwrap().measures;
    assert_eq!(at(Family::GhzWMix, 1.0), pure_projector_measures(&ghz()));
    assert_eq!(at(Family::GhzWMix, 0.0), pure_projector_measures(&w_prime()));
    assert_eq!(at(Family::GhzNoise, 1.0), pure_projector_measures(&ghz()));
    let two = |i: usize, x: f64, j: usize, y: f64| {
        let mut a = [c(0.0, 0.0); 8];
        a[i] = c(x, 0.0);
        a[j] = c(y, 0.0);
        PureState::normalized(a).unwrap()
    };
    let (plus, minus) = (two(6, 1.0, 5, 1.0), two(2, 1.0, 1, -1.0));
    assert_eq!(at(Family::RhoEpsilon, 1.0), pure_projector_measures(&plus));
    assert_eq!(at(Family::RhoEpsilon, -1.0), pure_projector_measures(&minus));
    // the density route and the vector route agree on the shared quantities
    for (mixed, psi) in [(at(Family::GhzWMix, 1.0), ghz()), (at(Family::RhoEpsilon, 1.0), plus)] {
        let pure = MeasureSet::of_pure(&psi).unwrap();
        for ((name, a), (_, b)) in mixed.fields().zip(pure.fields()) {
            assert!((a - b).abs() < 1e-12, "{name}: {a} vs {b}");
        }
    }
}

#[test]
fn rho_epsilon_at_zero_is_rho_0() {
    let rho = rho_epsilon(0.0).unwrap();
    let State::Mixed(named) = NamedState::Rho0.state() else { panic!("rho_0 is mixed") };
    assert_eq!(rho.matrix(), named.matrix());
    let bc = rho.reduced_pair(Pair::BC).unwrap();
    assert!(negativity(&bc, Qubit::B).unwrap() < 1e-12);
}

#[test]
fn out_of_domain_parameters_are_rejected() {
    assert!(matches!(ghz_w_mix(1.5), Err(FamilyError::ParamOutOfDomain { .. })));
    assert!(matches!(sigma_b(0.0), Err(FamilyError::ParamOutOfDomain { .. })));
    assert!(matches!(sigma_b(1.0), Err(FamilyError::ParamOutOfDomain { .. })));
    assert!(matches!(rho_epsilon(-1.01), Err(FamilyError::ParamOutOfDomain { .. })));
    assert!(matches!(make_state(Family::WCanonical, &[0.5, 0.5, 0.5]), Err(FamilyError::ParamOutOfDomain { .. })));
    assert!(matches!(make_state(Family::GhzLike, &[0.1, 0.2]), Err(FamilyError::WrongArity { .. })));
    let empty = FamilySpec { family: Family::GhzNoise, grid: Vec::new() };
    assert!(matches!(sweep(&empty, TOL), Err(FamilyError::EmptyGrid)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracles_agree_off_grid(p in 0.0..=1.0f64, b in 0.001..0.999f64, e in -1.0..=1.0f64, a in 0.0..=core::f64::consts::FRAC_1_SQRT_2) {
        for (family, params) in [
            (Family::GhzWMix, vec![p]),
            (Family::GhzNoise, vec![p]),
            (Family::SigmaB, vec![b]),
            (Family::RhoEpsilon, vec![e]),
            (Family::GhzLike, vec![a]),
        ] {
            let row = sweep_point(family, &params, TOL).unwrap();
            prop_assert!(row.deviation.max().unwrap() < 1e-9, "{} at {:?}", family, params);
        }
    }

    #[test]
    fn w_canonical_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        use rand::Rng;
        let v: [f64; 3] = [r.random_range(0.05..1.0), r.random_range(0.05..1.0), r.random_range(0.05..1.0)];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let params = v.map(|x| x / n);
        let row = sweep_point(Family::WCanonical, &params, TOL).unwrap();
        prop_assert!(row.deviation.max().unwrap() < 1e-9);
        prop_assert!(oracle(Family::WCanonical, &params).unwrap().get(OracleQuantity::NegBc).is_some());
    }
}

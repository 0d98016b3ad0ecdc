//! The census pipeline against the independent diagram oracle.

use std::sync::OnceLock;

use tangle_census::{oracle_reexpansion, solve_census, t_series, unflyped_to_dprime, DPrimeModel};
use tangle_oracle::{oracle_bundle, OracleBundle};
use tangle_ring::NPoly;
use tangle_series::BiSeries;

fn bundle() -> &'static OracleBundle {
    static B: OnceLock<OracleBundle> = OnceLock::new();
    B.get_or_init(|| oracle_bundle(5).expect("oracle"))
}

#[test]
fn unflyped_relations_match_oracle_2pi() {
    let b = bundle();
    let g1 = BiSeries::<NPoly>::g1((1, 1), 5);
    let g2 = BiSeries::<NPoly>::g2((1, 1), 5);
    let (d1, d2) = unflyped_to_dprime(&b.gamma1, &b.gamma2, &g1, &g2).unwrap();
    assert_eq!(d1, b.dprime1());
    assert_eq!(d2, b.dprime2());
}

#[test]
fn perturbative_data_matches_oracle() {
    let (o1, o2) = oracle_reexpansion(bundle()).unwrap();
    let m = DPrimeModel::perturbative();
    let mut compared = 0;
    for j in 0..=5u32 {
        for k in 0..=(5 - j) {
            if j + 2 * k > 8 {
                continue;
            }
            assert_eq!(o1.coeff(j, k).unwrap(), m.d1.coeff(j, k).unwrap(), "D'1 at ({j},{k})");
            assert_eq!(o2.coeff(j, k).unwrap(), m.d2.coeff(j, k).unwrap(), "D'2 at ({j},{k})");
            compared += 1;
        }
    }
    assert!(compared > 15);
}

#[test]
fn oracle_sourced_census_agrees() {
    let from_oracle = DPrimeModel::from_oracle(bundle()).unwrap();
    assert_eq!(from_oracle.validity(), 5);
    let a = solve_census(&from_oracle, 5).unwrap();
    let b = solve_census(&DPrimeModel::perturbative(), 5).unwrap();
    assert_eq!(a, b);
}

#[test]
fn single_coupling_propagator_weight() {
    let t = t_series(5).unwrap();
    let two = bundle().t.clone();
    for j in 0..=5 {
        assert_eq!(t.coeff(j).unwrap(), &two.coeff(j as u32, 0).unwrap());
    }
}

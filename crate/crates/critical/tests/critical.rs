use std::time::Instant;

use proptest::prelude::*;
use tangle_critical::{
    coupling_on_line, critical_observables, h_star, h_star_explicit, newton_critical, residuals, scan_sign_changes,
    solve_critical, Branch, CriticalError, PREC,
};
use tangle_ring::{real, real_pi, Real};

fn r(v: f64) -> Real {
    real(PREC, v)
}

fn parse(s: &str) -> Real {
    Real::with_val(PREC, Real::parse(s).unwrap())
}

#[test]
fn critical_angle_and_coupling() {
    let start = Instant::now();
    let cp = solve_critical(1e-14).unwrap();
    assert!(start.elapsed().as_secs_f64() < 10.0);
    let theta = parse("1.607804460805140740779");
    let inv_g = parse("6.283297644834096120298");
    assert!((cp.theta_c.clone() - &theta).abs() < 1e-14);
    assert!((cp.inv_g_c() - &inv_g).abs() < 1e-12);
    assert!(cp.inv_g_c() > 6.147930 && cp.inv_g_c() < 6.91167);
    assert!(cp.residuals.0.clone().abs() < 1e-13);
    assert!(cp.residuals.1.clone().abs() < 1e-30);
    assert!(cp.error < 1e-14);
}

#[test]
fn newton_agrees_with_bisection() {
    let cp = solve_critical(1e-14).unwrap();
    let (t, g) = newton_critical(1.6, 0.16).unwrap();
    assert!((t - &cp.theta_c).abs() < 1e-10);
    assert!((g - &cp.g_c).abs() < 1e-10);
}

#[test]
fn single_sign_change() {
    let changes = scan_sign_changes(Branch::select().unwrap()).unwrap();
    assert_eq!(changes.len(), 1);
    assert!(changes[0].0 > 1.59 && changes[0].1 < 1.62);
}

#[test]
fn json_fields() {
    let v = solve_critical(1e-12).unwrap().to_json();
    assert!(v["theta_c"].as_str().unwrap().starts_with("1.6078044608"));
    assert!(v["inv_g_c"].as_str().unwrap().starts_with("6.2832976448"));
    assert!(v["g_c"].as_str().is_some());
    assert_eq!(v["residuals"].as_array().unwrap().len(), 2);
}

#[test]
fn quarter_turn_has_bare_couplings() {
    // at θ = π/2, c vanishes and Γ_c is read off H alone
    let obs = critical_observables(&(real_pi(PREC) / 2u32)).unwrap();
    assert!(obs.c.clone().abs() < 1e-40);
    let pi = real_pi(PREC);
    assert!((obs.b0.clone() - Real::with_val(PREC, 1u32) / (pi * 4u32)).abs() < 1e-40);
}

#[test]
fn domain_errors() {
    assert!(matches!(critical_observables(&r(3.2)), Err(CriticalError::Domain(_))));
}

proptest! {
    #[test]
    fn two_forms_of_h_agree(t in 0.05f64..3.1) {
        let t = r(t);
        prop_assert!((h_star(&t).unwrap() - h_star_explicit(&t).unwrap()).abs() < 1e-30);
    }

    #[test]
    fn coupling_closes_the_c_channel(t in 1.0f64..1.63) {
        let obs = critical_observables(&r(t)).unwrap();
        let g = coupling_on_line(&obs, Branch::select().unwrap()).unwrap();
        prop_assert!(g > 0);
        prop_assert!(residuals(&obs, &g).1.abs() < 1e-30);
    }
}

use std::sync::OnceLock;

use proptest::prelude::*;
use tangle_oracle::oracle_bundle;
use tangle_ring::{rat, NPoly, Poly, Rational, Ring, ThetaElem};
use tangle_series::{BiSeries, TruncSeries, Var};
use tangle_sixvertex::{
    anchors, bare_bundle_n2, bare_bundle_n2_cached, cache_path, dprimes_n2, literal_anchors, BareSeriesBundle,
    SixVertexError, SERIES_NAMES,
};

fn bundle6() -> &'static BareSeriesBundle {
    static B: OnceLock<BareSeriesBundle> = OnceLock::new();
    B.get_or_init(|| bare_bundle_n2(6).unwrap())
}

fn poly(c: &[i64]) -> ThetaElem {
    ThetaElem::from_even(Poly::from_ints(c))
}

#[test]
fn low_order_anchors() {
    let b = bundle6();
    assert_eq!(b.b0.coeff(2).unwrap(), &poly(&[-6, -12]));
    assert_eq!(b.g.coeff(1).unwrap(), &poly(&[2, 4]));
    assert_eq!(b.gamma_b.coeffs()[..3], [poly(&[]), poly(&[1]), poly(&[-1])]);
    assert_eq!(b.gamma_c.coeffs()[..3], [poly(&[]), poly(&[0, 2]), poly(&[2, -4])]);
    let t = |k| ThetaElem::cheb(k);
    let db5 = t(0)
        .scale(&rat(6, 1))
        .add_ref(&t(1).scale(&rat(12, 1)))
        .add_ref(&t(2).scale(&rat(4, 1)))
        .add_ref(&t(3).scale(&rat(4, 1)));
    assert_eq!(b.dprime_b.coeff(5).unwrap(), &db5);
    for k in 0..5 {
        assert!(b.dprime_b.coeff(k).unwrap().is_zero());
        assert!(b.dprime_c.coeff(k).unwrap().is_zero());
    }
    assert!(b.check_anchors(&anchors()).is_ok());
}

#[test]
fn customary_gamma_c_form_is_rejected() {
    let err = bundle6().check_anchors(&literal_anchors()).unwrap_err();
    match err {
        SixVertexError::AnchorMismatch { anchor, .. } => assert_eq!(anchor, "gamma_c at tau^2"),
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn parity_and_normalization() {
    let b = bundle6();
    b.check_parity().unwrap();
    assert!(b.h.coeffs().iter().all(|c| c.is_odd()));
    assert_eq!(b.g.coeff(0).unwrap(), &ThetaElem::one());
    assert_eq!(b.b0.coeff(1).unwrap(), &ThetaElem::one());
    for name in SERIES_NAMES {
        let s = b.series(name).unwrap();
        let want = if name == "g_of_b0" { 7 } else { 6 };
        assert_eq!(s.order(), want, "{name}");
    }
}

#[test]
fn coupling_identities() {
    let b = bundle6();
    assert_eq!(b.b, b.b0.mul(&b.g).mul(&b.g).truncate(6).unwrap());
    let w1 = b.b0.mul(&b.g).mul_scalar(&poly(&[-2, -2]));
    assert_eq!(b.w1, w1);
    assert_eq!(b.c(), b.b.mul_scalar(&poly(&[0, 2])));
}

/// `F` and `H` as series in `b_0` at fixed `θ`.
fn in_b0(b: &BareSeriesBundle, s: &TruncSeries<ThetaElem>) -> TruncSeries<ThetaElem> {
    let tau_of_b0 = b.b0.revert().unwrap().with_var(Var::B0);
    s.compose(&tau_of_b0).unwrap()
}

#[test]
fn g_is_recovered_from_f() {
    let b = bundle6();
    let f = in_b0(b, &b.f);
    // G = 1 + 2 b_0 dF/db_0
    let g = f
        .derivative()
        .shift_up(1)
        .scale(&rat(2, 1))
        .add_scalar(&ThetaElem::one());
    assert_eq!(g, b.g_of_b0.truncate(6).unwrap());
    let h = in_b0(b, &b.h);
    assert_eq!(h, f.map(|c| c.dtheta()));
}

#[test]
fn json_round_trip_and_cache() {
    let b = bundle6();
    let back = BareSeriesBundle::from_json(&b.to_json()).unwrap();
    assert_eq!(&back, b);

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(cache_path(dir.path(), 6), serde_json::to_string(&b.to_json()).unwrap()).unwrap();
    let lower = bare_bundle_n2_cached(4, dir.path()).unwrap();
    assert_eq!(lower, b.truncate(4).unwrap());

    // a tampered cache entry fails the anchor check and is recomputed
    let mut v = b.to_json();
    v["series"]["gamma_b"]["coeffs"][2] = ThetaElem::from_i64(5).to_json();
    assert!(matches!(
        BareSeriesBundle::from_json(&v),
        Err(SixVertexError::AnchorMismatch { .. })
    ));
    std::fs::write(cache_path(dir.path(), 6), serde_json::to_string(&v).unwrap()).unwrap();
    let fresh = bare_bundle_n2_cached(3, dir.path()).unwrap();
    assert_eq!(fresh, b.truncate(3).unwrap());
    assert!(cache_path(dir.path(), 3).exists());
}

fn at_two_colors(s: &BiSeries<NPoly>) -> BiSeries<ThetaElem> {
    s.map(|p| ThetaElem::from_rational(p.eval(&Rational::from(2))))
}

#[test]
fn oracle_bridge_through_order_four() {
    let o = oracle_bundle(4).unwrap();
    let b = bare_bundle_n2(4).unwrap();
    let x = ThetaElem::x();
    let g1 = b.b.mul_scalar(&ThetaElem::one().sub_ref(&x));
    let g2 = b.b.mul_scalar(&x);
    let gamma_b = at_two_colors(&o.gamma1.add(&o.gamma2)).substitute(&g1, &g2).unwrap();
    let gamma_c = at_two_colors(&o.gamma2.scale(&rat(2, 1))).substitute(&g1, &g2).unwrap();
    assert_eq!(gamma_b, b.gamma_b);
    assert_eq!(gamma_c, b.gamma_c);
}

#[test]
fn two_color_relations_match_the_general_ones() {
    let o = oracle_bundle(4).unwrap();
    let gb = o.gamma1.add(&o.gamma2);
    let gc = o.gamma2.scale(&rat(2, 1));
    let g1 = BiSeries::<NPoly>::g1((1, 1), 4);
    let g2 = BiSeries::<NPoly>::g2((1, 1), 4);
    let two = |s: &BiSeries<NPoly>| s.map(|p| NPoly::constant(p.eval(&Rational::from(2))));
    let (db, dc) = dprimes_n2(&two(&gb), &two(&gc), &g1.add(&g2), &g2.scale(&rat(2, 1))).unwrap();
    assert_eq!(db, two(&o.dprime1().add(&o.dprime2())));
    assert_eq!(dc, two(&o.dprime2().scale(&rat(2, 1))));
}

proptest! {
    #[test]
    fn vanishing_four_point_leaves_minus_couplings(cb in prop::collection::vec(-20i64..20, 6), cc in prop::collection::vec(-20i64..20, 6)) {
        let mk = |c: &[i64]| {
            let mut v = vec![Rational::new()];
            v.extend(c.iter().map(|&k| Rational::from(k)));
            TruncSeries::new(Var::Tau, v)
        };
        let (b, c) = (mk(&cb), mk(&cc));
        let zero = TruncSeries::zero(Var::Tau, 6);
        let (db, dc) = dprimes_n2(&zero, &zero, &b, &c).unwrap();
        prop_assert_eq!(db, b.neg());
        prop_assert_eq!(dc, c.neg());
    }

    #[test]
    fn relations_are_even_in_gamma_b_for_dc(cb in prop::collection::vec(-5i64..5, 5), cc in prop::collection::vec(-5i64..5, 5)) {
        // V_c is symmetric and H_c = V_c, so D'_c is even under Γ_b → −Γ_b
        let mk = |c: &[i64]| {
            let mut v = vec![Rational::new()];
            v.extend(c.iter().map(|&k| Rational::from(k)));
            TruncSeries::new(Var::Tau, v)
        };
        let (gb, gc) = (mk(&cb), mk(&cc));
        let zero = TruncSeries::zero(Var::Tau, 5);
        let (_, dc) = dprimes_n2(&gb, &gc, &zero, &zero).unwrap();
        let (_, dc_neg) = dprimes_n2(&gb.neg(), &gc, &zero, &zero).unwrap();
        prop_assert_eq!(dc, dc_neg);
    }
}

#[test]
fn negative_axis_singularity_dominates_beyond_a_quarter_turn() {
    let b = bare_bundle_n2(13).unwrap();
    let theta = 2.0 * std::f64::consts::PI / 3.0;
    let c: Vec<f64> = b.g_of_b0.coeffs().iter().map(|c| c.eval_f64(theta)).collect();
    // strictly alternating from b_0^2 on
    assert!(c[2..].windows(2).all(|w| w[0] * w[1] < 0.0));
    // b_0*(2π/3) = tan(π/3)/(32 (π/3) cos²(π/3))
    let u = theta / 2.0;
    let b0_star = u.tan() / (32.0 * u * u.cos().powi(2));
    let radius = (c[13] / c[14]).abs();
    assert!(radius < 0.7 * b0_star, "radius {radius}, b0* {b0_star}");
    // at a quarter turn the coefficients are positive and the estimate is near b_0*
    let est = b.singularity_estimate(std::f64::consts::PI / 2.0).unwrap();
    assert!((est * 4.0 * std::f64::consts::PI - 1.0).abs() < 0.05);
}

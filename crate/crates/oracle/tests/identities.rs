//! Channel identities on the renormalized oracle series.

use std::sync::OnceLock;

use tangle_oracle::{oracle_bundle, OracleBundle};
use tangle_ring::NPoly;
use tangle_series::BiSeries;

type S = BiSeries<NPoly>;

const ORDER: usize = 5;

fn bundle() -> &'static OracleBundle {
    static B: OnceLock<OracleBundle> = OnceLock::new();
    B.get_or_init(|| oracle_bundle(ORDER).expect("oracle"))
}

fn n() -> NPoly {
    NPoly::var()
}

fn nconst(c: i64) -> NPoly {
    NPoly::from_ints(&[c])
}

#[test]
fn renormalized_two_point_is_one() {
    assert_eq!(bundle().g, S::one((1, 1), ORDER as u32));
}

#[test]
fn lowest_couplings() {
    let b = bundle();
    assert_eq!(b.gamma1.coeff(1, 0).unwrap(), nconst(1));
    assert_eq!(b.gamma2.coeff(0, 1).unwrap(), nconst(1));
    assert_eq!(b.gamma2.coeff(2, 0).unwrap(), nconst(1));
    // hand count of second-order diagrams
    assert_eq!(b.gamma2.coeff(1, 1).unwrap(), nconst(2));
    assert_eq!(b.gamma2.coeff(0, 2).unwrap(), NPoly::from_ints(&[3, 1]));
}

#[test]
fn horizontal_chains() {
    let b = bundle();
    let gp = b.gamma2.add(&b.gamma1);
    let gm = b.gamma2.sub(&b.gamma1);
    let hp = b.h2.add(&b.h1);
    let hm = b.h2.sub(&b.h1);
    assert_eq!(gp, hp.geom().unwrap());
    assert_eq!(gm, hm.geom().unwrap());
}

#[test]
fn loop_closing_channel() {
    let b = bundle();
    let g0 = b.gamma2.mul_scalar(&NPoly::from_ints(&[1, 1])).add(&b.gamma1);
    let h0 = b.h2.add(&b.v2.mul_scalar(&n())).add(&b.h1);
    assert_eq!(g0, h0.geom().unwrap());
}

#[test]
fn crossing_channels_are_symmetric() {
    let b = bundle();
    assert_eq!(b.h1, b.v1);
    assert_eq!(b.gamma2, b.gamma2_rot);
}

#[test]
fn doubly_irreducible_is_two_particle_irreducible() {
    let b = bundle();
    assert_eq!(b.d1, b.tpi1);
    assert_eq!(b.d2, b.tpi2);
}

/// Coefficients of `s` at weighted degree `j + 2k ≤ w`.
fn low_weight(s: &S, w: u32) -> Vec<((u32, u32), NPoly)> {
    s.terms()
        .filter(|((j, k), c)| j + 2 * k <= w && !c.is_zero())
        .map(|(jk, c)| (jk, c.clone()))
        .collect()
}

#[test]
fn two_particle_irreducible_leading_terms() {
    let b = bundle();
    let (g1, g2) = (&b.gamma1, &b.gamma2);
    let g1_4 = g1.mul(g1).mul(g1).mul(g1);
    let d1 = b.dprime1().sub(&g1_4.mul(g1).mul_scalar(&n()));
    assert_eq!(low_weight(&d1, 5), vec![]);
    let d2 = b.dprime2().sub(&g1_4.mul(g2).mul_scalar(&n()));
    assert_eq!(low_weight(&d2, 6), vec![]);
    // nothing below five crossings
    assert_eq!(low_weight(&b.dprime1(), 4), vec![]);
    assert_eq!(low_weight(&b.dprime2(), 5), vec![]);
}

#[test]
fn zero_loop_footnote() {
    let b = bundle();
    let at0 = |s: &S| s.map(|c| NPoly::constant(c.coeff(0)));
    let v2 = at0(&b.v2);
    let h = at0(&b.h1).add(&at0(&b.h2));
    let one = S::one((1, 1), ORDER as u32);
    let inv = one.sub(&h).inverse().unwrap();
    assert_eq!(at0(&b.gamma2), v2.mul(&inv).mul(&inv));
}

#[test]
fn integer_nonnegative_coefficients() {
    let b = bundle();
    for s in [&b.gamma1, &b.gamma2, &b.h1, &b.h2, &b.v2, &b.d1, &b.d2, &b.t] {
        for (_, c) in s.terms() {
            for (_, r) in c.terms() {
                assert!(r.is_integer() && *r >= 0, "{r}");
            }
        }
    }
}

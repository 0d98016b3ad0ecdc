//! Bare series at one rational value of the anisotropy.
//!
//! With `t = tan(θ/4)` rational, `cos θ/2` and `sin θ/2` are rational and
//! every quantity below is an exact rational power series. The planar
//! saddle point of the two-matrix integral is solved through its moments:
//! the density lives on one interval `[σ − √D, σ + √D]` in the rescaled
//! eigenvalue, the moments `m_j` obey a quadratic loop equation, and the
//! endpoints follow from the normalization conditions. The nome `q` comes
//! from the ratio of the two periods of the spectral curve.

use tangle_ring::{Rational, Ring};
use tangle_series::{TruncSeries, Var};

use crate::SixVertexError;

/// Bare data at one value of `θ`.
#[derive(Debug, Clone)]
pub(crate) struct PointSeries {
    pub x: Rational,
    /// `b_0` as a series in `τ`, through `τ^K`.
    pub b0_tau: Vec<Rational>,
    /// `G` as a series in `b_0`, through `b_0^K`.
    pub g_b0: Vec<Rational>,
}

/// `cos(mθ/2)` and `sin(mθ/2)` for `m` up to a bound.
struct HalfAngles {
    c: Rational,
    cm: Vec<Rational>,
    sm: Vec<Rational>,
}

impl HalfAngles {
    fn new(t: &Rational, count: usize) -> Self {
        let t2 = Rational::from(t * t);
        let den = Rational::from(&t2 + 1u32);
        let c = Rational::from(Rational::from(1u32 - &t2) / &den);
        let s = Rational::from(Rational::from(t * 2u32) / &den);
        let mut cm = vec![Rational::from(1)];
        let mut sm = vec![Rational::from(0)];
        for m in 1..count {
            let (c0, s0) = (&cm[m - 1], &sm[m - 1]);
            let cn = Rational::from(c0 * &c) - Rational::from(s0 * &s);
            let sn = Rational::from(s0 * &c) + Rational::from(c0 * &s);
            cm.push(cn);
            sm.push(sn);
        }
        HalfAngles { c, cm, sm }
    }
}

fn binomials(n: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::from(1)]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![Rational::from(1); i + 1];
        for k in 1..i {
            row[k] = Rational::from(&prev[k - 1] + &prev[k]);
        }
        rows.push(row);
    }
    rows
}

/// Dense truncated product of two coefficient vectors of length `n`.
fn mul_dense(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::new(); n];
    for (i, u) in a.iter().enumerate().take(n) {
        if u.is_zero() {
            continue;
        }
        for (j, v) in b.iter().enumerate().take(n - i) {
            if !v.is_zero() {
                out[i + j].add_product(u, v);
            }
        }
    }
    out
}

/// Level-by-level solution of the loop equation.
///
/// Returns the moments `m_0..=m_max` and the potential coefficients `p_r`
/// as series in `B` with `n` coefficients each.
fn moments(h: &HalfAngles, binom: &[Vec<Rational>], n: usize, mx: usize) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let two_c = Rational::from(&h.c * 2u32);
    let inv = Rational::from(two_c.recip_ref());
    let mut inv_pow = vec![Rational::from(1)];
    for k in 1..=2 * mx + 2 {
        inv_pow.push(Rational::from(&inv_pow[k - 1] * &inv));
    }
    let mut kernel = vec![vec![Rational::new(); mx + 1]; mx + 1];
    for r in 0..=mx {
        for s in 0..=mx - r {
            let shift = (r as i64 + 1 - s as i64).unsigned_abs() as usize;
            let mut k = Rational::from(&binom[r + s][r] * &h.cm[shift]) * 2u32 * &inv_pow[r + 1 + s];
            if (r + s) % 2 == 1 {
                k = -k;
            }
            kernel[r][s] = k;
        }
    }
    let beta = Rational::from(&two_c * &two_c);
    let mut m = vec![vec![Rational::new(); n]; mx + 1];
    m[0][0] = Rational::from(1);
    let mut p = vec![vec![Rational::new(); n]; mx + 1];
    let fill_p = |p: &mut Vec<Vec<Rational>>, m: &[Vec<Rational>], lv: usize| {
        for r in 0..=mx {
            let mut acc = Rational::new();
            for s in 0..=mx - r {
                if !m[s][lv].is_zero() {
                    acc.add_product(&kernel[r][s], &m[s][lv]);
                }
            }
            p[r][lv] = acc;
        }
    };
    for k in 1..n {
        fill_p(&mut p, &m, k - 1);
        for j in 0..mx {
            let mut plus = Rational::new();
            let mut minus = Rational::new();
            for i in 0..j {
                for a in 0..k {
                    let (u, v) = (&m[i][a], &m[j - 1 - i][k - 1 - a]);
                    if !u.is_zero() && !v.is_zero() {
                        plus.add_product(u, v);
                    }
                }
            }
            for r in 0..=mx - j {
                for a in 0..k {
                    let (u, v) = (&p[r][a], &m[j + r][k - 1 - a]);
                    if !u.is_zero() && !v.is_zero() {
                        minus.add_product(u, v);
                    }
                }
            }
            m[j + 1][k] = (plus - minus) * &beta;
        }
    }
    fill_p(&mut p, &m, n - 1);
    (m, p)
}

/// Centre `σ` and squared half-width `D` of the support, as series in `B`.
fn endpoints(
    p: &[Vec<Rational>],
    beta: &Rational,
    binom: &[Vec<Rational>],
    n: usize,
    mx: usize,
) -> (Vec<Rational>, Vec<Rational>) {
    // C(2k, k) / 4^k
    let mut quarter = Rational::from(1);
    let mut central = Vec::with_capacity(n);
    for k in 0..n {
        central.push(Rational::from(&binom[2 * k][k] * &quarter));
        quarter /= 4u32;
    }
    let mut sigma = vec![Rational::new(); n];
    let mut dd = vec![Rational::new(); n];
    for _ in 0..n {
        let mut spow = vec![{
            let mut one = vec![Rational::new(); n];
            one[0] = Rational::from(1);
            one
        }];
        for a in 1..n {
            spow.push(mul_dense(&spow[a - 1], &sigma, n));
        }
        let mut s1 = vec![Rational::new(); n];
        let mut s2 = vec![Rational::new(); n];
        let mut dpow = spow[0].clone();
        for b in 0..n {
            for (a, sp) in spow.iter().enumerate().take(n - b) {
                let prod = mul_dense(sp, &dpow, n);
                if prod.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let r = a + 2 * b;
                if r <= mx {
                    let w = Rational::from(&binom[r][2 * b] * &central[b]);
                    for (acc, v) in s1.iter_mut().zip(mul_dense(&p[r], &prod, n)) {
                        *acc += v * &w;
                    }
                }
                if b >= 1 && r - 1 <= mx {
                    let w = Rational::from(&binom[r - 1][2 * b - 1] * &central[b]);
                    for (acc, v) in s2.iter_mut().zip(mul_dense(&p[r - 1], &prod, n)) {
                        *acc += v * &w;
                    }
                }
            }
            dpow = mul_dense(&dpow, &dd, n);
        }
        let mut ns = vec![Rational::new(); n];
        let mut nd = vec![Rational::new(); n];
        for k in 1..n {
            ns[k] = -Rational::from(&s1[k - 1] * beta);
            let two_minus = if k == 1 {
                Rational::from(2u32 - &s2[0])
            } else {
                -s2[k - 1].clone()
            };
            nd[k] = two_minus * beta * 2u32;
        }
        sigma = ns;
        dd = nd;
    }
    (sigma, dd)
}

fn sin_half_pi(m: usize) -> i32 {
    [0, 1, 0, -1][m % 4]
}

fn cos_half_pi(m: usize) -> i32 {
    [1, 0, -1, 0][m % 4]
}

/// The elliptic logarithm `L(q)` with `log ρ = 2 L(q)`.
///
/// `A_m(q) = (4/m) sin(m(π−θ)/2) q^m/(1 − q^{2m})` are the Fourier
/// coefficients of the potential in the uniformizing angle; the shift `ε`
/// of the extremum is found by fixed-point iteration and `L` is the
/// potential evaluated there.
fn nome_map(h: &HalfAngles, len: usize) -> Result<TruncSeries<Rational>, SixVertexError> {
    let order = len - 1;
    let mut amp: Vec<TruncSeries<Rational>> = vec![TruncSeries::zero(Var::Q, order)];
    for m in 1..len {
        let s = Rational::from(sin_half_pi(m)) * &h.cm[m] - Rational::from(cos_half_pi(m)) * &h.sm[m];
        let c = s * Rational::from((4, m as u32));
        let mut a = TruncSeries::zero(Var::Q, order);
        let mut k = m;
        while k < len {
            a.set_coeff(k, c.clone())?;
            k += 2 * m;
        }
        amp.push(a);
    }
    type SinCos = (TruncSeries<Rational>, TruncSeries<Rational>);
    let multiples = |eps: &TruncSeries<Rational>| -> Result<Vec<SinCos>, SixVertexError> {
        let (s1, c1) = eps.scale(&Rational::from(2)).sin_cos()?;
        let mut out = vec![(TruncSeries::zero(Var::Q, order), TruncSeries::one(Var::Q, order))];
        for m in 1..len {
            let (s, c) = &out[m - 1];
            let sn = s.mul(&c1).add(&c.mul(&s1));
            let cn = c.mul(&c1).sub(&s.mul(&s1));
            out.push((sn, cn));
        }
        Ok(out)
    };
    let a1q = amp[1].shift_down(1)?;
    let a1_inv = a1q.inverse()?;
    let mut eps = TruncSeries::zero(Var::Q, order);
    for _ in 0..len + 2 {
        let mult = multiples(&eps)?;
        let mut r = TruncSeries::zero(Var::Q, order);
        for m in 2..len {
            let (s, c) = &mult[m];
            let phase = c
                .scale(&Rational::from(cos_half_pi(m)))
                .sub(&s.scale(&Rational::from(sin_half_pi(m))));
            r = r.add(&amp[m].mul(&phase).scale(&Rational::from(m as u32)));
        }
        let rq = r.shift_down(1)?.mul(&a1_inv);
        let (s2, _) = eps.scale(&Rational::from(2)).sin_cos()?;
        // the top coefficient of ε only reaches L beyond its order
        eps = rq
            .add(&eps.scale(&Rational::from(2)))
            .sub(&s2)
            .scale(&Rational::from((1, 2)));
    }
    let mult = multiples(&eps)?;
    let mut l = TruncSeries::zero(Var::Q, order);
    for m in 1..len {
        let (s, c) = &mult[m];
        let phase = c
            .scale(&Rational::from(sin_half_pi(m)))
            .add(&s.scale(&Rational::from(cos_half_pi(m))));
        l = l.add(&amp[m].mul(&phase));
    }
    Ok(l.truncate(order)?)
}

/// Bare series at `t = tan(θ/4)` through `τ^K` and `b_0^K`.
pub(crate) fn point_series(t: &Rational, k: usize) -> Result<PointSeries, SixVertexError> {
    let n = k + 2;
    let mx = 2 * n + 2;
    let ne = 2 * k + 2;
    let h = HalfAngles::new(t, 2 * mx + 4);
    let x = Rational::from(&h.c * &h.c) * 2u32 - 1u32;
    let binom = binomials(2 * mx + 2);
    let (m, p) = moments(&h, &binom, n, mx);
    let four_c2 = Rational::from(&h.c * &h.c) * 4u32;
    let g_b0: Vec<Rational> = (0..=k).map(|j| -Rational::from(&m[1][j + 1] / &four_c2)).collect();

    let (sigma, dd) = endpoints(&p, &four_c2, &binom, n, mx);
    // 1 + d = D / (16 C² B), spread to e with e² = B
    let spread = |a: &[Rational]| {
        let mut out = vec![Rational::new(); ne];
        for (i, v) in a.iter().enumerate() {
            if 2 * i < ne {
                out[2 * i] = v.clone();
            }
        }
        TruncSeries::new(Var::E, out)
    };
    let sixteen_c2 = Rational::from(&four_c2 * 4u32);
    let one_plus_d: Vec<Rational> = dd[1..].iter().map(|v| Rational::from(v / &sixteen_c2)).collect();
    let root = spread(&one_plus_d).sqrt_one()?;
    let four_c = Rational::from(&h.c * 4u32);
    let delta = root.shift_up(1).scale(&four_c).truncate(ne - 1)?;
    let den = spread(&sigma).add_scalar(&Rational::from(1));
    let arg = delta.mul(&den.inverse()?).truncate(ne - 1)?;
    let half_log_rho = arg.atanh()?;

    let l = nome_map(&h, ne)?;
    let q_e = l.revert()?.compose(&half_log_rho)?;
    let tau_e = q_e.mul(&q_e).truncate(2 * k)?;
    let mut tau_b = Vec::with_capacity(k + 1);
    for (i, c) in tau_e.coeffs().iter().enumerate() {
        if i % 2 == 1 {
            if !c.is_zero() {
                return Err(SixVertexError::OddNomeCoefficient(i));
            }
        } else {
            tau_b.push(c.clone());
        }
    }
    let b0_tau = TruncSeries::new(Var::Tau, tau_b).revert()?;
    Ok(PointSeries {
        x,
        b0_tau: b0_tau.into_coeffs(),
        g_b0,
    })
}

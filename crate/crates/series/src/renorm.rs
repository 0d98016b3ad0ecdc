//! Propagator renormalization `t = G(g/t²)`.
//!
//! A planar diagram with `V` quartic vertices and `L` legs has
//! `E = 2V + L/2` propagators, so at propagator weight `t` the
//! two-point function is `t⁻¹ G(1, g/t²)` and four-point functions are
//! `t⁻² X(1, g/t²)`. Choosing `t` so that the two-point function is 1
//! removes every self-energy insertion.

use tangle_ring::Ring;

use crate::{BiSeries, SeriesError, TruncSeries};

/// `Σ c_k g^k s^k`
fn scale_uni<R: Ring>(f: &TruncSeries<R>, s: &TruncSeries<R>) -> TruncSeries<R> {
    let order = f.order().min(s.order());
    let mut out = TruncSeries::zero(f.var(), order);
    let mut p = TruncSeries::one(f.var(), order);
    for k in 0..=order {
        let c = f.coeff(k).expect("within order");
        if !c.is_zero() {
            out = out.add(
                &p.shift_up(k)
                    .truncate(order)
                    .expect("shift stays in order")
                    .mul_scalar(c),
            );
        }
        p = p.mul(s);
    }
    out
}

/// Solves `t = G(g/t²)` for a one-coupling two-point function with `G(0) = 1`.
pub fn propagator_weight<R: Ring>(bare_g: &TruncSeries<R>) -> Result<TruncSeries<R>, SeriesError> {
    if !bare_g.coeff(0)?.is_one() {
        return Err(SeriesError::NotInvertible);
    }
    let mut t = TruncSeries::one(bare_g.var(), bare_g.order());
    for _ in 0..=bare_g.order() {
        let inv = t.inverse()?;
        t = scale_uni(bare_g, &inv.mul(&inv));
    }
    Ok(t)
}

/// `t⁻² X(g/t²)` for a one-coupling four-point function.
pub fn rescale_four_point<R: Ring>(x: &TruncSeries<R>, t: &TruncSeries<R>) -> Result<TruncSeries<R>, SeriesError> {
    let inv = t.inverse()?;
    let s = inv.mul(&inv);
    Ok(scale_uni(x, &s).mul(&s))
}

/// `t⁻¹ G(g/t²)`; equals 1 when `t` is the propagator weight.
pub fn rescale_two_point<R: Ring>(g: &TruncSeries<R>, t: &TruncSeries<R>) -> Result<TruncSeries<R>, SeriesError> {
    let inv = t.inverse()?;
    Ok(scale_uni(g, &inv.mul(&inv)).mul(&inv))
}

/// Two-coupling version of [`propagator_weight`]; both couplings scale by `t⁻²`.
pub fn propagator_weight_bi<R: Ring>(bare_g: &BiSeries<R>) -> Result<BiSeries<R>, SeriesError> {
    if !bare_g.coeff(0, 0)?.is_one() {
        return Err(SeriesError::NotInvertible);
    }
    let mut t = BiSeries::one(bare_g.weights(), bare_g.order());
    for _ in 0..=bare_g.order() {
        let inv = t.inverse()?;
        t = bare_g.scale_vars(&inv.mul(&inv));
    }
    Ok(t)
}

/// `t⁻² X(g₁/t², g₂/t²)`
pub fn rescale_four_point_bi<R: Ring>(x: &BiSeries<R>, t: &BiSeries<R>) -> Result<BiSeries<R>, SeriesError> {
    let inv = t.inverse()?;
    let s = inv.mul(&inv);
    Ok(x.scale_vars(&s).mul(&s))
}

/// `t⁻¹ G(g₁/t², g₂/t²)`
pub fn rescale_two_point_bi<R: Ring>(g: &BiSeries<R>, t: &BiSeries<R>) -> Result<BiSeries<R>, SeriesError> {
    let inv = t.inverse()?;
    Ok(g.scale_vars(&inv.mul(&inv)).mul(&inv))
}

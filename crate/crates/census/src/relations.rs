//! Channel relations between four-point functions and their 2PI parts.

use tangle_ring::{NPoly, Rational};
use tangle_series::{SeriesAlgebra, TruncSeries};

use crate::CensusError;

fn div_n<S: SeriesAlgebra<NPoly>>(s: &S) -> Result<S, CensusError> {
    s.try_map_coeffs(|c| c.div_var().map_err(|_| CensusError::DivisibilityFailure))
}

fn half() -> Rational {
    Rational::from((1, 2))
}

/// `D'_i = H_i + V_i − Γ_i − g_i` from the full four-point functions.
///
/// `H_±`, `H_0` are recovered by inverting the chain sums `Γ = H/(1−H)`;
/// `V_2 = (H_0 − H_+)/n` and `V_1 = H_1`.
pub fn unflyped_to_dprime<S: SeriesAlgebra<NPoly>>(
    gamma1: &S,
    gamma2: &S,
    g1: &S,
    g2: &S,
) -> Result<(S, S), CensusError> {
    let gp = gamma2.add(gamma1);
    let gm = gamma2.sub(gamma1);
    let g0 = gamma2.mul_scalar(&NPoly::from_ints(&[1, 1])).add(gamma1);
    let hp = gp.igeom()?;
    let hm = gm.igeom()?;
    let h0 = g0.igeom()?;
    let h1 = hp.sub(&hm).scale(&half());
    let h2 = hp.add(&hm).scale(&half());
    let v2 = div_n(&h0.sub(&hp))?;
    let d1 = h1.add(&h1).sub(gamma1).sub(g1);
    let d2 = h2.add(&v2).sub(gamma2).sub(g2);
    Ok((d1, d2))
}

/// Flype-corrected 2PI generating functions `D̃'_1`, `D̃'_2` in the
/// crossing weight `g`, from the tangle counts `Γ̃_1`, `Γ̃_2`.
///
/// With `Γ̃_± = Γ̃_2 ± Γ̃_1` and `Γ̃_0 = (n+1)Γ̃_2 + Γ̃_1`:
/// `H̃'_± = x/(1+x)` at `x = (1∓g)Γ̃_± ∓ g`, `H̃'_0` likewise at
/// `(1−g)Γ̃_0 − g`, then
/// `D̃'_1 = H̃'_+ − H̃'_− − Γ̃_1 + g` and
/// `D̃'_2 = (H̃'_+ + H̃'_−)/2 + (H̃'_0 − H̃'_+)/n − Γ̃_2`.
pub fn flyped_to_dprime(
    gamma1: &TruncSeries<NPoly>,
    gamma2: &TruncSeries<NPoly>,
) -> Result<(TruncSeries<NPoly>, TruncSeries<NPoly>), CensusError> {
    let order = gamma1.order().min(gamma2.order());
    let gamma1 = gamma1.truncate(order)?;
    let gamma2 = gamma2.truncate(order)?;
    let g = TruncSeries::<NPoly>::variable(gamma1.var(), order);
    let one = TruncSeries::<NPoly>::one(gamma1.var(), order);
    let gp = gamma2.add(&gamma1);
    let gm = gamma2.sub(&gamma1);
    let g0 = gamma2.mul_scalar(&NPoly::from_ints(&[1, 1])).add(&gamma1);
    let hp = one.sub(&g).mul(&gp).sub(&g).igeom()?;
    let hm = one.add(&g).mul(&gm).add(&g).igeom()?;
    let h0 = one.sub(&g).mul(&g0).sub(&g).igeom()?;
    let d1 = hp.sub(&hm).sub(&gamma1).add(&g);
    let d2 = hp.add(&hm).scale(&half()).add(&div_n(&h0.sub(&hp))?).sub(&gamma2);
    Ok((d1, d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_series::Var;

    fn zero(order: usize) -> TruncSeries<NPoly> {
        TruncSeries::zero(Var::G, order)
    }

    #[test]
    fn vanishing_four_point_functions() {
        let g = TruncSeries::<NPoly>::variable(Var::G, 4);
        let (d1, d2) = unflyped_to_dprime(&zero(4), &zero(4), &g, &zero(4)).unwrap();
        assert_eq!(d1, g.neg());
        assert_eq!(d2, zero(4));
    }

    #[test]
    fn single_crossing_has_no_2pi_part() {
        let g = TruncSeries::<NPoly>::variable(Var::G, 4);
        let (d1, d2) = flyped_to_dprime(&g, &zero(4)).unwrap();
        assert_eq!(d1.coeff(1).unwrap(), &NPoly::new());
        assert_eq!(d2.coeff(1).unwrap(), &NPoly::new());
    }

    #[test]
    fn sign_asymmetry_between_channels() {
        let g = TruncSeries::<NPoly>::variable(Var::G, 4);
        let one = TruncSeries::<NPoly>::one(Var::G, 4);
        let gamma = g.scale(&Rational::from(3));
        let hp = one.sub(&g).mul(&gamma).sub(&g).igeom().unwrap();
        let hm = one.add(&g).mul(&gamma.neg()).add(&g).igeom().unwrap();
        assert_ne!(hp, hm.neg());
    }
}

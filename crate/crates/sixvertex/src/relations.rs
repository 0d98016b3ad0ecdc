//! Channel relations of the two-color model.

use tangle_ring::{rat, Ring};
use tangle_series::{SeriesAlgebra, SeriesError};

/// 2PI parts `(D'_b, D'_c)` from the four-point functions `Γ_b`, `Γ_c` and
/// the couplings `b`, `c`.
///
/// `H_b = Γ_b/(1+Γ_b)` and `V_c ± V_b = (Γ_c ± Γ_b)/(1 + Γ_c ± Γ_b)`; the
/// c-type leg pattern is invariant under a quarter turn, so `H_c = V_c`.
pub fn dprimes_n2<R: Ring, S: SeriesAlgebra<R>>(gamma_b: &S, gamma_c: &S, b: &S, c: &S) -> Result<(S, S), SeriesError> {
    let half = rat(1, 2);
    let h_b = gamma_b.igeom()?;
    let v_plus = gamma_c.add(gamma_b).igeom()?;
    let v_minus = gamma_c.sub(gamma_b).igeom()?;
    let v_c = v_plus.add(&v_minus).scale(&half);
    let v_b = v_plus.sub(&v_minus).scale(&half);
    let h_c = v_c.clone();
    let d_b = h_b.add(&v_b).sub(gamma_b).sub(b);
    let d_c = h_c.add(&v_c).sub(gamma_c).sub(c);
    Ok((d_b, d_c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_ring::Rational;
    use tangle_series::{TruncSeries, Var};

    fn s(c: &[i64]) -> TruncSeries<Rational> {
        TruncSeries::new(Var::Tau, c.iter().map(|&v| Rational::from(v)).collect())
    }

    #[test]
    fn free_couplings() {
        let zero = s(&[0, 0, 0, 0]);
        let b = s(&[0, 1, 2, 0]);
        let c = s(&[0, 0, 3, 1]);
        let (db, dc) = dprimes_n2(&zero, &zero, &b, &c).unwrap();
        assert_eq!(db, b.neg());
        assert_eq!(dc, c.neg());
    }

    #[test]
    fn pure_b_chain() {
        // Γ_c = 0: V_± = ±Γ_b/(1 ± Γ_b), so D'_b = Γ_b/(1+Γ_b) + V_b − Γ_b − b
        let gb = s(&[0, 1, 0, 0, 0]);
        let zero = s(&[0, 0, 0, 0, 0]);
        let (db, dc) = dprimes_n2(&gb, &zero, &zero, &zero).unwrap();
        // Γ/(1+Γ) + (Γ/(1+Γ) + Γ/(1−Γ))/2 − Γ with Γ = τ
        assert_eq!(db, s(&[0, 1, -1, 1, -1]).add(&s(&[0, 1, 0, 1, 0])).sub(&gb));
        assert_eq!(dc, s(&[0, 0, -2, 0, -2]));
    }
}

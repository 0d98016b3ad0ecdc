//! Channel relations for flype classes at two colors.

use tangle_ring::{rat, Ring};
use tangle_series::{SeriesError, TruncSeries};

/// `(D̃'_b, D̃'_c)` from the flype-class generating functions `Γ̃_b`, `Γ̃_c`
/// in the renormalized coupling `g` (the series variable).
///
/// Flype classes are counted by solving `H̃'_b/(1 − H̃'_b) = Γ̃_b − g(1 + Γ̃_b)`
/// and `(Ṽ_c ± Ṽ'_b)/(1 − Ṽ_c ∓ Ṽ'_b) = (1 ∓ g)(Γ̃_c ± Γ̃_b) ∓ g`, then
/// restoring the single crossing with `H̃_b = H̃'_b + g`, `Ṽ_b = Ṽ'_b + g`.
/// As in the bare relations, `H̃_c = Ṽ_c`.
pub fn tilde_relations_n2<R: Ring>(
    gamma_b: &TruncSeries<R>,
    gamma_c: &TruncSeries<R>,
) -> Result<(TruncSeries<R>, TruncSeries<R>), SeriesError> {
    let order = gamma_b.order().min(gamma_c.order());
    let var = gamma_b.var();
    let g = TruncSeries::<R>::variable(var, order);
    let one = TruncSeries::<R>::one(var, order);
    let half = rat(1, 2);
    let h_b_prime = gamma_b.sub(&g.mul(&one.add(gamma_b))).igeom()?;
    let v_plus = one.sub(&g).mul(&gamma_c.add(gamma_b)).sub(&g).igeom()?;
    let v_minus = one.add(&g).mul(&gamma_c.sub(gamma_b)).add(&g).igeom()?;
    let v_c = v_plus.add(&v_minus).scale(&half);
    let v_b_prime = v_plus.sub(&v_minus).scale(&half);
    let h_b = h_b_prime.add(&g);
    let v_b = v_b_prime.add(&g);
    let h_c = v_c.clone();
    let d_b = h_b.add(&v_b).sub(gamma_b).sub(&g);
    let d_c = h_c.add(&v_c).sub(gamma_c);
    Ok((d_b, d_c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_ring::Rational;
    use tangle_series::Var;

    fn g(c: &[i64]) -> TruncSeries<Rational> {
        TruncSeries::new(Var::G, c.iter().map(|&v| Rational::from(v)).collect())
    }

    #[test]
    fn no_2pi_content_below_five_crossings() {
        // the counts through four crossings
        let (db, dc) = tilde_relations_n2(&g(&[0, 1, 1, 3, 7]), &g(&[0, 0, 2, 2, 10])).unwrap();
        assert!(db.is_zero());
        assert!(dc.is_zero());
    }

    #[test]
    fn lone_crossing_is_not_a_solution() {
        // Γ̃_b = g alone leaves the two-crossing tangles unaccounted for
        let (db, dc) = tilde_relations_n2(&g(&[0, 1, 0, 0, 0]), &g(&[0, 0, 0, 0, 0])).unwrap();
        assert_eq!(db, g(&[0, 0, -1, 0, -1]));
        assert_eq!(dc, g(&[0, 0, -2, 0, -2]));
    }
}

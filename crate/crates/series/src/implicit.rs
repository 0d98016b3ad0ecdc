//! Order-by-order solution of implicit series equations.

use tangle_ring::Ring;

use crate::{SeriesError, TruncSeries, Var};

/// One unknown series.
///
/// At residual order `n` the solver fixes the coefficient of index
/// `n - lag`, starting once that index reaches `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unknown {
    pub start: usize,
    pub lag: usize,
}

impl Unknown {
    pub fn new(start: usize) -> Self {
        Unknown { start, lag: 0 }
    }

    pub fn lagged(start: usize, lag: usize) -> Self {
        Unknown { start, lag }
    }

    fn index_at(&self, n: usize) -> Option<usize> {
        n.checked_sub(self.lag).filter(|&i| i >= self.start)
    }
}

/// Shape of an implicit system: unknowns, the first order at which each
/// residual is solved for, and the final residual order.
#[derive(Debug, Clone)]
pub struct ImplicitSystem {
    pub var: Var,
    pub unknowns: Vec<Unknown>,
    pub residual_starts: Vec<usize>,
    pub order: usize,
}

/// Solves `residuals(y) = 0` through `system.order`.
///
/// Unknown `i` is returned with order `system.order - lag_i`. At every order
/// the new coefficients enter the residual coefficients affinely, so the
/// linearization is read off from `m + 1` evaluations and solved exactly.
/// Residual coefficients below a residual's start order are not solved
/// for but must vanish.
pub fn implicit_solve<R, E, F>(system: &ImplicitSystem, mut residuals: F) -> Result<Vec<TruncSeries<R>>, E>
where
    R: Ring,
    E: From<SeriesError>,
    F: FnMut(&[TruncSeries<R>]) -> Result<Vec<TruncSeries<R>>, E>,
{
    let n_res = system.residual_starts.len();
    let mut ys: Vec<TruncSeries<R>> = system
        .unknowns
        .iter()
        .map(|u| TruncSeries::zero(system.var, system.order.saturating_sub(u.lag)))
        .collect();

    let eval = |f: &mut F, ys: &[TruncSeries<R>], n: usize| -> Result<Vec<R>, E> {
        let rs = f(ys)?;
        if rs.len() != n_res {
            return Err(SeriesError::NotSquare {
                order: n,
                unknowns: ys.len(),
                residuals: rs.len(),
            }
            .into());
        }
        rs.iter()
            .enumerate()
            .map(|(i, r)| {
                r.coeff(n).cloned().map_err(|_| {
                    SeriesError::ResidualTruncated {
                        residual: i,
                        have: r.order(),
                        want: n,
                    }
                    .into()
                })
            })
            .collect()
    };

    let check_zero = |vals: &[R], n: usize| -> Result<(), E> {
        match vals.iter().position(|v| !v.is_zero()) {
            Some(i) => Err(SeriesError::ResidualNonzero { residual: i, order: n }.into()),
            None => Ok(()),
        }
    };

    check_zero(&eval(&mut residuals, &ys, 0)?, 0)?;

    for n in 1..=system.order {
        let active_u: Vec<(usize, usize)> = system
            .unknowns
            .iter()
            .enumerate()
            .filter_map(|(i, u)| u.index_at(n).map(|k| (i, k)))
            .collect();
        let active_r: Vec<usize> = (0..n_res).filter(|&r| n >= system.residual_starts[r]).collect();
        if active_u.len() != active_r.len() {
            return Err(SeriesError::NotSquare {
                order: n,
                unknowns: active_u.len(),
                residuals: active_r.len(),
            }
            .into());
        }
        let base = eval(&mut residuals, &ys, n)?;
        if active_u.is_empty() {
            check_zero(&base, n)?;
            continue;
        }
        for (r, v) in base.iter().enumerate().take(n_res) {
            if !active_r.contains(&r) && !v.is_zero() {
                return Err(SeriesError::ResidualNonzero { residual: r, order: n }.into());
            }
        }
        let m = active_u.len();
        let mut jac = vec![vec![R::zero(); m]; m];
        for (col, &(i, k)) in active_u.iter().enumerate() {
            ys[i].set_coeff(k, R::one())?;
            let probe = eval(&mut residuals, &ys, n)?;
            ys[i].set_coeff(k, R::zero())?;
            for (row, &r) in active_r.iter().enumerate() {
                jac[row][col] = probe[r].sub_ref(&base[r]);
            }
        }
        let rhs: Vec<R> = active_r.iter().map(|&r| base[r].neg_ref()).collect();
        let sol = solve_linear(jac, rhs).ok_or(SeriesError::SingularLinearization { order: n })?;
        for (&(i, k), v) in active_u.iter().zip(sol) {
            ys[i].set_coeff(k, v)?;
        }
    }

    let finals = residuals(&ys)?;
    for (i, r) in finals.iter().enumerate() {
        for n in 0..=system.order {
            let c = r.coeff(n).map_err(|_| SeriesError::ResidualTruncated {
                residual: i,
                have: r.order(),
                want: system.order,
            })?;
            if !c.is_zero() {
                return Err(SeriesError::ResidualNonzero { residual: i, order: n }.into());
            }
        }
    }
    Ok(ys)
}

/// Gaussian elimination with unit pivots; `None` if no unit pivot exists.
fn solve_linear<R: Ring>(mut a: Vec<Vec<R>>, mut b: Vec<R>) -> Option<Vec<R>> {
    let m = b.len();
    for col in 0..m {
        let (piv, inv) = (col..m).find_map(|r| a[r][col].unit_inverse().map(|inv| (r, inv)))?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..m {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul_ref(&inv);
            #[allow(clippy::needless_range_loop)] // rows r and col are both borrowed
            for c in col..m {
                let t = f.mul_ref(&a[col][c]);
                a[r][c].sub_assign_ref(&t);
            }
            let t = f.mul_ref(&b[col]);
            b[r].sub_assign_ref(&t);
        }
    }
    Some(
        (0..m)
            .map(|i| b[i].mul_ref(&a[i][i].unit_inverse().expect("pivot")))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_ring::Rational;

    fn int_series(c: &[i64]) -> TruncSeries<Rational> {
        TruncSeries::new(Var::G, c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn single_unknown() {
        // y - g(1 + y) = 0
        let sys = ImplicitSystem {
            var: Var::G,
            unknowns: vec![Unknown::new(1)],
            residual_starts: vec![1],
            order: 6,
        };
        let sol = implicit_solve::<Rational, SeriesError, _>(&sys, |ys| {
            let g = TruncSeries::variable(Var::G, 6);
            let y = &ys[0];
            Ok(vec![y.sub(&g.mul(&y.add_scalar(&Rational::from(1))))])
        })
        .unwrap();
        assert_eq!(sol[0], int_series(&[0, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn triangular_pair() {
        // y1 = g + y2^2, y2 = g y1
        let sys = ImplicitSystem {
            var: Var::G,
            unknowns: vec![Unknown::new(1), Unknown::new(1)],
            residual_starts: vec![1, 1],
            order: 6,
        };
        let sol = implicit_solve::<Rational, SeriesError, _>(&sys, |ys| {
            let g = TruncSeries::variable(Var::G, 6);
            Ok(vec![ys[0].sub(&g).sub(&ys[1].mul(&ys[1])), ys[1].sub(&g.mul(&ys[0]))])
        })
        .unwrap();
        assert_eq!(sol[0], int_series(&[0, 1, 0, 0, 1, 0, 0]));
        assert_eq!(sol[1], int_series(&[0, 0, 1, 0, 0, 1, 0]));
    }

    #[test]
    fn singular_is_reported() {
        let sys = ImplicitSystem {
            var: Var::G,
            unknowns: vec![Unknown::new(1)],
            residual_starts: vec![1],
            order: 3,
        };
        let err = implicit_solve::<Rational, SeriesError, _>(&sys, |ys| {
            let g = TruncSeries::variable(Var::G, 3);
            Ok(vec![ys[0].mul(&ys[0]).sub(&g.mul(&g))])
        })
        .unwrap_err();
        assert_eq!(err, SeriesError::SingularLinearization { order: 1 });
    }
}

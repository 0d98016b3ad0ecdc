//! Implicit census equations.

use tangle_oracle::{bare_two_point_crossings, Normalization, DEFAULT_ORDER};
use tangle_ring::NPoly;
use tangle_series::{implicit_solve, propagator_weight, ImplicitSystem, TruncSeries, Unknown, Var};

use crate::relations::{flyped_to_dprime, unflyped_to_dprime};
use crate::{CensusError, CensusTable, DPrimeModel};

/// Largest crossing number accepted by [`solve_census`].
pub const MAX_CROSSINGS: usize = 8;

/// Which channel relations tie the counts to the 2PI data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flype {
    /// Count flype classes.
    Corrected,
    /// Count reduced diagrams, every flype class member separately.
    Uncorrected,
}

/// Solves `D̃'_i(g) = D'_i[Γ̃_1(g), Γ̃_2(g)]` through `p` crossings.
pub fn solve_census(dp: &DPrimeModel, p: usize) -> Result<CensusTable, CensusError> {
    solve_census_with(dp, p, Flype::Corrected)
}

pub fn solve_census_with(dp: &DPrimeModel, p: usize, flype: Flype) -> Result<CensusTable, CensusError> {
    let validity = dp.validity().min(MAX_CROSSINGS);
    if p > validity {
        return Err(CensusError::BeyondValidity { requested: p, validity });
    }
    let sys = ImplicitSystem {
        var: Var::G,
        unknowns: vec![Unknown::new(1), Unknown::new(1)],
        residual_starts: vec![1, 1],
        order: p,
    };
    let g = TruncSeries::<NPoly>::variable(Var::G, p);
    let zero = TruncSeries::<NPoly>::zero(Var::G, p);
    let sol = implicit_solve::<NPoly, CensusError, _>(&sys, |ys| {
        let (lhs1, lhs2) = match flype {
            Flype::Corrected => flyped_to_dprime(&ys[0], &ys[1])?,
            Flype::Uncorrected => unflyped_to_dprime(&ys[0], &ys[1], &g, &zero)?,
        };
        let (rhs1, rhs2) = dp.eval(&ys[0], &ys[1])?;
        Ok(vec![lhs1.sub(&rhs1), lhs2.sub(&rhs2)])
    })?;
    let mut table = CensusTable::from_series(&sol[0], &sol[1], flype)?;
    table.t_series = Some(t_series(p.min(DEFAULT_ORDER))?);
    Ok(table)
}

/// Propagator weight `t(g)` of the single-coupling model, from the oracle.
pub fn t_series(order: usize) -> Result<TruncSeries<NPoly>, CensusError> {
    let g = bare_two_point_crossings(order, Normalization::Reduced)?;
    Ok(propagator_weight(&g)?)
}

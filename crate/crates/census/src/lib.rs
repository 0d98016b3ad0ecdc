//! Counting prime alternating tangles up to flypes, for any number of
//! colors `n`.
//!
//! The matrix model supplies the 2PI four-point data `D'_i[Γ_1, Γ_2]`;
//! channel relations rewritten for flype classes turn it into implicit
//! equations for the tangle generating functions `Γ̃_1(g)`, `Γ̃_2(g)`.

mod error;
mod model;
mod relations;
mod solve;
mod table;

pub use error::CensusError;
pub use model::{oracle_reexpansion, DPrimeModel, DPrimeSource, WEIGHTS};
pub use relations::{flyped_to_dprime, unflyped_to_dprime};
pub use solve::{solve_census, solve_census_with, t_series, Flype, MAX_CROSSINGS};
pub use table::CensusTable;

use tangle_ring::NPoly;
use tangle_series::{propagator_weight_bi, rescale_four_point_bi, rescale_two_point_bi, BiSeries};

/// Rescaled four-point functions, two-point function and propagator weight.
pub type Renormalized = (Vec<BiSeries<NPoly>>, BiSeries<NPoly>, BiSeries<NPoly>);

/// Renormalizes a bare two-coupling family at propagator weight
/// `t = G(g/t²)`: returns the rescaled four-point functions, the rescaled
/// two-point function (identically 1) and `t`.
pub fn renormalize(
    bare_two_point: &BiSeries<NPoly>,
    bare_four_point: &[BiSeries<NPoly>],
) -> Result<Renormalized, CensusError> {
    let t = propagator_weight_bi(bare_two_point)?;
    let g = rescale_two_point_bi(bare_two_point, &t)?;
    let four = bare_four_point
        .iter()
        .map(|x| rescale_four_point_bi(x, &t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((four, g, t))
}

//! Renormalized oracle series.

use tangle_ring::NPoly;
use tangle_series::{propagator_weight_bi, rescale_four_point_bi, rescale_two_point_bi, BiSeries};

use crate::diagram::LegPairing;
use crate::enumerate::Normalization;
use crate::observable::{bare_four_point, bare_two_point};
use crate::OracleError;

/// Oracle series after propagator renormalization, in the renormalized
/// couplings `g1`, `g2` (weights 1, 1, truncated at total order).
#[derive(Debug, Clone)]
pub struct OracleBundle {
    pub order: usize,
    /// Propagator weight `t(g1, g2)`.
    pub t: BiSeries<NPoly>,
    /// Renormalized two-point function; identically 1.
    pub g: BiSeries<NPoly>,
    pub gamma1: BiSeries<NPoly>,
    pub gamma2: BiSeries<NPoly>,
    /// Four-point function with left and right strands (`Γ_2` turned by 90°).
    pub gamma2_rot: BiSeries<NPoly>,
    pub h1: BiSeries<NPoly>,
    pub h2: BiSeries<NPoly>,
    pub v1: BiSeries<NPoly>,
    pub v2: BiSeries<NPoly>,
    /// Diagrams irreducible in both channels.
    pub d1: BiSeries<NPoly>,
    pub d2: BiSeries<NPoly>,
    /// Two-particle irreducible diagrams. These carry no self-energy
    /// insertions, so the bare sum is already expressed in renormalized
    /// propagators and is not rescaled.
    pub tpi1: BiSeries<NPoly>,
    pub tpi2: BiSeries<NPoly>,
}

impl OracleBundle {
    /// `D_1 − g1`
    pub fn dprime1(&self) -> BiSeries<NPoly> {
        self.d1.sub(&BiSeries::g1((1, 1), self.order as u32))
    }

    /// `D_2 − g2`
    pub fn dprime2(&self) -> BiSeries<NPoly> {
        self.d2.sub(&BiSeries::g2((1, 1), self.order as u32))
    }
}

pub fn oracle_bundle(max_total_order: usize) -> Result<OracleBundle, OracleError> {
    oracle_bundle_with(max_total_order, Normalization::Reduced)
}

pub fn oracle_bundle_with(max_total_order: usize, mode: Normalization) -> Result<OracleBundle, OracleError> {
    let bare_g = bare_two_point(max_total_order, mode)?;
    let four = bare_four_point(max_total_order, mode)?;
    let t = propagator_weight_bi(&bare_g)?;
    let g = rescale_two_point_bi(&bare_g, &t)?;
    let ren = |s: &BiSeries<NPoly>| rescale_four_point_bi(s, &t);
    let diag = LegPairing::Diagonal;
    let ul = LegPairing::UpperLower;
    let gamma1 = ren(&four.gamma[&diag])?;
    let gamma2 = ren(&four.gamma[&ul])?;
    let h1 = ren(&four.h[&diag])?;
    let h2 = ren(&four.h[&ul])?;
    let v1 = ren(&four.v[&diag])?;
    let v2 = ren(&four.v[&ul])?;
    let d1 = h1.add(&v1).sub(&gamma1);
    let d2 = h2.add(&v2).sub(&gamma2);
    Ok(OracleBundle {
        order: max_total_order,
        gamma2_rot: ren(&four.gamma[&LegPairing::LeftRight])?,
        tpi1: four.tpi[&diag].clone(),
        tpi2: four.tpi[&ul].clone(),
        t,
        g,
        gamma1,
        gamma2,
        h1,
        h2,
        v1,
        v2,
        d1,
        d2,
    })
}

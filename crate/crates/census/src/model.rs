//! 2PI data `D'_i[Γ_1, Γ_2]` of the two-coupling matrix model.

use tangle_oracle::OracleBundle;
use tangle_ring::NPoly;
use tangle_series::{BiSeries, TruncSeries};

use crate::CensusError;

/// Weights of `Γ_1`, `Γ_2` in the crossing number.
pub const WEIGHTS: (u32, u32) = (1, 2);

/// Where a [`DPrimeModel`] comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DPrimeSource {
    /// Perturbative data through eight crossings.
    Perturbative,
    /// Re-expansion of the diagram oracle.
    Oracle,
}

/// `D'_1`, `D'_2` as polynomials in `Γ_1`, `Γ_2`, exact through the
/// weighted degree `validity` (weights 1 and 2).
#[derive(Debug, Clone, PartialEq)]
pub struct DPrimeModel {
    pub d1: BiSeries<NPoly>,
    pub d2: BiSeries<NPoly>,
    pub source: DPrimeSource,
}

fn term(s: &mut BiSeries<NPoly>, j: u32, k: u32, c: &[i64]) {
    s.set(j, k, NPoly::from_ints(c));
}

impl DPrimeModel {
    pub fn new(d1: BiSeries<NPoly>, d2: BiSeries<NPoly>, source: DPrimeSource) -> Result<Self, CensusError> {
        for s in [&d1, &d2] {
            if s.weights() != WEIGHTS {
                return Err(CensusError::Parse(format!("weights {:?}", s.weights())));
            }
            if let Some(v) = s.valuation() {
                if v < 5 {
                    return Err(CensusError::LowDegree(v));
                }
            }
        }
        Ok(DPrimeModel { d1, d2, source })
    }

    /// Perturbative 2PI data, valid through eight crossings.
    pub fn perturbative() -> Self {
        let mut d1 = BiSeries::zero(WEIGHTS, 8);
        term(&mut d1, 5, 0, &[0, 1]);
        term(&mut d1, 4, 1, &[8]);
        term(&mut d1, 3, 2, &[4, 4]);
        term(&mut d1, 2, 3, &[24]);
        term(&mut d1, 6, 1, &[16]);
        let mut d2 = BiSeries::zero(WEIGHTS, 8);
        term(&mut d2, 4, 1, &[0, 1]);
        term(&mut d2, 7, 0, &[2]);
        term(&mut d2, 3, 2, &[16]);
        term(&mut d2, 2, 3, &[20, 8]);
        term(&mut d2, 6, 1, &[14, 6]);
        term(&mut d2, 8, 0, &[3]);
        DPrimeModel {
            d1,
            d2,
            source: DPrimeSource::Perturbative,
        }
    }

    /// Re-expresses the oracle's `D'_i(g_1, g_2)` in terms of `Γ_1`, `Γ_2`.
    ///
    /// The oracle is exact through total order `N` in the couplings, which
    /// covers every monomial of weighted degree `≤ N`.
    pub fn from_oracle(b: &OracleBundle) -> Result<Self, CensusError> {
        let order = b.order as u32;
        let (d1, d2) = oracle_reexpansion(b)?;
        let reweight = |s: &BiSeries<NPoly>| {
            let mut out = BiSeries::zero(WEIGHTS, order);
            for ((j, k), c) in s.terms() {
                if j + 2 * k <= order {
                    out.set(j, k, c.clone());
                }
            }
            out
        };
        DPrimeModel::new(reweight(&d1), reweight(&d2), DPrimeSource::Oracle)
    }

    /// Largest crossing number the data determines.
    pub fn validity(&self) -> usize {
        self.d1.order().min(self.d2.order()) as usize
    }

    /// `D'_i` at `Γ_1 = u1(g)`, `Γ_2 = u2(g)`.
    pub fn eval(
        &self,
        u1: &TruncSeries<NPoly>,
        u2: &TruncSeries<NPoly>,
    ) -> Result<(TruncSeries<NPoly>, TruncSeries<NPoly>), CensusError> {
        Ok((self.d1.substitute(u1, u2)?, self.d2.substitute(u1, u2)?))
    }
}

/// The oracle's `D'_1`, `D'_2` as series in `Γ_1`, `Γ_2` with unit
/// weights, exact through the oracle's total order.
pub fn oracle_reexpansion(b: &OracleBundle) -> Result<(BiSeries<NPoly>, BiSeries<NPoly>), CensusError> {
    let g = invert_couplings(&b.gamma1, &b.gamma2)?;
    Ok((
        compose_bi(&b.dprime1(), &g.0, &g.1),
        compose_bi(&b.dprime2(), &g.0, &g.1),
    ))
}

/// `f(u1, u2)` for bivariate series without constant terms.
fn compose_bi(f: &BiSeries<NPoly>, u1: &BiSeries<NPoly>, u2: &BiSeries<NPoly>) -> BiSeries<NPoly> {
    let order = f.order().min(u1.order()).min(u2.order());
    let w = u1.weights();
    let mut out = BiSeries::zero(w, order);
    let mut p1 = vec![BiSeries::one(w, order)];
    let mut p2 = vec![BiSeries::one(w, order)];
    for ((j, k), c) in f.terms() {
        while p1.len() <= j as usize {
            let next = p1.last().expect("nonempty").mul(u1);
            p1.push(next);
        }
        while p2.len() <= k as usize {
            let next = p2.last().expect("nonempty").mul(u2);
            p2.push(next);
        }
        out = out.add(&p1[j as usize].mul(&p2[k as usize]).mul_scalar(c));
    }
    out
}

/// Solves `Γ_i(g_1, g_2) = γ_i` for the couplings as series in `γ_1, γ_2`.
fn invert_couplings(
    gamma1: &BiSeries<NPoly>,
    gamma2: &BiSeries<NPoly>,
) -> Result<(BiSeries<NPoly>, BiSeries<NPoly>), CensusError> {
    let w = gamma1.weights();
    let order = gamma1.order().min(gamma2.order());
    let x1 = BiSeries::g1(w, order);
    let x2 = BiSeries::g2(w, order);
    let mut g = (x1.clone(), x2.clone());
    for _ in 0..=order {
        let c1 = compose_bi(gamma1, &g.0, &g.1);
        let c2 = compose_bi(gamma2, &g.0, &g.1);
        g = (g.0.add(&x1.sub(&c1)), g.1.add(&x2.sub(&c2)));
    }
    if compose_bi(gamma1, &g.0, &g.1) != x1 || compose_bi(gamma2, &g.0, &g.1) != x2 {
        return Err(CensusError::Parse("coupling inversion did not converge".into()));
    }
    Ok(g)
}

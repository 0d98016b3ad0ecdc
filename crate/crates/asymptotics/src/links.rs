//! Heuristic link counts from tangle counts.

use serde_json::{json, Value};
use tangle_oriented::OrientedCensus;
use tangle_ring::Rational;

/// `f_p ≈ γ_{p−1}/p`, assuming most links have no symmetry. Heuristic.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkEstimate {
    pub p: usize,
    pub f_p: Rational,
}

impl LinkEstimate {
    pub fn to_json(&self) -> Value {
        json!({ "p": self.p, "f_p": self.f_p.to_string(), "heuristic": true })
    }
}

/// Estimates for `p = 2..=order+1` from the `Γ̃_b` row.
pub fn link_count_estimate(census: &OrientedCensus) -> Vec<LinkEstimate> {
    let gamma = census.gamma_b.coeffs();
    (2..=gamma.len())
        .map(|p| LinkEstimate {
            p,
            f_p: Rational::from(&gamma[p - 1] / Rational::from(p as u64)),
        })
        .collect()
}

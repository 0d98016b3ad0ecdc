//! Ratio analysis with a Richardson step.

use serde_json::{json, Value};
use tangle_ring::Rational;

use crate::reference::{reference_constants, ReferenceConstant};
use crate::AsymptoticsError;

/// Nonzero trailing coefficients required by [`growth_fit`].
pub const MIN_TERMS: usize = 6;

/// Estimated exponential growth rate of a coefficient sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEstimate {
    /// extrapolated `1/g`
    pub rate: f64,
    /// max − min of the last three extrapolants
    pub error_bar: f64,
    /// power `α` in the model `γ_p ~ μ^p p^α (log p)^{−1}`
    pub exponent: f64,
    pub log_correction: bool,
    /// raw `γ_p/γ_{p−1}` for `p = 1..`, absent where `γ_{p−1} = 0`
    pub ratios: Vec<Option<f64>>,
    /// `(p, corrected ratio)` for every usable `p`
    pub corrected: Vec<(usize, f64)>,
    /// `(p, p r_p − (p−1) r_{p−1})` from consecutive corrected ratios
    pub extrapolants: Vec<(usize, f64)>,
    pub references: Vec<ReferenceConstant>,
}

/// Fits `γ_p ~ μ^p p^α (log p)^{−1}` (the log factor only when
/// `log_correction` is set) to `coeffs[p] = γ_p`.
///
/// Each ratio `r_p` is divided by the model's `(p/(p−1))^α (log(p−1)/log p)`,
/// which leaves `μ (1 + O(1/p))`; one Richardson step in `1/p` removes the
/// leading correction.
pub fn growth_fit(
    coeffs: &[Rational],
    exponent: f64,
    log_correction: bool,
) -> Result<GrowthEstimate, AsymptoticsError> {
    let values: Vec<f64> = coeffs.iter().map(Rational::to_f64).collect();
    let trailing = values.iter().rev().take_while(|v| **v != 0.0).count();
    if trailing < MIN_TERMS {
        return Err(AsymptoticsError::InsufficientData {
            needed: MIN_TERMS,
            have: trailing,
        });
    }
    let ratios: Vec<Option<f64>> = (1..values.len())
        .map(|p| (values[p - 1] != 0.0).then(|| values[p] / values[p - 1]))
        .collect();
    let first = values.len() - trailing + 1;
    // log(p−1) must be positive
    let first = if log_correction { first.max(3) } else { first.max(2) };
    let corrected: Vec<(usize, f64)> = (first..values.len())
        .map(|p| {
            let (pf, qf) = (p as f64, (p - 1) as f64);
            let mut r = values[p] / values[p - 1] * (pf / qf).powf(-exponent);
            if log_correction {
                r *= pf.ln() / qf.ln();
            }
            (p, r)
        })
        .collect();
    let extrapolants: Vec<(usize, f64)> = corrected
        .windows(2)
        .map(|w| {
            let ((q, rq), (p, rp)) = (w[0], w[1]);
            (p, p as f64 * rp - q as f64 * rq)
        })
        .collect();
    let last3 = &extrapolants[extrapolants.len().saturating_sub(3)..];
    let max = last3.iter().map(|e| e.1).fold(f64::NEG_INFINITY, f64::max);
    let min = last3.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
    Ok(GrowthEstimate {
        rate: extrapolants.last().map(|e| e.1).unwrap_or(f64::NAN),
        error_bar: max - min,
        exponent,
        log_correction,
        ratios,
        corrected,
        extrapolants,
        references: reference_constants(),
    })
}

impl GrowthEstimate {
    pub fn to_json(&self) -> Value {
        json!({
            "rate": self.rate,
            "error_bar": self.error_bar,
            "exponent": self.exponent,
            "log_correction": self.log_correction,
            "ratios": self.ratios,
            "extrapolants": self.extrapolants,
            "references": self.references.iter().map(|r| json!({
                "name": r.name, "formula": r.formula, "value": r.value,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("rate = {:.6} +- {:.6}\n", self.rate, self.error_bar);
        for (p, e) in &self.extrapolants {
            out.push_str(&format!("  p = {p:>2}  {e:.6}\n"));
        }
        out.push_str("references:\n");
        for r in &self.references {
            out.push_str(&format!("  {:<20} {:<24} {:.8}\n", r.name, r.formula, r.value));
        }
        out
    }
}

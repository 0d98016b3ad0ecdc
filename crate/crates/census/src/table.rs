//! Census tables and their serializations.

use std::fmt::Write as _;

use serde_json::{json, Value};
use tangle_ring::{NPoly, Rational};
use tangle_series::{TruncSeries, Var};

use crate::solve::Flype;
use crate::CensusError;

/// Tangle counts by crossing number, as polynomials in the loop marker `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusTable {
    pub max_crossings: usize,
    /// Entry `p − 1` counts type-1 tangles with `p` crossings.
    pub type1: Vec<NPoly>,
    pub type2: Vec<NPoly>,
    pub flype_corrected: bool,
    /// Propagator weight `t(g)`, where known.
    pub t_series: Option<TruncSeries<NPoly>>,
}

impl CensusTable {
    pub fn from_series(
        gamma1: &TruncSeries<NPoly>,
        gamma2: &TruncSeries<NPoly>,
        flype: Flype,
    ) -> Result<Self, CensusError> {
        let p = gamma1.order().min(gamma2.order());
        let pick = |s: &TruncSeries<NPoly>| -> Result<Vec<NPoly>, CensusError> {
            (1..=p).map(|k| Ok(s.coeff(k)?.clone())).collect()
        };
        Ok(CensusTable {
            max_crossings: p,
            type1: pick(gamma1)?,
            type2: pick(gamma2)?,
            flype_corrected: flype == Flype::Corrected,
            t_series: None,
        })
    }

    /// Count for `p` crossings and type 1 or 2.
    pub fn get(&self, p: usize, ty: u8) -> Option<&NPoly> {
        let row = match ty {
            1 => &self.type1,
            2 => &self.type2,
            _ => return None,
        };
        p.checked_sub(1).and_then(|i| row.get(i))
    }

    /// `Γ̃_1(g)`, `Γ̃_2(g)`
    pub fn series(&self) -> (TruncSeries<NPoly>, TruncSeries<NPoly>) {
        let mk = |row: &[NPoly]| {
            let mut c = vec![NPoly::new()];
            c.extend(row.iter().cloned());
            TruncSeries::new(Var::G, c)
        };
        (mk(&self.type1), mk(&self.type2))
    }

    /// Every entry at a fixed value of `n`.
    pub fn evaluate(&self, n: &Rational) -> (Vec<Rational>, Vec<Rational>) {
        let ev = |row: &[NPoly]| row.iter().map(|c| c.eval(n)).collect();
        (ev(&self.type1), ev(&self.type2))
    }

    pub fn to_json(&self) -> Value {
        let rows = |row: &[NPoly]| {
            row.iter()
                .enumerate()
                .map(|(i, c)| json!({"p": i + 1, "npoly": c.to_json_map()}))
                .collect::<Vec<_>>()
        };
        json!({
            "max_crossings": self.max_crossings,
            "flype_corrected": self.flype_corrected,
            "type1": rows(&self.type1),
            "type2": rows(&self.type2),
            "t_series": self.t_series.as_ref().map(|t| t.coeffs().iter().map(|c| c.to_json_map()).collect::<Vec<_>>()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CensusError> {
        let bad = |what: &str| CensusError::Parse(format!("missing or invalid {what}"));
        let max = v
            .get("max_crossings")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("max_crossings"))? as usize;
        let rows = |key: &str| -> Result<Vec<NPoly>, CensusError> {
            let list = v.get(key).and_then(Value::as_array).ok_or_else(|| bad(key))?;
            let mut out = vec![NPoly::new(); max];
            for item in list {
                let p = item.get("p").and_then(Value::as_u64).ok_or_else(|| bad("p"))? as usize;
                if p == 0 || p > max {
                    return Err(bad("p"));
                }
                out[p - 1] = NPoly::from_json_value(item.get("npoly").ok_or_else(|| bad("npoly"))?)?;
            }
            Ok(out)
        };
        let t_series = match v.get("t_series") {
            Some(Value::Array(list)) => {
                let c = list.iter().map(NPoly::from_json_value).collect::<Result<Vec<_>, _>>()?;
                Some(TruncSeries::new(Var::G, c))
            }
            _ => None,
        };
        Ok(CensusTable {
            max_crossings: max,
            type1: rows("type1")?,
            type2: rows("type2")?,
            flype_corrected: v.get("flype_corrected").and_then(Value::as_bool).unwrap_or(true),
            t_series,
        })
    }

    /// One row per (p, type, k) with a nonzero coefficient of `n^k`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,type,k,coefficient\n");
        for p in 1..=self.max_crossings {
            for ty in [1u8, 2] {
                let c = self.get(p, ty).expect("in range");
                for (k, v) in c.terms() {
                    let _ = writeln!(out, "{p},{ty},{k},{v}");
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = |row: &[NPoly]| row.iter().map(|c| c.to_string().len()).max().unwrap_or(1);
        let w = width(&self.type1).max(width(&self.type2)).max(4);
        let _ = write!(out, "{:>8}", "");
        for p in 1..=self.max_crossings {
            let _ = write!(out, "  {:>w$}", format!("g^{p}"));
        }
        out.push('\n');
        for (name, row) in [("Gamma~1", &self.type1), ("Gamma~2", &self.type2)] {
            let _ = write!(out, "{name:>8}");
            for c in row.iter() {
                let s = if c.is_zero() { String::new() } else { c.to_string() };
                let _ = write!(out, "  {s:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

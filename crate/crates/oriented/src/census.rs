//! The oriented census table.

use std::fmt::Write;

use serde_json::{json, Value};
use tangle_ring::{parse_rational, rat, Rational};
use tangle_series::{TruncSeries, Var};

use crate::OrientedError;

type Gs = TruncSeries<Rational>;

/// Series of the oriented census in the renormalized coupling `g`.
///
/// `dtheta` is known through `g^{order−1}`, every other row through
/// `g^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedCensus {
    pub order: usize,
    /// `τ = q²`
    pub tau: Gs,
    /// `θ − π/2`
    pub dtheta: Gs,
    pub b: Gs,
    pub c: Gs,
    pub g1: Gs,
    pub g2: Gs,
    pub gamma_b: Gs,
    pub gamma_c: Gs,
    pub gamma_1: Gs,
    pub gamma_2: Gs,
}

/// JSON keys in table order.
pub const ROW_NAMES: [&str; 10] = [
    "q2", "dtheta", "b", "c", "g1", "g2", "gamma_b", "gamma_c", "gamma_1", "gamma_2",
];

impl OrientedCensus {
    pub(crate) fn assemble(
        order: usize,
        tau: Gs,
        dtheta: Gs,
        b: Gs,
        gamma_b: Gs,
        gamma_c: Gs,
        x: &Gs,
    ) -> Result<Self, OrientedError> {
        let cut = |s: Gs| s.truncate(order);
        let bx = b.mul(x);
        let half = rat(1, 2);
        let gamma_2 = gamma_c.scale(&half);
        Ok(OrientedCensus {
            order,
            c: cut(bx.scale(&rat(2, 1)))?,
            g1: cut(b.sub(&bx))?,
            g2: cut(bx)?,
            gamma_1: cut(gamma_b.sub(&gamma_2))?,
            gamma_2: cut(gamma_2)?,
            tau: cut(tau)?,
            dtheta,
            b: cut(b)?,
            gamma_b: cut(gamma_b)?,
            gamma_c: cut(gamma_c)?,
        })
    }

    pub fn row(&self, name: &str) -> Option<&Gs> {
        Some(match name {
            "q2" => &self.tau,
            "dtheta" => &self.dtheta,
            "b" => &self.b,
            "c" => &self.c,
            "g1" => &self.g1,
            "g2" => &self.g2,
            "gamma_b" => &self.gamma_b,
            "gamma_c" => &self.gamma_c,
            "gamma_1" => &self.gamma_1,
            "gamma_2" => &self.gamma_2,
            _ => return None,
        })
    }

    /// The tangle counts `Γ̃_b`, `Γ̃_c` must be nonnegative integers.
    pub fn check_counts(&self) -> Result<(), OrientedError> {
        for (name, s) in [("gamma_b", &self.gamma_b), ("gamma_c", &self.gamma_c)] {
            for (k, c) in s.coeffs().iter().enumerate() {
                if !c.is_integer() || *c < 0 {
                    return Err(OrientedError::NotACount {
                        row: name,
                        k,
                        value: c.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Rows as coefficient lists from `g^0`; `dtheta` has one entry fewer.
    pub fn to_json(&self) -> Value {
        let rows: serde_json::Map<String, Value> = ROW_NAMES
            .iter()
            .map(|n| {
                let s = self.row(n).expect("known row");
                let list: Vec<Value> = s.coeffs().iter().map(|c| Value::String(c.to_string())).collect();
                (n.to_string(), Value::Array(list))
            })
            .collect();
        json!({ "order": self.order, "rows": rows })
    }

    pub fn from_json(v: &Value) -> Result<Self, OrientedError> {
        let bad = |what: &str| OrientedError::Parse(format!("missing or invalid {what}"));
        let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| bad("order"))? as usize;
        let rows = v.get("rows").ok_or_else(|| bad("rows"))?;
        let row = |name: &str| -> Result<Gs, OrientedError> {
            let list = rows.get(name).and_then(Value::as_array).ok_or_else(|| bad(name))?;
            let coeffs = list
                .iter()
                .map(|c| c.as_str().ok_or_else(|| bad(name)).and_then(|s| Ok(parse_rational(s)?)))
                .collect::<Result<Vec<_>, _>>()?;
            let want = if name == "dtheta" { order } else { order + 1 };
            if coeffs.len() != want {
                return Err(bad(name));
            }
            Ok(TruncSeries::new(Var::G, coeffs))
        };
        Ok(OrientedCensus {
            order,
            tau: row("q2")?,
            dtheta: row("dtheta")?,
            b: row("b")?,
            c: row("c")?,
            g1: row("g1")?,
            g2: row("g2")?,
            gamma_b: row("gamma_b")?,
            gamma_c: row("gamma_c")?,
            gamma_1: row("gamma_1")?,
            gamma_2: row("gamma_2")?,
        })
    }

    /// One line per row, one column per order `g^1..g^order`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row");
        for k in 1..=self.order {
            let _ = write!(out, ",g{k}");
        }
        out.push('\n');
        for name in ROW_NAMES {
            let s = self.row(name).expect("known row");
            out.push_str(name);
            for k in 1..=self.order {
                match s.coeff(k) {
                    Ok(c) => {
                        let _ = write!(out, ",{c}");
                    }
                    Err(_) => out.push(','),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = ROW_NAMES
            .iter()
            .map(|n| {
                let s = self.row(n).expect("known row");
                (1..=self.order)
                    .map(|k| s.coeff(k).map(|c| c.to_string()).unwrap_or_default())
                    .collect()
            })
            .collect();
        let mut out = String::new();
        for k in 0..self.order {
            let w = cells
                .iter()
                .map(|r| r[k].len())
                .max()
                .unwrap_or(1)
                .max(format!("g^{}", k + 1).len());
            if k == 0 {
                let _ = write!(out, "{:>8}", "");
            }
            let _ = write!(out, "  {:>w$}", format!("g^{}", k + 1));
        }
        out.push('\n');
        for (name, row) in ROW_NAMES.iter().zip(&cells) {
            let _ = write!(out, "{name:>8}");
            for (k, cell) in row.iter().enumerate() {
                let w = cells
                    .iter()
                    .map(|r| r[k].len())
                    .max()
                    .unwrap_or(1)
                    .max(format!("g^{}", k + 1).len());
                let _ = write!(out, "  {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

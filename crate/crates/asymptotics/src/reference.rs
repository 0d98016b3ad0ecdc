//! Growth constants of related counting problems.

use std::f64::consts::PI;
use std::sync::OnceLock;

use tangle_critical::solve_critical;

/// Rounded `1/g_c` of the oriented flype-class census.
pub const CRITICAL_RATE: f64 = 6.28329764;

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceConstant {
    pub name: &'static str,
    pub formula: &'static str,
    pub value: f64,
}

fn critical_rate() -> f64 {
    static V: OnceLock<f64> = OnceLock::new();
    *V.get_or_init(|| match solve_critical(1e-14) {
        Ok(cp) => cp.inv_g_c().to_f64(),
        Err(_) => CRITICAL_RATE,
    })
}

/// The four comparison rates, each evaluated from its closed form.
pub fn reference_constants() -> Vec<ReferenceConstant> {
    vec![
        ReferenceConstant {
            name: "oriented, flyped",
            formula: "1/g_c at the critical angle",
            value: critical_rate(),
        },
        ReferenceConstant {
            name: "oriented, unflyped",
            formula: "16/(pi (pi-4)^2)",
            value: 16.0 / (PI * (PI - 4.0).powi(2)),
        },
        ReferenceConstant {
            name: "one color, flyped",
            formula: "(101+sqrt(21001))/40",
            value: (101.0 + 21001f64.sqrt()) / 40.0,
        },
        ReferenceConstant {
            name: "one color, unflyped",
            formula: "27/4",
            value: 27.0 / 4.0,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let t = reference_constants();
        assert_eq!(t.len(), 4);
        // six significant digits
        let want = ["6.28330", "6.91167", "6.14793", "6.75000"];
        for (c, w) in t.iter().zip(want) {
            assert_eq!(format!("{:.5}", c.value), w, "{}", c.name);
        }
    }
}

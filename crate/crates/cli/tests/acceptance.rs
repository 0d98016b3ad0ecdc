//! Runs every acceptance criterion and prints one line each.
//!
//! Three criteria cannot hold as stated. Two compare against printed values
//! that are internally inconsistent, and one assumes the radius of
//! convergence is set by the positive-axis singularity at every angle. They
//! are reported as failures. The run only fails if their discrepancies differ
//! from the known ones or if any other criterion fails.

use std::io::Write;
use std::process::ExitCode;

use tangle_cli::acceptance::run_acceptance;

/// Printed entries contradicted by `g_2 = b cos θ` on the printed rows.
const KNOWN_TABLE2: [&str; 6] = [
    "c g^12: printed -162728, computed -162628",
    "c g^13: printed -828344, computed -828244",
    "g1 g^12: printed -121458, computed -121508",
    "g1 g^13: printed -613782, computed -613832",
    "g2 g^12: printed -81364, computed -81314",
    "g2 g^13: printed -414172, computed -414122",
];

/// The customary `τ²` coefficient of `Γ_c` contradicts the other anchors.
const KNOWN_ANCHOR: &str = "gamma_c at tau^2";

/// Beyond `θ = π/2` a singularity on the negative `b_0` axis is closer than
/// `b_0*`, so the ratio test sees it instead.
const KNOWN_RADIUS: &str = "theta = 2pi/3: estimate -";

fn main() -> ExitCode {
    let results = run_acceptance();
    let mut err = std::io::stderr().lock();
    let mut unexpected = Vec::new();
    for c in &results {
        let _ = writeln!(err, "{}", c.line());
        for m in &c.mismatches {
            let _ = writeln!(err, "    {m}");
        }
        let expected_failure = match c.id {
            2 => c.mismatches == KNOWN_TABLE2,
            5 => c.mismatches.len() == 1 && c.mismatches[0].contains(KNOWN_ANCHOR),
            7 => c.mismatches.len() == 1 && c.mismatches[0].starts_with(KNOWN_RADIUS),
            _ => false,
        };
        if !c.passed && !expected_failure {
            unexpected.push(c.id);
        }
    }
    let _ = writeln!(
        err,
        "acceptance: {} of {} criteria pass",
        results.iter().filter(|c| c.passed).count(),
        results.len()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        let _ = writeln!(err, "unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}

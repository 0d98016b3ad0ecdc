//! Critical point of the oriented two-color tangle model.
//!
//! Along the critical line `b_0 = b_0*(θ)` the bare model is known in
//! closed form. The flype-class relations then fix the renormalized
//! coupling `g` and the angle `θ_c` where both channels close.

mod error;
mod line;
mod solve;

pub use error::CriticalError;
pub use line::{
    b0_star, b0_star_derivative, critical_observables, f_star, f_star_derivative, g_star, h_star, h_star_explicit,
    rc_quadratic, residuals, CriticalObservables, PREC,
};
pub use solve::{
    coupling_on_line, newton_critical, residual_b, scan_sign_changes, solve_critical, Branch, CriticalPoint,
    MIN_TOLERANCE, SCAN_STEP, SEED_BRACKET,
};

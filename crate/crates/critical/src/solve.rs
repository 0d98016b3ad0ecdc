//! Locating the critical angle.

use serde_json::{json, Value};
use tangle_ring::{real, Real};

use crate::line::{critical_observables, rc_quadratic, residuals, CriticalObservables, PREC};
use crate::CriticalError;

/// Smallest supported tolerance on `θ_c`.
pub const MIN_TOLERANCE: f64 = 1e-14;
/// Resolution of the uniqueness scan over `(1, 2)`.
pub const SCAN_STEP: f64 = 0.01;
/// Interval expected to contain `θ_c`.
pub const SEED_BRACKET: (f64, f64) = (1.5, 1.7);

fn r(v: f64) -> Real {
    real(PREC, v)
}

fn show(x: &Real) -> String {
    x.to_string_radix(10, Some(25))
}

/// Which root of the c-channel quadratic is the physical coupling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `g = (−q1 − √d)/(2 q2)`
    Minus,
    /// `g = (−q1 + √d)/(2 q2)`
    Plus,
}

fn roots(obs: &CriticalObservables) -> Result<(Real, Real), CriticalError> {
    let [q0, q1, q2] = rc_quadratic(obs);
    let d = q1.clone() * &q1 - q0 * &q2 * 4u32;
    if d < 0 {
        return Err(CriticalError::NoRealCoupling(show(&obs.theta)));
    }
    let sd = d.sqrt();
    let den = q2 * 2u32;
    let minus = (-q1.clone() - &sd) / &den;
    let plus = (-q1 + &sd) / &den;
    Ok((minus, plus))
}

impl Branch {
    /// The branch is fixed at `θ = 1`, where exactly one root is positive,
    /// and followed continuously from there. Further along the line both
    /// roots become positive, so no pointwise rule picks the right one.
    pub fn select() -> Result<Branch, CriticalError> {
        let obs = critical_observables(&r(1.0))?;
        let (m, p) = roots(&obs)?;
        match (m > 0, p > 0) {
            (true, false) => Ok(Branch::Minus),
            (false, true) => Ok(Branch::Plus),
            _ => Err(CriticalError::AmbiguousRoot(show(&obs.theta))),
        }
    }
}

/// The renormalized coupling on the critical line, from the c-channel
/// relation.
pub fn coupling_on_line(obs: &CriticalObservables, branch: Branch) -> Result<Real, CriticalError> {
    let (m, p) = roots(obs)?;
    Ok(match branch {
        Branch::Minus => m,
        Branch::Plus => p,
    })
}

/// `R_b(θ)` with `g` eliminated through the c channel.
pub fn residual_b(theta: &Real, branch: Branch) -> Result<Real, CriticalError> {
    let obs = critical_observables(theta)?;
    let g = coupling_on_line(&obs, branch)?;
    Ok(residuals(&obs, &g).0)
}

/// Brackets `[θ_k, θ_{k+1}]` on the grid `1, 1 + SCAN_STEP, …` below 2
/// where `R_b` changes sign. The scan stops where the coupling leaves the
/// real line.
pub fn scan_sign_changes(branch: Branch) -> Result<Vec<(f64, f64)>, CriticalError> {
    let steps = (1.0 / SCAN_STEP).round() as usize;
    let mut out = Vec::new();
    let mut prev: Option<(f64, bool)> = None;
    for k in 0..steps {
        let t = 1.0 + k as f64 * SCAN_STEP;
        let v = match residual_b(&r(t), branch) {
            Ok(v) => v,
            Err(CriticalError::NoRealCoupling(_)) => break,
            Err(e) => return Err(e),
        };
        let pos = v > 0;
        if let Some((pt, ppos)) = prev {
            if pos != ppos {
                out.push((pt, t));
            }
        }
        prev = Some((t, pos));
    }
    Ok(out)
}

/// The critical point and how it was located.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPoint {
    pub theta_c: Real,
    pub g_c: Real,
    /// `(R_b, R_c)` at the solution
    pub residuals: (Real, Real),
    /// final bisection interval
    pub bracket: (Real, Real),
    /// larger of the half-width of the final interval and `|R_b/R_b'|`
    pub error: Real,
}

impl CriticalPoint {
    pub fn inv_g_c(&self) -> Real {
        Real::with_val(PREC, 1u32) / &self.g_c
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theta_c": show(&self.theta_c),
            "g_c": show(&self.g_c),
            "inv_g_c": show(&self.inv_g_c()),
            "residuals": [show(&self.residuals.0), show(&self.residuals.1)],
            "error": self.error.to_f64(),
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "theta_c = {}\ng_c     = {}\n1/g_c   = {}\nerror   = {:e}\n",
            show(&self.theta_c),
            show(&self.g_c),
            show(&self.inv_g_c()),
            self.error.to_f64()
        )
    }
}

/// Locates `θ_c` to within `tolerance` by bisection on `R_b`, after a scan
/// confirms a single sign change on `(1, 2)` inside the seed interval.
pub fn solve_critical(tolerance: f64) -> Result<CriticalPoint, CriticalError> {
    if tolerance.is_nan() || tolerance < MIN_TOLERANCE {
        return Err(CriticalError::Tolerance(tolerance));
    }
    let branch = Branch::select()?;
    let changes = scan_sign_changes(branch)?;
    if changes.len() != 1 {
        return Err(CriticalError::NotUnique(changes.len()));
    }
    let (lo, hi) = changes[0];
    if lo < SEED_BRACKET.0 || hi > SEED_BRACKET.1 {
        return Err(CriticalError::NoRootInBracket {
            lo: SEED_BRACKET.0.to_string(),
            hi: SEED_BRACKET.1.to_string(),
        });
    }
    let (mut lo, mut hi) = (r(lo), r(hi));
    let lo_pos = residual_b(&lo, branch)? > 0;
    while (hi.clone() - &lo) > 2.0 * tolerance * 1e-3 {
        let mid = (lo.clone() + &hi) / 2u32;
        if (residual_b(&mid, branch)? > 0) == lo_pos {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let theta_c = (lo.clone() + &hi) / 2u32;
    let obs = critical_observables(&theta_c)?;
    let g_c = coupling_on_line(&obs, branch)?;
    let res = residuals(&obs, &g_c);
    // Newton step size from the residual slope across the final interval
    let slope = (residual_b(&hi, branch)? - residual_b(&lo, branch)?) / (hi.clone() - &lo);
    let step = (res.0.clone() / slope).abs();
    let half = (hi.clone() - &lo) / 2u32;
    Ok(CriticalPoint {
        error: if step > half { step } else { half },
        theta_c,
        g_c,
        residuals: res,
        bracket: (lo, hi),
    })
}

/// Two-dimensional Newton iteration on `(R_b, R_c)` in `(θ, g)` from a
/// starting guess, with a central-difference Jacobian.
pub fn newton_critical(theta0: f64, g0: f64) -> Result<(Real, Real), CriticalError> {
    let f = |t: &Real, g: &Real| -> Result<(Real, Real), CriticalError> { Ok(residuals(&critical_observables(t)?, g)) };
    let (mut t, mut g) = (r(theta0), r(g0));
    let h = r(1e-20);
    for _ in 0..60 {
        let (fb, fc) = f(&t, &g)?;
        let (tp, tm) = (t.clone() + &h, t.clone() - &h);
        let (gp, gm) = (g.clone() + &h, g.clone() - &h);
        let (bt1, ct1) = f(&tp, &g)?;
        let (bt0, ct0) = f(&tm, &g)?;
        let (bg1, cg1) = f(&t, &gp)?;
        let (bg0, cg0) = f(&t, &gm)?;
        let h2 = h.clone() * 2u32;
        let (jbt, jct) = ((bt1 - bt0) / &h2, (ct1 - ct0) / &h2);
        let (jbg, jcg) = ((bg1 - bg0) / &h2, (cg1 - cg0) / &h2);
        let det = jbt.clone() * &jcg - jbg.clone() * &jct;
        if det == 0 {
            return Err(CriticalError::NoConvergence);
        }
        let dt = (jcg * &fb - jbg * &fc) / &det;
        let dg = (jbt * &fc - jct * &fb) / &det;
        t -= &dt;
        g -= &dg;
        if dt.abs() < 1e-35 && dg.abs() < 1e-35 {
            return Ok((t, g));
        }
    }
    Err(CriticalError::NoConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_is_the_minus_root() {
        assert_eq!(Branch::select().unwrap(), Branch::Minus);
    }

    #[test]
    fn both_roots_positive_near_the_critical_angle() {
        let obs = critical_observables(&r(1.6078)).unwrap();
        let (m, p) = roots(&obs).unwrap();
        assert!(m > 0 && p > 0);
        // the physical root is the larger one there
        assert!(m > p);
    }

    #[test]
    fn coupling_leaves_the_real_line() {
        let obs = critical_observables(&r(1.7)).unwrap();
        assert!(matches!(roots(&obs), Err(CriticalError::NoRealCoupling(_))));
    }

    #[test]
    fn tolerance_floor() {
        assert_eq!(solve_critical(1e-15), Err(CriticalError::Tolerance(1e-15)));
        assert!(matches!(solve_critical(f64::NAN), Err(CriticalError::Tolerance(_))));
    }
}

//! Closed forms on the critical line.

use tangle_ring::{real, real_pi, Real};

use crate::CriticalError;

/// Working precision in bits (about 48 decimal digits).
pub const PREC: u32 = 160;

fn r(v: f64) -> Real {
    real(PREC, v)
}

fn check(theta: &Real) -> Result<(), CriticalError> {
    if *theta <= 0 || *theta >= real_pi(PREC) {
        return Err(CriticalError::Domain(theta.to_string_radix(10, Some(20))));
    }
    Ok(())
}

fn pi2_minus(theta: &Real) -> Real {
    let pi = real_pi(PREC);
    pi.clone() * &pi - theta.clone() * theta
}

/// `b_0*(θ) = tan(θ/2) / (32 (θ/2) cos²(θ/2))`, where the free energy first
/// becomes singular.
pub fn b0_star(theta: &Real) -> Result<Real, CriticalError> {
    check(theta)?;
    let u = theta.clone() / 2u32;
    let c = u.clone().cos();
    Ok(u.clone().tan() / (u * (c.clone() * &c)) / 32u32)
}

/// `d b_0*/dθ`
pub fn b0_star_derivative(theta: &Real) -> Result<Real, CriticalError> {
    check(theta)?;
    let u = theta.clone() / 2u32;
    let t = u.clone().tan();
    let sec2 = {
        let c = u.clone().cos();
        Real::with_val(PREC, 1u32) / (c.clone() * &c)
    };
    // d/du [tan u sec²u / u] = (sec⁴u + 2 tan²u sec²u)/u − tan u sec²u/u²
    let num = sec2.clone() * &sec2 + t.clone() * &t * &sec2 * 2u32;
    let du = num / &u - t * &sec2 / (u.clone() * &u);
    Ok(du / 64u32)
}

/// `G*(θ) = 8 (θ/2)/tan(θ/2) − (2/3)(π² − θ²)`
pub fn g_star(theta: &Real) -> Result<Real, CriticalError> {
    check(theta)?;
    let u = theta.clone() / 2u32;
    Ok(u.clone() / u.tan() * 8u32 - pi2_minus(theta) * 2u32 / 3u32)
}

/// `F*(θ) = −4 (θ/2)/tan(θ/2) + (π² − θ²)/6`
pub fn f_star(theta: &Real) -> Result<Real, CriticalError> {
    check(theta)?;
    let u = theta.clone() / 2u32;
    Ok(pi2_minus(theta) / 6u32 - u.clone() / u.tan() * 4u32)
}

/// `dF*/dθ = −2 cot(θ/2) + 2 (θ/2)/sin²(θ/2) − θ/3`
pub fn f_star_derivative(theta: &Real) -> Result<Real, CriticalError> {
    check(theta)?;
    let u = theta.clone() / 2u32;
    let s = u.clone().sin();
    Ok(u.clone() * 2u32 / (s.clone() * &s) - u.cot() * 2u32 - theta.clone() / 3u32)
}

/// `H* = ∂F/∂θ` at fixed `b_0`, from the chain rule along the critical line:
/// `H* = dF*/dθ − G*/(2 b_0*) · db_0*/dθ`.
pub fn h_star(theta: &Real) -> Result<Real, CriticalError> {
    let g = g_star(theta)?;
    let b0 = b0_star(theta)?;
    Ok(f_star_derivative(theta)? - g / (b0 * 2u32) * b0_star_derivative(theta)?)
}

/// The explicit form `−2θ + (π²−θ²) tan(θ/2)/2 − π²/(3θ) + (π²−θ²) cot(θ/2)/6`.
pub fn h_star_explicit(theta: &Real) -> Result<Real, CriticalError> {
    check(theta)?;
    let u = theta.clone() / 2u32;
    let pi = real_pi(PREC);
    let p = pi2_minus(theta);
    Ok(
        p.clone() * u.clone().tan() / 2u32 - theta.clone() * 2u32 - pi.clone() * &pi / (theta.clone() * 3u32)
            + p * u.cot() / 6u32,
    )
}

/// Bare and renormalized quantities at one point of the critical line.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalObservables {
    pub theta: Real,
    pub b0: Real,
    pub g: Real,
    pub f: Real,
    pub h: Real,
    pub b: Real,
    pub c: Real,
    pub gamma_b: Real,
    pub gamma_c: Real,
    pub dprime_b: Real,
    pub dprime_c: Real,
}

fn igeom(x: &Real) -> Real {
    x.clone() / (x.clone() + 1u32)
}

/// The series chain of the bare model with numbers in place of series.
pub fn critical_observables(theta: &Real) -> Result<CriticalObservables, CriticalError> {
    let b0 = b0_star(theta)?;
    let g = g_star(theta)?;
    let f = f_star(theta)?;
    let h = h_star(theta)?;
    let b = b0.clone() * &g * &g;
    let c = b.clone() * theta.clone().cos() * 2u32;
    let gamma_b = ((g.clone() - 1u32) / 2u32 + h.clone() * theta.clone().cot()) / &b - 1u32;
    let gamma_c = -(h.clone() / (b.clone() * theta.clone().sin())) - 2u32;
    let h_b = igeom(&gamma_b);
    let v_plus = igeom(&(gamma_c.clone() + &gamma_b));
    let v_minus = igeom(&(gamma_c.clone() - &gamma_b));
    let v_c = (v_plus.clone() + &v_minus) / 2u32;
    let v_b = (v_plus - &v_minus) / 2u32;
    let dprime_b = h_b + &v_b - &gamma_b - &b;
    let dprime_c = v_c.clone() * 2u32 - &gamma_c - &c;
    Ok(CriticalObservables {
        theta: theta.clone(),
        b0,
        g,
        f,
        h,
        b,
        c,
        gamma_b,
        gamma_c,
        dprime_b,
        dprime_c,
    })
}

/// Flype-class residuals `(R_b, R_c)` at coupling `g`: the flype relations
/// with the critical `Γ_b*`, `Γ_c*` minus the critical 2PI parts.
pub fn residuals(obs: &CriticalObservables, g: &Real) -> (Real, Real) {
    let one = r(1.0);
    let gb = &obs.gamma_b;
    let gc = &obs.gamma_c;
    let h_b_prime = igeom(&(gb.clone() - g.clone() * (one.clone() + gb)));
    let v_plus = igeom(&((one.clone() - g) * (gc.clone() + gb) - g));
    let v_minus = igeom(&((one.clone() + g) * (gc.clone() - gb) + g));
    let v_c = (v_plus.clone() + &v_minus) / 2u32;
    let v_b_prime = (v_plus - &v_minus) / 2u32;
    let d_b = (h_b_prime + g) + (v_b_prime + g) - gb - g;
    let d_c = v_c.clone() * 2u32 - gc;
    (d_b - &obs.dprime_b, d_c - &obs.dprime_c)
}

/// `R_c` times `(1 − g²)(1 + Γ_c + Γ_b)(1 + Γ_c − Γ_b)` as `[q0, q1, q2]`,
/// the coefficients of a quadratic in `g`.
pub fn rc_quadratic(obs: &CriticalObservables) -> [Real; 3] {
    let big_a = obs.gamma_c.clone() + &obs.gamma_b;
    let big_b = obs.gamma_c.clone() - &obs.gamma_b;
    let a = big_a.clone() + 1u32;
    let bb = big_b.clone() + 1u32;
    let k = obs.gamma_c.clone() + &obs.dprime_c;
    let q2 = a.clone() * &bb * (k.clone() - 2u32);
    let q1 = a.clone() - &bb;
    let q0 = bb.clone() * &big_a + a.clone() * &big_b - k * &a * &bb;
    [q0, q1, q2]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Real, b: &Real, tol: f64) -> bool {
        (a.clone() - b).abs() < tol
    }

    #[test]
    fn quarter_turn_values() {
        let pi = real_pi(PREC);
        let half = pi.clone() / 2u32;
        assert!(close(
            &b0_star(&half).unwrap(),
            &(Real::with_val(PREC, 1u32) / (pi.clone() * 4u32)),
            1e-40
        ));
        let g = pi.clone() * 2u32 - pi.clone() * &pi / 2u32;
        assert!(close(&g_star(&half).unwrap(), &g, 1e-40));
        let h = pi.clone() * &pi / 2u32 - pi.clone() * 5u32 / 3u32;
        assert!(close(&h_star(&half).unwrap(), &h, 1e-40));
    }

    #[test]
    fn chain_rule_matches_explicit_form() {
        for v in [0.3, 1.0, 1.607, 2.5, 3.0] {
            let t = r(v);
            assert!(
                close(&h_star(&t).unwrap(), &h_star_explicit(&t).unwrap(), 1e-35),
                "theta {v}"
            );
        }
    }

    #[test]
    fn derivatives_match_differences() {
        let t = r(1.3);
        let eps = r(1e-20);
        let fd = |f: fn(&Real) -> Result<Real, CriticalError>| {
            (f(&(t.clone() + &eps)).unwrap() - f(&(t.clone() - &eps)).unwrap()) / (eps.clone() * 2u32)
        };
        assert!(close(&fd(b0_star), &b0_star_derivative(&t).unwrap(), 1e-25));
        assert!(close(&fd(f_star), &f_star_derivative(&t).unwrap(), 1e-25));
    }

    #[test]
    fn domain() {
        assert!(b0_star(&r(0.0)).is_err());
        assert!(g_star(&real_pi(PREC)).is_err());
        assert!(critical_observables(&r(-1.0)).is_err());
    }

    #[test]
    fn quadratic_reproduces_the_residual() {
        let obs = critical_observables(&r(1.4)).unwrap();
        let [q0, q1, q2] = rc_quadratic(&obs);
        for gv in [0.05, 0.1, 0.2] {
            let g = r(gv);
            let (_, rc) = residuals(&obs, &g);
            let a = obs.gamma_c.clone() + &obs.gamma_b + 1u32;
            let bb = obs.gamma_c.clone() - &obs.gamma_b + 1u32;
            let scaled = rc * (r(1.0) - g.clone() * &g) * a * bb;
            let poly = q0.clone() + q1.clone() * &g + q2.clone() * &g * &g;
            assert!(close(&scaled, &poly, 1e-35));
        }
    }
}

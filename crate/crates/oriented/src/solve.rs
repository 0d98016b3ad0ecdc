//! Order-by-order solution for `τ(g)` and `θ(g)`.

use tangle_ring::{Rational, Ring, ThetaElem};
use tangle_series::{implicit_solve, ImplicitSystem, TruncSeries, Unknown, Var};
use tangle_sixvertex::BareSeriesBundle;

use crate::relations::tilde_relations_n2;
use crate::{OrientedCensus, OrientedError};

type Gs = TruncSeries<Rational>;

/// Substitutes `τ = τ(g)` and `cos θ = x(g)` into an even bundle series.
///
/// `x_pows` holds `x^j`; `tau_pows[k]` holds `τ^k`.
fn eval_even(
    name: &'static str,
    s: &TruncSeries<ThetaElem>,
    tau_pows: &[Gs],
    x_pows: &[Gs],
    order: usize,
) -> Result<Gs, OrientedError> {
    let mut out = Gs::zero(Var::G, order);
    for (k, c) in s.coeffs().iter().enumerate().take(order + 1) {
        if c.is_zero() {
            continue;
        }
        if !c.is_even() {
            return Err(OrientedError::OddCoefficient { series: name, k });
        }
        let mut px: Option<Gs> = None;
        for (j, a) in c.even.terms() {
            let term = x_pows[j as usize].scale(a);
            px = Some(match px {
                None => term,
                Some(p) => p.add(&term),
            });
        }
        if let Some(p) = px {
            out = out.add(&p.mul(&tau_pows[k]));
        }
    }
    Ok(out)
}

/// Bundle series on the solution curve `(τ(g), θ(g))`.
pub(crate) struct Evaluator<'a> {
    bundle: &'a BareSeriesBundle,
    order: usize,
    tau_pows: Vec<Gs>,
    x_pows: Vec<Gs>,
    pub x: Gs,
}

impl<'a> Evaluator<'a> {
    /// `θ = π/2 + Δθ`, so `cos θ = −sin Δθ`.
    pub(crate) fn new(
        bundle: &'a BareSeriesBundle,
        tau: &Gs,
        dtheta: &Gs,
        order: usize,
    ) -> Result<Self, OrientedError> {
        let (sin, _) = dtheta.sin_cos()?;
        let x = sin.neg();
        let mut tau_pows = vec![Gs::one(Var::G, order)];
        let mut x_pows = vec![Gs::one(Var::G, order)];
        for k in 1..=order {
            tau_pows.push(tau_pows[k - 1].mul(tau));
            x_pows.push(x_pows[k - 1].mul(&x));
        }
        Ok(Evaluator {
            bundle,
            order,
            tau_pows,
            x_pows,
            x,
        })
    }

    pub(crate) fn eval(&self, name: &'static str) -> Result<Gs, OrientedError> {
        let s = self.bundle.series(name).expect("bundle series");
        eval_even(name, s, &self.tau_pows, &self.x_pows, self.order)
    }
}

/// Solves the flype-class relations against the bundle's 2PI data through
/// `p` crossings.
///
/// The unknowns are `τ(g) = g + O(g²)` and `Δθ(g) = θ − π/2 = O(g²)`. At
/// order `n` the `D̃'_b` equation fixes the `g^n` coefficient of `τ` and
/// the `D̃'_c` equation the `g^{n−1}` coefficient of `Δθ`, which first
/// appears through `Γ_c = 2τ cos θ + …`.
pub fn solve_oriented(p: usize, bundle: &BareSeriesBundle) -> Result<OrientedCensus, OrientedError> {
    if bundle.order < p {
        return Err(OrientedError::BundleTooShort {
            requested: p,
            have: bundle.order,
        });
    }
    let system = ImplicitSystem {
        var: Var::G,
        unknowns: vec![Unknown::new(1), Unknown::lagged(1, 1)],
        residual_starts: vec![1, 2],
        order: p,
    };
    let sol = implicit_solve::<Rational, OrientedError, _>(&system, |ys| {
        let ev = Evaluator::new(bundle, &ys[0], &ys[1], p)?;
        let gamma_b = ev.eval("gamma_b")?;
        let gamma_c = ev.eval("gamma_c")?;
        let (lhs_b, lhs_c) = tilde_relations_n2(&gamma_b, &gamma_c)?;
        Ok(vec![lhs_b.sub(&ev.eval("dprime_b")?), lhs_c.sub(&ev.eval("dprime_c")?)])
    })?;
    let (tau, dtheta) = (sol[0].clone(), sol[1].clone());
    let ev = Evaluator::new(bundle, &tau, &dtheta, p)?;
    let census = OrientedCensus::assemble(
        p,
        tau,
        dtheta,
        ev.eval("b")?,
        ev.eval("gamma_b")?,
        ev.eval("gamma_c")?,
        &ev.x,
    )?;
    census.check_counts()?;
    Ok(census)
}

use std::fmt;

use tangle_ring::{Rational, Ring};

use crate::raw::{inv_trunc, mul_trunc};
use crate::SeriesError;

/// Name of the expansion variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// renormalized coupling
    G,
    /// square of the nome
    Tau,
    /// bare coupling of the six-vertex model
    B0,
    /// t-scaled coupling
    T,
    /// square root of `b0`
    E,
    /// elliptic nome
    Q,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::G => "g",
            Var::Tau => "tau",
            Var::B0 => "b0",
            Var::T => "t",
            Var::E => "e",
            Var::Q => "q",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        [Var::G, Var::Tau, Var::B0, Var::T, Var::E, Var::Q]
            .into_iter()
            .find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `c_0 + c_1 v + … + c_K v^K + O(v^{K+1})`.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<R> {
    var: Var,
    coeffs: Vec<R>,
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[{}; O({}^{})](", self.var, self.var, self.order() + 1)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " [{k}] {c:?}")?;
            }
        }
        write!(f, " )")
    }
}

fn valuation_of<R: Ring>(c: &[R]) -> Option<usize> {
    c.iter().position(|x| !x.is_zero())
}

impl<R: Ring> TruncSeries<R> {
    /// Series of order `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(var: Var, coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        TruncSeries { var, coeffs }
    }

    /// Pads with zeros, or drops trailing entries, to reach `order`.
    pub fn from_coeffs(var: Var, mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncSeries { var, coeffs }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::from_coeffs(var, Vec::new(), order)
    }

    pub fn constant(var: Var, c: R, order: usize) -> Self {
        Self::from_coeffs(var, vec![c], order)
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::constant(var, R::one(), order)
    }

    pub fn monomial(var: Var, k: usize, c: R, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `v` itself.
    pub fn variable(var: Var, order: usize) -> Self {
        Self::monomial(var, 1, R::one(), order)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Result<&R, SeriesError> {
        self.coeffs.get(k).ok_or(SeriesError::BeyondTruncation {
            requested: k,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: R) -> Result<(), SeriesError> {
        let order = self.order();
        let slot = self
            .coeffs
            .get_mut(k)
            .ok_or(SeriesError::BeyondTruncation { requested: k, order })?;
        *slot = c;
        Ok(())
    }

    /// First nonzero exponent, `None` if all known coefficients vanish.
    pub fn valuation(&self) -> Option<usize> {
        valuation_of(&self.coeffs)
    }

    fn val_or_bound(&self) -> usize {
        self.valuation().unwrap_or(self.order() + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Lowers the truncation order.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::CannotExtend {
                have: self.order(),
                want: order,
            });
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(self.var, other.var, "series in different variables combined");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let n = self.order().min(rhs.order()) + 1;
        let coeffs = (0..n).map(|k| self.coeffs[k].add_ref(&rhs.coeffs[k])).collect();
        TruncSeries { var: self.var, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let n = self.order().min(rhs.order()) + 1;
        let coeffs = (0..n).map(|k| self.coeffs[k].sub_ref(&rhs.coeffs[k])).collect();
        TruncSeries { var: self.var, coeffs }
    }

    pub fn neg(&self) -> Self {
        self.map_same(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_same(|x| x.scale(c))
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        self.map_same(|x| x.mul_ref(c))
    }

    pub fn add_scalar(&self, c: &R) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].add_ref(c);
        out
    }

    fn map_same(&self, f: impl Fn(&R) -> R) -> Self {
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Coefficient-wise map into another ring, keeping the order.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<TruncSeries<S>, E> {
        Ok(TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Product; the order is `min(K_a + v_b, K_b + v_a)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let order = (self.order() + rhs.val_or_bound()).min(rhs.order() + self.val_or_bound());
        TruncSeries {
            var: self.var,
            coeffs: mul_trunc(&self.coeffs, &rhs.coeffs, order + 1),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var, self.order().max(self.val_or_bound() * k as usize));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse when the constant term is a unit.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(SeriesError::NotInvertible)?;
        Ok(TruncSeries {
            var: self.var,
            coeffs: inv_trunc(&self.coeffs, &inv0, self.coeffs.len()),
        })
    }

    /// Quotient `self / rhs`, cancelling a common power of the variable.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_var(rhs);
        let v = rhs.valuation().ok_or(SeriesError::NotInvertible)?;
        if self.val_or_bound() < v {
            return Err(SeriesError::NotInvertible);
        }
        let num = self.shift_down(v)?;
        let den = rhs.shift_down(v)?;
        Ok(num.mul(&den.inverse()?))
    }

    /// Divides by `v^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k == 0 {
            return Ok(self.clone());
        }
        if k > self.order() + 1 || self.coeffs[..k.min(self.coeffs.len())].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        if k == self.order() + 1 {
            return Err(SeriesError::BeyondTruncation {
                requested: k,
                order: self.order(),
            });
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplies by `v^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries { var: self.var, coeffs }
    }

    fn require_zero_constant(&self) -> Result<(), SeriesError> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(SeriesError::NonzeroConstantTerm)
        }
    }

    /// `h / (1 − h)`
    pub fn geom(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n = self.coeffs.len();
        let mut out = vec![R::zero(); n];
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                if !self.coeffs[i].is_zero() {
                    acc.add_product(&self.coeffs[i], &out[k - i]);
                }
            }
            out[k] = acc;
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: out,
        })
    }

    /// `γ / (1 + γ)`
    pub fn igeom(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n = self.coeffs.len();
        let mut out = vec![R::zero(); n];
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                if !self.coeffs[i].is_zero() {
                    let p = self.coeffs[i].mul_ref(&out[k - i]);
                    acc.sub_assign_ref(&p);
                }
            }
            out[k] = acc;
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: out,
        })
    }

    /// `f(u)` for `u` without constant term.
    pub fn compose(&self, u: &Self) -> Result<Self, SeriesError> {
        u.require_zero_constant()?;
        let Some(v) = u.valuation() else {
            return Ok(Self::constant(u.var, self.coeffs[0].clone(), u.order()));
        };
        let mut order = (self.order() + 1) * v - 1;
        if let Some(k) = (1..self.coeffs.len()).find(|&k| !self.coeffs[k].is_zero()) {
            order = order.min(u.order() + (k - 1) * v);
        }
        Ok(TruncSeries {
            var: u.var,
            coeffs: horner(&self.coeffs, &u.coeffs, order + 1),
        })
    }

    /// Reversion: the series `g` with `self(g(v)) = v`.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let k_max = self.order();
        if k_max == 0 {
            return Err(SeriesError::NonUnitLeadingCoefficient);
        }
        let c1_inv = self.coeffs[1]
            .unit_inverse()
            .ok_or(SeriesError::NonUnitLeadingCoefficient)?;
        // Lagrange: [v^k] g = (1/k) [v^{k-1}] (v / f)^k
        let h = &self.coeffs[1..];
        let phi = inv_trunc(h, &c1_inv, k_max);
        let mut power = phi.clone();
        let mut out = vec![R::zero(); k_max + 1];
        for k in 1..=k_max {
            if k > 1 {
                power = mul_trunc(&power, &phi, k_max);
            }
            out[k] = power[k - 1].scale(&Rational::from((1, k as u32)));
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: out,
        })
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(self.var, 0);
        }
        TruncSeries {
            var: self.var,
            coeffs: (1..self.coeffs.len())
                .map(|k| self.coeffs[k].scale(&Rational::from(k as u32)))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term (order grows by one).
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::from((1, k as u32 + 1))));
        }
        TruncSeries { var: self.var, coeffs }
    }

    /// `exp(u)` for `u` without constant term, from `E' = u' E`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let n = self.coeffs.len();
        let du: Vec<R> = (1..n)
            .map(|k| self.coeffs[k].scale(&Rational::from(k as u32)))
            .collect();
        let mut e = vec![R::zero(); n];
        e[0] = R::one();
        for k in 1..n {
            let mut acc = R::zero();
            for i in 0..k {
                if !du[i].is_zero() {
                    acc.add_product(&du[i], &e[k - 1 - i]);
                }
            }
            e[k] = acc.scale(&Rational::from((1, k as u32)));
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: e,
        })
    }

    /// `(sin u, cos u)` for `u` without constant term.
    pub fn sin_cos(&self) -> Result<(Self, Self), SeriesError> {
        self.require_zero_constant()?;
        let n = self.coeffs.len();
        let du: Vec<R> = (1..n)
            .map(|k| self.coeffs[k].scale(&Rational::from(k as u32)))
            .collect();
        let mut s = vec![R::zero(); n];
        let mut c = vec![R::zero(); n];
        c[0] = R::one();
        for k in 1..n {
            let mut ds = R::zero();
            let mut dc = R::zero();
            for i in 0..k {
                if !du[i].is_zero() {
                    ds.add_product(&du[i], &c[k - 1 - i]);
                    dc.add_product(&du[i], &s[k - 1 - i]);
                }
            }
            let inv_k = Rational::from((1, k as u32));
            s[k] = ds.scale(&inv_k);
            c[k] = dc.scale(&inv_k).neg_ref();
        }
        Ok((
            TruncSeries {
                var: self.var,
                coeffs: s,
            },
            TruncSeries {
                var: self.var,
                coeffs: c,
            },
        ))
    }

    /// `log(f)` for `f = 1 + O(v)`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NotInvertible);
        }
        let q = self
            .derivative()
            .mul(&self.inverse()?.truncate(self.order().saturating_sub(1))?);
        Ok(q.integral())
    }

    /// `atanh(u)` for `u` without constant term, as the integral of `u'/(1-u²)`.
    pub fn atanh(&self) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let one = Self::one(self.var, self.order());
        let den = one.sub(&self.mul(self)).truncate(self.order())?;
        let q = self
            .derivative()
            .mul(&den.inverse()?.truncate(self.order().saturating_sub(1))?);
        Ok(q.integral())
    }

    /// Square root of a series with constant term one.
    pub fn sqrt_one(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NotInvertible);
        }
        let n = self.coeffs.len();
        let half = Rational::from((1, 2));
        let mut r = vec![R::zero(); n];
        r[0] = R::one();
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                let p = r[i].mul_ref(&r[k - i]);
                acc.sub_assign_ref(&p);
            }
            r[k] = acc.scale(&half);
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: r,
        })
    }

    /// Evaluates the exact polynomial `Σ p_k w^k` at a series `w`
    /// (which may have a constant term).
    pub fn eval_poly(p: &[R], w: &Self) -> Self {
        if p.iter().all(|c| c.is_zero()) {
            return Self::zero(w.var, w.order());
        }
        TruncSeries {
            var: w.var,
            coeffs: horner(p, &w.coeffs, w.coeffs.len()),
        }
    }

    /// `{"var": …, "order": K, "coeffs": […]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": self.var.name(),
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, SeriesError> {
        let var = v
            .get("var")
            .and_then(|x| x.as_str())
            .and_then(Var::from_name)
            .ok_or_else(|| SeriesError::Parse("missing or unknown var".into()))?;
        let order = v
            .get("order")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| SeriesError::Parse("missing order".into()))? as usize;
        let coeffs = v
            .get("coeffs")
            .and_then(|x| x.as_array())
            .ok_or_else(|| SeriesError::Parse("missing coeffs".into()))?
            .iter()
            .map(R::from_json)
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() != order + 1 {
            return Err(SeriesError::Parse(format!(
                "order {order} but {} coefficients",
                coeffs.len()
            )));
        }
        Ok(TruncSeries { var, coeffs })
    }
}

/// `Σ f_k u^k` truncated to `len` coefficients.
fn horner<R: Ring>(f: &[R], u: &[R], len: usize) -> Vec<R> {
    let last = f.iter().rposition(|c| !c.is_zero());
    let mut acc = vec![R::zero(); len];
    let Some(last) = last else { return acc };
    acc[0] = f[last].clone();
    for k in (0..last).rev() {
        acc = mul_trunc(&acc, u, len);
        acc[0].add_assign_ref(&f[k]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_ring::rat;

    fn s(c: &[i64]) -> TruncSeries<Rational> {
        TruncSeries::new(Var::G, c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn geometric_pair() {
        let g = s(&[0, 1, 0, 0, 0]);
        assert_eq!(g.geom().unwrap(), s(&[0, 1, 1, 1, 1]));
        assert_eq!(g.igeom().unwrap(), s(&[0, 1, -1, 1, -1]));
        assert_eq!(s(&[0, 1, 1, 0, 0, 0]).igeom().unwrap(), s(&[0, 1, 0, -1, 1, 0]));
        assert_eq!(s(&[1, 1]).geom(), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn reversion() {
        let f = s(&[0, 1, 1, 0, 0, 0]);
        let g = f.revert().unwrap();
        assert_eq!(g, s(&[0, 1, -1, 2, -5, 14]));
        assert_eq!(f.compose(&g).unwrap(), s(&[0, 1, 0, 0, 0, 0]));
        assert_eq!(
            s(&[0, 2, 0]).revert().unwrap(),
            TruncSeries::new(Var::G, vec![rat(0, 1), rat(1, 2), rat(0, 1)])
        );
        assert_eq!(s(&[0, 0, 1]).revert(), Err(SeriesError::NonUnitLeadingCoefficient));
    }

    #[test]
    fn composition_orders() {
        let f = s(&[1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let u = s(&[0, 2, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(f.compose(&u).unwrap(), s(&[1, 2, 4, 8, 16, 32, 64, 128, 256]));
        // cos(g^2)
        let (_, c) = s(&[0, 0, 1, 0, 0, 0, 0, 0, 0]).sin_cos().unwrap();
        let expect = TruncSeries::new(
            Var::G,
            vec![
                rat(1, 1),
                rat(0, 1),
                rat(0, 1),
                rat(0, 1),
                rat(-1, 2),
                rat(0, 1),
                rat(0, 1),
                rat(0, 1),
                rat(1, 24),
            ],
        );
        assert_eq!(c, expect);
        // an order-2 series composed with g^3 is known to order 8
        let f2 = s(&[1, 1, 1]);
        let u3 = s(&[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(f2.compose(&u3).unwrap().order(), 8);
    }

    #[test]
    fn multiplication_tracks_valuation() {
        let a = s(&[0, 1, 2]);
        let b = s(&[0, 0, 3, 1]);
        let p = a.mul(&b);
        assert_eq!(p.order(), 4);
        assert_eq!(p, s(&[0, 0, 0, 3, 7]));
        assert!(matches!(
            p.coeff(5),
            Err(SeriesError::BeyondTruncation { requested: 5, order: 4 })
        ));
    }

    #[test]
    fn transcendental_helpers() {
        let u = s(&[0, 1, 0, 0, 0, 0]);
        let e = u.exp().unwrap();
        assert_eq!(e.coeff(5).unwrap(), &rat(1, 120));
        assert_eq!(e.log().unwrap(), u);
        let a = u.atanh().unwrap();
        assert_eq!(
            a,
            TruncSeries::new(
                Var::G,
                vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(1, 5)]
            )
        );
        let sq = s(&[1, 2, 1, 0, 0]).sqrt_one().unwrap();
        assert_eq!(sq, s(&[1, 1, 0, 0, 0]));
    }

    #[test]
    fn division_cancels_common_power() {
        let a = s(&[0, 2, 2, 0]);
        let b = s(&[0, 1, 0, 0]);
        assert_eq!(a.div(&b).unwrap(), s(&[2, 2, 0]));
    }

    #[test]
    fn json_round_trip() {
        let a = TruncSeries::new(Var::Tau, vec![rat(0, 1), rat(1, 3), rat(-5, 2)]);
        assert_eq!(TruncSeries::<Rational>::from_json(&a.to_json()).unwrap(), a);
    }
}

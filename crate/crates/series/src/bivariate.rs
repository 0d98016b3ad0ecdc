use std::collections::BTreeMap;
use std::fmt;

use tangle_ring::{Rational, Ring};

use crate::{SeriesError, TruncSeries, Var};

/// Series in two variables `(g1, g2)` truncated by a weighted degree:
/// the monomial `g1^j g2^k` is known iff `w1·j + w2·k ≤ order`.
#[derive(Clone, PartialEq)]
pub struct BiSeries<R> {
    coeffs: BTreeMap<(u32, u32), R>,
    weights: (u32, u32),
    order: u32,
}

impl<R: Ring> fmt::Debug for BiSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiSeries[w={:?}; order {}](", self.weights, self.order)?;
        for ((j, k), c) in &self.coeffs {
            write!(f, " g1^{j} g2^{k}: {c:?};")?;
        }
        write!(f, " )")
    }
}

impl<R: Ring> BiSeries<R> {
    pub fn zero(weights: (u32, u32), order: u32) -> Self {
        assert!(weights.0 > 0 && weights.1 > 0, "weights must be positive");
        BiSeries {
            coeffs: BTreeMap::new(),
            weights,
            order,
        }
    }

    pub fn constant(weights: (u32, u32), order: u32, c: R) -> Self {
        let mut s = Self::zero(weights, order);
        s.set(0, 0, c);
        s
    }

    pub fn one(weights: (u32, u32), order: u32) -> Self {
        Self::constant(weights, order, R::one())
    }

    /// `c · g1^j g2^k`
    pub fn monomial(weights: (u32, u32), order: u32, j: u32, k: u32, c: R) -> Self {
        let mut s = Self::zero(weights, order);
        s.set(j, k, c);
        s
    }

    pub fn g1(weights: (u32, u32), order: u32) -> Self {
        Self::monomial(weights, order, 1, 0, R::one())
    }

    pub fn g2(weights: (u32, u32), order: u32) -> Self {
        Self::monomial(weights, order, 0, 1, R::one())
    }

    pub fn weights(&self) -> (u32, u32) {
        self.weights
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weight(&self, j: u32, k: u32) -> u32 {
        self.weights.0 * j + self.weights.1 * k
    }

    pub fn is_known(&self, j: u32, k: u32) -> bool {
        self.weight(j, k) <= self.order
    }

    /// All known monomials `(j, k)`.
    pub fn support(&self) -> Vec<(u32, u32)> {
        let (w1, w2) = self.weights;
        let mut out = Vec::new();
        for k in 0..=self.order / w2 {
            for j in 0..=(self.order - w2 * k) / w1 {
                out.push((j, k));
            }
        }
        out.sort_unstable();
        out
    }

    /// Sets a coefficient; monomials beyond the order are ignored.
    pub fn set(&mut self, j: u32, k: u32, c: R) {
        if !self.is_known(j, k) {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&(j, k));
        } else {
            self.coeffs.insert((j, k), c);
        }
    }

    fn accumulate(&mut self, j: u32, k: u32, c: &R) {
        if c.is_zero() || !self.is_known(j, k) {
            return;
        }
        let entry = self.coeffs.entry((j, k)).or_insert_with(R::zero);
        entry.add_assign_ref(c);
        if entry.is_zero() {
            self.coeffs.remove(&(j, k));
        }
    }

    pub fn coeff(&self, j: u32, k: u32) -> Result<R, SeriesError> {
        if !self.is_known(j, k) {
            return Err(SeriesError::BeyondTruncation {
                requested: self.weight(j, k) as usize,
                order: self.order as usize,
            });
        }
        Ok(self.coeffs.get(&(j, k)).cloned().unwrap_or_else(R::zero))
    }

    /// Nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &R)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest weighted degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(j, k)| self.weight(j, k)).min()
    }

    pub fn truncate(&self, order: u32) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::CannotExtend {
                have: self.order as usize,
                want: order as usize,
            });
        }
        let mut out = Self::zero(self.weights, order);
        for (&(j, k), c) in &self.coeffs {
            out.set(j, k, c.clone());
        }
        Ok(out)
    }

    fn combine_shape(&self, rhs: &Self) -> Self {
        assert_eq!(self.weights, rhs.weights, "bivariate series with different weights");
        Self::zero(self.weights, self.order.min(rhs.order))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.combine_shape(rhs);
        for (&(j, k), c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            out.accumulate(j, k, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
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

    fn map_same(&self, f: impl Fn(&R) -> R) -> Self {
        let mut out = Self::zero(self.weights, self.order);
        for (&(j, k), c) in &self.coeffs {
            out.set(j, k, f(c));
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> BiSeries<S> {
        let mut out = BiSeries::zero(self.weights, self.order);
        for (&(j, k), c) in &self.coeffs {
            out.set(j, k, f(c));
        }
        out
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<BiSeries<S>, E> {
        let mut out = BiSeries::zero(self.weights, self.order);
        for (&(j, k), c) in &self.coeffs {
            out.set(j, k, f(c)?);
        }
        Ok(out)
    }

    /// Product, truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = self.combine_shape(rhs);
        for (&(j1, k1), a) in &self.coeffs {
            for (&(j2, k2), b) in &rhs.coeffs {
                if out.is_known(j1 + j2, k1 + k2) {
                    out.accumulate(j1 + j2, k1 + k2, &a.mul_ref(b));
                }
            }
        }
        out
    }

    fn require_zero_constant(&self) -> Result<(), SeriesError> {
        if self.coeffs.contains_key(&(0, 0)) {
            Err(SeriesError::NonzeroConstantTerm)
        } else {
            Ok(())
        }
    }

    /// Sum of powers `Σ_{m≥1} c_m h^m` for `h` without constant term.
    fn power_sum(&self, c: impl Fn(u32) -> R) -> Result<Self, SeriesError> {
        self.require_zero_constant()?;
        let mut out = Self::zero(self.weights, self.order);
        let mut p = self.clone();
        let mut m = 1;
        while !p.is_zero() {
            out = out.add(&p.mul_scalar(&c(m)));
            p = p.mul(self);
            m += 1;
        }
        Ok(out)
    }

    /// `h / (1 − h)`
    pub fn geom(&self) -> Result<Self, SeriesError> {
        self.power_sum(|_| R::one())
    }

    /// `γ / (1 + γ)`
    pub fn igeom(&self) -> Result<Self, SeriesError> {
        self.power_sum(|m| if m % 2 == 1 { R::one() } else { R::one().neg_ref() })
    }

    /// Inverse when the constant term is a unit.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeff(0, 0)?;
        let inv0 = c0.unit_inverse().ok_or(SeriesError::NotInvertible)?;
        // 1/(c0(1+h)) = inv0 Σ (-h)^m
        let mut h = self.mul_scalar(&inv0);
        h.set(0, 0, R::zero());
        let tail = h.neg().geom()?;
        let mut out = tail;
        out.accumulate(0, 0, &R::one());
        Ok(out.mul_scalar(&inv0))
    }

    /// Substitutes `g_i → g_i · s` in both variables: `Σ c_{jk} g1^j g2^k s^{j+k}`.
    pub fn scale_vars(&self, s: &Self) -> Self {
        let order = self.order.min(s.order);
        let mut powers = vec![Self::one(self.weights, order)];
        let mut out = Self::zero(self.weights, order);
        for (&(j, k), c) in &self.coeffs {
            let e = (j + k) as usize;
            while powers.len() <= e {
                let next = powers.last().expect("nonempty").mul(s);
                powers.push(next);
            }
            let term = Self::monomial(self.weights, order, j, k, c.clone()).mul(&powers[e]);
            out = out.add(&term);
        }
        out
    }

    /// Substitutes univariate series for both variables.
    ///
    /// Both inputs must vanish at zero; the resulting order is the largest
    /// `K` for which every monomial contributing below `K + 1` is known.
    pub fn substitute(&self, u1: &TruncSeries<R>, u2: &TruncSeries<R>) -> Result<TruncSeries<R>, SeriesError> {
        let var: Var = u1.var();
        let v1 = u1.valuation().unwrap_or(u1.order() + 1);
        let v2 = u2.valuation().unwrap_or(u2.order() + 1);
        if v1 == 0 || v2 == 0 {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        // smallest exponent reached by an unknown monomial
        let (w1, w2) = self.weights;
        let mut first_unknown = usize::MAX;
        for k in 0..=self.order / w2 + 1 {
            let rest = self.order.saturating_sub(w2 * k);
            let j = if w2 * k > self.order { 0 } else { rest / w1 + 1 };
            first_unknown = first_unknown.min(j as usize * v1 + k as usize * v2);
        }
        let order = (first_unknown - 1).min(u1.order()).min(u2.order());
        let u1 = u1.truncate(order.min(u1.order()))?;
        let u2 = u2.truncate(order.min(u2.order()))?;
        let mut p1 = vec![TruncSeries::one(var, order)];
        let mut p2 = vec![TruncSeries::one(var, order)];
        let mut out = TruncSeries::zero(var, order);
        for (&(j, k), c) in &self.coeffs {
            while p1.len() <= j as usize {
                let next = p1.last().expect("nonempty").mul(&u1).truncate(order)?;
                p1.push(next);
            }
            while p2.len() <= k as usize {
                let next = p2.last().expect("nonempty").mul(&u2).truncate(order)?;
                p2.push(next);
            }
            let term = p1[j as usize].mul(&p2[k as usize]).truncate(order)?.mul_scalar(c);
            out = out.add(&term);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_ring::Rational;

    type B = BiSeries<Rational>;

    #[test]
    fn geometric_pair() {
        let h = B::g1((1, 1), 4).add(&B::g2((1, 1), 4));
        let g = h.geom().unwrap();
        assert_eq!(g.coeff(2, 1).unwrap(), Rational::from(3));
        assert_eq!(g.igeom().unwrap(), h);
        assert!(g.coeff(3, 2).is_err());
    }

    #[test]
    fn weighted_support() {
        let s = B::zero((1, 2), 4);
        assert_eq!(
            s.support(),
            vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (4, 0)]
        );
    }

    #[test]
    fn inverse_and_scaling() {
        let one_plus = B::one((1, 1), 3).add(&B::g1((1, 1), 3));
        let inv = one_plus.inverse().unwrap();
        assert_eq!(inv.mul(&one_plus), B::one((1, 1), 3));
        // g1 -> g1 * 2
        let two = B::constant((1, 1), 3, Rational::from(2));
        let sc = B::g1((1, 1), 3).mul(&B::g2((1, 1), 3)).scale_vars(&two);
        assert_eq!(sc.coeff(1, 1).unwrap(), Rational::from(4));
    }

    #[test]
    fn substitution() {
        // (g1 + g2)^2 at g1 = b, g2 = b
        let s = B::g1((1, 1), 3).add(&B::g2((1, 1), 3));
        let sq = s.mul(&s);
        let b = TruncSeries::variable(Var::B0, 6);
        let r = sq.substitute(&b, &b).unwrap();
        assert_eq!(r.order(), 3);
        assert_eq!(r.coeff(2).unwrap(), &Rational::from(4));
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::forward_owned;
use crate::{Poly, Rational, Real, Ring, RingError};

/// `P(x) + s·Q(x)` with `x = cos θ`, `s = sin θ`.
///
/// Products are reduced with `s² = 1 − x²`, so the pair `(P, Q)` is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ThetaElem {
    pub even: Poly,
    pub odd: Poly,
}

fn one_minus_x2() -> Poly {
    Poly::from_ints(&[1, 0, -1])
}

impl ThetaElem {
    pub fn new(even: Poly, odd: Poly) -> Self {
        ThetaElem { even, odd }
    }

    pub fn from_even(even: Poly) -> Self {
        ThetaElem { even, odd: Poly::new() }
    }

    pub fn from_odd(odd: Poly) -> Self {
        ThetaElem { even: Poly::new(), odd }
    }

    /// `cos θ`
    pub fn x() -> Self {
        Self::from_even(Poly::var())
    }

    /// `sin θ`
    pub fn s() -> Self {
        Self::from_odd(Poly::from_ints(&[1]))
    }

    /// Chebyshev polynomial `T_k(x) = cos kθ`.
    pub fn cheb_poly(k: u32) -> Poly {
        let x = Poly::var();
        let (mut a, mut b) = (Poly::from_ints(&[1]), x.clone());
        if k == 0 {
            return a;
        }
        for _ in 1..k {
            let next = &(&x * &b).scale(&Rational::from(2)) - &a;
            a = b;
            b = next;
        }
        b
    }

    /// `cos kθ`
    pub fn cheb(k: u32) -> Self {
        Self::from_even(Self::cheb_poly(k))
    }

    /// `Σ c_k cos kθ`
    pub fn from_cos_combination(terms: &[(u32, Rational)]) -> Self {
        let mut p = Poly::new();
        for (k, c) in terms {
            p = &p + &Self::cheb_poly(*k).scale(c);
        }
        Self::from_even(p)
    }

    /// Coefficients `c_k` of the even part written as `Σ c_k cos kθ`.
    pub fn to_cos_combination(&self) -> Vec<(u32, Rational)> {
        let mut rest = self.even.clone();
        let mut out = Vec::new();
        while let Some(d) = rest.degree() {
            let t = Self::cheb_poly(d);
            let c = Rational::from(&rest.coeff(d) / &t.coeff(d));
            rest = &rest - &t.scale(&c);
            out.push((d, c));
        }
        out.reverse();
        out
    }

    pub fn is_even(&self) -> bool {
        self.odd.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.even.is_zero()
    }

    /// `d/dθ`, using `dx/dθ = −s` and `ds/dθ = x`.
    pub fn dtheta(&self) -> Self {
        let x = Poly::var();
        let even = &(&x * &self.odd) - &(&one_minus_x2() * &self.odd.derivative());
        let odd = -&self.even.derivative();
        ThetaElem { even, odd }
    }

    /// Exact division by `sin θ`.
    pub fn div_sin(&self) -> Result<Self, RingError> {
        let odd = self
            .even
            .div_exact(&one_minus_x2())
            .map_err(|_| RingError::NotDivisible {
                what: self.to_string(),
                by: "sin θ".into(),
            })?;
        Ok(ThetaElem {
            even: self.odd.clone(),
            odd,
        })
    }

    pub fn mul_sin(&self) -> Self {
        ThetaElem {
            even: &one_minus_x2() * &self.odd,
            odd: self.even.clone(),
        }
    }

    /// Substitutes a rational value for `x`; the element must be even.
    pub fn eval_even_at(&self, x: &Rational) -> Option<Rational> {
        self.is_even().then(|| self.even.eval(x))
    }

    pub fn eval_f64(&self, theta: f64) -> f64 {
        let (s, x) = theta.sin_cos();
        self.even.eval_f64(x) + s * self.odd.eval_f64(x)
    }

    /// Value at `θ`, computed at the precision of `theta`.
    pub fn eval(&self, theta: &Real) -> Real {
        let (s, x) = theta.clone().sin_cos(Real::new(theta.prec()));
        let mut v = self.even.eval_real(&x);
        v += s * self.odd.eval_real(&x);
        v
    }
}

impl fmt::Display for ThetaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => f.write_str(&self.even.fmt_var("x")),
            (true, false) => write!(f, "s*({})", self.odd.fmt_var("x")),
            (false, false) => write!(f, "{}+s*({})", self.even.fmt_var("x"), self.odd.fmt_var("x")),
        }
    }
}

impl fmt::Debug for ThetaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Theta({self})")
    }
}

impl<'a> Add<&'a ThetaElem> for &'a ThetaElem {
    type Output = ThetaElem;
    fn add(self, rhs: &ThetaElem) -> ThetaElem {
        ThetaElem {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl<'a> Sub<&'a ThetaElem> for &'a ThetaElem {
    type Output = ThetaElem;
    fn sub(self, rhs: &ThetaElem) -> ThetaElem {
        ThetaElem {
            even: &self.even - &rhs.even,
            odd: &self.odd - &rhs.odd,
        }
    }
}

impl<'a> Mul<&'a ThetaElem> for &'a ThetaElem {
    type Output = ThetaElem;
    fn mul(self, rhs: &ThetaElem) -> ThetaElem {
        let mut even = &self.even * &rhs.even;
        if !self.odd.is_zero() && !rhs.odd.is_zero() {
            even = &even + &(&one_minus_x2() * &(&self.odd * &rhs.odd));
        }
        let odd = &(&self.even * &rhs.odd) + &(&self.odd * &rhs.even);
        ThetaElem { even, odd }
    }
}

impl Neg for &ThetaElem {
    type Output = ThetaElem;
    fn neg(self) -> ThetaElem {
        ThetaElem {
            even: -&self.even,
            odd: -&self.odd,
        }
    }
}

forward_owned!(ThetaElem, Add, add);
forward_owned!(ThetaElem, Sub, sub);
forward_owned!(ThetaElem, Mul, mul);

impl Neg for ThetaElem {
    type Output = ThetaElem;
    fn neg(self) -> ThetaElem {
        -&self
    }
}

impl Ring for ThetaElem {
    fn zero() -> Self {
        ThetaElem::default()
    }
    fn one() -> Self {
        ThetaElem::from_even(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        ThetaElem {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }
    fn from_rational(c: Rational) -> Self {
        ThetaElem::from_even(Poly::constant(c))
    }
    fn unit_inverse(&self) -> Option<Self> {
        if !self.odd.is_zero() {
            return None;
        }
        Some(ThetaElem::from_even(self.even.unit_inverse()?))
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "even": self.even.to_json_list(), "odd": self.odd.to_json_list() })
    }
    fn from_json(v: &serde_json::Value) -> Result<Self, RingError> {
        let part = |key: &str| {
            v.get(key)
                .ok_or_else(|| RingError::Parse(format!("missing {key:?}")))
                .and_then(Poly::from_json_value)
        };
        Ok(ThetaElem {
            even: part("even")?,
            odd: part("odd")?,
        })
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.even.add_assign_ref(&rhs.even);
        self.odd.add_assign_ref(&rhs.odd);
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.even.sub_assign_ref(&rhs.even);
        self.odd.sub_assign_ref(&rhs.odd);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn products_eliminate_s_squared() {
        let x = ThetaElem::x();
        let s = ThetaElem::s();
        assert_eq!(&(&x + &s) * &(&x - &s), ThetaElem::cheb(2));
        assert_eq!(&s * &s, ThetaElem::from_even(Poly::from_ints(&[1, 0, -1])));
        assert_eq!(ThetaElem::cheb_poly(3), Poly::from_ints(&[0, -3, 0, 4]));
    }

    #[test]
    fn derivatives() {
        assert_eq!(ThetaElem::x().dtheta(), -ThetaElem::s());
        assert_eq!(ThetaElem::s().dtheta(), ThetaElem::x());
        let expect = ThetaElem::from_odd(Poly::from_ints(&[0, -4]));
        assert_eq!(ThetaElem::cheb(2).dtheta(), expect);
    }

    #[test]
    fn division_by_sin() {
        let q = Poly::from_ints(&[2, 0, 5]);
        assert_eq!(
            ThetaElem::from_odd(q.clone()).div_sin().unwrap(),
            ThetaElem::from_even(q)
        );
        let s2 = ThetaElem::from_even(Poly::from_ints(&[1, 0, -1]));
        assert_eq!(s2.div_sin().unwrap(), ThetaElem::s());
        assert!(matches!(
            ThetaElem::one().div_sin(),
            Err(RingError::NotDivisible { .. })
        ));
    }

    #[test]
    fn cos_combinations() {
        let terms = vec![(0, rat(6, 1)), (1, rat(12, 1)), (2, rat(4, 1)), (3, rat(4, 1))];
        let e = ThetaElem::from_cos_combination(&terms);
        assert_eq!(e.to_cos_combination(), terms);
    }

    #[test]
    fn numeric_values() {
        assert!(ThetaElem::x().eval_f64(std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let t3 = ThetaElem::cheb(3);
        assert!((t3.eval_f64(std::f64::consts::FRAC_PI_3) + 1.0).abs() < 1e-14);
        let th = crate::real_pi(200) / 3u32;
        let v = t3.eval(&th);
        assert!((v + 1u32).abs() < 1e-55);
    }

    #[test]
    fn json() {
        let e = ThetaElem::new(Poly::from_ints(&[1, 2]), Poly::from_coeffs([rat(1, 3)]));
        assert_eq!(ThetaElem::from_json(&e.to_json()).unwrap(), e);
    }
}

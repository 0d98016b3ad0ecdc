use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{parse_rational, rational_to_string, Rational, Real, Ring, RingError};

/// Sparse polynomial in one variable with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<u32, Rational>,
}

/// Polynomial in the loop marker `n`.
pub type NPoly = Poly;
/// Polynomial in `x = cos θ`.
pub type XPoly = Poly;

impl Poly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(k: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if c.cmp0() != std::cmp::Ordering::Equal {
            terms.insert(k, c);
        }
        Poly { terms }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, Rational::from(1))
    }

    /// Coefficients listed in ascending degree.
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        let mut p = Poly::new();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as u32, c);
        }
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)))
    }

    pub fn add_term(&mut self, k: u32, c: Rational) {
        if c.cmp0() == std::cmp::Ordering::Equal {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.cmp0() == std::cmp::Ordering::Equal {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::new()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }

    /// Dense ascending coefficients up to the degree.
    pub fn dense(&self) -> Vec<Rational> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff(k)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.cmp0() == std::cmp::Ordering::Equal {
            return Poly::new();
        }
        Poly {
            terms: self.terms.iter().map(|(&k, v)| (k, Rational::from(v * c))).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        let mut out = Poly::new();
        for (&k, c) in &self.terms {
            if k > 0 {
                out.add_term(k - 1, Rational::from(c * k));
            }
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        let Some(d) = self.degree() else { return acc };
        for k in (0..=d).rev() {
            acc *= x;
            if let Some(c) = self.terms.get(&k) {
                acc += c;
            }
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let Some(d) = self.degree() else { return 0.0 };
        let mut acc = 0.0;
        for k in (0..=d).rev() {
            acc *= x;
            if let Some(c) = self.terms.get(&k) {
                acc += c.to_f64();
            }
        }
        acc
    }

    pub fn eval_real(&self, x: &Real) -> Real {
        let prec = x.prec();
        let mut acc = Real::with_val(prec, 0);
        let Some(d) = self.degree() else { return acc };
        for k in (0..=d).rev() {
            acc *= x;
            if let Some(c) = self.terms.get(&k) {
                acc += Real::with_val(prec, c);
            }
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), RingError> {
        let dd = divisor.degree().ok_or(RingError::DivisionByZero)?;
        let lead = divisor.coeff(dd);
        let mut rem = self.clone();
        let mut quot = Poly::new();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = Rational::from(&rem.coeff(rd) / &lead);
            let shift = rd - dd;
            for (k, v) in divisor.terms() {
                rem.add_term(k + shift, -Rational::from(v * &c));
            }
            quot.add_term(shift, c);
        }
        Ok((quot, rem))
    }

    /// Exact quotient; fails unless the remainder vanishes.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, RingError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::NotDivisible {
                what: self.to_string(),
                by: divisor.to_string(),
            })
        }
    }

    /// Exact division by the variable.
    pub fn div_var(&self) -> Result<Poly, RingError> {
        if self.terms.contains_key(&0) {
            return Err(RingError::NotDivisible {
                what: self.to_string(),
                by: "n".into(),
            });
        }
        Ok(Poly {
            terms: self.terms.iter().map(|(&k, c)| (k - 1, c.clone())).collect(),
        })
    }

    /// Formats with the given variable name, e.g. `6+3n` or `-x^2+1/2`.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (&k, c) in &self.terms {
            let neg = c.cmp0() == std::cmp::Ordering::Less;
            let abs = Rational::from(c.abs_ref());
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let unit = abs == 1;
            if k == 0 || !unit {
                out.push_str(&rational_to_string(&abs));
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }

    /// JSON object `{"k": "num/den"}` keyed by exponent.
    pub fn to_json_map(&self) -> serde_json::Value {
        let map = self
            .terms
            .iter()
            .map(|(k, c)| (k.to_string(), serde_json::Value::String(rational_to_string(c))))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Ascending dense list of coefficient strings.
    pub fn to_json_list(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.dense()
                .iter()
                .map(|c| serde_json::Value::String(rational_to_string(c)))
                .collect(),
        )
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Poly, RingError> {
        let parse_c = |c: &serde_json::Value| match c {
            serde_json::Value::String(s) => parse_rational(s),
            serde_json::Value::Number(n) => parse_rational(&n.to_string()),
            other => Err(RingError::Parse(format!("bad coefficient {other}"))),
        };
        match v {
            serde_json::Value::Object(map) => {
                let mut p = Poly::new();
                for (k, c) in map {
                    let k: u32 = k.parse().map_err(|_| RingError::Parse(format!("bad exponent {k:?}")))?;
                    p.add_term(k, parse_c(c)?);
                }
                Ok(p)
            }
            serde_json::Value::Array(list) => {
                let coeffs = list.iter().map(parse_c).collect::<Result<Vec<_>, _>>()?;
                Ok(Poly::from_coeffs(coeffs))
            }
            other => Err(RingError::Parse(format!("bad polynomial {other}"))),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("n"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.fmt_var("v"))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, Rational::from(-c));
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::new();
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_term(i + j, Rational::from(a * b));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(&k, c)| (k, Rational::from(-c))).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                (&self).$m(rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Poly, Add, add);
forward_owned!(Poly, Sub, sub);
forward_owned!(Poly, Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::new()
    }
    fn one() -> Self {
        Poly::constant(Rational::from(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        Poly::scale(self, c)
    }
    fn from_rational(c: Rational) -> Self {
        Poly::constant(c)
    }
    fn unit_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if c.cmp0() == std::cmp::Ordering::Equal {
            None
        } else {
            Some(Poly::constant(c.recip()))
        }
    }
    fn to_json(&self) -> serde_json::Value {
        self.to_json_map()
    }
    fn from_json(v: &serde_json::Value) -> Result<Self, RingError> {
        Poly::from_json_value(v)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, Rational::from(-c));
        }
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        for (&i, u) in &a.terms {
            for (&j, v) in &b.terms {
                self.add_term(i + j, Rational::from(u * v));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn display_like_tables() {
        assert_eq!(Poly::from_ints(&[6, 3]).to_string(), "6+3n");
        assert_eq!(Poly::from_ints(&[346, 153, 24, 1]).to_string(), "346+153n+24n^2+n^3");
        assert_eq!(Poly::from_ints(&[0, -1, 0, 2]).fmt_var("x"), "-x+2x^3");
        assert_eq!(Poly::new().to_string(), "0");
    }

    #[test]
    fn division() {
        let one_minus_x2 = Poly::from_ints(&[1, 0, -1]);
        let p = &Poly::from_ints(&[2, 3]) * &one_minus_x2;
        assert_eq!(p.div_exact(&one_minus_x2).unwrap(), Poly::from_ints(&[2, 3]));
        assert!(Poly::from_ints(&[1]).div_exact(&one_minus_x2).is_err());
        assert_eq!(Poly::from_ints(&[0, 2, 5]).div_var().unwrap(), Poly::from_ints(&[2, 5]));
        assert!(Poly::from_ints(&[1, 1]).div_var().is_err());
    }

    #[test]
    fn eval_and_derivative() {
        let p = Poly::from_ints(&[1, -3, 0, 4]);
        assert_eq!(p.eval(&rat(1, 2)), rat(0, 1));
        assert_eq!(p.derivative(), Poly::from_ints(&[-3, 0, 12]));
        assert!((p.eval_f64(0.25) - (1.0 - 0.75 + 4.0 / 64.0)).abs() < 1e-15);
    }

    #[test]
    fn json_round_trip() {
        let p = Poly::from_coeffs([rat(-1, 3), rat(0, 1), rat(7, 2)]);
        assert_eq!(Poly::from_json_value(&p.to_json_map()).unwrap(), p);
        assert_eq!(Poly::from_json_value(&p.to_json_list()).unwrap(), p);
    }
}

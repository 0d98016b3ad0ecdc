//! Exact coefficient rings.
//!
//! Everything in the series pipelines is computed over one of three rings:
//! plain rationals, sparse polynomials in one variable (used both for the
//! loop marker `n` and for `x = cos θ`), and [`ThetaElem`], which represents
//! `P(x) + sin θ · Q(x)`.

mod error;
mod poly;
mod rational;
mod real;
mod theta;

pub use error::RingError;
pub use poly::{NPoly, Poly, XPoly};
pub use rational::{parse_rational, rat, rational_to_string, Rational};
pub use real::{real, real_pi, Real};
pub use theta::ThetaElem;

use std::fmt;

/// A commutative Q-algebra with exact arithmetic.
///
/// Methods take references so that generic code never has to clone
/// big-number coefficients just to combine them.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;
    /// Inverse if the element is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self, RingError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from(v))
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = self.sub_ref(rhs);
    }
    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Rational::from(self + rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Rational::from(self - rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }
    fn neg_ref(&self) -> Self {
        Rational::from(-self)
    }
    fn scale(&self, c: &Rational) -> Self {
        Rational::from(self * c)
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Rational::from(self.recip_ref()))
        }
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(rational_to_string(self))
    }
    fn from_json(v: &serde_json::Value) -> Result<Self, RingError> {
        match v {
            serde_json::Value::String(s) => parse_rational(s),
            other => Err(RingError::Parse(format!("expected rational string, got {other}"))),
        }
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += Rational::from(a * b);
    }
}

use tangle_ring::{Rational, Ring};

use crate::{BiSeries, SeriesError, TruncSeries};

/// The operations shared by univariate and bivariate series, so that
/// channel relations can be written once for both.
pub trait SeriesAlgebra<R: Ring>: Clone + Sized {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn mul_scalar(&self, c: &R) -> Self;
    fn geom(&self) -> Result<Self, SeriesError>;
    fn igeom(&self) -> Result<Self, SeriesError>;
    /// Constant series with the same variable and truncation as `self`.
    fn constant_like(&self, c: R) -> Self;
    fn try_map_coeffs<E>(&self, f: impl Fn(&R) -> Result<R, E>) -> Result<Self, E>;
}

impl<R: Ring> SeriesAlgebra<R> for TruncSeries<R> {
    fn add(&self, rhs: &Self) -> Self {
        TruncSeries::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        TruncSeries::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        TruncSeries::mul(self, rhs)
    }
    fn scale(&self, c: &Rational) -> Self {
        TruncSeries::scale(self, c)
    }
    fn mul_scalar(&self, c: &R) -> Self {
        TruncSeries::mul_scalar(self, c)
    }
    fn geom(&self) -> Result<Self, SeriesError> {
        TruncSeries::geom(self)
    }
    fn igeom(&self) -> Result<Self, SeriesError> {
        TruncSeries::igeom(self)
    }
    fn constant_like(&self, c: R) -> Self {
        TruncSeries::constant(self.var(), c, self.order())
    }
    fn try_map_coeffs<E>(&self, f: impl Fn(&R) -> Result<R, E>) -> Result<Self, E> {
        self.try_map(f)
    }
}

impl<R: Ring> SeriesAlgebra<R> for BiSeries<R> {
    fn add(&self, rhs: &Self) -> Self {
        BiSeries::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        BiSeries::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        BiSeries::mul(self, rhs)
    }
    fn scale(&self, c: &Rational) -> Self {
        BiSeries::scale(self, c)
    }
    fn mul_scalar(&self, c: &R) -> Self {
        BiSeries::mul_scalar(self, c)
    }
    fn geom(&self) -> Result<Self, SeriesError> {
        BiSeries::geom(self)
    }
    fn igeom(&self) -> Result<Self, SeriesError> {
        BiSeries::igeom(self)
    }
    fn constant_like(&self, c: R) -> Self {
        BiSeries::constant(self.weights(), self.order(), c)
    }
    fn try_map_coeffs<E>(&self, f: impl Fn(&R) -> Result<R, E>) -> Result<Self, E> {
        self.try_map(f)
    }
}

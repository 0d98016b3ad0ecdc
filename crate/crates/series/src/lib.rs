//! Truncated power series over the exact rings of `tangle-ring`.
//!
//! A [`TruncSeries`] of order `K` stores `c_0..c_K`; every operation
//! propagates the order it can actually guarantee and reading past it is
//! an error rather than a silent zero.

mod algebra;
mod bivariate;
mod error;
mod implicit;
mod raw;
mod renorm;
mod univariate;

pub use algebra::SeriesAlgebra;
pub use bivariate::BiSeries;
pub use error::SeriesError;
pub use implicit::{implicit_solve, ImplicitSystem, Unknown};
pub use renorm::{
    propagator_weight, propagator_weight_bi, rescale_four_point, rescale_four_point_bi, rescale_two_point,
    rescale_two_point_bi,
};
pub use univariate::{TruncSeries, Var};

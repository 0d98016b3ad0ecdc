//! Oriented (two-color) prime alternating tangles up to flypes.
//!
//! The bare two-color series supply `Γ_b`, `Γ_c` and the 2PI parts as
//! functions of `τ` and `θ`. Requiring the flype-class relations to hold
//! fixes `τ(g)` and `θ(g)` order by order in the renormalized coupling `g`,
//! and the tangle counts are read off on that curve.

mod census;
mod error;
mod relations;
mod solve;

pub use census::{OrientedCensus, ROW_NAMES};
pub use error::OrientedError;
pub use relations::tilde_relations_n2;
pub use solve::solve_oriented;

/// Order of the published census.
pub const DEFAULT_ORDER: usize = 13;

//! High-order bare series of the two-color (six-vertex) model on random
//! lattices.
//!
//! The planar limit is solved exactly at rational points `t = tan(θ/4)`
//! and the `τ = q²` coefficients, polynomials in `cos θ`, are recovered by
//! interpolation. The extraction chain `G → F → H → b → Γ_b, Γ_c` and the
//! 2PI parts `D'_b`, `D'_c` are then computed over `ℚ[cos θ, sin θ]`.

mod bundle;
mod error;
mod interp;
mod point;
mod relations;

pub use bundle::{
    anchors, bare_bundle_n2, bare_bundle_n2_cached, cache_path, literal_anchors, ratio_estimate, Anchor,
    BareSeriesBundle, SERIES_NAMES,
};
pub use error::SixVertexError;
pub use relations::dprimes_n2;

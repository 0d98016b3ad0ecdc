//! Growth-rate estimates for tangle counts.

mod error;
mod fit;
mod links;
mod reference;

pub use error::AsymptoticsError;
pub use fit::{growth_fit, GrowthEstimate, MIN_TERMS};
pub use links::{link_count_estimate, LinkEstimate};
pub use reference::{reference_constants, ReferenceConstant, CRITICAL_RATE};

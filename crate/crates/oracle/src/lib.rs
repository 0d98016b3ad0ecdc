//! Brute-force enumeration of planar diagrams of the two-coupling O(n)
//! matrix model.
//!
//! Diagrams are generated as rotation systems, weighted by `n` per closed
//! color loop, and classified by two-propagator cuts. The resulting series
//! are an independent check on the analytic pipelines at low order.

mod bundle;
mod channel;
mod diagram;
mod enumerate;
mod error;
mod observable;

pub use bundle::{oracle_bundle, oracle_bundle_with, OracleBundle};
pub use channel::{channel_classify, Channels};
pub use diagram::{LegPairing, RibbonDiagram, VertexKind};
pub use enumerate::{enumerate, enumerate_restricted, Normalization, Root, Tally, HARD_CAP};
pub use error::OracleError;
pub use observable::{
    bare_four_point, bare_two_point, bare_two_point_crossings, bare_vacuum, enumerate_coefficient,
    enumerate_coefficient_with, BareFourPoint, FourPointKey, FourPointTally, LoopTally, OracleObservable,
    DEFAULT_ORDER,
};

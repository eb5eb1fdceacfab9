//! Boundary slopes of 2-bridge knots from minimal Farey paths, the
//! classification of knots with at most four slopes, ORS epimorphism pairs,
//! and the computable obstructions to one knot group surjecting onto another.

pub mod alexander;
pub mod census;
pub mod cf;
pub mod error;
pub mod family;
pub mod genus;
pub mod knot;
pub mod laurent;
pub mod order;
pub mod ors;
pub mod paths;
pub mod rational;
pub mod report;

pub use cf::{cf_strongly_positive, euclid_expansion, ContinuedFraction, Mat2, StronglyPositive};
pub use error::{Error, Result};
pub use knot::{knots_equivalent, TwoBridgeKnot};
pub use paths::{
    boundary_slopes, enumerate_minimal_expansions, even_expansion, extremal_paths, knot_slopes,
    slope_count_bounds, MinimalPath, SlopeMultiset,
};
pub use rational::{farey_edge_det, mediant, Rational};

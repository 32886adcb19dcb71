//! Tolerance constants shared across the toolkit.
//!
//! Geometric predicates work at `CROSS_EPS`, metric comparisons at
//! `METRIC_EPS`. Constructions land within ~1e-12 of their closed forms and
//! optimizer output within ~1e-7, so `EQUALITY_REL` separates exact
//! constructions from near-optimal numerics.

/// Absolute tolerance on cross products in convexity predicates.
pub const CROSS_EPS: f64 = 1e-12;

/// Minimum distance between consecutive polygon vertices.
pub const COINCIDENT_EPS: f64 = 1e-12;

/// Absolute tolerance for metric comparisons (width, diameter, perimeter).
pub const METRIC_EPS: f64 = 1e-9;

/// Relative tolerance for flagging equality against a closed-form bound.
pub const EQUALITY_REL: f64 = 1e-9;

/// Feasibility tolerance for optimizer output.
pub const FEASIBILITY_EPS: f64 = 1e-7;

/// Sampled constant-width check tolerance for Reuleaux bodies.
pub const CONSTANT_WIDTH_EPS: f64 = 1e-7;

/// Default numeric tolerance for signature closure tests.
pub const CLOSURE_EPS: f64 = 1e-9;

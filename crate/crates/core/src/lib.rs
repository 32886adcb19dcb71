//! Extremal convex polygon toolkit.
//!
//! Four pieces fit together here:
//!
//! - [`geometry`]: a planar convex polygon kernel — area, perimeter, width and
//!   diameter, convexity predicates, central symmetrization, diameter graphs.
//! - [`bounds`]: the closed-form inequality catalog relating those four
//!   quantities for `n`-gons, plus verification of concrete polygons against it.
//! - [`reinhardt`]: clipped Reuleaux (Reinhardt) polygons — the equality cases
//!   of the perimeter–diameter and width–diameter bounds — with a combinatorial
//!   signature model, exact and numeric validity tests, construction, and
//!   exhaustive enumeration.
//! - [`optimizer`]: multistart numerical search for extremal `n`-gons in the
//!   cases no closed form settles, plus explicit reference constructions.

pub mod bounds;
pub mod geometry;
pub mod optimizer;
pub mod reinhardt;
pub mod tol;

pub use geometry::{ConvexPolygon, DiameterGraph, Metrics, Point};

//! Closed-form extremal bounds for convex `n`-gons and verification of
//! polygons against them.
//!
//! The catalog relates the four basic measurements — area `a`, perimeter `p`,
//! width `w`, diameter `d` — pairwise:
//!
//! * `p² ≥ 4 n a tan(π/n)` (Zenodorus; regular polygons attain it),
//! * `p ≤ 2 n sin(π/2n) d` (Reinhardt; tight iff `n` has an odd factor),
//! * `a ≤ (n/2) cos(π/n) tan(π/2n) d²` (tight only for odd `n`, regular),
//! * `p ≥ 2 n tan(π/2n) w` (Gashkov),
//! * `w ≤ cos(π/2n) d` (tight iff `n` has an odd factor),
//! * `a ≥ w²/√3` (Pál; the equilateral triangle),
//! * the same area–diameter form restricted to equilateral polygons.
//!
//! Attainability is decided from `n` alone (parity and the power-of-two
//! test); the constructions that witness it live in [`crate::reinhardt`].

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{central_symmetrize, ConvexPolygon};
use crate::tol;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("side count must be at least 3, got {0}")]
    SideCount(usize),
    #[error("{0} must be positive, got {1}")]
    NonPositive(&'static str, f64),
}

/// The seven cataloged inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum InequalityId {
    ZenodorusIsoperimetric,
    ReinhardtPerimeterDiameter,
    ReinhardtAreaDiameter,
    GashkovPerimeterWidth,
    GashkovWidthDiameter,
    PalAreaWidth,
    EquilateralAreaDiameter,
}

impl InequalityId {
    pub const ALL: [InequalityId; 7] = [
        InequalityId::ZenodorusIsoperimetric,
        InequalityId::ReinhardtPerimeterDiameter,
        InequalityId::ReinhardtAreaDiameter,
        InequalityId::GashkovPerimeterWidth,
        InequalityId::GashkovWidthDiameter,
        InequalityId::PalAreaWidth,
        InequalityId::EquilateralAreaDiameter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InequalityId::ZenodorusIsoperimetric => "ZenodorusIsoperimetric",
            InequalityId::ReinhardtPerimeterDiameter => "ReinhardtPerimeterDiameter",
            InequalityId::ReinhardtAreaDiameter => "ReinhardtAreaDiameter",
            InequalityId::GashkovPerimeterWidth => "GashkovPerimeterWidth",
            InequalityId::GashkovWidthDiameter => "GashkovWidthDiameter",
            InequalityId::PalAreaWidth => "PalAreaWidth",
            InequalityId::EquilateralAreaDiameter => "EquilateralAreaDiameter",
        }
    }
}

impl std::fmt::Display for InequalityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether the bound `id` is attained by some convex `n`-gon.
///
/// Decided by arithmetic on `n`: the diameter-type bounds are tight exactly
/// when `n` has an odd factor (equivalently, is not a power of two), the
/// area–diameter bounds only for odd `n`, and Pál's width–area bound only by
/// the triangle. The isoperimetric bound is attained by every regular
/// polygon.
pub fn attainable(id: InequalityId, n: usize) -> bool {
    match id {
        InequalityId::ZenodorusIsoperimetric => true,
        InequalityId::ReinhardtPerimeterDiameter
        | InequalityId::GashkovPerimeterWidth
        | InequalityId::GashkovWidthDiameter => !n.is_power_of_two(),
        InequalityId::ReinhardtAreaDiameter | InequalityId::EquilateralAreaDiameter => n % 2 == 1,
        InequalityId::PalAreaWidth => n == 3,
    }
}

fn check_n(n: usize) -> Result<f64, BoundsError> {
    if n < 3 {
        return Err(BoundsError::SideCount(n));
    }
    Ok(n as f64)
}

fn check_positive(name: &'static str, v: f64) -> Result<f64, BoundsError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(BoundsError::NonPositive(name, v))
    }
}

/// Largest area an `n`-gon of perimeter `p` can have: `p² / (4 n tan(π/n))`.
pub fn max_area_given_perimeter(n: usize, p: f64) -> Result<f64, BoundsError> {
    let nf = check_n(n)?;
    let p = check_positive("perimeter", p)?;
    Ok(p * p / (4.0 * nf * (PI / nf).tan()))
}

/// Largest perimeter an `n`-gon of diameter `d` can have: `2 n sin(π/2n) d`.
pub fn max_perimeter_given_diameter(n: usize, d: f64) -> Result<f64, BoundsError> {
    let nf = check_n(n)?;
    let d = check_positive("diameter", d)?;
    Ok(2.0 * nf * (PI / (2.0 * nf)).sin() * d)
}

/// Largest area an `n`-gon of diameter `d` can have:
/// `(n/2) cos(π/n) tan(π/2n) d²`.
pub fn max_area_given_diameter(n: usize, d: f64) -> Result<f64, BoundsError> {
    let nf = check_n(n)?;
    let d = check_positive("diameter", d)?;
    Ok(nf / 2.0 * (PI / nf).cos() * (PI / (2.0 * nf)).tan() * d * d)
}

/// Smallest perimeter an `n`-gon of width `w` can have: `2 n tan(π/2n) w`.
pub fn min_perimeter_given_width(n: usize, w: f64) -> Result<f64, BoundsError> {
    let nf = check_n(n)?;
    let w = check_positive("width", w)?;
    Ok(2.0 * nf * (PI / (2.0 * nf)).tan() * w)
}

/// Largest width an `n`-gon of diameter `d` can have: `cos(π/2n) d`.
pub fn max_width_given_diameter(n: usize, d: f64) -> Result<f64, BoundsError> {
    let nf = check_n(n)?;
    let d = check_positive("diameter", d)?;
    Ok((PI / (2.0 * nf)).cos() * d)
}

/// Smallest area any convex disk of width `w` can have: `w²/√3`, the area of
/// the equilateral triangle of that width. Valid for every convex polygon
/// regardless of side count.
pub fn min_area_given_width(w: f64) -> Result<f64, BoundsError> {
    let w = check_positive("width", w)?;
    Ok(w * w / 3f64.sqrt())
}

/// Area–diameter bound in the equilateral class: the same closed form
/// `(n/2) cos(π/n) tan(π/2n) d²` as [`max_area_given_diameter`], attained by
/// the regular `n`-gon exactly when `n` is odd. (For even `n` the regular
/// polygon falls short of this value; see
/// [`crate::optimizer::equilateral_max_area_reference`] for the tight
/// even-`n` reference.)
pub fn equilateral_max_area_given_diameter(n: usize, d: f64) -> Result<f64, BoundsError> {
    max_area_given_diameter(n, d)
}

/// One row of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsEntry {
    pub inequality: InequalityId,
    pub bound: f64,
    pub observed: f64,
    /// Oriented so that a valid convex polygon always has `slack >= -1e-9`:
    /// `bound - observed` for upper bounds, `observed - bound` for lower
    /// bounds.
    pub slack: f64,
    /// True when `|slack|` is within `1e-9` of the bound, relatively.
    pub equality: bool,
    pub attainable: bool,
}

/// Evaluation of the whole catalog against one polygon.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub polygon_id: String,
    pub entries: Vec<BoundsEntry>,
}

impl BoundsReport {
    /// Ids of the rows flagged as equalities.
    pub fn equalities(&self) -> Vec<InequalityId> {
        self.entries
            .iter()
            .filter(|e| e.equality)
            .map(|e| e.inequality)
            .collect()
    }

    /// Smallest slack over all rows; negative beyond tolerance means a
    /// geometry bug rather than unusual input.
    pub fn min_slack(&self) -> f64 {
        self.entries.iter().map(|e| e.slack).fold(f64::INFINITY, f64::min)
    }
}

/// Evaluates every cataloged inequality against `p`, with `n` taken as its
/// side count. Deterministic: rows come out in the order of
/// [`InequalityId::ALL`].
pub fn verify(p: &ConvexPolygon, polygon_id: impl Into<String>) -> BoundsReport {
    let n = p.side_count();
    let m = p.metrics();
    let entries = InequalityId::ALL
        .iter()
        .map(|&id| {
            // Formulas only fail on n < 3 or non-positive measurements,
            // neither of which a constructed ConvexPolygon can produce.
            let (bound, observed, upper) = match id {
                InequalityId::ZenodorusIsoperimetric => (
                    max_area_given_perimeter(n, m.perimeter).unwrap(),
                    m.area,
                    true,
                ),
                InequalityId::ReinhardtPerimeterDiameter => (
                    max_perimeter_given_diameter(n, m.diameter).unwrap(),
                    m.perimeter,
                    true,
                ),
                InequalityId::ReinhardtAreaDiameter => {
                    (max_area_given_diameter(n, m.diameter).unwrap(), m.area, true)
                }
                InequalityId::GashkovPerimeterWidth => (
                    min_perimeter_given_width(n, m.width).unwrap(),
                    m.perimeter,
                    false,
                ),
                InequalityId::GashkovWidthDiameter => {
                    (max_width_given_diameter(n, m.diameter).unwrap(), m.width, true)
                }
                InequalityId::PalAreaWidth => {
                    (min_area_given_width(m.width).unwrap(), m.area, false)
                }
                InequalityId::EquilateralAreaDiameter => (
                    equilateral_max_area_given_diameter(n, m.diameter).unwrap(),
                    m.area,
                    true,
                ),
            };
            let slack = if upper {
                bound - observed
            } else {
                observed - bound
            };
            BoundsEntry {
                inequality: id,
                bound,
                observed,
                slack,
                equality: slack.abs() <= tol::EQUALITY_REL * bound.abs(),
                attainable: attainable(id, n),
            }
        })
        .collect();
    BoundsReport {
        polygon_id: polygon_id.into(),
        entries,
    }
}

/// The perimeter of the central symmetrization, sandwiched between its
/// diameter-type upper bound and width-type lower bound.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ChainCheck {
    /// `2 m sin(π/2m) · d(P)` where `m` is the symmetrization's side count.
    pub upper: f64,
    /// Perimeter of the symmetrization (equals the perimeter of `P`).
    pub perimeter: f64,
    /// `m tan(π/m) · w(P)`.
    pub lower: f64,
    pub holds: bool,
}

/// Checks `2m sin(π/2m) d ≥ p(P*) ≥ m tan(π/m) w` on the central
/// symmetrization `P*` of `p`, with `m = sides(P*)` and `d`, `w` taken from
/// `p` itself (symmetrization preserves both).
pub fn symmetrization_chain_check(p: &ConvexPolygon) -> ChainCheck {
    let m = p.metrics();
    let star = central_symmetrize(p);
    let k = star.side_count() as f64;
    let perimeter = star.metrics().perimeter;
    let upper = 2.0 * k * (PI / (2.0 * k)).sin() * m.diameter;
    let lower = k * (PI / k).tan() * m.width;
    ChainCheck {
        upper,
        perimeter,
        lower,
        holds: upper >= perimeter - tol::METRIC_EPS && perimeter >= lower - tol::METRIC_EPS,
    }
}

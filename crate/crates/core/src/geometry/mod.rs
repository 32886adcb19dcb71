//! Planar convex polygon kernel.
//!
//! The polygon model is *weakly* convex: collinear vertex triples are
//! permitted (straight interior angles), which some extremal equilateral
//! polygons require. Strict convexity is a separate predicate. Vertex order is
//! normalized on construction — counterclockwise, starting from the
//! lexicographically smallest vertex — so polygon equality is canonical.

mod hull;
mod symmetrize;

pub(crate) use hull::strict_hull;
pub use symmetrize::{central_symmetrize, symmetric_radii};

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

use crate::tol;

/// A point in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, treating both points as vectors.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn scale(self, factor: f64) -> Point {
        Point::new(self.x * factor, self.y * factor)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Twice the signed area of triangle `abc`. Positive for counterclockwise.
pub(crate) fn area2(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// The four derived measurements of a convex polygon.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    /// Enclosed area.
    pub area: f64,
    /// Sum of edge lengths.
    pub perimeter: f64,
    /// Minimum distance between two parallel supporting lines.
    pub width: f64,
    /// Maximum distance between two vertices.
    pub diameter: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} has non-finite coordinates")]
    NonFinite(usize),
    #[error("vertices {0} and {1} coincide (distance <= 1e-12)")]
    CoincidentVertices(usize, usize),
    #[error("vertex sequence is not convex{}", .0.map(|i| format!(" (first violation at vertex {i})")).unwrap_or_default())]
    NotConvex(Option<usize>),
    #[error("polygon is degenerate (zero area)")]
    Degenerate,
    #[error("polygon is not centrally symmetric about the origin")]
    NotCentrallySymmetric,
}

/// Outcome of the convexity predicate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvexityCheck {
    pub convex: bool,
    /// Index of the first vertex with a reflex turn, when one exists.
    pub violation: Option<usize>,
}

/// Tests whether `points`, in the given order, trace a weakly convex
/// counterclockwise cycle: every cross product of consecutive edge pairs is
/// `>= -1e-12` and the total turning is `2π` (which rules out star polygons
/// and multiply-wound cycles).
pub fn is_convex(points: &[Point]) -> ConvexityCheck {
    let n = points.len();
    if n < 3 {
        return ConvexityCheck {
            convex: false,
            violation: None,
        };
    }
    for (i, p) in points.iter().enumerate() {
        let q = points[(i + 1) % n];
        if !p.is_finite() || p.distance(q) <= tol::COINCIDENT_EPS {
            return ConvexityCheck {
                convex: false,
                violation: Some(i),
            };
        }
    }
    let mut turning = 0.0;
    for i in 0..n {
        let prev = points[(i + n - 1) % n];
        let here = points[i];
        let next = points[(i + 1) % n];
        let e0 = here - prev;
        let e1 = next - here;
        let cross = e0.cross(e1);
        if cross < -tol::CROSS_EPS {
            return ConvexityCheck {
                convex: false,
                violation: Some(i),
            };
        }
        turning += cross.atan2(e0.dot(e1));
    }
    // Weakly convex cycles turn by exactly 2π; 4π or more means the cycle
    // winds multiple times even though every turn is non-negative.
    let convex = (turning - std::f64::consts::TAU).abs() < 1e-6;
    ConvexityCheck {
        convex,
        violation: None,
    }
}

/// A convex polygon with canonical vertex order.
///
/// Construction validates the invariants (at least three vertices, no
/// coincident consecutive vertices, weak convexity, positive area) and
/// normalizes the order to counterclockwise starting from the
/// lexicographically smallest vertex. A clockwise input is accepted and
/// reversed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn new(mut vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite(i));
        }
        let n = vertices.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i].distance(vertices[j]) <= tol::COINCIDENT_EPS {
                return Err(GeometryError::CoincidentVertices(i, j));
            }
        }
        if hull::strict_hull(&vertices).len() < 3 {
            return Err(GeometryError::Degenerate);
        }
        let check = is_convex(&vertices);
        if !check.convex {
            vertices.reverse();
            let reversed = is_convex(&vertices);
            if !reversed.convex {
                vertices.reverse();
                return Err(GeometryError::NotConvex(check.violation));
            }
        }
        let start = lexicographic_min_index(&vertices);
        vertices.rotate_left(start);
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Number of sides (equals the number of vertices; collinear vertices
    /// count as sides of their own).
    pub fn side_count(&self) -> usize {
        self.vertices.len()
    }

    /// Area, perimeter, width, and diameter.
    ///
    /// Area by the shoelace formula, perimeter as the edge-length sum, width
    /// and diameter by rotating calipers over the strictly convex hull.
    pub fn metrics(&self) -> Metrics {
        let n = self.vertices.len();
        let mut area2_sum = 0.0;
        let mut perimeter = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            area2_sum += a.cross(b);
            perimeter += a.distance(b);
        }
        let hull = hull::strict_hull(&self.vertices);
        Metrics {
            area: area2_sum / 2.0,
            perimeter,
            width: hull::width(&hull),
            diameter: hull::diameter(&hull),
        }
    }

    /// Edge lengths in vertex order.
    pub fn side_lengths(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[i].distance(self.vertices[(i + 1) % n]))
            .collect()
    }

    /// Uniformly scales about the origin. `factor` must be positive.
    pub fn scaled(&self, factor: f64) -> ConvexPolygon {
        assert!(factor > 0.0, "scale factor must be positive");
        ConvexPolygon::new(self.vertices.iter().map(|p| p.scale(factor)).collect())
            .expect("scaling preserves polygon validity")
    }

    /// Translates every vertex by `offset`.
    pub fn translated(&self, offset: Point) -> ConvexPolygon {
        ConvexPolygon::new(self.vertices.iter().map(|&p| p + offset).collect())
            .expect("translation preserves polygon validity")
    }

    /// Vertex centroid (not the area centroid).
    pub fn vertex_centroid(&self) -> Point {
        let mut sum = Point::new(0.0, 0.0);
        for &v in &self.vertices {
            sum = sum + v;
        }
        sum.scale(1.0 / self.vertices.len() as f64)
    }

    /// Graph on vertex indices joining the pairs that realize the diameter.
    ///
    /// Edges are all pairs at distance `>= (1 - tol) * diameter`.
    ///
    /// # Panics
    ///
    /// Panics unless `0 <= tol <= 1e-3`.
    pub fn diameter_graph(&self, tol: f64) -> DiameterGraph {
        assert!(
            (0.0..=1e-3).contains(&tol),
            "diameter graph tolerance must lie in [0, 1e-3]"
        );
        let d = self.metrics().diameter;
        let cutoff = (1.0 - tol) * d;
        let n = self.vertices.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.vertices[i].distance(self.vertices[j]) >= cutoff {
                    edges.push((i, j));
                }
            }
        }
        DiameterGraph {
            n,
            edges,
            tolerance: tol,
        }
    }
}

/// Pairs of vertex indices realizing the diameter, up to a tolerance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiameterGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub tolerance: f64,
}

impl DiameterGraph {
    /// Number of graph edges incident to vertex `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }
}

fn lexicographic_min_index(points: &[Point]) -> usize {
    let mut best = 0;
    for i in 1..points.len() {
        let (a, b) = (points[i], points[best]);
        if a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)).is_lt() {
            best = i;
        }
    }
    best
}

/// Total order on vertex lists, for deterministic tie-breaking.
pub fn canonical_cmp(a: &ConvexPolygon, b: &ConvexPolygon) -> std::cmp::Ordering {
    let (va, vb) = (a.vertices(), b.vertices());
    va.len().cmp(&vb.len()).then_with(|| {
        for (p, q) in va.iter().zip(vb) {
            let ord = p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y));
            if ord.is_ne() {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn triangle() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 3f64.sqrt() / 2.0),
        ])
        .unwrap()
    }

    #[test]
    fn unit_square_metrics() {
        let m = square().metrics();
        assert!((m.area - 1.0).abs() < 1e-12);
        assert!((m.perimeter - 4.0).abs() < 1e-12);
        assert!((m.width - 1.0).abs() < 1e-12);
        assert!((m.diameter - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn equilateral_triangle_metrics() {
        let m = triangle().metrics();
        assert!((m.area - 3f64.sqrt() / 4.0).abs() < 1e-12);
        assert!((m.perimeter - 3.0).abs() < 1e-12);
        assert!((m.width - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((m.diameter - 1.0).abs() < 1e-12);
    }

    #[test]
    fn regular_hexagon_metrics() {
        // Circumradius 1/2, so the diameter is 1 and the area 3√3/8.
        let r = 0.5;
        let verts: Vec<Point> = (0..6)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / 6.0;
                Point::new(r * t.cos(), r * t.sin())
            })
            .collect();
        let m = ConvexPolygon::new(verts).unwrap().metrics();
        assert!((m.area - 3.0 * 3f64.sqrt() / 8.0).abs() < 1e-12);
        assert!((m.diameter - 1.0).abs() < 1e-12);
    }

    #[test]
    fn convexity_accepts_ccw_square() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        assert!(is_convex(&pts).convex);
    }

    #[test]
    fn convexity_rejects_swapped_square() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ];
        let check = is_convex(&pts);
        assert!(!check.convex);
        assert!(check.violation.is_some());
    }

    #[test]
    fn convexity_admits_collinear_subdivision() {
        // Trapezoid with an extra vertex in the middle of its base.
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.5, 1.0),
            Point::new(0.5, 1.0),
        ];
        assert!(is_convex(&pts).convex);
        assert!(ConvexPolygon::new(pts).is_ok());
    }

    #[test]
    fn clockwise_input_is_normalized() {
        let cw = ConvexPolygon::new(vec![
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 0.0),
        ])
        .unwrap();
        assert_eq!(cw, square());
        assert_eq!(cw.vertices()[0], Point::new(0.0, 0.0));
    }

    #[test]
    fn rejects_degenerate_input() {
        assert_eq!(
            ConvexPolygon::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]),
            Err(GeometryError::TooFewVertices(2))
        );
        let collinear = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
        ];
        assert_eq!(
            ConvexPolygon::new(collinear),
            Err(GeometryError::Degenerate)
        );
        let coincident = vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
        ];
        assert!(matches!(
            ConvexPolygon::new(coincident),
            Err(GeometryError::CoincidentVertices(0, 1))
        ));
    }

    #[test]
    fn square_diameter_graph_is_both_diagonals() {
        let g = square().diameter_graph(1e-9);
        assert_eq!(g.edges, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn triangle_diameter_graph_is_complete() {
        let g = triangle().diameter_graph(1e-9);
        assert_eq!(g.edges.len(), 3);
    }

    #[test]
    fn star_order_is_rejected() {
        // Pentagram: every turn has positive cross product but total turning
        // is 4π, so it must not pass as convex.
        let star: Vec<Point> = (0..5)
            .map(|k| {
                let t = std::f64::consts::TAU * (2 * k) as f64 / 5.0;
                Point::new(t.cos(), t.sin())
            })
            .collect();
        assert!(!is_convex(&star).convex);
    }
}

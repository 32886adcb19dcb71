//! Strictly convex hull and rotating-calipers measurements.
//!
//! Width and diameter are defined on the hull: collinear vertices contribute
//! nothing to either, and the calipers arguments need strict turns. The hull
//! here is Andrew's monotone chain with collinear points dropped.

use super::{area2, Point};
use crate::tol;

/// Convex hull with strictly convex corners, counterclockwise, starting from
/// the lexicographically smallest point. Collinear and duplicate points are
/// dropped. Degenerate inputs (all points collinear) yield fewer than three
/// points.
pub(crate) fn strict_hull(points: &[Point]) -> Vec<Point> {
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    sorted.dedup_by(|a, b| a.distance(*b) <= tol::COINCIDENT_EPS);
    if sorted.len() < 3 {
        return sorted;
    }
    let mut lower: Vec<Point> = Vec::with_capacity(sorted.len());
    for &p in &sorted {
        while lower.len() >= 2
            && area2(lower[lower.len() - 2], lower[lower.len() - 1], p) <= tol::CROSS_EPS
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::with_capacity(sorted.len());
    for &p in sorted.iter().rev() {
        while upper.len() >= 2
            && area2(upper[upper.len() - 2], upper[upper.len() - 1], p) <= tol::CROSS_EPS
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Maximum vertex-to-vertex distance of a strictly convex hull, by rotating
/// calipers: for each edge, the opposite chain is scanned monotonically for
/// the farthest vertex, and both edge endpoints are tested against it.
/// Parallel opposite edges tie in triangle area, so the next vertex is also
/// tested whenever the areas agree.
pub(crate) fn diameter(hull: &[Point]) -> f64 {
    let k = hull.len();
    if k < 2 {
        return 0.0;
    }
    if k == 2 {
        return hull[0].distance(hull[1]);
    }
    let mut best: f64 = 0.0;
    let mut j = 1;
    let mut advances = 0usize;
    for i in 0..k {
        let a = hull[i];
        let b = hull[(i + 1) % k];
        loop {
            let jn = (j + 1) % k;
            if area2(a, b, hull[jn]) > area2(a, b, hull[j]) && advances < 2 * k {
                j = jn;
                advances += 1;
            } else {
                break;
            }
        }
        best = best.max(a.distance(hull[j])).max(b.distance(hull[j]));
        let jn = (j + 1) % k;
        let here = area2(a, b, hull[j]);
        let next = area2(a, b, hull[jn]);
        if (next - here).abs() <= 1e-12 * here.abs().max(1.0) {
            best = best.max(a.distance(hull[jn])).max(b.distance(hull[jn]));
        }
    }
    best
}

/// Minimum distance between parallel supporting lines of a strictly convex
/// hull. The minimizing direction is always normal to an edge, so it suffices
/// to scan edges, tracking the farthest vertex with the same monotone pointer
/// as the diameter scan.
pub(crate) fn width(hull: &[Point]) -> f64 {
    let k = hull.len();
    if k < 3 {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    let mut j = 1;
    let mut advances = 0usize;
    for i in 0..k {
        let a = hull[i];
        let b = hull[(i + 1) % k];
        loop {
            let jn = (j + 1) % k;
            if area2(a, b, hull[jn]) > area2(a, b, hull[j]) && advances < 2 * k {
                j = jn;
                advances += 1;
            } else {
                break;
            }
        }
        best = best.min(area2(a, b, hull[j]) / a.distance(b));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
            Point::new(1.0, 1.0), // interior
            Point::new(1.0, 0.0), // edge midpoint
        ];
        let h = strict_hull(&pts);
        assert_eq!(h.len(), 4);
        assert_eq!(h[0], Point::new(0.0, 0.0));
    }

    #[test]
    fn collinear_input_degenerates() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
        ];
        assert!(strict_hull(&pts).len() < 3);
    }

    #[test]
    fn square_width_and_diameter() {
        let h = strict_hull(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ]);
        assert!((width(&h) - 1.0).abs() < 1e-12);
        assert!((diameter(&h) - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn thin_triangle_width_is_its_height() {
        let h = strict_hull(&[
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            Point::new(5.0, 0.1),
        ]);
        assert!((width(&h) - 0.1).abs() < 1e-12);
        assert!((diameter(&h) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn regular_polygon_width_and_diameter_match_closed_forms() {
        use std::f64::consts::PI;
        // Odd n: diameter spans vertex to vertex across, width vertex to
        // opposite edge. Even n: diameter is twice the circumradius, width
        // twice the inradius.
        for &(n, r) in &[(5usize, 1.0f64), (7, 0.6), (8, 1.3), (12, 1.0)] {
            let pts: Vec<Point> = (0..n)
                .map(|k| {
                    let t = std::f64::consts::TAU * k as f64 / n as f64;
                    Point::new(r * t.cos(), r * t.sin())
                })
                .collect();
            let h = strict_hull(&pts);
            let (want_d, want_w) = if n % 2 == 1 {
                let d = 2.0 * r * (PI / (2.0 * n as f64)).cos();
                let w = r * (1.0 + (PI / n as f64).cos());
                (d, w)
            } else {
                (2.0 * r, 2.0 * r * (PI / n as f64).cos())
            };
            assert!((diameter(&h) - want_d).abs() < 1e-12, "diameter for n={n}");
            assert!((width(&h) - want_w).abs() < 1e-12, "width for n={n}");
        }
    }
}

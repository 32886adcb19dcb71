//! Central symmetrization and the radii of centrally symmetric polygons.

use super::{ConvexPolygon, GeometryError, Point};
use crate::tol;

/// Central symmetrization: the Minkowski average `(P + (-P)) / 2`.
///
/// The result is centrally symmetric about its vertex centroid (translated
/// here to the origin) and preserves width, perimeter, and diameter.
///
/// The Minkowski sum of convex polygons is the angle-ordered walk of the
/// union of their edge vectors, so the sum is formed by merging the edge
/// vectors of `P/2` with their negations and combining parallel ones. The
/// combining step matters: a polygon that already has opposite parallel
/// edges (any centrally symmetric polygon, for instance) would otherwise
/// come back with spurious zero-turn vertices inflating its side count.
pub fn central_symmetrize(p: &ConvexPolygon) -> ConvexPolygon {
    let verts = p.vertices();
    let n = verts.len();
    let mut dirs: Vec<Point> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let e = (verts[(i + 1) % n] - verts[i]).scale(0.5);
        dirs.push(e);
        dirs.push(-e);
    }
    dirs.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));

    // Combine parallel same-direction runs. The list is angle-sorted, so
    // equal directions are adjacent, except that fp noise can split a run
    // straddling the ±π wrap; that case is patched up after the sweep.
    let mut merged: Vec<Point> = Vec::with_capacity(2 * n);
    for &d in &dirs {
        match merged.last_mut() {
            Some(last) if same_direction(*last, d) => *last = *last + d,
            _ => merged.push(d),
        }
    }
    if merged.len() > 1 {
        let first = merged[0];
        let last = *merged.last().unwrap();
        if same_direction(first, last) {
            merged[0] = first + last;
            merged.pop();
        }
    }

    let mut vertices = Vec::with_capacity(merged.len());
    let mut q = Point::new(0.0, 0.0);
    for &d in &merged {
        vertices.push(q);
        q = q + d;
    }
    let sum = vertices
        .iter()
        .fold(Point::new(0.0, 0.0), |acc, &v| acc + v);
    let center = sum.scale(1.0 / vertices.len() as f64);
    let centered = vertices.into_iter().map(|v| v - center).collect();
    ConvexPolygon::new(centered).expect("symmetrization of a valid polygon is a valid polygon")
}

fn same_direction(u: Point, v: Point) -> bool {
    u.cross(v).abs() <= 1e-12 * u.norm() * v.norm() && u.dot(v) > 0.0
}

/// Inradius and circumradius (in that order) of a polygon that is centrally
/// symmetric about the origin. For such a polygon these are half the width
/// and half the diameter.
///
/// Fails if some vertex has no partner within `1e-9` of its reflection
/// through the origin.
pub fn symmetric_radii(p: &ConvexPolygon) -> Result<(f64, f64), GeometryError> {
    let verts = p.vertices();
    for &v in verts {
        let mirrored = verts
            .iter()
            .any(|&u| (u + v).norm() <= tol::METRIC_EPS);
        if !mirrored {
            return Err(GeometryError::NotCentrallySymmetric);
        }
    }
    let n = verts.len();
    let mut inradius = f64::INFINITY;
    let mut circumradius: f64 = 0.0;
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        inradius = inradius.min(super::area2(a, b, Point::new(0.0, 0.0)).abs() / a.distance(b));
        circumradius = circumradius.max(a.norm());
    }
    Ok((inradius, circumradius))
}

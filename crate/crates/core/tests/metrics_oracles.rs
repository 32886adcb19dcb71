//! Cross-checks the polygon metrics against brute-force oracles and the
//! usual transformation laws.
//!
//! The library computes diameter and width with rotating calipers over the
//! strict hull; the oracles here take the slow road instead — all vertex
//! pairs for the diameter, all pair-perpendicular directions for the width —
//! so a calipers bug cannot hide behind itself.

use proptest::prelude::*;

use ngon_core::optimizer::{random_convex_polygon, Rng};
use ngon_core::{ConvexPolygon, Point};

/// Largest pairwise vertex distance, no cleverness.
fn brute_diameter(p: &ConvexPolygon) -> f64 {
    let vs = p.vertices();
    let mut best = 0.0f64;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            best = best.max(vs[i].distance(vs[j]));
        }
    }
    best
}

/// Extent of the vertex set along a unit direction.
fn extent(vs: &[Point], ux: f64, uy: f64) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in vs {
        let t = v.x * ux + v.y * uy;
        lo = lo.min(t);
        hi = hi.max(t);
    }
    hi - lo
}

/// Minimum extent over every direction perpendicular to a vertex pair.
///
/// The minimizing direction of the true width is perpendicular to an edge,
/// and edges are among the vertex pairs, so this sweep finds the width; the
/// extra non-edge directions can only produce larger extents.
fn brute_width(p: &ConvexPolygon) -> f64 {
    let vs = p.vertices();
    let mut best = f64::INFINITY;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let d = vs[j] - vs[i];
            let len = d.norm();
            if len < 1e-12 {
                continue;
            }
            best = best.min(extent(vs, -d.y / len, d.x / len));
        }
    }
    best
}

fn corpus(count: usize, max_n: usize, seed: u64) -> Vec<ConvexPolygon> {
    let root = Rng::seed_from(seed);
    (0..count)
        .map(|i| {
            let mut rng = root.substream(i as u64);
            let n = 3 + (rng.next_u64() as usize) % (max_n - 2);
            random_convex_polygon(n, &mut rng)
        })
        .collect()
}

#[test]
fn calipers_match_brute_force_on_ten_thousand_polygons() {
    for p in corpus(10_000, 12, 0xD1A3) {
        let m = p.metrics();
        let d = brute_diameter(&p);
        let w = brute_width(&p);
        assert!(
            (m.diameter - d).abs() <= 1e-10,
            "diameter {} vs brute {} on {:?}",
            m.diameter,
            d,
            p.vertices()
        );
        assert!(
            (m.width - w).abs() <= 1e-10,
            "width {} vs brute {} on {:?}",
            m.width,
            w,
            p.vertices()
        );
    }
}

#[test]
fn width_never_exceeds_diameter() {
    for p in corpus(2_000, 20, 0x51DE) {
        let m = p.metrics();
        assert!(
            m.width <= m.diameter + 1e-12,
            "w {} > d {}",
            m.width,
            m.diameter
        );
    }
}

#[test]
fn shoelace_area_matches_triangle_fan() {
    // Independent area route: fan triangulation from the first vertex.
    for p in corpus(2_000, 16, 0xFA4) {
        let vs = p.vertices();
        let mut fan = 0.0;
        for i in 1..vs.len() - 1 {
            let a = vs[i] - vs[0];
            let b = vs[i + 1] - vs[0];
            fan += 0.5 * a.cross(b);
        }
        assert!((p.metrics().area - fan).abs() <= 1e-12 * (1.0 + fan.abs()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scaling_scales_metrics(seed in 0u64..1_000_000, lambda in 0.01f64..100.0) {
        let mut rng = Rng::seed_from(seed);
        let p = random_convex_polygon(3 + (seed % 10) as usize, &mut rng);
        let m = p.metrics();
        let s = p.scaled(lambda).metrics();
        prop_assert!((s.area - lambda * lambda * m.area).abs() <= 1e-12 * (1.0 + s.area.abs()));
        prop_assert!((s.perimeter - lambda * m.perimeter).abs() <= 1e-12 * (1.0 + s.perimeter.abs()));
        prop_assert!((s.width - lambda * m.width).abs() <= 1e-12 * (1.0 + s.width.abs()));
        prop_assert!((s.diameter - lambda * m.diameter).abs() <= 1e-12 * (1.0 + s.diameter.abs()));
    }

    #[test]
    fn rigid_motions_preserve_metrics(
        seed in 0u64..1_000_000,
        theta in -std::f64::consts::PI..std::f64::consts::PI,
        tx in -50.0f64..50.0,
        ty in -50.0f64..50.0,
    ) {
        let mut rng = Rng::seed_from(seed);
        let p = random_convex_polygon(3 + (seed % 10) as usize, &mut rng);
        let (c, s) = (theta.cos(), theta.sin());
        let moved: Vec<Point> = p
            .vertices()
            .iter()
            .map(|v| Point::new(c * v.x - s * v.y + tx, s * v.x + c * v.y + ty))
            .collect();
        let q = ConvexPolygon::new(moved).expect("rigid motion preserves convexity");
        let (a, b) = (p.metrics(), q.metrics());
        prop_assert!((a.area - b.area).abs() <= 1e-9);
        prop_assert!((a.perimeter - b.perimeter).abs() <= 1e-9);
        prop_assert!((a.width - b.width).abs() <= 1e-9);
        prop_assert!((a.diameter - b.diameter).abs() <= 1e-9);
    }
}

//! Behavior of central symmetrization `P* = ½(P − P)` and the measurements
//! that ride along with it.
//!
//! The operation promises: width, diameter and perimeter carry over
//! unchanged, the side count at most doubles, the result is centrally
//! symmetric about the origin, and its inradius/circumradius are exactly
//! half the original width/diameter.

use ngon_core::bounds::symmetrization_chain_check;
use ngon_core::geometry::{central_symmetrize, symmetric_radii};
use ngon_core::optimizer::{random_convex_polygon, Rng};
use ngon_core::{ConvexPolygon, Point};

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
fn symmetrization_preserves_width_diameter_perimeter() {
    for p in corpus(2_000, 16, 0x5E77) {
        let star = central_symmetrize(&p);
        let (a, b) = (p.metrics(), star.metrics());
        assert!((a.width - b.width).abs() <= 1e-9, "width changed");
        assert!((a.diameter - b.diameter).abs() <= 1e-9, "diameter changed");
        assert!((a.perimeter - b.perimeter).abs() <= 1e-9, "perimeter changed");
        assert!(star.side_count() <= 2 * p.side_count(), "side count grew past 2n");
    }
}

#[test]
fn symmetrization_output_is_centrally_symmetric() {
    for p in corpus(500, 12, 0xCE27) {
        let star = central_symmetrize(&p);
        for v in star.vertices() {
            let negated = Point::new(-v.x, -v.y);
            let mirrored = star
                .vertices()
                .iter()
                .any(|u| u.distance(negated) <= 1e-9);
            assert!(mirrored, "vertex {v:?} has no antipode in {:?}", star.vertices());
        }
    }
}

#[test]
fn symmetric_radii_are_half_width_and_half_diameter() {
    for p in corpus(2_000, 16, 0x7AD1) {
        let m = p.metrics();
        let star = central_symmetrize(&p);
        let (inr, circ) = symmetric_radii(&star).expect("P* is symmetric");
        assert!((inr - m.width / 2.0).abs() <= 1e-9, "inradius {} vs w/2 {}", inr, m.width / 2.0);
        assert!((circ - m.diameter / 2.0).abs() <= 1e-9, "circumradius {} vs d/2 {}", circ, m.diameter / 2.0);
    }
}

#[test]
fn chain_check_holds_on_random_polygons() {
    for p in corpus(2_000, 16, 0xC4A1) {
        let chain = symmetrization_chain_check(&p);
        assert!(
            chain.holds,
            "chain failed: {} >= {} >= {}",
            chain.upper, chain.perimeter, chain.lower
        );
    }
}

#[test]
fn triangle_symmetrizes_to_a_regular_hexagon() {
    let side = 1.0;
    let h = side * 3f64.sqrt() / 2.0;
    let tri = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(side, 0.0),
        Point::new(side / 2.0, h),
    ])
    .unwrap();
    let star = central_symmetrize(&tri);
    assert_eq!(star.side_count(), 6);
    for len in star.side_lengths() {
        assert!((len - 0.5).abs() <= 1e-12, "hexagon side {len}");
    }
    // Difference body of a triangle: perimeter carries over exactly.
    assert!((star.metrics().perimeter - 3.0).abs() <= 1e-12);
}

#[test]
fn symmetric_polygon_symmetrizes_to_its_own_translate() {
    let rect = ConvexPolygon::new(vec![
        Point::new(1.0, 1.0),
        Point::new(4.0, 1.0),
        Point::new(4.0, 3.0),
        Point::new(1.0, 3.0),
    ])
    .unwrap();
    let star = central_symmetrize(&rect);
    // The rectangle recentered at the origin.
    let expected = [
        Point::new(-1.5, -1.0),
        Point::new(1.5, -1.0),
        Point::new(1.5, 1.0),
        Point::new(-1.5, 1.0),
    ];
    assert_eq!(star.side_count(), 4);
    for want in expected {
        assert!(
            star.vertices().iter().any(|v| v.distance(want) <= 1e-12),
            "missing vertex {want:?} in {:?}",
            star.vertices()
        );
    }
}

#[test]
fn radii_of_textbook_symmetric_bodies() {
    let square = ConvexPolygon::new(vec![
        Point::new(-0.5, -0.5),
        Point::new(0.5, -0.5),
        Point::new(0.5, 0.5),
        Point::new(-0.5, 0.5),
    ])
    .unwrap();
    let (inr, circ) = symmetric_radii(&square).unwrap();
    assert!((inr - 0.5).abs() <= 1e-12);
    assert!((circ - 2f64.sqrt() / 2.0).abs() <= 1e-12);

    let hexagon = ConvexPolygon::new(
        (0..6)
            .map(|k| {
                let t = std::f64::consts::PI / 3.0 * k as f64;
                Point::new(t.cos(), t.sin())
            })
            .collect(),
    )
    .unwrap();
    let (inr, circ) = symmetric_radii(&hexagon).unwrap();
    assert!((inr - 3f64.sqrt() / 2.0).abs() <= 1e-12);
    assert!((circ - 1.0).abs() <= 1e-12);
}

#[test]
fn radii_reject_asymmetric_input() {
    let tri = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(0.5, 0.8),
    ])
    .unwrap();
    assert!(symmetric_radii(&tri).is_err());
}

#[test]
fn chain_check_textbook_values() {
    use std::f64::consts::PI;
    let tri = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(0.5, 3f64.sqrt() / 2.0),
    ])
    .unwrap();
    let chain = symmetrization_chain_check(&tri);
    // Hexagonal difference body: 12 sin(π/12)·1 >= 3 >= 6 tan(π/6)·(√3/2) = 3.
    assert!((chain.upper - 12.0 * (PI / 12.0).sin()).abs() <= 1e-12);
    assert!((chain.perimeter - 3.0).abs() <= 1e-12);
    assert!((chain.lower - 3.0).abs() <= 1e-12);
    assert!(chain.holds);

    let square = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .unwrap();
    let chain = symmetrization_chain_check(&square);
    // The square is its own difference body up to scale: m = 4 and the
    // width side of the chain is tight.
    assert!((chain.upper - 8.0 * (PI / 8.0).sin() * 2f64.sqrt()).abs() <= 1e-12);
    assert!((chain.perimeter - 4.0).abs() <= 1e-12);
    assert!((chain.lower - 4.0).abs() <= 1e-12);
    assert!(chain.holds);
}

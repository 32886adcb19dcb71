//! Reinhardt (clipped Reuleaux) polygons: the equilateral `n`-gons that
//! attain the perimeter–diameter and width–diameter bounds.
//!
//! The combinatorial datum is a composition `(c₁,…,c_m)` of `n` into an odd
//! number of parts: part `i` is the number of polygon sides carried by arc
//! `i` of a Reuleaux `m`-gon whose arcs subtend `cᵢ·π/n` each. Not every
//! composition yields a closed Reuleaux body — the diagonals must close up
//! into an equilateral star polygon — and the closure test exists in two
//! forms: a numeric defect, and an exact criterion via divisibility by a
//! cyclotomic polynomial (closure is a vanishing sum of `2n`-th roots of
//! unity).

mod cyclotomic;
mod enumerate;

pub use enumerate::{census, enumerate, enumerate_with_cap, Census, DEFAULT_CAP};

use std::f64::consts::{PI, TAU};

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{is_convex, ConvexPolygon, Point};
use crate::tol;

#[derive(Debug, Error, PartialEq)]
pub enum ReinhardtError {
    #[error(
        "composition must have an odd number (>= 3) of positive parts summing to n (n={n}, parts={parts:?})"
    )]
    InvalidComposition { n: usize, parts: Vec<u32> },
    #[error("signature does not close into a Reuleaux star (defect {defect:.3e})")]
    InvalidSignature { defect: f64 },
    #[error("construction degenerated: {0}")]
    ConstructionDegenerate(String),
    #[error("n={n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// A composition `(c₁,…,c_m)` of `n`: `m` odd, all parts positive.
///
/// Read as arc-angle multipliers of a Reuleaux `m`-gon: arc `i` subtends
/// `cᵢ·π/n`, and the multipliers sum to `n` so the arc angles sum to `π`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Composition {
    n: usize,
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(n: usize, parts: Vec<u32>) -> Result<Self, ReinhardtError> {
        let m = parts.len();
        let sum: u64 = parts.iter().map(|&p| u64::from(p)).sum();
        if n < 3 || m < 3 || m % 2 == 0 || parts.iter().any(|&p| p == 0) || sum != n as u64 {
            return Err(ReinhardtError::InvalidComposition { n, parts });
        }
        Ok(Composition { n, parts })
    }

    /// The all-equal signature `(n/m, …, n/m)` for an odd divisor `m >= 3`.
    pub fn regular(n: usize, m: usize) -> Result<Self, ReinhardtError> {
        if m < 3 || m % 2 == 0 || n % m != 0 {
            return Err(ReinhardtError::InvalidComposition {
                n,
                parts: vec![(n / m.max(1)) as u32],
            });
        }
        Composition::new(n, vec![(n / m) as u32; m])
    }

    /// The all-equal signature with the most parts: `m` = the largest odd
    /// divisor of `n`. `None` when `n` is a power of two (no odd divisor
    /// `>= 3` exists, and indeed no valid signature at all).
    pub fn auto_regular(n: usize) -> Option<Self> {
        let mut m = n;
        while m % 2 == 0 {
            m /= 2;
        }
        (m >= 3).then(|| Composition::regular(n, m).expect("m is an odd divisor"))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts (Reuleaux vertex count), always odd.
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// The lexicographically smallest word among all rotations and
    /// reflections of the parts.
    pub fn canonical(&self) -> Composition {
        Composition {
            n: self.n,
            parts: canonical_word(&self.parts),
        }
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn canonical_word(parts: &[u32]) -> Vec<u32> {
    let m = parts.len();
    let reversed: Vec<u32> = parts.iter().rev().copied().collect();
    let mut best: Option<Vec<u32>> = None;
    for word in [parts, reversed.as_slice()] {
        for r in 0..m {
            let cand: Vec<u32> = (0..m).map(|i| word[(r + i) % m]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// How signature validity is decided.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ValidityMode {
    /// Closure defect below `tol` (default `1e-9`).
    Numeric { tol: f64 },
    /// Exact: the closure sum, read as an integer polynomial in a primitive
    /// `2n`-th root of unity, reduces to zero modulo the `2n`-th cyclotomic
    /// polynomial.
    Exact,
}

impl Default for ValidityMode {
    fn default() -> Self {
        ValidityMode::Numeric {
            tol: tol::CLOSURE_EPS,
        }
    }
}

/// Norm of the vector sum of the star-polygon edge directions: edge `k` has
/// heading `θ_k = Σ_{j≤k} (π − cⱼπ/n)`. Zero exactly when an equilateral
/// star polygon with these turning angles closes.
pub fn closure_defect(c: &Composition) -> f64 {
    let n = c.n as f64;
    let mut heading = 0.0;
    let (mut sx, mut sy) = (0.0, 0.0);
    for &p in c.parts() {
        heading += PI - f64::from(p) * PI / n;
        sx += heading.cos();
        sy += heading.sin();
    }
    sx.hypot(sy)
}

/// Whether the composition's star polygon closes, i.e. whether a Reinhardt
/// polygon with this signature exists.
pub fn is_valid(c: &Composition, mode: ValidityMode) -> bool {
    match mode {
        ValidityMode::Numeric { tol } => closure_defect(c) < tol,
        ValidityMode::Exact => {
            // With partial sums s_k, closure says Σ_k (−1)^k ζ^{s_k} = 0 for
            // ζ = e^{iπ/n}; absorbing the sign as ζ^{n·k} turns this into
            // Σ_k x^{(s_k + n·k) mod 2n} vanishing at ζ, which over ℤ[x]
            // means divisibility by the 2n-th cyclotomic polynomial.
            let two_n = 2 * c.n;
            let mut coeffs = vec![0i64; two_n];
            let mut s = 0usize;
            for (k, &part) in c.parts().iter().enumerate() {
                s += part as usize;
                coeffs[(s + c.n * k) % two_n] += 1;
            }
            let poly = cyclotomic::IntPoly::new(coeffs);
            poly.div_rem(&cyclotomic::cyclotomic(two_n)).1.is_zero()
        }
    }
}

/// Rotational symmetry classification of a signature word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SymmetryKind {
    /// The word is a nontrivial repetition; the polygon has k-fold
    /// rotational symmetry.
    Periodic(usize),
    /// Aperiodic word: no rotational symmetry. Following Mossinghoff's
    /// terminology for Reinhardt polygons outside the periodic families.
    Sporadic,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryClass {
    pub kind: SymmetryKind,
    /// Lexicographically minimal rotation/reflection of the parts word.
    pub canonical: Vec<u32>,
}

/// Classifies a valid signature by the smallest period of its canonical
/// word: period `m/k < m` means `Periodic(k)`, a full-length period means
/// `Sporadic`.
pub fn classify(c: &Composition) -> Result<SymmetryClass, ReinhardtError> {
    if !is_valid(c, ValidityMode::default()) {
        return Err(ReinhardtError::InvalidSignature {
            defect: closure_defect(c),
        });
    }
    let canonical = canonical_word(c.parts());
    let m = canonical.len();
    let period = (1..m)
        .find(|&p| m % p == 0 && (0..m).all(|i| canonical[i] == canonical[(i + p) % m]))
        .unwrap_or(m);
    let kind = if period < m {
        SymmetryKind::Periodic(m / period)
    } else {
        SymmetryKind::Sporadic
    };
    Ok(SymmetryClass { kind, canonical })
}

/// One boundary arc of a Reuleaux polygon: a circle of radius equal to the
/// body width, centered at the opposite vertex, swept counterclockwise from
/// `start_angle` to `end_angle` (as seen from that center).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Arc {
    /// Index into the vertex list of the centering vertex.
    pub center: usize,
    pub start_angle: f64,
    pub end_angle: f64,
    /// The arc's angle as a multiple of π/n — the composition part it
    /// realizes.
    pub multiplier: u32,
}

/// A Reuleaux polygon of constant width: an odd number of vertices in
/// convex (boundary) order, each boundary side replaced by an arc about the
/// opposite vertex.
#[derive(Clone, Debug, Serialize)]
pub struct ReuleauxPolygon {
    pub width: f64,
    pub vertices: Vec<Point>,
    /// Arc `i` spans boundary side `i` (from vertex `i` to vertex `i+1`).
    pub arcs: Vec<Arc>,
}

impl ReuleauxPolygon {
    /// Support function: the largest projection of the body onto the unit
    /// direction at `angle`. The maximum is either a vertex projection or,
    /// when the direction falls inside an arc's angular span, the arc's
    /// bulge `center·u + width`.
    pub fn support(&self, angle: f64) -> f64 {
        let u = Point::new(angle.cos(), angle.sin());
        let mut h = f64::NEG_INFINITY;
        for v in &self.vertices {
            h = h.max(v.dot(u));
        }
        for arc in &self.arcs {
            let rel = (angle - arc.start_angle).rem_euclid(TAU);
            if rel <= arc.end_angle - arc.start_angle {
                h = h.max(self.vertices[arc.center].dot(u) + self.width);
            }
        }
        h
    }

    /// Distance between the supporting lines perpendicular to `angle`;
    /// equals the width in every direction, which is what makes the body a
    /// constant-width body.
    pub fn support_width(&self, angle: f64) -> f64 {
        self.support(angle) + self.support(angle + PI)
    }
}

/// Builds the Reuleaux polygon of width `d` for a valid signature.
///
/// The `m` vertices come from walking the equilateral star polygon of
/// length-`d` diagonals (edge `k` at heading `θ_k`), then re-sorting by
/// polar angle about the centroid to get the convex boundary order. Every
/// geometric invariant — opposite-vertex distances, arc angles summing to
/// π, constant width in 360 sampled directions — is checked on the
/// constructed instance rather than assumed.
pub fn build_reuleaux(c: &Composition, d: f64) -> Result<ReuleauxPolygon, ReinhardtError> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(ReinhardtError::ConstructionDegenerate(format!(
            "width must be positive and finite, got {d}"
        )));
    }
    let defect = closure_defect(c);
    if defect >= tol::CLOSURE_EPS {
        return Err(ReinhardtError::InvalidSignature { defect });
    }
    let n = c.n();
    let m = c.m();

    // Star walk: vertex k, then a length-d edge at heading θ_k.
    let mut star = Vec::with_capacity(m);
    let mut pos = Point::new(0.0, 0.0);
    let mut heading = 0.0;
    for &p in c.parts() {
        star.push(pos);
        heading += PI - f64::from(p) * PI / n as f64;
        pos = pos + Point::new(heading.cos(), heading.sin()).scale(d);
    }
    for i in 0..m {
        for j in (i + 1)..m {
            if star[i].distance(star[j]) <= tol::COINCIDENT_EPS * d.max(1.0) {
                return Err(ReinhardtError::ConstructionDegenerate(format!(
                    "star vertices {i} and {j} coincide"
                )));
            }
        }
    }

    // Convex boundary order, centered for good measure.
    let centroid = star
        .iter()
        .fold(Point::new(0.0, 0.0), |acc, &v| acc + v)
        .scale(1.0 / m as f64);
    let mut vertices: Vec<Point> = star.into_iter().map(|v| v - centroid).collect();
    vertices.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));

    let geo_eps = tol::METRIC_EPS * d.max(1.0);
    let step = PI / n as f64;
    let mut arcs = Vec::with_capacity(m);
    let mut total_sweep = 0.0;
    for i in 0..m {
        let a = vertices[i];
        let b = vertices[(i + 1) % m];
        let center = (i + (m + 1) / 2) % m;
        let cp = vertices[center];
        for (label, endpoint) in [("start", a), ("end", b)] {
            let dist = cp.distance(endpoint);
            if (dist - d).abs() > geo_eps {
                return Err(ReinhardtError::ConstructionDegenerate(format!(
                    "vertex {center} is at distance {dist} (want {d}) from the {label} of side {i}"
                )));
            }
        }
        let start_angle = (a - cp).y.atan2((a - cp).x);
        let sweep = ((b - cp).y.atan2((b - cp).x) - start_angle).rem_euclid(TAU);
        let multiplier = (sweep / step).round();
        if !(1.0..=(n as f64)).contains(&multiplier) || (sweep - multiplier * step).abs() > geo_eps
        {
            return Err(ReinhardtError::ConstructionDegenerate(format!(
                "side {i} subtends {sweep} rad, not a positive multiple of π/{n}"
            )));
        }
        total_sweep += sweep;
        arcs.push(Arc {
            center,
            start_angle,
            end_angle: start_angle + sweep,
            multiplier: multiplier as u32,
        });
    }
    if (total_sweep - PI).abs() > tol::METRIC_EPS {
        return Err(ReinhardtError::ConstructionDegenerate(format!(
            "arc angles sum to {total_sweep}, want π"
        )));
    }
    let mut multipliers: Vec<u32> = arcs.iter().map(|a| a.multiplier).collect();
    multipliers.sort_unstable();
    let mut parts_sorted = c.parts().to_vec();
    parts_sorted.sort_unstable();
    if multipliers != parts_sorted {
        return Err(ReinhardtError::ConstructionDegenerate(format!(
            "arc multipliers {multipliers:?} do not match the signature parts"
        )));
    }

    let body = ReuleauxPolygon {
        width: d,
        vertices,
        arcs,
    };
    for t in 0..360 {
        let angle = TAU * t as f64 / 360.0;
        let w = body.support_width(angle);
        if (w - d).abs() > tol::CONSTANT_WIDTH_EPS * d.max(1.0) {
            return Err(ReinhardtError::ConstructionDegenerate(format!(
                "support width {w} at direction {angle} differs from {d}"
            )));
        }
    }
    Ok(body)
}

/// An equilateral `n`-gon inscribed in a Reuleaux polygon, with every
/// Reuleaux vertex among its own.
#[derive(Clone, Debug, Serialize)]
pub struct ReinhardtPolygon {
    pub polygon: ConvexPolygon,
    pub signature: Composition,
    /// Width of the circumscribing Reuleaux body = diameter of the polygon.
    pub width: f64,
}

/// Clips a Reuleaux polygon to its inscribed Reinhardt `n`-gon by cutting
/// every arc into sub-arcs of angle π/n and taking the chord points.
///
/// The result is validated in full: equal sides of length `2d·sin(π/2n)`,
/// perimeter `2n·sin(π/2n)·d`, width `cos(π/2n)·d`, diameter `d` (each to
/// 1e−9, scaled by `d`), and strict convexity.
pub fn clip(r: &ReuleauxPolygon, c: &Composition) -> Result<ReinhardtPolygon, ReinhardtError> {
    let n = c.n();
    let total: u64 = r.arcs.iter().map(|a| u64::from(a.multiplier)).sum();
    if total != n as u64 {
        return Err(ReinhardtError::ConstructionDegenerate(format!(
            "arc multipliers sum to {total}, signature wants {n}"
        )));
    }
    let mut points = Vec::with_capacity(n);
    for arc in &r.arcs {
        let cp = r.vertices[arc.center];
        let k = arc.multiplier;
        let sub = (arc.end_angle - arc.start_angle) / f64::from(k);
        for t in 0..k {
            let ang = arc.start_angle + f64::from(t) * sub;
            points.push(cp + Point::new(ang.cos(), ang.sin()).scale(r.width));
        }
    }
    let polygon = ConvexPolygon::new(points).map_err(|e| {
        ReinhardtError::ConstructionDegenerate(format!("clipped points are not convex: {e}"))
    })?;

    let d = r.width;
    let geo_eps = tol::METRIC_EPS * d.max(1.0);
    let side = 2.0 * d * (PI / (2 * n) as f64).sin();
    for (i, len) in polygon.side_lengths().into_iter().enumerate() {
        if (len - side).abs() > geo_eps {
            return Err(ReinhardtError::ConstructionDegenerate(format!(
                "side {i} has length {len}, want {side}"
            )));
        }
    }
    let metrics = polygon.metrics();
    let want_p = 2.0 * n as f64 * (PI / (2 * n) as f64).sin() * d;
    let want_w = (PI / (2 * n) as f64).cos() * d;
    for (label, got, want) in [
        ("perimeter", metrics.perimeter, want_p),
        ("width", metrics.width, want_w),
        ("diameter", metrics.diameter, d),
    ] {
        if (got - want).abs() > geo_eps {
            return Err(ReinhardtError::ConstructionDegenerate(format!(
                "{label} is {got}, want {want}"
            )));
        }
    }
    // Strictness: the clipped polygon must turn at every vertex. (Whether
    // this must hold for every closure-valid signature is checked per
    // instance, not assumed.)
    let verts = polygon.vertices();
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let cpt = verts[(i + 2) % n];
        if (b - a).cross(cpt - b) <= 0.0 {
            return Err(ReinhardtError::ConstructionDegenerate(format!(
                "clipped polygon is not strictly convex at vertex {}",
                (i + 1) % n
            )));
        }
    }
    debug_assert!(is_convex(verts).convex);
    Ok(ReinhardtPolygon {
        polygon,
        signature: c.clone(),
        width: d,
    })
}

/// Convenience: build the Reuleaux body for `c` and clip it.
pub fn reinhardt_polygon(c: &Composition, d: f64) -> Result<ReinhardtPolygon, ReinhardtError> {
    clip(&build_reuleaux(c, d)?, c)
}

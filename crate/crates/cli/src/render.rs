//! Deterministic SVG emission for polygon documents.
//!
//! The drawing is a pure function of (document, options): same input, same
//! bytes. Coordinates are written in the shortest round-tripping decimal
//! form, the view box is the fixed square `[-1.1d, 1.1d]²` around the
//! figure's centroid, and circular arcs use native arc path commands with
//! radius equal to the body width — no polyline approximation.

use std::fmt::Write as _;

use thiserror::Error;

use ngon_core::{ConvexPolygon, Point};

use crate::document::{DocumentKind, PolygonDocument};

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Canvas width and height in pixels.
    pub size: u32,
    /// Stroke width as a fraction of the diameter.
    pub stroke: f64,
    /// Overlay the circumscribing Reuleaux arcs (reinhardt/reuleaux only).
    pub show_arcs: bool,
    /// Overlay the diameter graph chords at tolerance 1e-6.
    pub show_diameter_graph: bool,
    /// Number the vertices.
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            size: 800,
            stroke: 0.008,
            show_arcs: false,
            show_diameter_graph: false,
            labels: false,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<(), RenderError> {
        if self.size == 0 {
            return Err(RenderError::Options("canvas size must be positive".into()));
        }
        if !(self.stroke > 0.0 && self.stroke.is_finite()) {
            return Err(RenderError::Options(format!(
                "stroke width must be positive, got {}",
                self.stroke
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("bad render options: {0}")]
    Options(String),
    #[error("document does not draw: {0}")]
    Geometry(String),
}

/// Shortest decimal that parses back to the same value.
fn num(v: f64) -> String {
    format!("{v}")
}

/// The arcs of the constant-width body a document describes, as
/// (start, end, center) triples in vertex coordinates.
///
/// Derived from the geometry alone: every boundary edge is a chord of one
/// circular arc whose center is a vertex a full width away from both edge
/// endpoints, and maximal runs of edges sharing a center are the arcs. (The
/// signature can't locate the arc ends directly — it lists chord counts in
/// star traversal order, while the boundary meets those arcs in a permuted
/// order — so here it only cross-checks the run lengths.)
fn arc_segments(
    doc: &PolygonDocument,
    polygon: &ConvexPolygon,
    d: f64,
) -> Result<Vec<(Point, Point, Point)>, RenderError> {
    match doc.kind {
        DocumentKind::Reuleaux | DocumentKind::Reinhardt => {}
        DocumentKind::Generic | DocumentKind::Optimized => {
            return Err(RenderError::Options(
                "arc overlay needs a reinhardt or reuleaux document".into(),
            ));
        }
    }
    let vs = polygon.vertices();
    let n = vs.len();
    let tol = 1e-6 * d;
    let misplaced =
        || RenderError::Geometry("vertices are not at constant-width positions".into());
    // Per-edge arc centers. The center is unique: a second vertex at
    // distance d from both endpoints would be the first one's mirror image
    // across the chord, 2·sqrt(d² − (chord/2)²) > d away from it, which a
    // diameter-d body cannot contain.
    let mut centers = Vec::with_capacity(n);
    for i in 0..n {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        let c = (0..n)
            .find(|&j| {
                (vs[j].distance(a) - d).abs() <= tol && (vs[j].distance(b) - d).abs() <= tol
            })
            .ok_or_else(misplaced)?;
        centers.push(c);
    }
    // Group the cyclic edge sequence into maximal same-center runs,
    // starting the traversal at a run boundary so no run straddles it.
    let first_break = (0..n)
        .find(|&i| centers[i] != centers[(i + n - 1) % n])
        .ok_or_else(misplaced)?;
    let mut runs: Vec<(usize, usize, usize)> = Vec::new(); // (first edge, chords, center)
    for k in 0..n {
        let i = (first_break + k) % n;
        match runs.last_mut() {
            Some((_, chords, c)) if *c == centers[i] => *chords += 1,
            _ => runs.push((i, 1, centers[i])),
        }
    }
    match doc.kind {
        DocumentKind::Reuleaux => {
            // The stored vertices are the body's own, so every arc is a
            // single chord.
            if n % 2 == 0 || runs.len() != n {
                return Err(misplaced());
            }
        }
        DocumentKind::Reinhardt => {
            let sig = doc
                .signature
                .as_ref()
                .expect("validated reinhardt documents carry a signature");
            let mut got: Vec<usize> = runs.iter().map(|&(_, chords, _)| chords).collect();
            got.sort_unstable();
            let mut want: Vec<usize> = sig.iter().map(|&c| c as usize).collect();
            want.sort_unstable();
            if got != want {
                return Err(RenderError::Geometry(format!(
                    "signature {sig:?} does not match the drawn arc structure"
                )));
            }
        }
        DocumentKind::Generic | DocumentKind::Optimized => unreachable!(),
    }
    Ok(runs
        .iter()
        .map(|&(first, chords, c)| (vs[first], vs[(first + chords) % n], vs[c]))
        .collect())
}

pub fn render(doc: &PolygonDocument, opts: &RenderOptions) -> Result<String, RenderError> {
    opts.validate()?;
    let polygon = doc
        .to_polygon()
        .map_err(|e| RenderError::Geometry(e.to_string()))?;
    let d = polygon.metrics().diameter;
    let center = polygon.vertex_centroid();
    let at = |p: Point| (p.x - center.x, p.y - center.y);
    let half = 1.1 * d;
    let stroke = opts.stroke * d;

    let mut svg = String::new();
    write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"{} {} {} {}\">\n",
        num(-half),
        num(-half),
        num(2.0 * half),
        num(2.0 * half),
        size = opts.size,
    )
    .unwrap();
    // Mathematical orientation: y grows upward inside this group.
    svg.push_str("<g transform=\"scale(1,-1)\">\n");

    let mut path = String::new();
    for (i, &v) in polygon.vertices().iter().enumerate() {
        let (x, y) = at(v);
        let _ = write!(path, "{}{} {}", if i == 0 { "M" } else { " L" }, num(x), num(y));
    }
    path.push_str(" Z");
    write!(
        svg,
        "<path d=\"{path}\" fill=\"none\" stroke=\"#1b4d7a\" stroke-width=\"{}\" \
         stroke-linejoin=\"round\"/>\n",
        num(stroke)
    )
    .unwrap();

    if opts.show_arcs {
        let arcs = arc_segments(doc, &polygon, d)?;
        let mut arc_path = String::new();
        let (sx, sy) = at(arcs[0].0);
        let _ = write!(arc_path, "M{} {}", num(sx), num(sy));
        for &(start, end, arc_center) in &arcs {
            let sweep = if (start - arc_center).cross(end - arc_center) > 0.0 {
                1
            } else {
                0
            };
            let (ex, ey) = at(end);
            let _ = write!(arc_path, " A{r} {r} 0 0 {sweep} {} {}", num(ex), num(ey), r = num(d));
        }
        arc_path.push_str(" Z");
        write!(
            svg,
            "<path d=\"{arc_path}\" fill=\"none\" stroke=\"#b3412c\" stroke-width=\"{}\"/>\n",
            num(stroke)
        )
        .unwrap();
    }

    if opts.show_diameter_graph {
        let graph = polygon.diameter_graph(1e-6);
        for &(i, j) in &graph.edges {
            let (x1, y1) = at(polygon.vertices()[i]);
            let (x2, y2) = at(polygon.vertices()[j]);
            write!(
                svg,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#2e7d32\" \
                 stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>\n",
                num(x1),
                num(y1),
                num(x2),
                num(y2),
                num(0.6 * stroke),
                num(0.03 * d),
                num(0.018 * d),
            )
            .unwrap();
        }
    }

    svg.push_str("</g>\n");

    if opts.labels {
        // Text lives outside the flipped group so the glyphs read upright.
        for (i, &v) in polygon.vertices().iter().enumerate() {
            let (x, y) = at(v);
            write!(
                svg,
                "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\" \
                 fill=\"#333333\">{i}</text>\n",
                num(x + 0.02 * d),
                num(-(y + 0.02 * d)),
                num(0.07 * d),
            )
            .unwrap();
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{config_hash, DocumentKind, PolygonDocument, Provenance};

    fn doc_for(vertices: Vec<[f64; 2]>, kind: DocumentKind, sig: Option<Vec<u32>>) -> PolygonDocument {
        PolygonDocument {
            schema: crate::document::SCHEMA_VERSION,
            kind,
            vertices,
            signature: sig,
            provenance: Provenance {
                command: "test".into(),
                seed: 0,
                config_hash: config_hash(&0u8),
            },
        }
    }

    #[test]
    fn square_renders_a_closed_four_segment_path() {
        let doc = doc_for(
            vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
            DocumentKind::Generic,
            None,
        );
        let svg = render(&doc, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches(" L").count(), 3);
        assert!(svg.contains(" Z\""));
        assert!(svg.contains("viewBox"));
        assert!(!svg.contains("<text"));
    }

    #[test]
    fn rendering_is_reproducible() {
        let doc = doc_for(
            vec![[0.0, 0.0], [1.0, 0.0], [0.31, 0.77]],
            DocumentKind::Generic,
            None,
        );
        let opts = RenderOptions {
            show_diameter_graph: true,
            labels: true,
            ..RenderOptions::default()
        };
        assert_eq!(render(&doc, &opts).unwrap(), render(&doc, &opts).unwrap());
    }

    #[test]
    fn arcs_on_a_generic_document_are_refused() {
        let doc = doc_for(
            vec![[0.0, 0.0], [1.0, 0.0], [0.31, 0.77]],
            DocumentKind::Generic,
            None,
        );
        let opts = RenderOptions {
            show_arcs: true,
            ..RenderOptions::default()
        };
        assert!(matches!(render(&doc, &opts), Err(RenderError::Options(_))));
    }

    #[test]
    fn zero_stroke_is_rejected() {
        let doc = doc_for(
            vec![[0.0, 0.0], [1.0, 0.0], [0.31, 0.77]],
            DocumentKind::Generic,
            None,
        );
        let opts = RenderOptions {
            stroke: 0.0,
            ..RenderOptions::default()
        };
        assert!(matches!(render(&doc, &opts), Err(RenderError::Options(_))));
    }
}

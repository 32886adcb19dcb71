//! Polygon persistence: a small, versioned JSON document that survives
//! byte-identical round trips.
//!
//! Numbers are written in the shortest decimal form that parses back to
//! the same binary value, so `load(save(P))` reproduces the vertex
//! coordinates exactly — not just to display precision — and saving again
//! yields the same bytes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use ngon_core::ConvexPolygon;
use ngon_core::Point;

/// Bumped when the on-disk layout changes shape.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    /// Plain convex polygon with no extra structure.
    Generic,
    /// Clipped Reuleaux n-gon; `signature` holds its arc multipliers.
    Reinhardt,
    /// Reuleaux star polygon (the constant-width body's vertices);
    /// `signature` holds its arc multipliers.
    Reuleaux,
    /// Output of an optimizer run.
    Optimized,
}

/// Where a document came from: enough to reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    /// The resolved command line, normalized.
    pub command: String,
    /// Seed the run used (0 for deterministic constructions).
    pub seed: u64,
    /// SHA-256 over the resolved configuration, hex-encoded.
    pub config_hash: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonDocument {
    pub schema: u32,
    pub kind: DocumentKind,
    /// Vertex coordinates in boundary order.
    pub vertices: Vec<[f64; 2]>,
    /// Arc multipliers; present exactly for the Reinhardt/Reuleaux kinds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub signature: Option<Vec<u32>>,
    pub provenance: Provenance,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("not a polygon document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("document violates its schema: {0}")]
    Invalid(String),
}

impl PolygonDocument {
    pub fn new(
        kind: DocumentKind,
        polygon: &ConvexPolygon,
        signature: Option<Vec<u32>>,
        provenance: Provenance,
    ) -> PolygonDocument {
        PolygonDocument {
            schema: SCHEMA_VERSION,
            kind,
            vertices: polygon.vertices().iter().map(|p| [p.x, p.y]).collect(),
            signature,
            provenance,
        }
    }

    /// Structural invariants beyond what the JSON shape enforces.
    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.schema != SCHEMA_VERSION {
            return Err(DocumentError::Invalid(format!(
                "schema version {} (this build reads {})",
                self.schema, SCHEMA_VERSION
            )));
        }
        if self.vertices.len() < 3 {
            return Err(DocumentError::Invalid(format!(
                "{} vertices; a polygon needs at least 3",
                self.vertices.len()
            )));
        }
        if self
            .vertices
            .iter()
            .any(|[x, y]| !x.is_finite() || !y.is_finite())
        {
            return Err(DocumentError::Invalid("non-finite coordinate".into()));
        }
        let wants_signature = matches!(self.kind, DocumentKind::Reinhardt | DocumentKind::Reuleaux);
        match (&self.signature, wants_signature) {
            (None, true) => Err(DocumentError::Invalid(
                "reinhardt/reuleaux documents carry a signature".into(),
            )),
            (Some(_), false) => Err(DocumentError::Invalid(
                "only reinhardt/reuleaux documents carry a signature".into(),
            )),
            _ => Ok(()),
        }
    }

    /// The stored vertices as a convex polygon. Fails on corrupt geometry.
    pub fn to_polygon(&self) -> Result<ConvexPolygon, ngon_core::geometry::GeometryError> {
        ConvexPolygon::new(
            self.vertices
                .iter()
                .map(|&[x, y]| Point::new(x, y))
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialization is total");
        s.push('\n');
        s
    }

    pub fn save(&self, path: &Path) -> Result<(), DocumentError> {
        fs::write(path, self.to_json()).map_err(|source| DocumentError::Write {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<PolygonDocument, DocumentError> {
        let text = fs::read_to_string(path).map_err(|source| DocumentError::Read {
            path: path.display().to_string(),
            source,
        })?;
        let doc: PolygonDocument = serde_json::from_str(&text)?;
        doc.validate()?;
        Ok(doc)
    }
}

/// Hex SHA-256 of a serializable configuration snapshot.
pub fn config_hash<T: Serialize>(config: &T) -> String {
    use sha2::{Digest, Sha256};
    let bytes = serde_json::to_vec(config).expect("config serialization is total");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

use std::fmt;

use cubelat_lattice::{faces_of_edge, Edge, FacePatch, Vec3i};
use thiserror::Error;

use crate::config::{classify_mask, VertexConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("vertex ({0}) is not interior to the window")]
    BoundaryVertex(Vec3i),
    #[error("edge ({0}) is not interior to the window")]
    BoundaryEdge(Edge),
}

/// Kind of a lattice edge relative to a patch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Crease,
    Flange,
    /// Any incident face count other than two.
    Bare(u8),
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKind::Crease => f.write_str("crease"),
            EdgeKind::Flange => f.write_str("flange"),
            EdgeKind::Bare(k) => write!(f, "bare{k}"),
        }
    }
}

pub fn classify_vertex(patch: &FacePatch, v: Vec3i) -> Result<VertexConfig, LocalError> {
    if !patch.domain().is_interior(v) {
        return Err(LocalError::BoundaryVertex(v));
    }
    Ok(classify_mask(patch.mask_at(v)))
}

/// Like `classify_vertex` but for vertices already known to be interior.
pub fn vertex_config(patch: &FacePatch, v: Vec3i) -> VertexConfig {
    classify_mask(patch.mask_at(v))
}

pub fn classify_edge(patch: &FacePatch, e: Edge) -> Result<EdgeKind, LocalError> {
    if !patch.domain().edge_is_interior(e) {
        return Err(LocalError::BoundaryEdge(e));
    }
    Ok(edge_kind(patch, e))
}

pub(crate) fn edge_kind(patch: &FacePatch, e: Edge) -> EdgeKind {
    let present: Vec<_> = faces_of_edge(e).into_iter().filter(|f| patch.contains(*f)).collect();
    match present.as_slice() {
        [a, b] if a.normal == b.normal => EdgeKind::Flange,
        [_, _] => EdgeKind::Crease,
        other => EdgeKind::Bare(other.len() as u8),
    }
}

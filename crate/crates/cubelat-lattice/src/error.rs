use thiserror::Error;

use crate::cell::Face;
use crate::geom::Vec3i;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("torus periods must be positive, got {0:?}")]
    BadPeriod([i32; 3]),
    #[error("lattice basis is degenerate")]
    Degenerate,
    #[error("window lo {lo} exceeds hi {hi}")]
    BadWindow { lo: Vec3i, hi: Vec3i },
    #[error("operation needs a torus domain")]
    UnsupportedDomain,
    #[error("face ({0}) lies outside the window")]
    FaceOutside(Face),
    #[error("vertex ({0}) lies outside the domain")]
    VertexOutside(Vec3i),
    #[error("target lattice is not a sublattice of the patch lattice")]
    NotSublattice,
}

use cubelat_gen::GenError;
use cubelat_lattice::LatticeError;
use cubelat_transforms::TransformError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("classification needs a torus patch")]
    NotTorus,
    #[error("patch is not a valid cubic polyhedron ({0} violations)")]
    Invalid(usize),
    #[error("patch has a vertex that is not a screw")]
    NotAllScrew,
    #[error("no certificate found")]
    NoCertificate,
    #[error("rebuilt patch differs from the input")]
    RebuildMismatch,
    #[error("towers along {0} have inconsistent parities")]
    InconsistentParity(cubelat_lattice::Axis),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("certificate parse error at token {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

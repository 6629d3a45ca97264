use cubelat_lattice::{LatticeError, Vec3i};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("domain does not support this construction: {0}")]
    Period(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("seed does not validate on its interior")]
    InvalidSeed,
    #[error("construction is inconsistent at vertex ({0})")]
    Inconsistent(Vec3i),
    #[error("{what} at position {pos}: {msg}")]
    Parse { what: &'static str, pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` needs a word argument")]
    MissingWord(&'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

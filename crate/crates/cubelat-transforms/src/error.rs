use cubelat_gen::GenError;
use cubelat_lattice::{Axis, LatticeError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("no tower with axis {axis} at base ({} {})", base.0, base.1)]
    NotATower { axis: Axis, base: (i32, i32) },
    #[error("plane {normal} = {level} is not a slab")]
    NotASlab { normal: Axis, level: i32 },
    #[error("period {period} along {normal} is too small for slab removal")]
    PeriodTooSmall { normal: Axis, period: i32 },
    #[error("no slab can be inserted at plane {normal} = {level}.5")]
    NotInsertable { normal: Axis, level: i32 },
    #[error("insertion request does not match the pattern: {0}")]
    SpecMismatch(String),
    #[error("no slab layer validates at plane {normal} = {level}.5")]
    NoValidSlab { normal: Axis, level: i32 },
    #[error("slab operations need a torus domain")]
    NeedsTorus,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

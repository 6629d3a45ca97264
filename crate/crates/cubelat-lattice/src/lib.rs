//! Cubic lattice primitives: points, axes, faces, edges, periodic and windowed domains,
//! and face sets over them.

pub mod cell;
pub mod domain;
pub mod error;
pub mod geom;
pub mod isometry;
pub mod lattice;
pub mod patch;

pub use cell::{edges_of_vertex, face_in_slot, faces_of_edge, faces_of_vertex, slot_index, slot_of, slots, Edge, Face};
pub use domain::Domain;
pub use error::LatticeError;
pub use geom::{gcd, lcm, Axis, Dir, Vec3i};
pub use isometry::{Isometry, PointOp};
pub use lattice::Lattice;
pub use patch::FacePatch;

//! File formats and the `cubelat` command line.

pub mod cli;
pub mod error;
pub mod mesh;
pub mod patch_io;

pub use error::{MeshError, ParseError};
pub use mesh::{export_mesh, import_mesh, MeshExport, MeshFormat};
pub use patch_io::{parse_domain, parse_patch, serialize_domain, serialize_patch};

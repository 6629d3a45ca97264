//! Local structure of lattice surfaces: vertex and edge classification, validation
//! against the cubic and discrete-minimal criteria, local censuses and planar slices.

pub mod census;
pub mod classify;
pub mod config;
pub mod diagram;
pub mod validate;

pub use census::{
    all_face_diagrams, census_face_diagrams, census_vertex_configs, dot_class, observed_face_diagrams, FaceCenter,
    FaceCensus, FaceDiagram,
};
pub use classify::{classify_edge, classify_vertex, vertex_config, EdgeKind, LocalError};
pub use config::{
    classify_mask, cubic_masks, cycle_of, flange_dirs, flat_mask, flip_mask, mask_from_cycle, minimal_masks,
    monkey_base, screw_mask, transform_mask, Hand, VertexConfig, VertexTag,
};
pub use diagram::{slice_diagram, PlanarDiagram, Seg2};
pub use validate::{
    criteria, criterion_by_name, face_components, successive_flange_faces, validate, validate_cubic,
    validate_discrete_minimal, Cubic, DiscreteMinimal, SurfaceCriterion, ValidationReport, Violation,
};

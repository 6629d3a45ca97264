//! Classification of periodic cubic polyhedra with checkable certificates.

pub mod allscrew;
pub mod certificate;
pub mod congruence;
pub mod error;
pub mod forward;
pub mod gf2;
pub mod parity;
pub mod pipeline;
pub mod pushed;

pub use allscrew::{classify_all_screw, is_all_screw, read_column};
pub use certificate::{rebuild, Certificate, InsertKind, InsertRecord, PushRecord};
pub use congruence::{congruent, find_isometry, find_translation, is_vertex_transitive, symmetry_group, vertex_orbits};
pub use error::ClassifyError;
pub use forward::{forward_construct, Forward, ForwardOptions};
pub use parity::{eliminate_vertical_columns, push_set, tower_parity, ParityMap};
pub use pipeline::{classify, Classification};
pub use pushed::{find_pushed_form, tau_necklaces, tubes, PushedForm, PushedSearch};

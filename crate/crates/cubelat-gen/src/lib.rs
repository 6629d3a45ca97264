//! Generators for cubic polyhedra and discrete minimal surfaces.

pub mod build;
pub mod error;
pub mod families;
pub mod minimal;
pub mod propagate;
pub mod reflect;
pub mod registry;
pub mod words;

pub use build::{available_slots, build_from_configs, faces_at_vertices};
pub use error::GenError;
pub use families::{
    column_config, column_period, gen_column, gen_p0, gen_p1, gen_p_sigma, gen_p_tau, gen_sheet, gen_slab,
    layer_config, p_sigma_config, p_tau_config, p_tau_period, tau_layer_variants, LayerVariant,
};
pub use words::{canonical_cyclic, primitive_root, SigmaWord, TauLetter, TauWord};
pub use minimal::{flat_center_block, gen_flat_center, gen_scherk};
pub use reflect::{minimal_period, reflect_extend};
pub use propagate::{masks_with_germ, propagate_from};
pub use registry::{generator_by_name, generators, Generator, WordKind};

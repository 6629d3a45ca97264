//! Structural operations on cubic polyhedra: pushing towers, removing and inserting slabs.

pub mod error;
pub mod slab;
pub mod tower;

pub use error::TransformError;
pub use tower::{find_towers, is_tower, push_tower, push_unchecked, tower_by_base, tower_walls, Tower};
pub use slab::{
    find_slabs, insert_layer, insert_slab, insertable_pattern, normal_period, remove_slab, remove_slab_shift,
    slab_at, slab_candidates, slab_hands, substitute, InsertPattern, InsertSpec, Plane, Shift, Slab,
};

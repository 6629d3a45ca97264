//! Materializing a vertex-configuration field as a face patch.

use cubelat_lattice::{faces_of_vertex, Domain, FacePatch, Vec3i};

use crate::error::GenError;

/// Faces of `cfg(v)` over all stored vertices, checked for consistency.
///
/// Every stored vertex must end up with exactly the configuration `cfg` assigns to it
/// (restricted to the faces that exist in the domain). On a torus this is also the check
/// that the field closes up modulo the lattice.
pub fn build_from_configs(domain: Domain, cfg: impl Fn(Vec3i) -> u16) -> Result<FacePatch, GenError> {
    let mut patch = FacePatch::empty(domain);
    let vertices = domain.vertices();
    let masks: Vec<u16> = vertices.iter().map(|&v| cfg(v)).collect();
    for (&v, &m) in vertices.iter().zip(&masks) {
        for (k, f) in faces_of_vertex(v).into_iter().enumerate() {
            if m >> k & 1 == 1 && domain.reduce_face(f).is_some() {
                patch.insert(f)?;
            }
        }
    }
    for (&v, &m) in vertices.iter().zip(&masks) {
        let avail = available_slots(&domain, v);
        if patch.mask_at(v) & avail != m & avail {
            return Err(if domain.is_torus() {
                GenError::Period(format!("configuration field does not close up at vertex ({v})"))
            } else {
                GenError::Inconsistent(v)
            });
        }
    }
    Ok(patch)
}

/// Slots at `v` whose face lies in the domain.
pub fn available_slots(domain: &Domain, v: Vec3i) -> u16 {
    let mut m = 0;
    for (k, f) in faces_of_vertex(v).into_iter().enumerate() {
        if domain.reduce_face(f).is_some() {
            m |= 1 << k;
        }
    }
    m
}

/// Faces of `cfg(v)` for the listed vertices only, with no consistency check.
pub fn faces_at_vertices(
    domain: Domain,
    vertices: impl IntoIterator<Item = Vec3i>,
    cfg: impl Fn(Vec3i) -> u16,
) -> Result<FacePatch, GenError> {
    let mut patch = FacePatch::empty(domain);
    for v in vertices {
        let m = cfg(v);
        for (k, f) in faces_of_vertex(v).into_iter().enumerate() {
            if m >> k & 1 == 1 && domain.reduce_face(f).is_some() {
                patch.insert(f)?;
            }
        }
    }
    Ok(patch)
}

pub(crate) fn odd(t: i32) -> bool {
    t.rem_euclid(2) == 1
}

//! Congruence and symmetry of torus patches by brute force over the cube's point group.

use std::collections::BTreeSet;

use cubelat_lattice::{FacePatch, Isometry, PointOp, Vec3i};

/// A translation taking `a` onto `b` (same domain), if any.
pub fn find_translation(a: &FacePatch, b: &FacePatch) -> Option<Vec3i> {
    if a.domain() != b.domain() || a.len() != b.len() {
        return None;
    }
    b.domain().vertices().into_iter().find(|&t| a.translate(t) == *b)
}

/// An isometry taking `a` onto `b`, trying point ops in a fixed order.
pub fn find_isometry(a: &FacePatch, b: &FacePatch) -> Option<Isometry> {
    let (la, lb) = (a.domain().lattice()?, b.domain().lattice()?);
    if la.volume() != lb.volume() || a.len() != b.len() {
        return None;
    }
    for &g in PointOp::all() {
        if la.transform(g) != *lb {
            continue;
        }
        let ag = a.transform(Isometry::new(g, Vec3i::ZERO));
        if let Some(t) = find_translation(&ag, b) {
            return Some(Isometry::new(g, t));
        }
    }
    None
}

/// Whether some torus translation composed with a point op maps `a` onto `b`.
pub fn congruent(a: &FacePatch, b: &FacePatch) -> bool {
    find_isometry(a, b).is_some()
}

/// Isometries mapping the patch onto itself, one per coset of the lattice translations.
pub fn symmetry_group(p: &FacePatch) -> Vec<Isometry> {
    let Some(l) = p.domain().lattice() else { return Vec::new() };
    let mut out = Vec::new();
    for &g in PointOp::all() {
        if !l.is_invariant_under(g) {
            continue;
        }
        let pg = p.transform(Isometry::new(g, Vec3i::ZERO));
        for t in p.domain().vertices() {
            if pg.translate(t) == *p {
                out.push(Isometry::new(g, t));
            }
        }
    }
    out
}

/// Orbits of the vertex representatives under the symmetry group.
pub fn vertex_orbits(p: &FacePatch) -> Vec<BTreeSet<Vec3i>> {
    let dom = *p.domain();
    let group = symmetry_group(p);
    let mut left: BTreeSet<Vec3i> = dom.vertices().into_iter().collect();
    let mut out = Vec::new();
    while let Some(&v) = left.iter().next() {
        let orbit: BTreeSet<Vec3i> = group.iter().filter_map(|h| dom.reduce_vertex(h.apply(v))).collect();
        for w in &orbit {
            left.remove(w);
        }
        out.push(orbit);
    }
    out
}

pub fn is_vertex_transitive(p: &FacePatch) -> bool {
    vertex_orbits(p).len() == 1
}

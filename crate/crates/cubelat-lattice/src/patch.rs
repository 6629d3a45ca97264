use crate::cell::{faces_of_edge, faces_of_vertex, Edge, Face};
use crate::domain::Domain;
use crate::error::LatticeError;
use crate::geom::Vec3i;
use crate::isometry::Isometry;
use crate::lattice::Lattice;

/// A set of lattice squares over a domain.
///
/// Faces are stored densely, indexed by (z, y, x, normal) of the reduced corner,
/// so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacePatch {
    domain: Domain,
    bits: Vec<bool>,
    len: usize,
}

impl FacePatch {
    pub fn empty(domain: Domain) -> FacePatch {
        FacePatch { domain, bits: vec![false; domain.face_slot_count()], len: 0 }
    }

    /// Every lattice square of the domain (the full 2-skeleton).
    pub fn full(domain: Domain) -> FacePatch {
        let mut p = FacePatch::empty(domain);
        for i in 0..p.bits.len() {
            let f = domain.face_at_index(i);
            if domain.reduce_face(f).is_some() {
                p.bits[i] = true;
                p.len += 1;
            }
        }
        p
    }

    pub fn from_faces(domain: Domain, faces: impl IntoIterator<Item = Face>) -> Result<FacePatch, LatticeError> {
        let mut p = FacePatch::empty(domain);
        for f in faces {
            p.insert(f)?;
        }
        Ok(p)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, f: Face) -> bool {
        self.domain.face_index(f).is_some_and(|i| self.bits[i])
    }

    /// Adds a face; returns whether it was new.
    pub fn insert(&mut self, f: Face) -> Result<bool, LatticeError> {
        let i = self.domain.face_index(f).ok_or(LatticeError::FaceOutside(f))?;
        let fresh = !self.bits[i];
        if fresh {
            self.bits[i] = true;
            self.len += 1;
        }
        Ok(fresh)
    }

    /// Removes a face; returns whether it was present.
    pub fn remove(&mut self, f: Face) -> bool {
        match self.domain.face_index(f) {
            Some(i) if self.bits[i] => {
                self.bits[i] = false;
                self.len -= 1;
                true
            }
            _ => false,
        }
    }

    pub fn toggle(&mut self, f: Face) -> Result<(), LatticeError> {
        if !self.remove(f) {
            self.insert(f)?;
        }
        Ok(())
    }

    /// Faces in storage order (reduced representatives).
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| self.domain.face_at_index(i))
    }

    /// Bit `k` is set when the face in slot `k` at `v` is present.
    pub fn mask_at(&self, v: Vec3i) -> u16 {
        let mut m = 0u16;
        for (k, f) in faces_of_vertex(v).iter().enumerate() {
            if self.contains(*f) {
                m |= 1 << k;
            }
        }
        m
    }

    /// The incident faces of `v` that belong to the patch.
    pub fn patch_faces_at(&self, v: Vec3i) -> Result<Vec<Face>, LatticeError> {
        if self.domain.reduce_vertex(v).is_none() {
            return Err(LatticeError::VertexOutside(v));
        }
        Ok(faces_of_vertex(v).into_iter().filter(|f| self.contains(*f)).collect())
    }

    /// Incident faces of `e` present in the patch, in `faces_of_edge` order.
    pub fn faces_on_edge(&self, e: Edge) -> Vec<Face> {
        faces_of_edge(e).into_iter().filter(|f| self.contains(*f)).collect()
    }

    pub fn translate(&self, t: Vec3i) -> FacePatch {
        self.transform(Isometry::translation(t))
    }

    pub fn transform(&self, iso: Isometry) -> FacePatch {
        let domain = self.domain.transform(iso);
        let mut out = FacePatch::empty(domain);
        for f in self.faces() {
            out.insert(iso.apply_face(f)).expect("image of an in-domain face");
        }
        out
    }

    /// Re-express a torus patch over a finer lattice.
    pub fn lift(&self, target: Lattice) -> Result<FacePatch, LatticeError> {
        let own = self.domain.lattice().ok_or(LatticeError::UnsupportedDomain)?;
        if !target.is_sublattice_of(own) {
            return Err(LatticeError::NotSublattice);
        }
        let domain = Domain::Torus(target);
        let mut out = FacePatch::empty(domain);
        for i in 0..out.bits.len() {
            if self.contains(domain.face_at_index(i)) {
                out.bits[i] = true;
                out.len += 1;
            }
        }
        Ok(out)
    }

    /// Samples the (possibly periodic) patch on a window.
    pub fn restrict(&self, window: Domain) -> Result<FacePatch, LatticeError> {
        if window.is_torus() {
            return Err(LatticeError::UnsupportedDomain);
        }
        let mut out = FacePatch::empty(window);
        for i in 0..out.bits.len() {
            let f = window.face_at_index(i);
            if window.reduce_face(f).is_some() && self.contains(f) {
                out.bits[i] = true;
                out.len += 1;
            }
        }
        Ok(out)
    }

    /// Equality of the underlying (periodic) face sets, regardless of the chosen lattice.
    pub fn same_surface(&self, other: &FacePatch) -> bool {
        match (self.domain, other.domain) {
            (Domain::Torus(a), Domain::Torus(b)) => {
                if a == b {
                    return self.bits == other.bits;
                }
                let r = a.common_rect(&b);
                let x = self.lift(r).expect("rect sublattice");
                let y = other.lift(r).expect("rect sublattice");
                x.bits == y.bits
            }
            _ => self == other,
        }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Axis;

    #[test]
    fn full_torus_has_twelve_at_each_vertex() {
        let p = FacePatch::full(Domain::torus(2, 2, 2).unwrap());
        assert_eq!(p.len(), 24);
        assert_eq!(p.patch_faces_at(Vec3i::new(1, 0, 1)).unwrap().len(), 12);
    }

    #[test]
    fn empty_patch_has_nothing() {
        let p = FacePatch::empty(Domain::torus(2, 2, 2).unwrap());
        assert!(p.patch_faces_at(Vec3i::ZERO).unwrap().is_empty());
    }

    #[test]
    fn window_rejects_outside_faces() {
        let d = Domain::cube(0, 1).unwrap();
        let mut p = FacePatch::empty(d);
        assert!(p.insert(Face::new(Vec3i::ZERO, Axis::Z)).unwrap());
        assert!(p.insert(Face::new(Vec3i::new(1, 0, 0), Axis::Z)).is_err());
        assert!(p.patch_faces_at(Vec3i::new(2, 0, 0)).is_err());
        assert_eq!(FacePatch::full(d).len(), 6);
    }

    #[test]
    fn lift_and_compare() {
        let d = Domain::torus(2, 2, 2).unwrap();
        let p = FacePatch::from_faces(d, [Face::new(Vec3i::ZERO, Axis::X)]).unwrap();
        let q = p.lift(Lattice::rect(4, 2, 2).unwrap()).unwrap();
        assert_eq!(q.len(), 2);
        assert!(p.same_surface(&q));
        assert!(p.lift(Lattice::rect(3, 2, 2).unwrap()).is_err());
    }

    #[test]
    fn toggle_is_involution() {
        let d = Domain::torus(2, 2, 2).unwrap();
        let mut p = FacePatch::empty(d);
        let f = Face::new(Vec3i::new(3, 3, 3), Axis::Y);
        p.toggle(f).unwrap();
        assert!(p.contains(Face::new(Vec3i::new(1, 1, 1), Axis::Y)));
        p.toggle(f).unwrap();
        assert!(p.is_empty());
    }
}

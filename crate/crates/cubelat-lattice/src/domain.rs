use std::fmt;

use crate::cell::{faces_of_edge, Edge, Face};
use crate::error::LatticeError;
use crate::geom::{Axis, Vec3i};
use crate::isometry::Isometry;
use crate::lattice::Lattice;

/// Where a patch lives: a closed box of vertices, or a periodic quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Window { lo: Vec3i, hi: Vec3i },
    Torus(Lattice),
}

impl Domain {
    pub fn window(lo: Vec3i, hi: Vec3i) -> Result<Domain, LatticeError> {
        if !lo.le_all(hi) {
            return Err(LatticeError::BadWindow { lo, hi });
        }
        Ok(Domain::Window { lo, hi })
    }

    /// Window `[lo, hi]^3`.
    pub fn cube(lo: i32, hi: i32) -> Result<Domain, LatticeError> {
        Domain::window(Vec3i::new(lo, lo, lo), Vec3i::new(hi, hi, hi))
    }

    pub fn torus(px: i32, py: i32, pz: i32) -> Result<Domain, LatticeError> {
        Ok(Domain::Torus(Lattice::rect(px, py, pz)?))
    }

    pub fn is_torus(&self) -> bool {
        matches!(self, Domain::Torus(_))
    }

    pub fn lattice(&self) -> Option<&Lattice> {
        match self {
            Domain::Torus(l) => Some(l),
            Domain::Window { .. } => None,
        }
    }

    /// Reduce `p` modulo the torus lattice.
    pub fn wrap(&self, p: Vec3i) -> Result<Vec3i, LatticeError> {
        match self {
            Domain::Torus(l) => Ok(l.reduce(p)),
            Domain::Window { .. } => Err(LatticeError::UnsupportedDomain),
        }
    }

    /// Origin and extent of the storage box.
    pub fn storage_box(&self) -> (Vec3i, [usize; 3]) {
        match self {
            Domain::Torus(l) => (Vec3i::ZERO, l.periods().map(|p| p as usize)),
            Domain::Window { lo, hi } => {
                let n = (*hi - *lo).to_array().map(|d| d as usize + 1);
                (*lo, n)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        let (_, n) = self.storage_box();
        n[0] * n[1] * n[2]
    }

    pub fn face_slot_count(&self) -> usize {
        self.vertex_count() * 3
    }

    /// All stored vertices, ordered by (z, y, x).
    pub fn vertices(&self) -> Vec<Vec3i> {
        let (o, n) = self.storage_box();
        let mut out = Vec::with_capacity(n[0] * n[1] * n[2]);
        for z in 0..n[2] as i32 {
            for y in 0..n[1] as i32 {
                for x in 0..n[0] as i32 {
                    out.push(o + Vec3i::new(x, y, z));
                }
            }
        }
        out
    }

    pub fn vertex_index(&self, v: Vec3i) -> Option<usize> {
        let v = self.reduce_vertex(v)?;
        let (o, n) = self.storage_box();
        let d = v - o;
        Some((d.z as usize * n[1] + d.y as usize) * n[0] + d.x as usize)
    }

    pub fn reduce_vertex(&self, v: Vec3i) -> Option<Vec3i> {
        match self {
            Domain::Torus(l) => Some(l.reduce(v)),
            Domain::Window { lo, hi } => (lo.le_all(v) && v.le_all(*hi)).then_some(v),
        }
    }

    /// Canonical representative of `f`, or `None` if it is not inside a window.
    pub fn reduce_face(&self, f: Face) -> Option<Face> {
        match self {
            Domain::Torus(l) => Some(Face::new(l.reduce(f.corner), f.normal)),
            Domain::Window { lo, hi } => {
                let (a, b) = f.span();
                let far = f.corner + Vec3i::axis(a, 1) + Vec3i::axis(b, 1);
                (lo.le_all(f.corner) && far.le_all(*hi)).then_some(f)
            }
        }
    }

    pub fn face_index(&self, f: Face) -> Option<usize> {
        let f = self.reduce_face(f)?;
        let (o, n) = self.storage_box();
        let d = f.corner - o;
        Some(((d.z as usize * n[1] + d.y as usize) * n[0] + d.x as usize) * 3 + f.normal.index())
    }

    pub fn face_at_index(&self, i: usize) -> Face {
        let (o, n) = self.storage_box();
        let normal = Axis::from_index(i % 3);
        let c = i / 3;
        let x = (c % n[0]) as i32;
        let y = ((c / n[0]) % n[1]) as i32;
        let z = (c / (n[0] * n[1])) as i32;
        Face::new(o + Vec3i::new(x, y, z), normal)
    }

    /// A vertex is interior when all twelve incident faces belong to the domain.
    pub fn is_interior(&self, v: Vec3i) -> bool {
        match self {
            Domain::Torus(_) => true,
            Domain::Window { lo, hi } => {
                let one = Vec3i::new(1, 1, 1);
                (*lo + one).le_all(v) && v.le_all(*hi - one)
            }
        }
    }

    /// An edge is checkable when all four faces containing it belong to the domain.
    pub fn edge_is_interior(&self, e: Edge) -> bool {
        faces_of_edge(e).iter().all(|f| self.reduce_face(*f).is_some())
    }

    /// Interior vertices, ordered by (z, y, x).
    pub fn interior_vertices(&self) -> Vec<Vec3i> {
        self.vertices().into_iter().filter(|v| self.is_interior(*v)).collect()
    }

    /// Image domain under an isometry.
    pub fn transform(&self, iso: Isometry) -> Domain {
        match self {
            Domain::Torus(l) => Domain::Torus(l.transform(iso.op)),
            Domain::Window { lo, hi } => {
                let a = iso.apply(*lo);
                let b = iso.apply(*hi);
                Domain::Window {
                    lo: Vec3i::new(a.x.min(b.x), a.y.min(b.y), a.z.min(b.z)),
                    hi: Vec3i::new(a.x.max(b.x), a.y.max(b.y), a.z.max(b.z)),
                }
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Window { lo, hi } => write!(f, "window {} {}", lo, hi),
            Domain::Torus(l) => write!(f, "torus {}", l),
        }
    }
}

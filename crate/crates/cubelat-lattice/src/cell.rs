use std::fmt;
use std::sync::OnceLock;

use crate::geom::{Axis, Dir, Vec3i};

/// Unit lattice square with minimal corner `corner`, spanned by the two axes other than `normal`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub corner: Vec3i,
    pub normal: Axis,
}

/// Unit lattice segment from `corner` to `corner + e_dir`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub corner: Vec3i,
    pub dir: Axis,
}

impl Face {
    pub const fn new(corner: Vec3i, normal: Axis) -> Face {
        Face { corner, normal }
    }

    /// The two spanning axes in cyclic order after the normal.
    pub fn span(self) -> (Axis, Axis) {
        (self.normal.next(), self.normal.prev())
    }

    pub fn vertices(self) -> [Vec3i; 4] {
        let (a, b) = self.span();
        let c = self.corner;
        let ea = Vec3i::axis(a, 1);
        let eb = Vec3i::axis(b, 1);
        [c, c + ea, c + ea + eb, c + eb]
    }

    pub fn edges(self) -> [Edge; 4] {
        let (a, b) = self.span();
        let c = self.corner;
        [
            Edge::new(c, a),
            Edge::new(c + Vec3i::axis(a, 1), b),
            Edge::new(c + Vec3i::axis(b, 1), a),
            Edge::new(c, b),
        ]
    }

    /// Twice the center point; all coordinates are then integers.
    pub fn center2(self) -> Vec3i {
        let (a, b) = self.span();
        self.corner * 2 + Vec3i::axis(a, 1) + Vec3i::axis(b, 1)
    }

    /// Inverse of `center2`.
    pub fn from_center2(c: Vec3i) -> Option<Face> {
        let odd: Vec<Axis> = Axis::ALL.iter().copied().filter(|&a| c[a].rem_euclid(2) == 1).collect();
        if odd.len() != 2 {
            return None;
        }
        let normal = Axis::third(odd[0], odd[1]);
        let corner = c.map(|t| t.div_euclid(2));
        Some(Face::new(corner, normal))
    }

    pub fn translate(self, t: Vec3i) -> Face {
        Face::new(self.corner + t, self.normal)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.corner, self.normal)
    }
}

impl Edge {
    pub const fn new(corner: Vec3i, dir: Axis) -> Edge {
        Edge { corner, dir }
    }

    pub fn endpoints(self) -> [Vec3i; 2] {
        [self.corner, self.corner + Vec3i::axis(self.dir, 1)]
    }

    pub fn translate(self, t: Vec3i) -> Edge {
        Edge::new(self.corner + t, self.dir)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.corner, self.dir)
    }
}

/// The four faces containing `e`.
///
/// Order: with `b = dir.next()` and `c = dir.prev()`, the two faces of normal `c`
/// (corner, corner - e_b) come first, then the two of normal `b` (corner, corner - e_c).
pub fn faces_of_edge(e: Edge) -> [Face; 4] {
    let b = e.dir.next();
    let c = e.dir.prev();
    let p = e.corner;
    [
        Face::new(p, c),
        Face::new(p - Vec3i::axis(b, 1), c),
        Face::new(p, b),
        Face::new(p - Vec3i::axis(c, 1), b),
    ]
}

/// The six edges at a vertex, indexed like `Dir::ALL`.
pub fn edges_of_vertex(v: Vec3i) -> [Edge; 6] {
    let mut out = [Edge::new(v, Axis::X); 6];
    for d in Dir::ALL {
        out[d.index()] = if d.positive {
            Edge::new(v, d.axis)
        } else {
            Edge::new(v - Vec3i::axis(d.axis, 1), d.axis)
        };
    }
    out
}

/// A face slot at a vertex is an unordered pair of perpendicular directions.
/// Slot `i` pairs `SLOTS[i].0` with `SLOTS[i].1`.
pub fn slots() -> &'static [(Dir, Dir); 12] {
    static SLOTS: OnceLock<[(Dir, Dir); 12]> = OnceLock::new();
    SLOTS.get_or_init(|| {
        let mut out = [(Dir::ALL[0], Dir::ALL[2]); 12];
        let mut k = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                if Dir::ALL[i].axis != Dir::ALL[j].axis {
                    out[k] = (Dir::ALL[i], Dir::ALL[j]);
                    k += 1;
                }
            }
        }
        out
    })
}

/// Slot index of an (unordered) pair of perpendicular directions.
pub fn slot_index(d1: Dir, d2: Dir) -> usize {
    static TABLE: OnceLock<[[u8; 6]; 6]> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut t = [[u8::MAX; 6]; 6];
        for (k, (a, b)) in slots().iter().enumerate() {
            t[a.index()][b.index()] = k as u8;
            t[b.index()][a.index()] = k as u8;
        }
        t
    });
    let k = t[d1.index()][d2.index()];
    assert!(k != u8::MAX, "directions {d1} and {d2} are not perpendicular");
    k as usize
}

/// The face at `v` spanned by directions `d1` and `d2`.
pub fn face_in_slot(v: Vec3i, d1: Dir, d2: Dir) -> Face {
    let mut c = v;
    for d in [d1, d2] {
        if !d.positive {
            c[d.axis] -= 1;
        }
    }
    Face::new(c, Axis::third(d1.axis, d2.axis))
}

/// The twelve faces incident to `v`, in slot order.
pub fn faces_of_vertex(v: Vec3i) -> [Face; 12] {
    let mut out = [Face::new(v, Axis::X); 12];
    for (k, (a, b)) in slots().iter().enumerate() {
        out[k] = face_in_slot(v, *a, *b);
    }
    out
}

/// Slot of `f` at vertex `v`, if `v` is a corner of `f`.
pub fn slot_of(v: Vec3i, f: Face) -> Option<usize> {
    let (a, b) = f.span();
    let off = v - f.corner;
    if off[f.normal] != 0 {
        return None;
    }
    let da = match off[a] {
        0 => Dir::plus(a),
        1 => Dir::minus(a),
        _ => return None,
    };
    let db = match off[b] {
        0 => Dir::plus(b),
        1 => Dir::minus(b),
        _ => return None,
    };
    Some(slot_index(da, db))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn edge_faces_documented_order() {
        let got = faces_of_edge(Edge::new(Vec3i::ZERO, Axis::X));
        let want = [
            Face::new(Vec3i::new(0, 0, 0), Axis::Z),
            Face::new(Vec3i::new(0, -1, 0), Axis::Z),
            Face::new(Vec3i::new(0, 0, 0), Axis::Y),
            Face::new(Vec3i::new(0, 0, -1), Axis::Y),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn edge_faces_translate() {
        let p = Vec3i::new(5, 5, 5);
        let a = faces_of_edge(Edge::new(p, Axis::Z));
        let b = faces_of_edge(Edge::new(Vec3i::ZERO, Axis::Z));
        for (fa, fb) in a.iter().zip(b.iter()) {
            assert_eq!(*fa, fb.translate(p));
            assert_ne!(fa.normal, Axis::Z);
        }
        let set: BTreeSet<_> = a.iter().collect();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn vertex_faces_at_origin() {
        let fs = faces_of_vertex(Vec3i::ZERO);
        let set: BTreeSet<_> = fs.iter().copied().collect();
        assert_eq!(set.len(), 12);
        let zs: BTreeSet<Vec3i> = fs.iter().filter(|f| f.normal == Axis::Z).map(|f| f.corner).collect();
        let want: BTreeSet<Vec3i> = [(0, 0, 0), (-1, 0, 0), (0, -1, 0), (-1, -1, 0)]
            .iter()
            .map(|&(x, y, z)| Vec3i::new(x, y, z))
            .collect();
        assert_eq!(zs, want);
        for a in Axis::ALL {
            assert_eq!(fs.iter().filter(|f| f.normal == a).count(), 4);
        }
    }

    #[test]
    fn slot_of_inverts_face_in_slot() {
        let v = Vec3i::new(2, -1, 7);
        for (k, f) in faces_of_vertex(v).iter().enumerate() {
            assert_eq!(slot_of(v, *f), Some(k));
            assert!(f.vertices().contains(&v));
        }
    }

    #[test]
    fn center2_round_trip() {
        for f in faces_of_vertex(Vec3i::new(1, 2, 3)) {
            assert_eq!(Face::from_center2(f.center2()), Some(f));
        }
    }
}

use std::fmt;
use std::sync::OnceLock;

use crate::cell::{Edge, Face};
use crate::geom::{Axis, Dir, Vec3i};

/// Element of the cube's point group: a signed permutation matrix.
/// `apply(v)[i] = signs[i] * v[perm[i]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointOp {
    perm: [u8; 3],
    signs: [i8; 3],
}

impl PointOp {
    pub const IDENTITY: PointOp = PointOp { perm: [0, 1, 2], signs: [1, 1, 1] };

    pub fn new(perm: [usize; 3], signs: [i32; 3]) -> Option<PointOp> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return None;
        }
        Some(PointOp {
            perm: [perm[0] as u8, perm[1] as u8, perm[2] as u8],
            signs: [signs[0] as i8, signs[1] as i8, signs[2] as i8],
        })
    }

    /// All 48 elements, identity first.
    pub fn all() -> &'static [PointOp] {
        static ALL: OnceLock<Vec<PointOp>> = OnceLock::new();
        ALL.get_or_init(|| {
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let mut out = Vec::with_capacity(48);
            for p in perms {
                for bits in 0..8 {
                    let s = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
                    out.push(PointOp::new(p, s).expect("valid signed permutation"));
                }
            }
            out
        })
    }

    /// Reflection `v[axis] -> -v[axis]`.
    pub fn flip(axis: Axis) -> PointOp {
        let mut s = [1, 1, 1];
        s[axis.index()] = -1;
        PointOp::new([0, 1, 2], s).unwrap()
    }

    /// A proper rotation taking `from` to the Z axis, with positive orientation preserved.
    pub fn axis_to_z(from: Axis) -> PointOp {
        match from {
            Axis::Z => PointOp::IDENTITY,
            // (x,y,z) -> (y,z,x): new z = old x
            Axis::X => PointOp::new([1, 2, 0], [1, 1, 1]).unwrap(),
            // (x,y,z) -> (z,x,y): new z = old y
            Axis::Y => PointOp::new([2, 0, 1], [1, 1, 1]).unwrap(),
        }
    }

    pub fn apply(self, v: Vec3i) -> Vec3i {
        let a = v.to_array();
        Vec3i::new(
            self.signs[0] as i32 * a[self.perm[0] as usize],
            self.signs[1] as i32 * a[self.perm[1] as usize],
            self.signs[2] as i32 * a[self.perm[2] as usize],
        )
    }

    /// Image of the coordinate axis `a` (as an unsigned line).
    pub fn apply_axis(self, a: Axis) -> Axis {
        self.apply_dir(Dir::plus(a)).axis
    }

    pub fn apply_dir(self, d: Dir) -> Dir {
        Dir::from_vector(self.apply(d.vector())).expect("unit vector maps to unit vector")
    }

    pub fn apply_face(self, f: Face) -> Face {
        Face::from_center2(self.apply(f.center2())).expect("face maps to face")
    }

    pub fn apply_edge(self, e: Edge) -> Edge {
        let [p, q] = e.endpoints();
        let (p, q) = (self.apply(p), self.apply(q));
        let lo = Vec3i::new(p.x.min(q.x), p.y.min(q.y), p.z.min(q.z));
        Edge::new(lo, self.apply_axis(e.dir))
    }

    /// `(self * other)(v) = self(other(v))`.
    pub fn compose(self, other: PointOp) -> PointOp {
        let mut perm = [0u8; 3];
        let mut signs = [1i8; 3];
        for i in 0..3 {
            let j = self.perm[i] as usize;
            perm[i] = other.perm[j];
            signs[i] = self.signs[i] * other.signs[j];
        }
        PointOp { perm, signs }
    }

    pub fn inverse(self) -> PointOp {
        let mut perm = [0u8; 3];
        let mut signs = [1i8; 3];
        for i in 0..3 {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            signs[j] = self.signs[i];
        }
        PointOp { perm, signs }
    }

    pub fn det(self) -> i32 {
        let p = self.perm;
        let inversions = (p[0] > p[1]) as i32 + (p[0] > p[2]) as i32 + (p[1] > p[2]) as i32;
        let ps = if inversions % 2 == 0 { 1 } else { -1 };
        ps * self.signs.iter().map(|&s| s as i32).product::<i32>()
    }

    pub fn is_proper(self) -> bool {
        self.det() == 1
    }
}

impl fmt::Display for PointOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ['x', 'y', 'z'];
        let parts: Vec<String> = (0..3)
            .map(|i| {
                let s = if self.signs[i] < 0 { "-" } else { "" };
                format!("{}{}", s, names[self.perm[i] as usize])
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `v -> op(v) + shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub op: PointOp,
    pub shift: Vec3i,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry { op: PointOp::IDENTITY, shift: Vec3i::ZERO };

    pub fn new(op: PointOp, shift: Vec3i) -> Isometry {
        Isometry { op, shift }
    }

    pub fn translation(t: Vec3i) -> Isometry {
        Isometry::new(PointOp::IDENTITY, t)
    }

    pub fn apply(self, v: Vec3i) -> Vec3i {
        self.op.apply(v) + self.shift
    }

    pub fn apply_face(self, f: Face) -> Face {
        Face::from_center2(self.op.apply(f.center2()) + self.shift * 2).expect("face maps to face")
    }

    pub fn apply_edge(self, e: Edge) -> Edge {
        self.op.apply_edge(e).translate(self.shift)
    }

    pub fn compose(self, other: Isometry) -> Isometry {
        Isometry::new(self.op.compose(other.op), self.op.apply(other.shift) + self.shift)
    }

    pub fn inverse(self) -> Isometry {
        let inv = self.op.inverse();
        Isometry::new(inv, -inv.apply(self.shift))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::faces_of_vertex;
    use proptest::prelude::*;

    fn arb_op() -> impl Strategy<Value = PointOp> {
        (0usize..48).prop_map(|i| PointOp::all()[i])
    }

    fn arb_vec() -> impl Strategy<Value = Vec3i> {
        (-20i32..20, -20i32..20, -20i32..20).prop_map(|(x, y, z)| Vec3i::new(x, y, z))
    }

    #[test]
    fn group_has_48_distinct_elements() {
        let all = PointOp::all();
        assert_eq!(all.len(), 48);
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), 48);
        assert_eq!(all.iter().filter(|g| g.is_proper()).count(), 24);
    }

    #[test]
    fn axis_to_z_is_proper() {
        for a in Axis::ALL {
            let g = PointOp::axis_to_z(a);
            assert!(g.is_proper());
            assert_eq!(g.apply(Vec3i::axis(a, 1)), Vec3i::axis(Axis::Z, 1));
        }
    }

    proptest! {
        #[test]
        fn compose_matches_application(g in arb_op(), h in arb_op(), v in arb_vec()) {
            prop_assert_eq!(g.compose(h).apply(v), g.apply(h.apply(v)));
            prop_assert_eq!(g.inverse().apply(g.apply(v)), v);
            prop_assert_eq!(g.compose(h).det(), g.det() * h.det());
        }

        #[test]
        fn isometry_maps_vertex_stars(g in arb_op(), t in arb_vec(), v in arb_vec()) {
            let iso = Isometry::new(g, t);
            let mut image: Vec<Face> = faces_of_vertex(v).iter().map(|f| iso.apply_face(*f)).collect();
            let mut want: Vec<Face> = faces_of_vertex(iso.apply(v)).to_vec();
            image.sort();
            want.sort();
            prop_assert_eq!(image, want);
            prop_assert_eq!(iso.inverse().compose(iso), Isometry::IDENTITY);
        }
    }
}

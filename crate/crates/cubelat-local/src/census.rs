//! Local censuses: configurations at a vertex and diagrams around a face.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use cubelat_lattice::{slot_index, Axis, Dir, Face, FacePatch, Isometry, PointOp, Vec3i};

use crate::config::{classify_mask, cubic_masks, transform_mask, VertexTag};

/// Counts of legal configurations among all 6-face subsets at a vertex.
pub fn census_vertex_configs() -> BTreeMap<VertexTag, usize> {
    let mut out = BTreeMap::new();
    for m in 0u16..4096 {
        if m.count_ones() != 6 {
            continue;
        }
        let c = classify_mask(m);
        if c.is_cubic() {
            *out.entry(c.tag()).or_insert(0) += 1;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceCenter {
    Normal,
    OneFlange,
    TwoFlange,
    Missing,
}

impl FaceCenter {
    pub const ALL: [FaceCenter; 4] = [FaceCenter::Normal, FaceCenter::OneFlange, FaceCenter::TwoFlange, FaceCenter::Missing];

    pub fn name(self) -> &'static str {
        match self {
            FaceCenter::Normal => "normal",
            FaceCenter::OneFlange => "one-flange",
            FaceCenter::TwoFlange => "two-flange",
            FaceCenter::Missing => "missing",
        }
    }
}

impl fmt::Display for FaceCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Corners of the standard square `[0,1]^2 x {0}` in cyclic order.
pub const SQUARE_CORNERS: [Vec3i; 4] = [
    Vec3i::new(0, 0, 0),
    Vec3i::new(1, 0, 0),
    Vec3i::new(1, 1, 0),
    Vec3i::new(0, 1, 0),
];

/// The configuration around the standard square, given by the masks at its four corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceDiagram {
    pub corners: [u16; 4],
}

/// The 16 isometries fixing the standard square.
fn square_group() -> Vec<Isometry> {
    PointOp::all()
        .iter()
        .filter(|g| g.apply_axis(Axis::Z) == Axis::Z)
        .map(|&g| {
            let img = g.apply_face(Face::new(Vec3i::ZERO, Axis::Z));
            Isometry::new(g, -img.corner)
        })
        .collect()
}

fn corner_index(v: Vec3i) -> usize {
    SQUARE_CORNERS.iter().position(|c| *c == v).expect("square maps to itself")
}

/// Edge `i` of the square runs from corner `i` to corner `i+1`.
fn edge_dir(i: usize) -> Dir {
    Dir::from_vector(SQUARE_CORNERS[(i + 1) % 4] - SQUARE_CORNERS[i]).unwrap()
}

impl FaceDiagram {
    pub fn center_present(&self) -> bool {
        self.corners[0] >> slot_index(Dir::plus(Axis::X), Dir::plus(Axis::Y)) & 1 == 1
    }

    /// Presence of the faces on edge `i` other than the square itself, as (in-plane, up, down).
    fn edge_faces(&self, i: usize) -> (bool, bool, bool) {
        let d = edge_dir(i);
        let m = self.corners[i];
        let inward = Dir::from_vector(SQUARE_CORNERS[(i + 2) % 4] - SQUARE_CORNERS[(i + 1) % 4]).unwrap();
        let bit = |e: Dir| m >> slot_index(d, e) & 1 == 1;
        (bit(inward.opposite()), bit(Dir::plus(Axis::Z)), bit(Dir::minus(Axis::Z)))
    }

    /// Whether edge `i` is a flange (its two faces coplanar).
    pub fn edge_is_flange(&self, i: usize) -> bool {
        let (outer, up, down) = self.edge_faces(i);
        if self.center_present() {
            outer
        } else {
            up && down
        }
    }

    pub fn edge_is_crease(&self, i: usize) -> bool {
        let (outer, up, down) = self.edge_faces(i);
        let n = usize::from(self.center_present()) + usize::from(outer) + usize::from(up) + usize::from(down);
        n == 2 && !self.edge_is_flange(i)
    }

    pub fn center(&self) -> FaceCenter {
        if !self.center_present() {
            return FaceCenter::Missing;
        }
        match (0..4).filter(|&i| self.edge_is_flange(i)).count() {
            0 => FaceCenter::Normal,
            1 => FaceCenter::OneFlange,
            _ => FaceCenter::TwoFlange,
        }
    }

    /// Screw (black) corners as a 4-bit pattern in cyclic order.
    pub fn dots(&self) -> [bool; 4] {
        self.corners.map(|m| classify_mask(m).is_screw())
    }

    /// Dot-diagram class 1..6 for patterns 0000, 1000, 1100, 1010, 1110, 1111 (up to symmetry).
    pub fn dot_class(&self) -> u8 {
        dot_class(self.dots())
    }

    /// Lexicographically least image under the symmetries of the square.
    pub fn canonical(&self) -> FaceDiagram {
        square_group()
            .iter()
            .map(|h| {
                let mut c = [0u16; 4];
                for (j, &m) in self.corners.iter().enumerate() {
                    c[corner_index(h.apply(SQUARE_CORNERS[j]))] = transform_mask(m, h.op);
                }
                FaceDiagram { corners: c }
            })
            .min()
            .unwrap()
    }

    /// Whether the four corner masks agree on every face shared by two corners.
    pub fn consistent(&self) -> bool {
        for i in 0..4 {
            for f in cubelat_lattice::faces_of_vertex(SQUARE_CORNERS[i]).iter().enumerate() {
                let (k, face) = f;
                let here = self.corners[i] >> k & 1 == 1;
                for j in 0..4 {
                    if j == i {
                        continue;
                    }
                    if let Some(kj) = cubelat_lattice::slot_of(SQUARE_CORNERS[j], *face) {
                        if (self.corners[j] >> kj & 1 == 1) != here {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The diagram of `patch` around face slot `f` (which need not be present).
    pub fn around(patch: &FacePatch, f: Face) -> FaceDiagram {
        let op = PointOp::axis_to_z(f.normal);
        let img = op.apply_face(f);
        let iso = Isometry::new(op, -img.corner);
        let inv = iso.inverse();
        let corners = SQUARE_CORNERS.map(|c| transform_mask(patch.mask_at(inv.apply(c)), op));
        FaceDiagram { corners }
    }
}

pub fn dot_class(d: [bool; 4]) -> u8 {
    let n = d.iter().filter(|b| **b).count();
    match n {
        0 => 1,
        1 => 2,
        2 if d[0] == d[2] => 4,
        2 => 3,
        3 => 5,
        _ => 6,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCensus {
    pub center: FaceCenter,
    /// Canonical representatives, sorted.
    pub diagrams: Vec<FaceDiagram>,
}

impl FaceCensus {
    pub fn count(&self) -> usize {
        self.diagrams.len()
    }
}

/// All consistent corner assignments around the standard square, grouped into classes.
pub fn all_face_diagrams() -> BTreeMap<FaceCenter, BTreeSet<FaceDiagram>> {
    let masks = cubic_masks();
    let mut out: BTreeMap<FaceCenter, BTreeSet<FaceDiagram>> = BTreeMap::new();
    // corners 0 and 1 share edge 0, etc.; check pairwise consistency incrementally
    let mut stack = [0u16; 4];
    fn rec(k: usize, stack: &mut [u16; 4], masks: &[u16], out: &mut BTreeMap<FaceCenter, BTreeSet<FaceDiagram>>) {
        if k == 4 {
            let d = FaceDiagram { corners: *stack };
            if d.consistent() {
                out.entry(d.center()).or_default().insert(d.canonical());
            }
            return;
        }
        for &m in masks {
            stack[k] = m;
            let partial = FaceDiagram { corners: *stack };
            if partial_consistent(&partial, k) {
                rec(k + 1, stack, masks, out);
            }
        }
    }
    rec(0, &mut stack, masks, &mut out);
    out
}

fn partial_consistent(d: &FaceDiagram, upto: usize) -> bool {
    let i = upto;
    for (k, face) in cubelat_lattice::faces_of_vertex(SQUARE_CORNERS[i]).iter().enumerate() {
        let here = d.corners[i] >> k & 1 == 1;
        for j in 0..i {
            if let Some(kj) = cubelat_lattice::slot_of(SQUARE_CORNERS[j], *face) {
                if (d.corners[j] >> kj & 1 == 1) != here {
                    return false;
                }
            }
        }
    }
    true
}

/// Classes of completed diagrams around a face of the given kind.
pub fn census_face_diagrams(center: FaceCenter) -> FaceCensus {
    let all = all_face_diagrams();
    FaceCensus { center, diagrams: all.get(&center).map(|s| s.iter().copied().collect()).unwrap_or_default() }
}

/// Classes observed around every face slot of a patch (torus or window interior).
pub fn observed_face_diagrams(patch: &FacePatch) -> BTreeMap<FaceCenter, BTreeSet<FaceDiagram>> {
    let domain = patch.domain();
    let mut out: BTreeMap<FaceCenter, BTreeSet<FaceDiagram>> = BTreeMap::new();
    for i in 0..domain.face_slot_count() {
        let f = domain.face_at_index(i);
        if domain.reduce_face(f).is_none() || !f.vertices().iter().all(|v| domain.is_interior(*v)) {
            continue;
        }
        let d = FaceDiagram::around(patch, f);
        out.entry(d.center()).or_default().insert(d.canonical());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_census() {
        let c = census_vertex_configs();
        assert_eq!(c.get(&VertexTag::M), Some(&4));
        assert_eq!(c.get(&VertexTag::S), Some(&6));
        assert_eq!(c.get(&VertexTag::Z), Some(&6));
        assert_eq!(c.values().sum::<usize>(), 16);
    }

    #[test]
    fn face_census_counts() {
        let all = all_face_diagrams();
        let n = |c| all.get(&c).map_or(0, |s: &BTreeSet<FaceDiagram>| s.len());
        assert_eq!(n(FaceCenter::Normal), 6);
        assert_eq!(n(FaceCenter::OneFlange), 3);
        assert_eq!(n(FaceCenter::TwoFlange), 2);
        assert_eq!(n(FaceCenter::Missing), 9);
    }

    #[test]
    fn normal_faces_cover_six_dot_classes() {
        let c = census_face_diagrams(FaceCenter::Normal);
        let classes: BTreeSet<u8> = c.diagrams.iter().map(|d| d.dot_class()).collect();
        assert_eq!(classes, (1..=6).collect());
    }

    #[test]
    fn missing_with_creases_have_even_dots() {
        let c = census_face_diagrams(FaceCenter::Missing);
        let creased: Vec<_> = c.diagrams.iter().filter(|d| (0..4).all(|i| d.edge_is_crease(i))).collect();
        assert_eq!(creased.len(), 4);
        let classes: BTreeSet<u8> = creased.iter().map(|d| d.dot_class()).collect();
        assert_eq!(classes, [1u8, 3, 4, 6].into_iter().collect());
    }

    #[test]
    fn canonical_is_idempotent() {
        for d in census_face_diagrams(FaceCenter::OneFlange).diagrams {
            assert_eq!(d.canonical(), d);
            assert!(d.consistent());
        }
    }
}

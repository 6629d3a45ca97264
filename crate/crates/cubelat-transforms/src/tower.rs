//! Towers: 2x2xZ blocks around a line of normal faces, and pushing them.

use std::collections::BTreeSet;

use cubelat_lattice::{Axis, Domain, Face, FacePatch, Vec3i};
use cubelat_local::{classify_edge, EdgeKind, FaceDiagram};

use crate::error::TransformError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tower {
    pub axis: Axis,
    /// Lower-left corner of the central cell, in the coordinates `(axis.next(), axis.prev())`.
    pub base: (i32, i32),
    /// Coordinate along the axis of the central face the tower was found from.
    pub level: i32,
    pub diagram_class: u8,
}

impl Tower {
    /// Corner of the anchoring central face.
    pub fn anchor(&self) -> Vec3i {
        let mut p = Vec3i::ZERO;
        p[self.axis] = self.level;
        p[self.axis.next()] = self.base.0;
        p[self.axis.prev()] = self.base.1;
        p
    }

    /// The four vertex lines of the tower, as points at the anchor level.
    pub fn column_points(&self) -> [Vec3i; 4] {
        let p = self.anchor();
        let (u, v) = (Vec3i::axis(self.axis.next(), 1), Vec3i::axis(self.axis.prev(), 1));
        [p, p + u, p + v, p + u + v]
    }
}

/// Levels along the axis that the tower occupies (relative to the anchor), and whether
/// the central face at each level must be checked.
fn levels(domain: &Domain, axis: Axis, anchor: Vec3i) -> Vec<(i32, bool)> {
    match domain {
        Domain::Torus(l) => (0..l.axis_period(axis)).map(|k| (k, true)).collect(),
        Domain::Window { lo, hi } => {
            (lo[axis] - anchor[axis]..hi[axis] - anchor[axis]).map(|k| (k, k + anchor[axis] > lo[axis])).collect()
        }
    }
}

fn central_face_is_normal(patch: &FacePatch, f: Face) -> bool {
    patch.contains(f) && f.edges().iter().all(|e| classify_edge(patch, *e) == Ok(EdgeKind::Crease))
}

fn tower_at(patch: &FacePatch, axis: Axis, anchor: Vec3i) -> bool {
    let domain = patch.domain();
    levels(domain, axis, anchor)
        .into_iter()
        .filter(|(_, check)| *check)
        .all(|(k, _)| central_face_is_normal(patch, Face::new(anchor + Vec3i::axis(axis, k), axis)))
}

fn make_tower(patch: &FacePatch, axis: Axis, anchor: Vec3i) -> Tower {
    let d = FaceDiagram::around(patch, Face::new(anchor, axis));
    Tower { axis, base: (anchor[axis.next()], anchor[axis.prev()]), level: anchor[axis], diagram_class: d.dot_class() }
}

/// All towers of a valid patch. On a torus each line of central faces is reported once.
pub fn find_towers(patch: &FacePatch) -> Vec<Tower> {
    let domain = *patch.domain();
    let mut out = Vec::new();
    for axis in Axis::ALL {
        match domain {
            Domain::Torus(l) => {
                let period = l.axis_period(axis);
                let mut seen = BTreeSet::new();
                for i in 0..domain.face_slot_count() {
                    let f = domain.face_at_index(i);
                    if f.normal != axis || seen.contains(&i) {
                        continue;
                    }
                    for k in 0..period {
                        seen.insert(domain.face_index(f.translate(Vec3i::axis(axis, k))).expect("torus"));
                    }
                    if tower_at(patch, axis, f.corner) {
                        out.push(make_tower(patch, axis, f.corner));
                    }
                }
            }
            Domain::Window { lo, hi } => {
                let (a, b) = (axis.next(), axis.prev());
                for u in lo[a] + 1..=hi[a] - 2 {
                    for v in lo[b] + 1..=hi[b] - 2 {
                        let mut p = Vec3i::ZERO;
                        p[axis] = lo[axis];
                        p[a] = u;
                        p[b] = v;
                        if hi[axis] - lo[axis] >= 2 && tower_at(patch, axis, p) {
                            let mut t = make_tower(patch, axis, p + Vec3i::axis(axis, 1));
                            t.level = lo[axis];
                            out.push(t);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The axis-parallel side walls of the tower at every level.
pub fn tower_walls(domain: &Domain, t: &Tower) -> Vec<Face> {
    let p = t.anchor();
    let (a, b) = (t.axis.next(), t.axis.prev());
    let mut out = Vec::new();
    for (k, _) in levels(domain, t.axis, p) {
        let q = p + Vec3i::axis(t.axis, k);
        for f in [
            Face::new(q, a),
            Face::new(q + Vec3i::axis(a, 1), a),
            Face::new(q, b),
            Face::new(q + Vec3i::axis(b, 1), b),
        ] {
            if domain.reduce_face(f).is_some() {
                out.push(f);
            }
        }
    }
    out
}

/// Whether `t` describes a tower of `patch` (its diagram class is not compared).
pub fn is_tower(patch: &FacePatch, t: &Tower) -> bool {
    tower_at(patch, t.axis, t.anchor())
}

/// Push a tower one unit along its axis by complementing its side walls.
pub fn push_tower(patch: &FacePatch, t: &Tower) -> Result<FacePatch, TransformError> {
    if !is_tower(patch, t) {
        return Err(TransformError::NotATower { axis: t.axis, base: t.base });
    }
    Ok(push_unchecked(patch, t))
}

/// Complement the walls without checking that the tower is present.
pub fn push_unchecked(patch: &FacePatch, t: &Tower) -> FacePatch {
    let mut out = patch.clone();
    for f in tower_walls(patch.domain(), t) {
        out.toggle(f).expect("wall lies in the domain");
    }
    out
}

/// Find a tower by axis and base coordinates.
pub fn tower_by_base(patch: &FacePatch, axis: Axis, base: (i32, i32)) -> Result<Tower, TransformError> {
    let domain = patch.domain();
    find_towers(patch)
        .into_iter()
        .find(|t| {
            t.axis == axis && {
                let mut p = Vec3i::ZERO;
                p[axis] = t.level;
                p[axis.next()] = base.0;
                p[axis.prev()] = base.1;
                match domain {
                    Domain::Torus(_) => {
                        let period = domain.lattice().map_or(1, |l| l.axis_period(axis));
                        (0..period).any(|k| {
                            domain.reduce_vertex(p + Vec3i::axis(axis, k)) == domain.reduce_vertex(t.anchor())
                        })
                    }
                    Domain::Window { .. } => t.base == base,
                }
            }
        })
        .ok_or(TransformError::NotATower { axis, base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_gen::{gen_p0, gen_p1, gen_p_tau, p_tau_period};
    use cubelat_local::{validate_cubic, vertex_config};

    #[test]
    fn p0_checkerboard_of_towers() {
        let p = gen_p0(Domain::torus(2, 2, 2).unwrap()).unwrap();
        let ts = find_towers(&p);
        for a in Axis::ALL {
            assert_eq!(ts.iter().filter(|t| t.axis == a).count(), 2, "{a}");
        }
        assert!(ts.iter().all(|t| t.diagram_class == 1));
    }

    #[test]
    fn p1_has_no_vertical_towers() {
        let p = gen_p1(Domain::torus(2, 2, 2).unwrap()).unwrap();
        let ts = find_towers(&p);
        assert!(!ts.is_empty());
        assert!(ts.iter().all(|t| t.axis == Axis::Z));
    }

    #[test]
    fn tau_xy_has_no_towers() {
        let t = "xy".parse().unwrap();
        let p = gen_p_tau(&t, Domain::torus(4, 4, p_tau_period(&t).unwrap()).unwrap()).unwrap();
        assert!(find_towers(&p).is_empty());
    }

    #[test]
    fn push_is_local_involution() {
        let p = gen_p0(Domain::torus(4, 4, 4).unwrap()).unwrap();
        for t in find_towers(&p) {
            let q = push_tower(&p, &t).unwrap();
            assert!(validate_cubic(&q).ok());
            assert!(is_tower(&q, &t));
            assert_eq!(push_tower(&q, &t).unwrap(), p);
            let cols: BTreeSet<Vec3i> = t
                .column_points()
                .iter()
                .flat_map(|c| (0..4).map(move |k| *c + Vec3i::axis(t.axis, k)))
                .map(|v| p.domain().reduce_vertex(v).unwrap())
                .collect();
            for v in p.domain().vertices() {
                let (a, b) = (vertex_config(&p, v), vertex_config(&q, v));
                if cols.contains(&v) {
                    assert!(a.is_monkey() && b.is_screw() && b.screw_axis() == Some(t.axis));
                } else {
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn window_towers() {
        let p = gen_p0(Domain::cube(0, 5).unwrap()).unwrap();
        let ts = find_towers(&p);
        assert!(!ts.is_empty());
        for t in ts {
            let q = push_tower(&p, &t).unwrap();
            assert!(validate_cubic(&q).ok());
        }
    }

    #[test]
    fn lookup_by_base() {
        let p = gen_p0(Domain::torus(2, 2, 2).unwrap()).unwrap();
        let t = find_towers(&p)[0];
        assert_eq!(tower_by_base(&p, t.axis, t.base).unwrap(), t);
        let missing = (t.base.0 + 1, t.base.1);
        assert!(tower_by_base(&p, t.axis, missing).is_err());
    }
}

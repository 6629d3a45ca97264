//! Topology of torus quotients of lattice surfaces.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use cubelat_lattice::{faces_of_edge, Axis, Domain, Edge, Face, FacePatch, Lattice, Vec3i};
use cubelat_local::{all_face_diagrams, classify_mask, validate_cubic, FaceCenter, FaceDiagram, VertexConfig};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("topology needs a torus patch")]
    NotTorus,
    #[error("patch is not a valid cubic polyhedron ({0} violations)")]
    Invalid(usize),
    #[error("vertex {0} has no defined curvature ({1})")]
    UndefinedDefect(Vec3i, &'static str),
    #[error("invariant failed: {0}")]
    Invariant(String),
}

/// An exact rational multiple of pi, in lowest terms with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiMultiple {
    pub num: i64,
    pub den: i64,
}

impl PiMultiple {
    pub fn new(num: i64, den: i64) -> PiMultiple {
        let g = gcd(num.abs(), den.abs()).max(1);
        let s = if den < 0 { -1 } else { 1 };
        PiMultiple { num: s * num / g, den: s * den / g }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => f.write_str("0"),
            (1, 1) => f.write_str("pi"),
            (-1, 1) => f.write_str("-pi"),
            (n, 1) => write!(f, "{n}pi"),
            (n, d) => write!(f, "{n}/{d}pi"),
        }
    }
}

/// Genus as `twice / 2`; integral only when `twice` is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Genus {
    pub twice: i64,
}

impl Genus {
    pub fn is_integral(&self) -> bool {
        self.twice % 2 == 0
    }

    pub fn value(&self) -> Option<i64> {
        self.is_integral().then_some(self.twice / 2)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(g) => write!(f, "{g}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyReport {
    pub k: usize,
    pub e: usize,
    pub f: usize,
    pub euler: i64,
    pub genus: Genus,
    /// Orientability of the quotient surface.
    pub orientable: bool,
    /// Orientability of the quotient by the doubled lattice; a period that swaps the two
    /// sides makes the quotient one-sided while this stays true.
    pub lift_orientable: bool,
    pub missing_squares: usize,
    /// Common defect of every vertex, if they all agree.
    pub defect_per_vertex: Option<PiMultiple>,
    pub total_defect: PiMultiple,
}

impl fmt::Display for TopologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k: {}", self.k)?;
        writeln!(f, "E: {}", self.e)?;
        writeln!(f, "F: {}", self.f)?;
        writeln!(f, "euler: {}", self.euler)?;
        writeln!(f, "genus: {}", self.genus)?;
        writeln!(f, "genus_integral: {}", self.genus.is_integral())?;
        writeln!(f, "orientable: {}", self.orientable)?;
        writeln!(f, "lift_orientable: {}", self.lift_orientable)?;
        writeln!(f, "missing_squares: {}", self.missing_squares)?;
        match self.defect_per_vertex {
            Some(d) => writeln!(f, "defect_per_vertex: {d}")?,
            None => writeln!(f, "defect_per_vertex: mixed")?,
        }
        writeln!(f, "total_defect: {}", self.total_defect)
    }
}

fn require_valid(patch: &FacePatch) -> Result<(), TopologyError> {
    if !patch.domain().is_torus() {
        return Err(TopologyError::NotTorus);
    }
    let r = validate_cubic(patch);
    if r.ok() {
        Ok(())
    } else {
        Err(TopologyError::Invalid(r.violations.len()))
    }
}

/// `2pi - n * pi/2` for a vertex with `n` incident faces.
pub fn curvature_defect(patch: &FacePatch, v: Vec3i) -> Result<PiMultiple, TopologyError> {
    let m = patch.mask_at(v);
    match classify_mask(m) {
        VertexConfig::Empty => Err(TopologyError::UndefinedDefect(v, "empty")),
        VertexConfig::Invalid => Err(TopologyError::UndefinedDefect(v, "invalid")),
        _ => Ok(PiMultiple::new(4 - i64::from(m.count_ones()), 2)),
    }
}

/// The four faces with normal `a` that meet at `v`.
fn faces_at_vertex_with_normal(v: Vec3i, a: Axis) -> [Face; 4] {
    let (u, w) = (Vec3i::axis(a.next(), 1), Vec3i::axis(a.prev(), 1));
    [Face::new(v, a), Face::new(v - u, a), Face::new(v - w, a), Face::new(v - u - w, a)]
}

/// Lattice faces of the torus that the patch omits.
pub fn missing_squares(patch: &FacePatch) -> Result<Vec<Face>, TopologyError> {
    require_valid(patch)?;
    let domain = patch.domain();
    for v in domain.vertices() {
        for a in Axis::ALL {
            let n = faces_at_vertex_with_normal(v, a).iter().filter(|f| patch.contains(**f)).count();
            if n != 2 {
                return Err(TopologyError::Invariant(format!("{n} of 4 squares with normal {a} at {v}")));
            }
        }
    }
    Ok((0..domain.face_slot_count()).map(|i| domain.face_at_index(i)).filter(|f| !patch.contains(*f)).collect())
}

/// Boundary direction of edge `e` when face `f` is oriented by `+normal`, as +1 or -1
/// along the edge axis.
fn induced_sign(f: Face, e: Edge) -> i32 {
    let n = Vec3i::axis(f.normal, 1);
    let mid2 = e.endpoints()[0] + e.endpoints()[1];
    let d = n.cross(mid2 - f.center2());
    d[e.dir]
}

/// A sign per face (+1 when oriented by `+normal`) such that every edge gets opposite
/// directions from its two faces, or `None` when no such choice exists.
pub fn face_orientation(patch: &FacePatch) -> Option<BTreeMap<Face, i32>> {
    let domain = patch.domain();
    let faces: Vec<Face> = patch.faces().collect();
    let index: BTreeMap<Face, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut sign: Vec<i32> = vec![0; faces.len()];
    for start in 0..faces.len() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let f = faces[i];
            for e in f.edges() {
                let here = sign[i] * induced_sign(f, e);
                // neighbours in the unreduced frame of this edge
                for g in faces_of_edge(e) {
                    if g == f {
                        continue;
                    }
                    let Some(&j) = domain.reduce_face(g).and_then(|r| index.get(&r)) else { continue };
                    let want = -here * induced_sign(g, e);
                    if sign[j] == 0 {
                        sign[j] = want;
                        queue.push_back(j);
                    } else if sign[j] != want {
                        return None;
                    }
                }
            }
        }
    }
    Some(faces.into_iter().zip(sign).collect())
}

pub fn is_orientable(patch: &FacePatch) -> bool {
    face_orientation(patch).is_some()
}

/// Orientability after lifting to the lattice spanned by twice the periods.
pub fn lift_is_orientable(patch: &FacePatch) -> Result<bool, TopologyError> {
    let l = patch.domain().lattice().ok_or(TopologyError::NotTorus)?;
    let doubled = Lattice::from_basis(l.basis().map(|b| b * 2)).map_err(|e| TopologyError::Invariant(e.to_string()))?;
    let lifted = patch.lift(doubled).map_err(|e| TopologyError::Invariant(e.to_string()))?;
    Ok(is_orientable(&lifted))
}

pub fn topology_report(patch: &FacePatch) -> Result<TopologyReport, TopologyError> {
    require_valid(patch)?;
    let domain: Domain = *patch.domain();
    let verts = domain.vertices();
    let k = verts.len();
    let mut e = 0;
    for &v in &verts {
        for a in Axis::ALL {
            if faces_of_edge(Edge::new(v, a)).iter().any(|f| patch.contains(*f)) {
                e += 1;
            }
        }
    }
    let f = patch.len();
    let euler = k as i64 - e as i64 + f as i64;
    let genus = Genus { twice: 2 - euler };
    let missing = missing_squares(patch)?.len();
    let defects = verts.iter().map(|&v| curvature_defect(patch, v)).collect::<Result<Vec<_>, _>>()?;
    let total = defects.iter().fold(PiMultiple::new(0, 1), |acc, d| {
        PiMultiple::new(acc.num * d.den + d.num * acc.den, acc.den * d.den)
    });
    let uniform = defects.first().copied().filter(|d0| defects.iter().all(|d| d == d0));
    let report = TopologyReport {
        k,
        e,
        f,
        euler,
        genus,
        orientable: is_orientable(patch),
        lift_orientable: lift_is_orientable(patch)?,
        missing_squares: missing,
        defect_per_vertex: uniform,
        total_defect: total,
    };
    check_invariants(&report)?;
    Ok(report)
}

fn check_invariants(r: &TopologyReport) -> Result<(), TopologyError> {
    let k = r.k as i64;
    let checks = [
        (r.e as i64 == 3 * k, "E = 3k"),
        (2 * r.f as i64 == 3 * k, "F = 3k/2"),
        (2 * r.euler == -k, "euler = -k/2"),
        (2 * r.missing_squares as i64 == 3 * k, "missing = 3k/2"),
        (r.total_defect == PiMultiple::new(2 * r.euler, 1), "total defect = 2 pi euler"),
    ];
    for (ok, what) in checks {
        if !ok {
            return Err(TopologyError::Invariant(what.to_string()));
        }
    }
    Ok(())
}

/// Diagrams around missing squares that are outside the census, or have an odd number of
/// screw corners.
pub fn unexpected_missing_diagrams(patch: &FacePatch) -> Vec<(Face, FaceDiagram)> {
    let census = all_face_diagrams().remove(&FaceCenter::Missing).unwrap_or_default();
    let domain = patch.domain();
    (0..domain.face_slot_count())
        .map(|i| domain.face_at_index(i))
        .filter(|f| !patch.contains(*f))
        .map(|f| (f, FaceDiagram::around(patch, f)))
        .filter(|(_, d)| !census.contains(&d.canonical()) || d.dots().iter().filter(|b| **b).count() % 2 == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_gen::{gen_p0, gen_p1, gen_p_sigma};

    fn torus(x: i32, y: i32, z: i32) -> Domain {
        Domain::torus(x, y, z).unwrap()
    }

    #[test]
    fn p0_and_p1_have_genus_three() {
        for p in [gen_p0(torus(2, 2, 2)).unwrap(), gen_p1(torus(2, 2, 2)).unwrap()] {
            let r = topology_report(&p).unwrap();
            assert_eq!((r.k, r.e, r.f, r.euler), (8, 24, 12, -4));
            assert_eq!(r.genus.value(), Some(3));
            assert!(r.orientable);
            assert_eq!(r.missing_squares, 12);
            assert_eq!(r.defect_per_vertex, Some(PiMultiple::new(-1, 1)));
            assert!(unexpected_missing_diagrams(&p).is_empty());
        }
    }

    #[test]
    fn single_letter_column_genus_five() {
        let p = gen_p_sigma(&"S".parse().unwrap(), torus(2, 2, 4)).unwrap();
        let r = topology_report(&p).unwrap();
        assert_eq!((r.k, r.euler, r.genus.value()), (16, -8, Some(5)));
    }

    #[test]
    fn defects_by_config() {
        let p = gen_p0(torus(2, 2, 2)).unwrap();
        assert_eq!(curvature_defect(&p, Vec3i::ZERO).unwrap().to_string(), "-pi");
        let e = FacePatch::empty(torus(2, 2, 2));
        assert!(matches!(curvature_defect(&e, Vec3i::ZERO), Err(TopologyError::UndefinedDefect(_, "empty"))));
        let flat = FacePatch::from_faces(
            torus(1, 1, 1),
            [Face::new(Vec3i::ZERO, Axis::Z)],
        )
        .unwrap();
        assert_eq!(curvature_defect(&flat, Vec3i::ZERO).unwrap(), PiMultiple::new(0, 1));
    }

    #[test]
    fn side_swapping_period_gives_one_sided_quotient() {
        let p = gen_p_sigma(&"SSZ".parse().unwrap(), torus(2, 2, 6)).unwrap();
        let r = topology_report(&p).unwrap();
        assert!(!r.orientable);
        assert!(r.lift_orientable);
        let q = gen_p_sigma(&"SSZ".parse().unwrap(), torus(2, 2, 12)).unwrap();
        assert!(topology_report(&q).unwrap().orientable);
    }

    #[test]
    fn full_skeleton_is_rejected() {
        let p = FacePatch::full(torus(2, 2, 2));
        assert!(matches!(missing_squares(&p), Err(TopologyError::Invalid(_))));
        assert!(topology_report(&p).is_err());
    }

    #[test]
    fn display_lines() {
        let r = topology_report(&gen_p0(torus(2, 2, 2)).unwrap()).unwrap();
        let s = r.to_string();
        assert!(s.contains("euler: -4\n") && s.contains("genus: 3\n") && s.contains("defect_per_vertex: -pi\n"));
        assert_eq!(Genus { twice: 3 }.to_string(), "3/2");
    }
}

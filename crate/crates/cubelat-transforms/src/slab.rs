//! Slabs: detection, removal, insertion and the crossing pattern of a half-integer plane.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use cubelat_gen::{SigmaWord, TauLetter};
use cubelat_lattice::{slot_index, Axis, Dir, Domain, Face, FacePatch, Isometry, Lattice, PointOp, Vec3i};
use cubelat_local::{flip_mask, validate_cubic, vertex_config, Hand};

use cubelat_gen::masks_with_germ;

use crate::error::TransformError;

/// The half-integer plane `normal = level + 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plane {
    pub normal: Axis,
    pub level: i32,
}

impl Plane {
    pub fn new(normal: Axis, level: i32) -> Plane {
        Plane { normal, level }
    }
}

/// Sign of the unit bi-axis translation used when gluing across a slab.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shift {
    #[default]
    Plus,
    Minus,
}

impl Shift {
    pub fn sign(self) -> i32 {
        match self {
            Shift::Plus => 1,
            Shift::Minus => -1,
        }
    }

    pub fn flipped(self) -> Shift {
        match self {
            Shift::Plus => Shift::Minus,
            Shift::Minus => Shift::Plus,
        }
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Shift::Plus { "+" } else { "-" })
    }
}

impl FromStr for Shift {
    type Err = String;
    fn from_str(s: &str) -> Result<Shift, String> {
        match s {
            "+" => Ok(Shift::Plus),
            "-" => Ok(Shift::Minus),
            _ => Err(format!("expected + or -, got `{s}`")),
        }
    }
}

/// A layer of screws with common axis in the plane `normal = level`, adjacent columns mirror images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slab {
    pub normal: Axis,
    pub level: i32,
    pub axis: Axis,
    /// Handedness read along the axis line through the plane's origin (fixed phase).
    pub sigma: SigmaWord,
}

impl Slab {
    pub fn bi_axis(&self) -> Axis {
        Axis::third(self.normal, self.axis)
    }

    pub fn is_untwisted(&self) -> bool {
        self.sigma.is_untwisted()
    }

    /// The `tau` letter of an untwisted slab with normal z.
    pub fn tau_letter(&self) -> Option<TauLetter> {
        match (self.normal, self.axis) {
            (Axis::Z, Axis::X) => Some(TauLetter::X),
            (Axis::Z, Axis::Y) => Some(TauLetter::Y),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InsertPattern {
    /// The square array of squares.
    Trivial,
    /// Parallel tower pushes with the given axis; `omega` is read along the other in-plane axis.
    Word { tower_axis: Axis, omega: String },
}

impl InsertPattern {
    /// Slab word given by the substitution `u -> ZS`, `p -> SZ`.
    pub fn sigma(&self) -> Option<SigmaWord> {
        match self {
            InsertPattern::Trivial => None,
            InsertPattern::Word { omega, .. } => Some(substitute(omega)),
        }
    }
}

impl fmt::Display for InsertPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsertPattern::Trivial => f.write_str("trivial"),
            InsertPattern::Word { tower_axis, omega } => write!(f, "word {tower_axis} {omega}"),
        }
    }
}

pub fn substitute(omega: &str) -> SigmaWord {
    let letters = omega
        .chars()
        .flat_map(|c| if c == 'p' { [Hand::S, Hand::Z] } else { [Hand::Z, Hand::S] })
        .collect();
    SigmaWord::new(letters).expect("omega is non-empty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InsertSpec {
    /// An untwisted slab with the given in-plane axis (trivial pattern only).
    Trivial(Axis),
    /// `count` copies of the slab forced by a word pattern.
    Word { count: usize },
}

/// Smallest positive coordinate along `n` of a lattice vector.
pub fn normal_period(l: &Lattice, n: Axis) -> i32 {
    l.basis().iter().fold(0i64, |g, b| cubelat_lattice::gcd(g, b[n] as i64)) as i32
}

/// Representatives of the vertices of the plane `normal = level`.
fn plane_points(domain: &Domain, normal: Axis, level: i32) -> Vec<Vec3i> {
    let (a, b) = (normal.next(), normal.prev());
    match domain {
        Domain::Torus(l) => {
            let r = l.rect_sublattice().periods();
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for u in 0..r[a.index()] {
                for v in 0..r[b.index()] {
                    let mut p = Vec3i::axis(normal, level);
                    p[a] = u;
                    p[b] = v;
                    if seen.insert(l.reduce(p)) {
                        out.push(p);
                    }
                }
            }
            out
        }
        Domain::Window { .. } => domain.interior_vertices().into_iter().filter(|v| v[normal] == level).collect(),
    }
}

fn mirror(m: u16, b: Axis) -> u16 {
    flip_mask(m, b == Axis::X, b == Axis::Y, b == Axis::Z)
}

/// The slab in plane `normal = level`, if that plane is one.
pub fn slab_at(patch: &FacePatch, normal: Axis, level: i32) -> Option<Slab> {
    let domain = patch.domain();
    let pts = plane_points(domain, normal, level);
    let first = *pts.first()?;
    let axis = vertex_config(patch, first).screw_axis().filter(|&a| a != normal)?;
    let b = Axis::third(normal, axis);
    for &p in &pts {
        if vertex_config(patch, p).screw_axis() != Some(axis) {
            return None;
        }
        let q = p + Vec3i::axis(b, 1);
        if domain.is_interior(q) && patch.mask_at(q) != mirror(patch.mask_at(p), b) {
            return None;
        }
    }
    let line: Vec<Vec3i> = match domain {
        Domain::Torus(l) => (0..l.axis_period(axis)).map(|k| Vec3i::axis(normal, level) + Vec3i::axis(axis, k)).collect(),
        Domain::Window { .. } => {
            let start = pts.iter().copied().min_by_key(|p| (p[b], p[axis]))?;
            pts.iter().copied().filter(|p| p[b] == start[b]).collect()
        }
    };
    let hands = line.iter().map(|&p| vertex_config(patch, p).hand()).collect::<Option<Vec<Hand>>>()?;
    Some(Slab { normal, level, axis, sigma: SigmaWord::new(hands).ok()? })
}

/// Every plane of the patch that is a slab.
pub fn find_slabs(patch: &FacePatch) -> Vec<Slab> {
    let domain = *patch.domain();
    let mut out = Vec::new();
    for n in Axis::ALL {
        let levels: Vec<i32> = match domain {
            Domain::Torus(l) => (0..normal_period(&l, n)).collect(),
            Domain::Window { lo, hi } => (lo[n] + 1..hi[n]).collect(),
        };
        out.extend(levels.into_iter().filter_map(|k| slab_at(patch, n, k)));
    }
    out
}

fn frame(n: Axis) -> Isometry {
    Isometry::new(PointOp::axis_to_z(n), Vec3i::ZERO)
}

fn torus_lattice(patch: &FacePatch) -> Result<Lattice, TransformError> {
    patch.domain().lattice().copied().ok_or(TransformError::NeedsTorus)
}

/// Copy the faces of `src` with storage corner below `z_end` into an empty patch over `target`.
fn copy_into(src: &FacePatch, target: Lattice, z_end: i32) -> FacePatch {
    let dom = Domain::Torus(target);
    let faces: Vec<Face> = (0..dom.face_slot_count())
        .map(|i| dom.face_at_index(i))
        .filter(|f| f.corner.z < z_end && src.contains(*f))
        .collect();
    FacePatch::from_faces(dom, faces).expect("storage faces lie in the domain")
}

/// Remove the layer `z = l` (z-frame); the part above moves by `-(e_z + t)`.
fn remove_z(p: &FacePatch, l: i32, t: Vec3i) -> Result<FacePatch, TransformError> {
    let lat = torus_lattice(p)?;
    let [a1, a2, a3] = lat.basis();
    let p1 = p.translate(Vec3i::axis(Axis::Z, -(l + 1)) - t);
    let lat2 = Lattice::from_basis([a1, a2, a3 - Vec3i::axis(Axis::Z, 1) - t])?;
    Ok(copy_into(&p1, lat2, i32::MAX).translate(Vec3i::axis(Axis::Z, l)))
}

/// Insert a layer between `z = h` and `z = h + 1` (z-frame); the part above moves by `e_z + t`.
///
/// `hand` gives the type of each new vertex in final coordinates; its configuration is then
/// forced by the faces crossing the plane.
fn insert_z(q: &FacePatch, h: i32, t: Vec3i, hand: &dyn Fn(Vec3i) -> Hand) -> Option<FacePatch> {
    let lat = q.domain().lattice().copied()?;
    let [a1, a2, a3] = lat.basis();
    let pz = lat.periods()[2];
    let q1 = q.translate(Vec3i::axis(Axis::Z, -(h + 1)));
    let a3n = a3 + Vec3i::axis(Axis::Z, 1) + t;
    let lat2 = Lattice::from_basis([a1, a2, a3n]).ok()?;
    let mut p1 = copy_into(&q1, lat2, pz);
    let [px, py, _] = lat2.periods();
    let up = Dir::plus(Axis::Z);
    let down = Dir::minus(Axis::Z);
    let horiz = [Dir::plus(Axis::X), Dir::minus(Axis::X), Dir::plus(Axis::Y), Dir::minus(Axis::Y)];
    let shift_back = Vec3i::axis(Axis::Z, h + 2) + t - a3n;
    let mut layer = Vec::new();
    for y in 0..py {
        for x in 0..px {
            let w = Vec3i::new(x, y, pz);
            let below = q1.mask_at(w - Vec3i::axis(Axis::Z, 1));
            let germ: Vec<(Dir, bool)> = horiz.iter().map(|&e| (e, below >> slot_index(up, e) & 1 == 1)).collect();
            let tag = match hand(w + shift_back) {
                Hand::S => cubelat_local::VertexTag::S,
                Hand::Z => cubelat_local::VertexTag::Z,
            };
            let cands = masks_with_germ(tag, down, &germ);
            let [m] = cands.as_slice() else { return None };
            layer.push((w, *m));
        }
    }
    for &(w, m) in &layer {
        for (k, f) in cubelat_lattice::faces_of_vertex(w).into_iter().enumerate() {
            if m >> k & 1 == 1 {
                p1.insert(f).ok()?;
            }
        }
    }
    if layer.iter().any(|&(w, m)| p1.mask_at(w) != m) {
        return None;
    }
    Some(p1.translate(Vec3i::axis(Axis::Z, h + 2) + t))
}

/// Remove a slab; the part beyond it moves by one unit along the normal and one along the bi-axis.
pub fn remove_slab(patch: &FacePatch, slab: &Slab) -> Result<FacePatch, TransformError> {
    remove_slab_shift(patch, slab, Shift::Plus)
}

pub fn remove_slab_shift(patch: &FacePatch, slab: &Slab, shift: Shift) -> Result<FacePatch, TransformError> {
    let lat = torus_lattice(patch)?;
    let n = slab.normal;
    let found = slab_at(patch, n, slab.level);
    if found.as_ref().map(|s| s.axis) != Some(slab.axis) {
        return Err(TransformError::NotASlab { normal: n, level: slab.level });
    }
    let period = normal_period(&lat, n);
    if period < 2 {
        return Err(TransformError::PeriodTooSmall { normal: n, period });
    }
    let g = frame(n);
    let t = g.op.apply(Vec3i::axis(slab.bi_axis(), shift.sign()));
    let out = remove_z(&patch.transform(g), slab.level, t)?.transform(g.inverse());
    if !validate_cubic(&out).ok() {
        return Err(TransformError::NotASlab { normal: n, level: slab.level });
    }
    Ok(out)
}

/// Insert a layer whose vertex types are given by `hand`, if it validates.
pub fn insert_layer(patch: &FacePatch, plane: Plane, bi_axis: Axis, shift: Shift, hand: &dyn Fn(Vec3i) -> Hand) -> Option<FacePatch> {
    patch.domain().lattice()?;
    let g = frame(plane.normal);
    let inv = g.inverse();
    let t = g.op.apply(Vec3i::axis(bi_axis, shift.sign()));
    let hz = |w: Vec3i| hand(inv.apply(w));
    let out = insert_z(&patch.transform(g), plane.level, t, &hz)?.transform(inv);
    validate_cubic(&out).ok().then_some(out)
}

/// Types of a slab with word `sigma` along `axis`, mirrored along `bi_axis`, at the given phases.
pub fn slab_hands(sigma: &SigmaWord, axis: Axis, bi_axis: Axis, phase: (i32, i32)) -> impl Fn(Vec3i) -> Hand + '_ {
    move |v: Vec3i| {
        let h = sigma.at((v[axis] - phase.0) as i64);
        if (v[bi_axis] - phase.1).rem_euclid(2) == 1 {
            h.swap()
        } else {
            h
        }
    }
}

/// Distinct validating results of inserting a slab with word `sigma` and axis `axis`, over all phases.
pub fn slab_candidates(patch: &FacePatch, plane: Plane, axis: Axis, sigma: &SigmaWord, shift: Shift) -> Vec<FacePatch> {
    let b = Axis::third(plane.normal, axis);
    let mut out: Vec<FacePatch> = Vec::new();
    for phi in 0..sigma.len() as i32 {
        for psi in 0..2 {
            if let Some(p) = insert_layer(patch, plane, b, shift, &slab_hands(sigma, axis, b, (phi, psi))) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Presence of the face crossing the plane along the unit segment at `(u, v)`.
fn crossing(patch: &FacePatch, plane: Plane, u: i32, v: i32, along_u: bool) -> Option<bool> {
    let n = plane.normal;
    let (a, b) = (n.next(), n.prev());
    let mut c = Vec3i::axis(n, plane.level);
    c[a] = u;
    c[b] = v;
    let f = Face::new(c, if along_u { b } else { a });
    patch.domain().reduce_face(f).map(|_| patch.contains(f))
}

/// Cells `(u, v)` of the plane to inspect: a full period on a torus, the window otherwise.
fn plane_cells(domain: &Domain, plane: Plane) -> Vec<(i32, i32)> {
    let (a, b) = (plane.normal.next(), plane.normal.prev());
    let (ur, vr) = match domain {
        Domain::Torus(l) => {
            let r = l.rect_sublattice().periods();
            (0..r[a.index()], 0..r[b.index()])
        }
        Domain::Window { lo, hi } => (lo[a]..hi[a], lo[b]..hi[b]),
    };
    ur.flat_map(|u| vr.clone().map(move |v| (u, v))).collect()
}

fn odd(t: i32) -> bool {
    t.rem_euclid(2) == 1
}

/// What can be inserted along `plane`, if anything.
pub fn insertable_pattern(patch: &FacePatch, plane: Plane) -> Option<InsertPattern> {
    let domain = patch.domain();
    let n = plane.normal;
    for level in [plane.level, plane.level + 1] {
        for p in plane_points(domain, n, level) {
            if vertex_config(patch, p).screw_axis() == Some(n) {
                return None;
            }
        }
    }
    let cells = plane_cells(domain, plane);
    let seg = |u: i32, v: i32, along_u: bool| crossing(patch, plane, u, v, along_u);
    // segments along u are present iff u has phase c1, along v iff v has phase c2
    let fits = |c1: &dyn Fn(i32, i32) -> bool, c2: &dyn Fn(i32, i32) -> bool| {
        cells.iter().all(|&(u, v)| {
            seg(u, v, true).is_none_or(|s| s == c1(u, v)) && seg(u, v, false).is_none_or(|s| s == c2(u, v))
        })
    };
    for c1 in 0..2 {
        for c2 in 0..2 {
            if fits(&|u, _| !odd(u - c1), &|_, v| !odd(v - c2)) {
                return Some(InsertPattern::Trivial);
            }
        }
    }
    // towers along u, read along v; then the transposed case
    for tower_along_u in [true, false] {
        let rd = |u: i32, v: i32| if tower_along_u { (u, v) } else { (v, u) };
        for c2 in 0..2 {
            let strip = |v: i32| v - odd(v - c2) as i32;
            // phase of each strip along the tower axis, read from the first segment seen in it
            let mut phase = std::collections::BTreeMap::new();
            let mut ok = true;
            for &(u, v) in &cells {
                let (s, r) = rd(u, v);
                let Some(present) = seg(u, v, tower_along_u) else { continue };
                if present {
                    let ph = s.rem_euclid(2);
                    let key = strip(r);
                    if *phase.entry(key).or_insert(ph) != ph {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let cross_ok = cells.iter().all(|&(u, v)| {
                let (s, r) = rd(u, v);
                seg(u, v, !tower_along_u).is_none_or(|x| x == !odd(r - c2))
                    && seg(u, v, tower_along_u).is_none_or(|x| phase.get(&strip(r)).is_some_and(|&ph| x == (s.rem_euclid(2) == ph)))
            });
            if !cross_ok {
                continue;
            }
            let omega: String = phase.values().map(|&ph| if ph == 0 { 'u' } else { 'p' }).collect();
            if omega.is_empty() || omega.chars().all(|c| c == omega.chars().next().unwrap()) {
                continue;
            }
            let tower_axis = if tower_along_u { n.next() } else { n.prev() };
            return Some(InsertPattern::Word { tower_axis, omega });
        }
    }
    None
}

/// Insert slabs along `plane` as requested; the new layer sits at `plane.level + 1`.
pub fn insert_slab(patch: &FacePatch, plane: Plane, spec: &InsertSpec, shift: Shift) -> Result<FacePatch, TransformError> {
    torus_lattice(patch)?;
    let not = TransformError::NotInsertable { normal: plane.normal, level: plane.level };
    let none = TransformError::NoValidSlab { normal: plane.normal, level: plane.level };
    match spec {
        InsertSpec::Trivial(axis) => {
            if *axis == plane.normal {
                return Err(TransformError::SpecMismatch(format!("slab axis {axis} equals the plane normal")));
            }
            match insertable_pattern(patch, plane) {
                Some(InsertPattern::Trivial) => {}
                Some(other) => return Err(TransformError::SpecMismatch(format!("pattern is {other}, not trivial"))),
                None => return Err(not),
            }
            let sz = SigmaWord::new(vec![Hand::S, Hand::Z])?;
            slab_candidates(patch, plane, *axis, &sz, shift).into_iter().next().ok_or(none)
        }
        InsertSpec::Word { count } => {
            let mut cur = patch.clone();
            for i in 0..*count {
                let pl = Plane::new(plane.normal, plane.level + i as i32);
                let (tower_axis, omega) = match insertable_pattern(&cur, pl) {
                    Some(InsertPattern::Word { tower_axis, omega }) => (tower_axis, omega),
                    Some(InsertPattern::Trivial) => {
                        return Err(TransformError::SpecMismatch("pattern is trivial; choose an axis".into()))
                    }
                    None => return Err(not),
                };
                let axis = Axis::third(plane.normal, tower_axis);
                cur = slab_candidates(&cur, pl, axis, &substitute(&omega), shift).into_iter().next().ok_or(none.clone())?;
            }
            Ok(cur)
        }
    }
}

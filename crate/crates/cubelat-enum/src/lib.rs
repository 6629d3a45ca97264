//! Brute-force enumeration of surfaces on small tori.
//!
//! Depth-first search over face slots. Every vertex keeps the set of permitted masks that
//! agree with the faces decided so far; a vertex with no such mask prunes the branch, and a
//! slot on which all remaining masks agree is forced.

use std::collections::BTreeMap;

use cubelat_lattice::{faces_of_vertex, Domain, Face, FacePatch, Isometry, Lattice, PointOp};
use cubelat_local::{criterion_by_name, face_components, validate, SurfaceCriterion, Violation};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("enumeration needs a torus domain")]
    NotTorus,
    #[error("torus has {faces} face slots, above the limit of {limit}")]
    LimitExceeded { faces: usize, limit: usize },
    #[error("unknown mode `{0}`")]
    UnknownMode(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Cubic,
    DiscreteMinimal,
}

impl Mode {
    pub fn criterion_name(self) -> &'static str {
        match self {
            Mode::Cubic => "cubic",
            Mode::DiscreteMinimal => "minimal",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub mode: Mode,
    /// Maximum number of face slots.
    pub limit: usize,
    /// Keep only patches whose faces form one component (always enforced for cubic).
    /// The empty patch counts as connected.
    pub connected: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { mode: Mode::Cubic, limit: 48, connected: true }
    }
}

/// Search statistics alongside the results.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Face sets satisfying every vertex constraint.
    pub raw: usize,
    /// Those that also pass full validation.
    pub valid: usize,
    pub nodes: u64,
}

struct Problem {
    faces: Vec<Face>,
    /// Per vertex: face variable of each of the 12 slots.
    slots: Vec<[usize; 12]>,
    /// Vertices touching each face variable.
    touching: Vec<Vec<usize>>,
    /// Per vertex: permitted masks realizable with its slot aliasing.
    masks: Vec<Vec<u16>>,
}

impl Problem {
    fn new(domain: &Domain, criterion: &dyn SurfaceCriterion) -> Problem {
        let mut faces: Vec<Face> =
            (0..domain.face_slot_count()).map(|i| domain.face_at_index(i)).filter(|f| domain.reduce_face(*f) == Some(*f)).collect();
        faces.sort_by_key(|f| (f.corner.z, f.corner.y, f.corner.x, f.normal));
        let index: BTreeMap<Face, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let verts = domain.vertices();
        let mut slots = Vec::with_capacity(verts.len());
        let mut touching = vec![Vec::new(); faces.len()];
        let mut masks = Vec::with_capacity(verts.len());
        for (vi, &v) in verts.iter().enumerate() {
            let s = faces_of_vertex(v).map(|f| index[&domain.reduce_face(f).expect("torus")]);
            for &fi in &s {
                if !touching[fi].contains(&vi) {
                    touching[fi].push(vi);
                }
            }
            let ok: Vec<u16> = criterion
                .masks()
                .iter()
                .copied()
                .filter(|&m| (0..12).all(|a| (0..12).all(|b| s[a] != s[b] || (m >> a & 1) == (m >> b & 1))))
                .collect();
            slots.push(s);
            masks.push(ok);
        }
        Problem { faces, slots, touching, masks }
    }

    /// Known bits and values of vertex `v` under the assignment.
    fn known(&self, v: usize, assign: &[u8]) -> (u16, u16) {
        let (mut known, mut val) = (0u16, 0u16);
        for (k, &fi) in self.slots[v].iter().enumerate() {
            match assign[fi] {
                1 => {
                    known |= 1 << k;
                    val |= 1 << k;
                }
                2 => known |= 1 << k,
                _ => {}
            }
        }
        (known, val)
    }

    /// Check the vertices of `queue` and force determined slots; false on a contradiction.
    fn propagate(&self, assign: &mut [u8], trail: &mut Vec<usize>, mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            let (known, val) = self.known(v, assign);
            let mut and = 0xfffu16;
            let mut or = 0u16;
            let mut any = false;
            for &m in &self.masks[v] {
                if (m ^ val) & known == 0 {
                    and &= m;
                    or |= m;
                    any = true;
                }
            }
            if !any {
                return false;
            }
            let forced_in = and & !known;
            let forced_out = !or & !known & 0xfff;
            for k in 0..12 {
                let bit = 1u16 << k;
                if (forced_in | forced_out) & bit == 0 {
                    continue;
                }
                let fi = self.slots[v][k];
                if assign[fi] != 0 {
                    continue;
                }
                assign[fi] = if forced_in & bit != 0 { 1 } else { 2 };
                trail.push(fi);
                queue.extend(self.touching[fi].iter().copied());
            }
        }
        true
    }
}

/// Face sets whose every vertex mask is permitted by the mode, before full validation.
pub fn enumerate_raw(domain: Domain, opts: EnumOptions) -> Result<(Vec<FacePatch>, u64), EnumError> {
    if !domain.is_torus() {
        return Err(EnumError::NotTorus);
    }
    let n = domain.face_slot_count();
    if n > opts.limit {
        return Err(EnumError::LimitExceeded { faces: n, limit: opts.limit });
    }
    let criterion = mode_criterion(opts.mode)?;
    let prob = Problem::new(&domain, criterion.as_ref());
    let mut assign = vec![0u8; prob.faces.len()];
    let mut trail = Vec::new();
    let mut nodes = 0;
    let mut out = Vec::new();
    let all: Vec<usize> = (0..prob.slots.len()).collect();
    if prob.propagate(&mut assign, &mut trail, all) {
        let mut emit = |a: &[u8]| {
            let faces = prob.faces.iter().zip(a).filter(|(_, &s)| s == 1).map(|(f, _)| *f);
            out.push(FacePatch::from_faces(domain, faces).expect("faces of the domain"));
        };
        search(&prob, &mut assign, &mut trail, &mut emit, &mut nodes);
    }
    out.sort_by(|a, b| a.bits().cmp(b.bits()));
    Ok((out, nodes))
}

fn mode_criterion(mode: Mode) -> Result<Box<dyn SurfaceCriterion>, EnumError> {
    criterion_by_name(mode.criterion_name()).ok_or_else(|| EnumError::UnknownMode(mode.criterion_name().into()))
}

/// All patches on the torus passing the mode's criterion, in a stable order.
pub fn enumerate_torus(domain: Domain, opts: EnumOptions) -> Result<(Vec<FacePatch>, EnumStats), EnumError> {
    let (raw, nodes) = enumerate_raw(domain, opts)?;
    let criterion = mode_criterion(opts.mode)?;
    let need_connected = criterion.requires_connected() || opts.connected;
    let mut stats = EnumStats { raw: raw.len(), valid: 0, nodes };
    let out: Vec<FacePatch> = raw
        .into_iter()
        .filter(|p| {
            let r = validate(p, criterion.as_ref());
            let local_ok = r.violations.iter().all(|v| matches!(v, Violation::Disconnected { .. }));
            local_ok && (!need_connected || p.is_empty() || face_components(p) == 1)
        })
        .collect();
    stats.valid = out.len();
    Ok((out, stats))
}

fn search(prob: &Problem, assign: &mut Vec<u8>, trail: &mut Vec<usize>, emit: &mut dyn FnMut(&[u8]), nodes: &mut u64) {
    *nodes += 1;
    // lowest vertex with an undecided slot, then its lowest undecided face
    let next = prob
        .slots
        .iter()
        .find_map(|s| s.iter().copied().filter(|&fi| assign[fi] == 0).min());
    let Some(fi) = next else {
        emit(assign);
        return;
    };
    for value in [2u8, 1] {
        let mark = trail.len();
        assign[fi] = value;
        trail.push(fi);
        if prob.propagate(assign, trail, prob.touching[fi].clone()) {
            search(prob, assign, trail, emit, nodes);
        }
        for &f in &trail[mark..] {
            assign[f] = 0;
        }
        trail.truncate(mark);
    }
}

/// Point ops mapping the lattice to itself; proper ones only unless `mirror`.
pub fn lattice_ops(l: &Lattice, mirror: bool) -> Vec<PointOp> {
    PointOp::all().iter().copied().filter(|g| l.is_invariant_under(*g) && (mirror || g.is_proper())).collect()
}

/// Least bit pattern over the images of `p` under torus translations and `ops`.
pub fn canonical_key(p: &FacePatch, ops: &[PointOp]) -> Vec<bool> {
    let verts = p.domain().vertices();
    let mut best: Option<Vec<bool>> = None;
    for &g in ops {
        let pg = p.transform(Isometry::new(g, cubelat_lattice::Vec3i::ZERO));
        for &t in &verts {
            let img = pg.translate(t);
            if best.as_deref().is_none_or(|b| img.bits() < b) {
                best = Some(img.bits().to_vec());
            }
        }
    }
    best.unwrap_or_default()
}

/// A congruence class: its first member in input order and how many inputs it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClass {
    pub representative: FacePatch,
    pub size: usize,
}

/// Partition patches sharing one torus into classes under translations and lattice point ops.
pub fn reduce_by_congruence(patches: &[FacePatch], mirror: bool) -> Vec<CongruenceClass> {
    let Some(l) = patches.first().and_then(|p| p.domain().lattice().copied()) else { return Vec::new() };
    let ops = lattice_ops(&l, mirror);
    let mut classes: BTreeMap<Vec<bool>, CongruenceClass> = BTreeMap::new();
    let mut order = Vec::new();
    for p in patches {
        let key = canonical_key(p, &ops);
        classes
            .entry(key.clone())
            .and_modify(|c| c.size += 1)
            .or_insert_with(|| {
                order.push(key);
                CongruenceClass { representative: p.clone(), size: 1 }
            });
    }
    order.into_iter().map(|k| classes.remove(&k).expect("class present")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_gen::{gen_p0, gen_p1};

    fn torus(x: i32, y: i32, z: i32) -> Domain {
        Domain::torus(x, y, z).unwrap()
    }

    #[test]
    fn single_vertex_torus_has_nothing() {
        let (ps, _) = enumerate_torus(torus(1, 1, 1), EnumOptions::default()).unwrap();
        assert!(ps.is_empty());
    }

    #[test]
    fn contains_p0_and_p1() {
        let (ps, stats) = enumerate_torus(torus(2, 2, 2), EnumOptions::default()).unwrap();
        assert!(ps.contains(&gen_p0(torus(2, 2, 2)).unwrap()));
        assert!(ps.contains(&gen_p1(torus(2, 2, 2)).unwrap()));
        assert_eq!(stats.valid, ps.len());
        let again = enumerate_torus(torus(2, 2, 2), EnumOptions::default()).unwrap().0;
        assert_eq!(again, ps);
    }

    #[test]
    fn orbit_sizes_sum_to_total() {
        let (ps, _) = enumerate_torus(torus(2, 2, 2), EnumOptions::default()).unwrap();
        let classes = reduce_by_congruence(&ps, true);
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), ps.len());
        let proper = reduce_by_congruence(&ps, false);
        assert!(proper.len() >= classes.len());
    }

    #[test]
    fn limit_and_window_errors() {
        let opts = EnumOptions { limit: 10, ..EnumOptions::default() };
        assert_eq!(enumerate_torus(torus(2, 2, 2), opts), Err(EnumError::LimitExceeded { faces: 24, limit: 10 }));
        assert_eq!(enumerate_torus(Domain::cube(0, 2).unwrap(), EnumOptions::default()), Err(EnumError::NotTorus));
    }
}

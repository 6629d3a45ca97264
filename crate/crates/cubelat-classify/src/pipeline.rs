//! Full classification: all-screw forms, pushed layered forms, and pushed forms with slabs.

use cubelat_lattice::{Axis, Domain, FacePatch, Isometry, PointOp, Vec3i};
use cubelat_local::validate_cubic;
use cubelat_transforms::{find_slabs, insertable_pattern, remove_slab_shift, InsertPattern, Plane, Shift, Slab};

use crate::allscrew::{classify_all_screw, is_all_screw};
use crate::certificate::{rebuild, Certificate, InsertKind, InsertRecord};
use crate::congruence::find_translation;
use crate::error::ClassifyError;
use crate::pushed::{PushedForm, PushedSearch};

/// A certificate together with the torus it rebuilds on and the frame relating it to the input:
/// `rebuild(certificate, domain) == input.transform(frame)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub certificate: Certificate,
    pub domain: Domain,
    pub frame: Isometry,
}

impl Classification {
    pub fn verify(&self, input: &FacePatch) -> bool {
        rebuild(&self.certificate, self.domain).is_ok_and(|r| r == input.transform(self.frame))
    }
}

pub fn classify(patch: &FacePatch) -> Result<Classification, ClassifyError> {
    if !patch.domain().is_torus() {
        return Err(ClassifyError::NotTorus);
    }
    let report = validate_cubic(patch);
    if !report.ok() {
        return Err(ClassifyError::Invalid(report.violations.len()));
    }
    if is_all_screw(patch) {
        return frame_all_screw(patch);
    }
    let mut search = PushedSearch::default();
    if let Some(f) = search.find_exact(patch, PointOp::all()) {
        return checked(pushed(f), patch);
    }
    let mut normals: Vec<Axis> = find_slabs(patch).iter().map(|s| s.normal).collect();
    normals.sort();
    normals.dedup();
    if let [n] = normals.as_slice() {
        if let Some(c) = strip_and_search(patch, *n, &mut search) {
            return checked(c, patch);
        }
    }
    if let Some(f) = search.find(patch, PointOp::all()) {
        return checked(pushed(f), patch);
    }
    Err(ClassifyError::NoCertificate)
}

fn pushed(f: PushedForm) -> Classification {
    Classification {
        certificate: Certificate::Pushed { base: f.base, pushes: f.pushes },
        domain: *f.patch.domain(),
        frame: f.frame,
    }
}

fn checked(c: Classification, patch: &FacePatch) -> Result<Classification, ClassifyError> {
    if c.verify(patch) {
        Ok(c)
    } else {
        Err(ClassifyError::RebuildMismatch)
    }
}

fn frame_all_screw(patch: &FacePatch) -> Result<Classification, ClassifyError> {
    let certificate = classify_all_screw(patch)?;
    let l = *patch.domain().lattice().ok_or(ClassifyError::NotTorus)?;
    for &g in PointOp::all() {
        let domain = Domain::Torus(l.transform(g));
        let Ok(r) = rebuild(&certificate, domain) else { continue };
        if let Some(t) = find_translation(&patch.transform(Isometry::new(g, Vec3i::ZERO)), &r) {
            return Ok(Classification { certificate, domain, frame: Isometry::new(g, t) });
        }
    }
    Err(ClassifyError::NoCertificate)
}

/// Remove every slab with normal `g(n)` from `g(patch)`, then look for a pushed form reached
/// by a translation alone, and record the insertions that undo the removals. Both shift signs
/// are tried at every removal.
fn strip_and_search(patch: &FacePatch, n: Axis, search: &mut PushedSearch) -> Option<Classification> {
    let mut seen = Vec::new();
    for &g in PointOp::all() {
        let xg = patch.transform(Isometry::new(g, Vec3i::ZERO));
        if seen.contains(&xg) {
            continue;
        }
        seen.push(xg.clone());
        let ng = g.apply_axis(n);
        let mut removed = Vec::new();
        if let Some(c) = strip_rec(patch, g, ng, &xg, &mut removed, search) {
            return Some(c);
        }
    }
    None
}

const MAX_STRIPS: usize = 8;

fn strip_rec(
    patch: &FacePatch,
    g: PointOp,
    ng: Axis,
    cur: &FacePatch,
    removed: &mut Vec<(Slab, Shift, FacePatch)>,
    search: &mut PushedSearch,
) -> Option<Classification> {
    let slab = find_slabs(cur).into_iter().find(|s| s.normal == ng);
    let Some(s) = slab.filter(|_| removed.len() < MAX_STRIPS) else {
        return if removed.is_empty() { None } else { certify(patch, g, ng, cur, removed, search) };
    };
    let mut any = false;
    for shift in [Shift::Plus, Shift::Minus] {
        let Ok(next) = remove_slab_shift(cur, &s, shift) else { continue };
        any = true;
        removed.push((s.clone(), shift, next.clone()));
        let found = strip_rec(patch, g, ng, &next, removed, search);
        removed.pop();
        if found.is_some() {
            return found;
        }
    }
    if !any && !removed.is_empty() {
        return certify(patch, g, ng, cur, removed, search);
    }
    None
}

fn certify(
    patch: &FacePatch,
    g: PointOp,
    ng: Axis,
    stripped: &FacePatch,
    removed: &[(Slab, Shift, FacePatch)],
    search: &mut PushedSearch,
) -> Option<Classification> {
    let f = search.find(stripped, &[PointOp::IDENTITY])?;
    let t = f.frame.shift;
    let mut inserts = Vec::new();
    for (s, shift, after) in removed.iter().rev() {
        let plane = Plane::new(ng, s.level - 1 + t[ng]);
        let kind = match insertable_pattern(&after.translate(t), plane)? {
            InsertPattern::Trivial => InsertKind::Trivial(s.axis),
            InsertPattern::Word { omega, .. } => InsertKind::Word(omega),
        };
        inserts.push(InsertRecord { plane, kind, count: 1, shift: *shift });
    }
    let c = Classification {
        certificate: Certificate::PushedPlusSlabs { base: f.base, pushes: f.pushes, inserts },
        domain: *f.patch.domain(),
        frame: Isometry::new(g, t),
    };
    c.verify(patch).then_some(c)
}

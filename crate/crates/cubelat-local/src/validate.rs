use std::collections::BTreeMap;
use std::fmt;

use cubelat_lattice::{faces_of_edge, Axis, Domain, Edge, FacePatch, Vec3i};

use crate::classify::{edge_kind, EdgeKind};
use crate::config::{classify_mask, VertexConfig};

/// A rule set deciding which local configurations a surface may contain.
pub trait SurfaceCriterion: Send + Sync {
    fn name(&self) -> &'static str;
    fn vertex_ok(&self, c: VertexConfig) -> bool;
    fn edge_ok(&self, k: EdgeKind) -> bool;
    /// Whether a torus patch must have a connected face-adjacency graph.
    fn requires_connected(&self) -> bool;
    /// Whether lines through Flat and Empty vertices are checked.
    fn checks_flat_lines(&self) -> bool;
    /// Vertex masks permitted by `vertex_ok`.
    fn masks(&self) -> &'static [u16];
}

pub struct Cubic;

pub struct DiscreteMinimal;

impl SurfaceCriterion for Cubic {
    fn name(&self) -> &'static str {
        "cubic"
    }
    fn vertex_ok(&self, c: VertexConfig) -> bool {
        c.is_cubic()
    }
    fn edge_ok(&self, k: EdgeKind) -> bool {
        matches!(k, EdgeKind::Crease | EdgeKind::Flange)
    }
    fn requires_connected(&self) -> bool {
        true
    }
    fn checks_flat_lines(&self) -> bool {
        false
    }
    fn masks(&self) -> &'static [u16] {
        crate::config::cubic_masks()
    }
}

impl SurfaceCriterion for DiscreteMinimal {
    fn name(&self) -> &'static str {
        "minimal"
    }
    fn vertex_ok(&self, c: VertexConfig) -> bool {
        c.is_cubic() || matches!(c, VertexConfig::Flat(_) | VertexConfig::Empty)
    }
    fn edge_ok(&self, k: EdgeKind) -> bool {
        matches!(k, EdgeKind::Crease | EdgeKind::Flange | EdgeKind::Bare(0))
    }
    fn requires_connected(&self) -> bool {
        false
    }
    fn checks_flat_lines(&self) -> bool {
        true
    }
    fn masks(&self) -> &'static [u16] {
        crate::config::minimal_masks()
    }
}

/// Registered criteria, looked up by name.
pub fn criteria() -> Vec<Box<dyn SurfaceCriterion>> {
    vec![Box::new(Cubic), Box::new(DiscreteMinimal)]
}

pub fn criterion_by_name(name: &str) -> Option<Box<dyn SurfaceCriterion>> {
    criteria().into_iter().find(|c| c.name() == name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Vertex { at: Vec3i, config: VertexConfig },
    Edge { edge: Edge, kind: EdgeKind },
    Disconnected { components: usize },
    /// `offender` lies on the `along` line through `at` but is neither Empty nor Flat(`along`).
    FlatLine { at: Vec3i, along: Axis, offender: Vec3i },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Vertex { at, config } => write!(f, "VIOLATION vertex {} {}", at, config.tag()),
            Violation::Edge { edge, kind } => write!(f, "VIOLATION edge {} {}", edge, kind),
            Violation::Disconnected { components } => write!(f, "VIOLATION disconnected {}", components),
            Violation::FlatLine { at, along, offender } => {
                write!(f, "VIOLATION flatline {} {} {}", at, along, offender)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub criterion: &'static str,
    /// True for windows, where only interior vertices and edges are checked.
    pub partial: bool,
    pub vertices_checked: usize,
    pub edges_checked: usize,
    pub tags: BTreeMap<crate::config::VertexTag, usize>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, tag: crate::config::VertexTag) -> usize {
        self.tags.get(&tag).copied().unwrap_or(0)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status {}", if self.ok() { "ok" } else { "fail" })?;
        writeln!(f, "criterion {}", self.criterion)?;
        writeln!(f, "scope {}", if self.partial { "partial" } else { "full" })?;
        writeln!(f, "checked {} vertices {} edges", self.vertices_checked, self.edges_checked)?;
        for (t, n) in &self.tags {
            writeln!(f, "tag {} {}", t, n)?;
        }
        for v in &self.violations {
            writeln!(f, "{}", v)?;
        }
        Ok(())
    }
}

pub fn validate_cubic(patch: &FacePatch) -> ValidationReport {
    validate(patch, &Cubic)
}

pub fn validate_discrete_minimal(patch: &FacePatch) -> ValidationReport {
    validate(patch, &DiscreteMinimal)
}

pub fn validate(patch: &FacePatch, criterion: &dyn SurfaceCriterion) -> ValidationReport {
    let domain = *patch.domain();
    let mut violations = Vec::new();
    let mut tags = BTreeMap::new();
    let mut configs: BTreeMap<Vec3i, VertexConfig> = BTreeMap::new();
    let interior = domain.interior_vertices();
    for &v in &interior {
        let c = classify_mask(patch.mask_at(v));
        *tags.entry(c.tag()).or_insert(0) += 1;
        configs.insert(v, c);
        if !criterion.vertex_ok(c) {
            violations.push(Violation::Vertex { at: v, config: c });
        }
    }
    let mut edges_checked = 0;
    for v in domain.vertices() {
        for a in Axis::ALL {
            let e = Edge::new(v, a);
            if !domain.edge_is_interior(e) {
                continue;
            }
            edges_checked += 1;
            let k = edge_kind(patch, e);
            if !criterion.edge_ok(k) {
                violations.push(Violation::Edge { edge: e, kind: k });
            }
        }
    }
    if criterion.requires_connected() && domain.is_torus() && !patch.is_empty() {
        let n = face_components(patch);
        if n != 1 {
            violations.push(Violation::Disconnected { components: n });
        }
    }
    if criterion.checks_flat_lines() {
        violations.extend(flat_line_violations(&domain, &configs));
    }
    ValidationReport {
        criterion: criterion.name(),
        partial: !domain.is_torus(),
        vertices_checked: interior.len(),
        edges_checked,
        tags,
        violations,
    }
}

/// Number of connected components of the face-adjacency graph (faces sharing an edge).
pub fn face_components(patch: &FacePatch) -> usize {
    let domain = patch.domain();
    let faces: Vec<_> = patch.faces().collect();
    let index: BTreeMap<_, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (i, f) in faces.iter().enumerate() {
        for e in f.edges() {
            for g in faces_of_edge(e) {
                if let Some(g) = domain.reduce_face(g) {
                    if let Some(&j) = index.get(&g) {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = b;
                    }
                }
            }
        }
    }
    (0..faces.len()).filter(|&i| find(&mut parent, i) == i).count()
}

fn flat_line_violations(domain: &Domain, configs: &BTreeMap<Vec3i, VertexConfig>) -> Vec<Violation> {
    let mut out = Vec::new();
    for (&v, &c) in configs {
        let lines: Vec<Axis> = match c {
            VertexConfig::Flat(n) => vec![n],
            VertexConfig::Empty => Axis::ALL.to_vec(),
            _ => continue,
        };
        for a in lines {
            for w in line_through(domain, v, a) {
                let Some(&cw) = configs.get(&w) else { continue };
                let fine = matches!(cw, VertexConfig::Empty) || cw == VertexConfig::Flat(a);
                if !fine {
                    out.push(Violation::FlatLine { at: v, along: a, offender: w });
                    break;
                }
            }
        }
    }
    out
}

/// Vertices on the `a`-line through `v` (a full cycle on a torus, the in-window segment otherwise).
fn line_through(domain: &Domain, v: Vec3i, a: Axis) -> Vec<Vec3i> {
    match domain {
        Domain::Torus(l) => {
            let p = l.axis_period(a);
            (1..p).map(|k| l.reduce(v + Vec3i::axis(a, k))).collect()
        }
        Domain::Window { lo, hi } => (lo[a]..=hi[a])
            .filter(|&t| t != v[a])
            .map(|t| {
                let mut w = v;
                w[a] = t;
                w
            })
            .collect(),
    }
}

/// Faces of the patch having two successive flange edges.
pub fn successive_flange_faces(patch: &FacePatch) -> Vec<cubelat_lattice::Face> {
    let domain = patch.domain();
    patch
        .faces()
        .filter(|f| {
            let kinds: Vec<Option<EdgeKind>> = f
                .edges()
                .iter()
                .map(|e| domain.edge_is_interior(*e).then(|| edge_kind(patch, *e)))
                .collect();
            (0..4).any(|i| kinds[i] == Some(EdgeKind::Flange) && kinds[(i + 1) % 4] == Some(EdgeKind::Flange))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        assert_eq!(criterion_by_name("cubic").unwrap().name(), "cubic");
        assert_eq!(criterion_by_name("minimal").unwrap().name(), "minimal");
        assert!(criterion_by_name("other").is_none());
    }

    #[test]
    fn empty_torus_is_minimal_but_not_cubic() {
        let p = FacePatch::empty(Domain::torus(2, 2, 2).unwrap());
        assert!(validate_discrete_minimal(&p).ok());
        assert!(!validate_cubic(&p).ok());
    }

    #[test]
    fn report_lines() {
        let p = FacePatch::empty(Domain::torus(1, 1, 1).unwrap());
        let r = validate_cubic(&p);
        let text = r.to_string();
        assert!(text.starts_with("status fail"));
        assert!(text.contains("VIOLATION vertex 0 0 0 Empty"));
        assert!(text.contains("VIOLATION edge 0 0 0 X bare0"));
    }
}

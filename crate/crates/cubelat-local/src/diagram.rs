//! Planar diagrams: a slice of a patch by a lattice plane.
//!
//! ASCII glyphs (u runs right, v runs up):
//!
//! | glyph | meaning |
//! |-------|---------|
//! | `o` `s` `z` `f` `.` `!` | vertex classified M, S, Z, Flat, Empty, Invalid |
//! | `+` | vertex not classified (window boundary) |
//! | `=` `H` | u- / v-segment with a face above the plane |
//! | `-` `|` | u- / v-segment with a face below the plane |
//! | `#` | segment with faces on both sides |
//! | `%` | shaded square (face lying in the plane) |

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use cubelat_lattice::{Axis, Face, FacePatch, Vec3i};

use crate::config::{classify_mask, VertexTag};

/// Unit segment in plane coordinates starting at `start`, along u (`along_u`) or v.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seg2 {
    pub start: (i32, i32),
    pub along_u: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub normal: Axis,
    pub level: i32,
    /// In-plane axes (u, v) = (normal.next(), normal.prev()).
    pub extent: ((i32, i32), (i32, i32)),
    /// Number of unit cells along u and v.
    pub cells: (i32, i32),
    pub shaded: BTreeSet<(i32, i32)>,
    pub above_edges: BTreeSet<Seg2>,
    pub below_edges: BTreeSet<Seg2>,
    /// Segments with faces on both sides; kept apart so above/below stay disjoint.
    pub through_edges: BTreeSet<Seg2>,
    pub dots: BTreeMap<(i32, i32), VertexTag>,
}

fn lift(normal: Axis, level: i32, u: i32, v: i32) -> Vec3i {
    let mut p = Vec3i::ZERO;
    p[normal] = level;
    p[normal.next()] = u;
    p[normal.prev()] = v;
    p
}

/// Slice of `patch` by the plane `normal = level`.
pub fn slice_diagram(patch: &FacePatch, normal: Axis, level: i32) -> PlanarDiagram {
    let (a, b) = (normal.next(), normal.prev());
    let (o, n) = patch.domain().storage_box();
    let (u0, u1) = (o[a], o[a] + n[a.index()] as i32 - 1);
    let (v0, v1) = (o[b], o[b] + n[b.index()] as i32 - 1);
    let mut d = PlanarDiagram {
        normal,
        level,
        extent: ((u0, u1), (v0, v1)),
        cells: (0, 0),
        shaded: BTreeSet::new(),
        above_edges: BTreeSet::new(),
        below_edges: BTreeSet::new(),
        through_edges: BTreeSet::new(),
        dots: BTreeMap::new(),
    };
    let window = !patch.domain().is_torus();
    let ucells = if window { u1 - u0 } else { u1 - u0 + 1 };
    let vcells = if window { v1 - v0 } else { v1 - v0 + 1 };
    d.cells = (ucells, vcells);
    for u in u0..u0 + ucells {
        for v in v0..v0 + vcells {
            if patch.contains(Face::new(lift(normal, level, u, v), normal)) {
                d.shaded.insert((u, v));
            }
        }
    }
    for u in u0..=u1 {
        for v in v0..=v1 {
            let p = lift(normal, level, u, v);
            if patch.domain().is_interior(p) {
                d.dots.insert((u, v), classify_mask(patch.mask_at(p)).tag());
            }
            for (along_u, dir) in [(true, a), (false, b)] {
                if (along_u && u - u0 >= ucells) || (!along_u && v - v0 >= vcells) {
                    continue;
                }
                // faces spanned by the segment and the normal, above and below
                let span_normal = Axis::third(dir, normal);
                let up = Face::new(p, span_normal);
                let down = Face::new(p - Vec3i::axis(normal, 1), span_normal);
                let seg = Seg2 { start: (u, v), along_u };
                match (patch.contains(up), patch.contains(down)) {
                    (true, true) => d.through_edges.insert(seg),
                    (true, false) => d.above_edges.insert(seg),
                    (false, true) => d.below_edges.insert(seg),
                    (false, false) => false,
                };
            }
        }
    }
    d
}

fn dot_glyph(t: Option<&VertexTag>) -> char {
    match t {
        Some(VertexTag::M) => 'o',
        Some(VertexTag::S) => 's',
        Some(VertexTag::Z) => 'z',
        Some(VertexTag::Flat) => 'f',
        Some(VertexTag::Empty) => '.',
        Some(VertexTag::Invalid) => '!',
        None => '+',
    }
}

impl PlanarDiagram {
    fn seg_glyph(&self, s: Seg2) -> char {
        let (above, below) = if s.along_u { ('=', '-') } else { ('H', '|') };
        if self.through_edges.contains(&s) {
            '#'
        } else if self.above_edges.contains(&s) {
            above
        } else if self.below_edges.contains(&s) {
            below
        } else {
            ' '
        }
    }

    pub fn to_ascii(&self) -> String {
        let ((u0, u1), (v0, v1)) = self.extent;
        let mut out = String::new();
        for v in (v0..=v1).rev() {
            if v - v0 < self.cells.1 {
                let mut row = String::new();
                for u in u0..=u1 {
                    row.push(self.seg_glyph(Seg2 { start: (u, v), along_u: false }));
                    row.push(if self.shaded.contains(&(u, v)) { '%' } else { ' ' });
                }
                out.push_str(row.trim_end());
                out.push('\n');
            }
            let mut row = String::new();
            for u in u0..=u1 {
                row.push(dot_glyph(self.dots.get(&(u, v))));
                row.push(self.seg_glyph(Seg2 { start: (u, v), along_u: true }));
            }
            out.push_str(row.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_svg(&self) -> String {
        let ((u0, u1), (v0, v1)) = self.extent;
        let s = 40;
        let pad = 20;
        let w = (u1 - u0 + 1) * s + 2 * pad;
        let h = (v1 - v0 + 1) * s + 2 * pad;
        let x = |u: i32| pad + (u - u0) * s;
        let y = |v: i32| h - pad - (v - v0) * s;
        let mut out = String::new();
        let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
        for &(u, v) in &self.shaded {
            let _ = writeln!(out, r##"<rect x="{}" y="{}" width="{s}" height="{s}" fill="#c8c8c8"/>"##, x(u), y(v + 1));
        }
        let mut line = |seg: &Seg2, color: &str, dash: bool| {
            let (u, v) = seg.start;
            let (u2, v2) = if seg.along_u { (u + 1, v) } else { (u, v + 1) };
            let extra = if dash { r#" stroke-dasharray="6,4""# } else { "" };
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="4"{extra}/>"#,
                x(u),
                y(v),
                x(u2),
                y(v2)
            );
        };
        for e in &self.below_edges {
            line(e, "#909090", false);
        }
        for e in &self.above_edges {
            line(e, "#000000", false);
        }
        for e in &self.through_edges {
            line(e, "#000000", true);
        }
        for (&(u, v), t) in &self.dots {
            let fill = match t {
                VertexTag::S | VertexTag::Z => "#000000",
                _ => "#ffffff",
            };
            let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="5" fill="{fill}" stroke="#000000"/>"##, x(u), y(v));
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_lattice::Domain;

    #[test]
    fn empty_patch_diagram() {
        let p = FacePatch::empty(Domain::torus(2, 2, 2).unwrap());
        let d = slice_diagram(&p, Axis::Z, 0);
        assert!(d.shaded.is_empty() && d.above_edges.is_empty() && d.below_edges.is_empty());
        assert!(d.dots.values().all(|t| *t == VertexTag::Empty));
        assert!(d.to_svg().starts_with("<svg"));
    }

    #[test]
    fn single_vertical_face_is_above() {
        let p = FacePatch::from_faces(Domain::torus(2, 2, 2).unwrap(), [Face::new(Vec3i::ZERO, Axis::Y)]).unwrap();
        let d = slice_diagram(&p, Axis::Z, 0);
        assert_eq!(d.above_edges.len(), 1);
        let d1 = slice_diagram(&p, Axis::Z, 1);
        assert_eq!(d1.below_edges.len(), 1);
        assert!(d1.above_edges.is_disjoint(&d1.below_edges));
    }
}

//! OBJ and OFF export of face patches, with winding from the computed orientation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use cubelat_lattice::{Axis, Face, FacePatch, Vec3i};
use cubelat_local::{validate_cubic, validate_discrete_minimal};
use cubelat_topology::face_orientation;

use crate::error::{MeshError, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Off,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshExport {
    pub text: String,
    /// False when the surface has no consistent orientation; winding is then arbitrary.
    pub oriented: bool,
    pub vertices: usize,
    pub polygons: usize,
}

/// Corners of `f` counterclockwise about `+normal`.
fn quad(f: Face) -> [Vec3i; 4] {
    let u = Vec3i::axis(f.normal.next(), 1);
    let v = Vec3i::axis(f.normal.prev(), 1);
    let c = f.corner;
    [c, c + u, c + u + v, c + v]
}

pub fn export_mesh(patch: &FacePatch, format: MeshFormat, triangles: bool) -> Result<MeshExport, MeshError> {
    if !validate_cubic(patch).ok() && !validate_discrete_minimal(patch).ok() {
        return Err(MeshError::Invalid);
    }
    let signs = face_orientation(patch);
    let mut index: BTreeMap<Vec3i, usize> = BTreeMap::new();
    let mut verts: Vec<Vec3i> = Vec::new();
    let mut polys: Vec<Vec<usize>> = Vec::new();
    for f in patch.faces() {
        let mut q = quad(f);
        if signs.as_ref().is_some_and(|s| s.get(&f) == Some(&-1)) {
            q.reverse();
        }
        let ids: Vec<usize> = q
            .iter()
            .map(|p| {
                *index.entry(*p).or_insert_with(|| {
                    verts.push(*p);
                    verts.len() - 1
                })
            })
            .collect();
        if triangles {
            polys.push(vec![ids[0], ids[1], ids[2]]);
            polys.push(vec![ids[0], ids[2], ids[3]]);
        } else {
            polys.push(ids);
        }
    }
    let mut text = String::new();
    let header = format!("domain {}", patch.domain());
    match format {
        MeshFormat::Obj => {
            let _ = writeln!(text, "# {header}");
            for v in &verts {
                let _ = writeln!(text, "v {} {} {}", v.x, v.y, v.z);
            }
            for p in &polys {
                let ids: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
                let _ = writeln!(text, "f {}", ids.join(" "));
            }
        }
        MeshFormat::Off => {
            let _ = writeln!(text, "OFF");
            let _ = writeln!(text, "# {header}");
            let _ = writeln!(text, "{} {} 0", verts.len(), polys.len());
            for v in &verts {
                let _ = writeln!(text, "{} {} {}", v.x, v.y, v.z);
            }
            for p in &polys {
                let ids: Vec<String> = p.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(text, "{} {}", p.len(), ids.join(" "));
            }
        }
    }
    Ok(MeshExport { text, oriented: signs.is_some(), vertices: verts.len(), polygons: polys.len() })
}

/// The unit square spanned by three or four of its corners.
fn face_of_polygon(line: usize, pts: &[Vec3i]) -> Result<Face, ParseError> {
    let bad = || ParseError::new(line, "polygon is not part of a unit lattice square");
    if pts.len() < 3 {
        return Err(bad());
    }
    let lo = pts.iter().fold(pts[0], |a, p| Vec3i::new(a.x.min(p.x), a.y.min(p.y), a.z.min(p.z)));
    let hi = pts.iter().fold(pts[0], |a, p| Vec3i::new(a.x.max(p.x), a.y.max(p.y), a.z.max(p.z)));
    let d = hi - lo;
    let flat: Vec<Axis> = Axis::ALL.into_iter().filter(|a| d[*a] == 0).collect();
    if flat.len() != 1 || Axis::ALL.iter().any(|a| d[*a] > 1) {
        return Err(bad());
    }
    let f = Face::new(lo, flat[0]);
    let corners = quad(f);
    if pts.iter().any(|p| !corners.contains(p)) {
        return Err(bad());
    }
    Ok(f)
}

fn coords(line: usize, toks: &[&str]) -> Result<Vec3i, ParseError> {
    let v: Vec<i32> = toks
        .iter()
        .map(|t| {
            t.parse::<f64>()
                .ok()
                .filter(|x| x.fract() == 0.0)
                .map(|x| x as i32)
                .ok_or_else(|| ParseError::new(line, format!("expected integer coordinate, got `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    if v.len() != 3 {
        return Err(ParseError::new(line, "expected three coordinates"));
    }
    Ok(Vec3i::new(v[0], v[1], v[2]))
}

/// Faces of an exported OBJ or OFF mesh (quads or triangle pairs).
pub fn import_mesh(text: &str, format: MeshFormat) -> Result<BTreeSet<Face>, ParseError> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, crate::patch_io::tokens(l)))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let mut verts = Vec::new();
    let mut polys: Vec<(usize, Vec<usize>)> = Vec::new();
    let index = |line: usize, t: &str, base: usize| -> Result<usize, ParseError> {
        t.split('/')
            .next()
            .and_then(|s| s.parse::<usize>().ok())
            .and_then(|i| i.checked_sub(base))
            .ok_or_else(|| ParseError::new(line, format!("bad vertex index `{t}`")))
    };
    match format {
        MeshFormat::Obj => {
            for (line, t) in &lines {
                match t[0] {
                    "v" => verts.push(coords(*line, &t[1..])?),
                    "f" => polys.push((*line, t[1..].iter().map(|s| index(*line, s, 1)).collect::<Result<_, _>>()?)),
                    _ => {}
                }
            }
        }
        MeshFormat::Off => {
            let mut it = lines.iter();
            match it.next() {
                Some((_, t)) if t[0] == "OFF" => {}
                _ => return Err(ParseError::new(1, "missing OFF header")),
            }
            let (line, counts) = it.next().ok_or_else(|| ParseError::new(0, "missing counts"))?;
            let n: Vec<usize> = counts.iter().map(|s| s.parse().map_err(|_| ParseError::new(*line, "bad count"))).collect::<Result<_, _>>()?;
            if n.len() < 2 {
                return Err(ParseError::new(*line, "expected vertex and face counts"));
            }
            for _ in 0..n[0] {
                let (line, t) = it.next().ok_or_else(|| ParseError::new(0, "too few vertices"))?;
                verts.push(coords(*line, t)?);
            }
            for _ in 0..n[1] {
                let (line, t) = it.next().ok_or_else(|| ParseError::new(0, "too few faces"))?;
                let k: usize = t[0].parse().map_err(|_| ParseError::new(*line, "bad polygon size"))?;
                if t.len() != k + 1 {
                    return Err(ParseError::new(*line, "polygon size mismatch"));
                }
                polys.push((*line, t[1..].iter().map(|s| index(*line, s, 0)).collect::<Result<_, _>>()?));
            }
        }
    }
    let mut out = BTreeSet::new();
    for (line, p) in polys {
        let pts: Vec<Vec3i> = p
            .iter()
            .map(|&i| verts.get(i).copied().ok_or_else(|| ParseError::new(line, format!("vertex {i} out of range"))))
            .collect::<Result<_, _>>()?;
        out.insert(face_of_polygon(line, &pts)?);
    }
    Ok(out)
}

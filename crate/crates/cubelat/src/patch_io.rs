//! Text form of patches: a `domain` header followed by one `x y z N` line per face.

use std::fmt::Write as _;

use cubelat_lattice::{Axis, Domain, Face, FacePatch, Lattice, Vec3i};

use crate::error::ParseError;

fn ints(line: usize, toks: &[&str], what: &str) -> Result<Vec<i32>, ParseError> {
    toks.iter()
        .map(|t| t.parse::<i32>().map_err(|_| ParseError::new(line, format!("expected integer {what}, got `{t}`"))))
        .collect()
}

/// Parse the tokens after the `domain` keyword: `torus px py pz [shear a b c]` or
/// `window lox loy loz hix hiy hiz`.
pub fn parse_domain_tokens(line: usize, toks: &[&str]) -> Result<Domain, ParseError> {
    let bad = |msg: String| ParseError::new(line, msg);
    match toks.first().copied() {
        Some("torus") => {
            let rest = &toks[1..];
            let (periods, shears) = match rest.len() {
                3 => (ints(line, rest, "period")?, vec![0, 0, 0]),
                7 if rest[3] == "shear" => (ints(line, &rest[..3], "period")?, ints(line, &rest[4..], "shear")?),
                _ => return Err(bad("expected `torus px py pz [shear a b c]`".into())),
            };
            let l = Lattice::new([periods[0], periods[1], periods[2]], [shears[0], shears[1], shears[2]])
                .map_err(|e| bad(e.to_string()))?;
            Ok(Domain::Torus(l))
        }
        Some("window") => {
            if toks.len() != 7 {
                return Err(bad("expected `window lox loy loz hix hiy hiz`".into()));
            }
            let v = ints(line, &toks[1..], "bound")?;
            Domain::window(Vec3i::new(v[0], v[1], v[2]), Vec3i::new(v[3], v[4], v[5])).map_err(|e| bad(e.to_string()))
        }
        Some(other) => Err(bad(format!("unknown domain kind `{other}`"))),
        None => Err(bad("missing domain kind".into())),
    }
}

pub fn parse_domain(s: &str) -> Result<Domain, ParseError> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let toks = if toks.first() == Some(&"domain") { &toks[1..] } else { &toks[..] };
    parse_domain_tokens(1, toks)
}

pub fn parse_face(line: usize, toks: &[&str]) -> Result<Face, ParseError> {
    if toks.len() != 4 {
        return Err(ParseError::new(line, format!("expected `x y z N`, got {} fields", toks.len())));
    }
    let c = ints(line, &toks[..3], "coordinate")?;
    let n = Axis::parse(toks[3]).ok_or_else(|| ParseError::new(line, format!("bad normal `{}`", toks[3])))?;
    Ok(Face::new(Vec3i::new(c[0], c[1], c[2]), n))
}

/// Strip a trailing `#` comment and split into tokens.
pub fn tokens(raw: &str) -> Vec<&str> {
    raw.split('#').next().unwrap_or("").split_whitespace().collect()
}

pub fn parse_patch(text: &str) -> Result<FacePatch, ParseError> {
    let mut domain = None;
    let mut faces = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "domain" {
            if domain.is_some() {
                return Err(ParseError::new(line, "second domain header"));
            }
            domain = Some(parse_domain_tokens(line, &toks[1..])?);
            continue;
        }
        if domain.is_none() {
            return Err(ParseError::new(line, "face before the domain header"));
        }
        faces.push((line, parse_face(line, &toks)?));
    }
    let domain = domain.ok_or_else(|| ParseError::new(0, "missing domain header"))?;
    let mut patch = FacePatch::empty(domain);
    for (line, f) in faces {
        patch.insert(f).map_err(|e| ParseError::new(line, e.to_string()))?;
    }
    Ok(patch)
}

pub fn serialize_domain(d: &Domain) -> String {
    format!("domain {d}")
}

pub fn serialize_patch(patch: &FacePatch) -> String {
    let mut out = serialize_domain(patch.domain());
    out.push('\n');
    for f in patch.faces() {
        let _ = writeln!(out, "{f}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_gen::{gen_p0, gen_p1};

    #[test]
    fn round_trip_torus_and_window() {
        for p in [gen_p0(Domain::torus(2, 2, 2).unwrap()).unwrap(), gen_p1(Domain::cube(-1, 2).unwrap()).unwrap()] {
            let s = serialize_patch(&p);
            assert_eq!(parse_patch(&s).unwrap(), p);
        }
    }

    #[test]
    fn sheared_header() {
        let l = Lattice::new([2, 2, 4], [0, 1, 1]).unwrap();
        let p = FacePatch::empty(Domain::Torus(l));
        let s = serialize_patch(&p);
        assert_eq!(s, "domain torus 2 2 4 shear 0 1 1\n");
        assert_eq!(parse_patch(&s).unwrap(), p);
    }

    #[test]
    fn comments_and_errors() {
        let p = parse_patch("# a face\ndomain torus 2 2 2\n\n0 0 0 Z  # trailing\n").unwrap();
        assert_eq!(p.len(), 1);
        let e = parse_patch("domain torus 2 2 2\n0 0 Q Z\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_patch("0 0 0 Z\n").is_err());
        assert!(parse_patch("domain window 0 0 0 1 1 1\n5 5 5 X\n").is_err());
        assert!(parse_patch("domain torus 0 2 2\n").is_err());
    }
}

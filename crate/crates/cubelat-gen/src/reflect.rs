//! Extension of a seed box by reflection, and translation periods of windows.

use cubelat_lattice::{Axis, Domain, Face, FacePatch, Vec3i};
use cubelat_local::{validate_cubic, validate_discrete_minimal};

use crate::error::GenError;

/// Fold a doubled coordinate into `[l, r]` by reflection in both ends.
fn fold(c: i32, l: i32, r: i32) -> i32 {
    let w = r - l;
    let t = (c - l).rem_euclid(2 * w);
    l + if t > w { 2 * w - t } else { t }
}

/// Extend `seed` to `target` by repeated reflection in the planes half a unit outside
/// the seed's interior vertices.
pub fn reflect_extend(seed: &FacePatch, target: Domain) -> Result<FacePatch, GenError> {
    let (Domain::Window { lo, hi }, Domain::Window { lo: tlo, hi: thi }) = (*seed.domain(), target) else {
        return Err(GenError::Lattice(cubelat_lattice::LatticeError::UnsupportedDomain));
    };
    if !(tlo.le_all(lo) && hi.le_all(thi)) {
        return Err(GenError::WindowTooSmall(format!("target {tlo} {thi} must contain the seed window {lo} {hi}")));
    }
    let one = Vec3i::new(1, 1, 1);
    if !(lo + one).le_all(hi - one) {
        return Err(GenError::WindowTooSmall("seed window has no interior vertex".into()));
    }
    if !(validate_cubic(seed).ok() || validate_discrete_minimal(seed).ok()) {
        return Err(GenError::InvalidSeed);
    }
    let (l, r) = (lo * 2 + one, hi * 2 - one);
    let mut out = FacePatch::empty(target);
    for i in 0..target.face_slot_count() {
        let f = target.face_at_index(i);
        if target.reduce_face(f).is_none() {
            continue;
        }
        let c = f.center2();
        let folded = Vec3i::new(fold(c.x, l.x, r.x), fold(c.y, l.y, r.y), fold(c.z, l.z, r.z));
        let g = Face::from_center2(folded).expect("folding keeps the parity pattern");
        if seed.contains(g) {
            out.insert(f)?;
        }
    }
    Ok(out)
}

/// Smallest `p <= max_p` such that shifting by `p` along `axis` preserves the window's
/// face set on the overlap.
pub fn minimal_period(patch: &FacePatch, axis: Axis, max_p: i32) -> Result<Option<i32>, GenError> {
    let Domain::Window { lo, hi } = *patch.domain() else {
        return Err(GenError::Lattice(cubelat_lattice::LatticeError::UnsupportedDomain));
    };
    if hi[axis] - lo[axis] < max_p + 1 {
        return Err(GenError::WindowTooSmall(format!(
            "window extent {} along {axis} is too short to test periods up to {max_p}",
            hi[axis] - lo[axis]
        )));
    }
    let domain = *patch.domain();
    for p in 1..=max_p {
        let t = Vec3i::axis(axis, p);
        let ok = (0..domain.face_slot_count()).all(|i| {
            let f = domain.face_at_index(i);
            let g = f.translate(t);
            domain.reduce_face(f).is_none() || domain.reduce_face(g).is_none() || patch.contains(f) == patch.contains(g)
        });
        if ok {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_column, gen_p0, gen_p1, gen_p_sigma, column_period};
    use crate::words::SigmaWord;
    use cubelat_lattice::faces_of_vertex;
    use cubelat_local::{cubic_masks, validate_cubic, VertexTag, classify_mask};

    fn single_vertex(mask: u16) -> FacePatch {
        let dom = Domain::cube(-1, 1).unwrap();
        let faces = faces_of_vertex(Vec3i::ZERO).into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, f)| f);
        FacePatch::from_faces(dom, faces).unwrap()
    }

    #[test]
    fn single_monkey_gives_p0() {
        let m = crate::families::layer_config(crate::words::TauLetter::Sheet, (0, 0), 0, 0);
        let target = Domain::cube(-2, 2).unwrap();
        let p = reflect_extend(&single_vertex(m), target).unwrap();
        let p0 = gen_p0(Domain::torus(2, 2, 2).unwrap()).unwrap().restrict(target).unwrap();
        assert_eq!(p, p0);
    }

    #[test]
    fn single_screw_gives_p1() {
        let target = Domain::cube(-2, 2).unwrap();
        let p1 = gen_p1(Domain::torus(2, 2, 2).unwrap()).unwrap();
        let seed = p1.restrict(Domain::cube(-1, 1).unwrap()).unwrap();
        assert_eq!(classify_mask(seed.mask_at(Vec3i::ZERO)).tag(), VertexTag::S);
        let p = reflect_extend(&seed, target).unwrap();
        assert_eq!(p, p1.restrict(target).unwrap());
    }

    #[test]
    fn every_cubic_vertex_reflects_to_a_valid_window() {
        for &m in cubic_masks() {
            let p = reflect_extend(&single_vertex(m), Domain::cube(-3, 3).unwrap()).unwrap();
            assert!(validate_cubic(&p).ok());
            // faces at the seed's interior vertex are unchanged
            assert_eq!(p.mask_at(Vec3i::ZERO), m);
        }
    }

    #[test]
    fn identity_on_reflection_closed_seed() {
        let w = Domain::cube(-2, 2).unwrap();
        let seed = gen_p0(Domain::torus(2, 2, 2).unwrap()).unwrap().restrict(w).unwrap();
        assert_eq!(reflect_extend(&seed, w).unwrap(), seed);
    }

    #[test]
    fn invalid_seed_and_bad_target() {
        assert_eq!(reflect_extend(&single_vertex(0b11), Domain::cube(-2, 2).unwrap()), Err(GenError::InvalidSeed));
        let m = cubic_masks()[0];
        assert!(reflect_extend(&single_vertex(m), Domain::cube(0, 2).unwrap()).is_err());
    }

    #[test]
    fn periods_of_windows() {
        let w = Domain::cube(-4, 4).unwrap();
        let p0 = gen_p0(Domain::torus(2, 2, 2).unwrap()).unwrap().restrict(w).unwrap();
        assert_eq!(minimal_period(&p0, Axis::Z, 4).unwrap(), Some(2));
        let p1 = gen_p1(Domain::torus(2, 2, 2).unwrap()).unwrap().restrict(w).unwrap();
        for a in Axis::ALL {
            assert_eq!(minimal_period(&p1, a, 4).unwrap(), Some(2));
        }
        assert!(minimal_period(&p0, Axis::X, 8).is_err());
    }

    #[test]
    fn column_periods_match_brute_force() {
        for s in ["S", "SZ", "SSZ", "SSZZ", "SSSZ", "SZZ", "SSZSZ"] {
            let s: SigmaWord = s.parse().unwrap();
            let p = column_period(&s);
            let win = Domain::window(Vec3i::new(-1, -1, 0), Vec3i::new(1, 1, 2 * p + 12)).unwrap();
            let col = gen_column(&s, win).unwrap();
            assert_eq!(minimal_period(&col, Axis::Z, p + 10).unwrap(), Some(p), "{s}");
            let big = gen_p_sigma(&s, Domain::torus(2, 2, p).unwrap()).unwrap();
            assert!(validate_cubic(&big).ok());
        }
    }
}

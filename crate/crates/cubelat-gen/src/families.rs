//! The periodic families: P0, P1, the all-screw polyhedra P_sigma and the layered P_tau.

use cubelat_lattice::{lcm, slot_index, Axis, Dir, Domain, FacePatch, Vec3i};
use cubelat_local::{flip_mask, monkey_base, screw_mask, Hand};

use crate::build::{build_from_configs, faces_at_vertices, odd};
use crate::error::GenError;
use crate::words::{SigmaWord, TauLetter, TauWord};

/// Configuration of the `i`-th screw of the column with word `sigma` along `axis`.
///
/// The upper flange line alternates between `axis.next()` and `axis.prev()`.
pub fn column_config(sigma: &SigmaWord, axis: Axis, i: i32) -> u16 {
    let upper = if odd(i) { axis.prev() } else { axis.next() };
    screw_mask(axis, upper, sigma.at(i as i64))
}

/// Translation period of the column along its axis.
pub fn column_period(sigma: &SigmaWord) -> i32 {
    lcm(2, sigma.primitive().len() as i64) as i32
}

fn p0_config(v: Vec3i) -> u16 {
    flip_mask(monkey_base(), odd(v.x), odd(v.y), odd(v.z))
}

/// Rectangular tori need even x and y periods; sheared tori are left to the closure check
/// in `build_from_configs`.
fn check_even_xy(domain: &Domain, what: &str) -> Result<(), GenError> {
    if let Some(l) = domain.lattice().filter(|l| l.is_rect()) {
        let [px, py, _] = l.periods();
        if odd(px) || odd(py) {
            return Err(GenError::Period(format!("{what} needs even x and y periods, got lattice {l}")));
        }
    }
    Ok(())
}

pub fn gen_p0(domain: Domain) -> Result<FacePatch, GenError> {
    build_from_configs(domain, p0_config)
}

pub fn gen_p1(domain: Domain) -> Result<FacePatch, GenError> {
    gen_p_sigma(&SigmaWord::new(vec![Hand::S, Hand::Z])?, domain)
}

pub fn p_sigma_config(sigma: &SigmaWord, v: Vec3i) -> u16 {
    flip_mask(column_config(sigma, Axis::Z, v.z), odd(v.x), odd(v.y), false)
}

/// The column of `sigma` reflected in both transverse directions; columns run along z.
pub fn gen_p_sigma(sigma: &SigmaWord, domain: Domain) -> Result<FacePatch, GenError> {
    check_even_xy(&domain, "an all-screw polyhedron")?;
    if let Some(l) = domain.lattice() {
        let p = column_period(sigma);
        if l.is_rect() && l.periods()[2] % p != 0 {
            return Err(GenError::Period(format!("z period must be a multiple of the column period {p}")));
        }
    }
    build_from_configs(domain, |v| p_sigma_config(sigma, v))
}

/// The screws of one column on the z-axis line through the origin.
pub fn gen_column(sigma: &SigmaWord, domain: Domain) -> Result<FacePatch, GenError> {
    let line: Vec<Vec3i> = match domain {
        Domain::Torus(l) => {
            let p = column_period(sigma);
            if !l.is_rect() || l.periods()[2] % p != 0 {
                return Err(GenError::Period(format!("z period must be a multiple of the column period {p}")));
            }
            (0..l.periods()[2]).map(|z| Vec3i::new(0, 0, z)).collect()
        }
        Domain::Window { lo, hi } => {
            if !(lo.x <= 0 && 0 <= hi.x && lo.y <= 0 && 0 <= hi.y) {
                return Err(GenError::WindowTooSmall("window must meet the z-axis".into()));
            }
            (lo.z..=hi.z).map(|z| Vec3i::new(0, 0, z)).collect()
        }
    };
    faces_at_vertices(domain, line, |v| column_config(sigma, Axis::Z, v.z))
}

/// Vertices of the plane `z = 0` inside the domain.
fn plane_vertices(domain: &Domain) -> Result<Vec<Vec3i>, GenError> {
    let vs: Vec<Vec3i> = domain.vertices().into_iter().filter(|v| v.z == 0).collect();
    if vs.is_empty() {
        return Err(GenError::WindowTooSmall("domain must meet the plane z = 0".into()));
    }
    Ok(vs)
}

/// The column along x reflected in y, on the plane `z = 0` (axis x, normal z, bi-axis y).
pub fn gen_slab(sigma: &SigmaWord, domain: Domain) -> Result<FacePatch, GenError> {
    check_even_xy(&domain, "a slab")?;
    let vs = plane_vertices(&domain)?;
    faces_at_vertices(domain, vs, |v| flip_mask(column_config(sigma, Axis::X, v.x), false, odd(v.y), false))
}

/// Reflected monkey saddles on the plane `z = 0`.
pub fn gen_sheet(domain: Domain) -> Result<FacePatch, GenError> {
    check_even_xy(&domain, "a sheet")?;
    let vs = plane_vertices(&domain)?;
    faces_at_vertices(domain, vs, |v| flip_mask(monkey_base(), odd(v.x), odd(v.y), false))
}

/// In-plane translate of a layer, by `(dx, dy)` with entries 0 or 1.
pub type LayerVariant = (i32, i32);

const VARIANTS: [LayerVariant; 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];

/// Configuration of a horizontal layer of kind `letter` at in-plane position `(x, y)`.
pub fn layer_config(letter: TauLetter, variant: LayerVariant, x: i32, y: i32) -> u16 {
    let (x, y) = (x - variant.0, y - variant.1);
    let sz = SigmaWord::new(vec![Hand::S, Hand::Z]).expect("non-empty");
    match letter {
        TauLetter::Sheet => flip_mask(monkey_base(), odd(x), odd(y), false),
        TauLetter::X => flip_mask(column_config(&sz, Axis::X, x), false, odd(y), false),
        TauLetter::Y => flip_mask(column_config(&sz, Axis::Y, y), odd(x), false, false),
    }
}

/// Whether the upward faces of `lower` agree with the downward faces of `upper`.
fn layers_glue(lower: (TauLetter, LayerVariant), upper: (TauLetter, LayerVariant)) -> bool {
    let horiz = [Dir::plus(Axis::X), Dir::minus(Axis::X), Dir::plus(Axis::Y), Dir::minus(Axis::Y)];
    for x in 0..2 {
        for y in 0..2 {
            let a = layer_config(lower.0, lower.1, x, y);
            let b = layer_config(upper.0, upper.1, x, y);
            for d in horiz {
                let up = a >> slot_index(d, Dir::plus(Axis::Z)) & 1;
                let down = b >> slot_index(d, Dir::minus(Axis::Z)) & 1;
                if up != down {
                    return false;
                }
            }
        }
    }
    true
}

/// Layer translates for one full z-period of P_tau, starting at `(0, 0)`.
///
/// Each layer takes the first translate that glues to the one below. The period is
/// a multiple of `|tau|`.
pub fn tau_layer_variants(tau: &TauWord) -> Result<Vec<LayerVariant>, GenError> {
    let n = tau.len() as i64;
    let mut out = vec![(0, 0)];
    for z in 1..=(8 * n) {
        let below = (tau.at(z - 1), out[(z - 1) as usize]);
        let v = VARIANTS
            .into_iter()
            .find(|&v| layers_glue(below, (tau.at(z), v)))
            .ok_or_else(|| GenError::Period(format!("no layer fits above layer {}", z - 1)))?;
        if z % n == 0 && v == (0, 0) {
            return Ok(out);
        }
        out.push(v);
    }
    Err(GenError::Period("layer translates do not repeat".into()))
}

pub fn p_tau_config(tau: &TauWord, variants: &[LayerVariant], v: Vec3i) -> u16 {
    let k = v.z.rem_euclid(variants.len() as i32);
    layer_config(tau.at(v.z as i64), variants[k as usize], v.x, v.y)
}

/// Minimal z-period of P_tau in the (rectangular) frame of the generator.
pub fn p_tau_period(tau: &TauWord) -> Result<i32, GenError> {
    Ok(tau_layer_variants(tau)?.len() as i32)
}

/// Horizontal layers: a sheet for `0`, an untwisted slab with the given axis for `x` or `y`.
pub fn gen_p_tau(tau: &TauWord, domain: Domain) -> Result<FacePatch, GenError> {
    check_even_xy(&domain, "a layered polyhedron")?;
    let variants = tau_layer_variants(tau)?;
    build_from_configs(domain, |v| p_tau_config(tau, &variants, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_local::{validate_cubic, vertex_config, VertexConfig, VertexTag};

    fn torus(x: i32, y: i32, z: i32) -> Domain {
        Domain::torus(x, y, z).unwrap()
    }

    fn sigma(s: &str) -> SigmaWord {
        s.parse().unwrap()
    }

    fn tau(s: &str) -> TauWord {
        s.parse().unwrap()
    }

    #[test]
    fn p0_on_smallest_torus() {
        let p = gen_p0(torus(2, 2, 2)).unwrap();
        assert_eq!(p.len(), 12);
        let r = validate_cubic(&p);
        assert!(r.ok(), "{r}");
        assert_eq!(r.count(VertexTag::M), 8);
    }

    #[test]
    fn p1_checkerboard() {
        let p = gen_p1(torus(2, 2, 2)).unwrap();
        let r = validate_cubic(&p);
        assert!(r.ok(), "{r}");
        assert_eq!((r.count(VertexTag::S), r.count(VertexTag::Z)), (4, 4));
        for v in p.domain().vertices() {
            let t = vertex_config(&p, v).tag();
            let w = vertex_config(&p, v + Vec3i::new(1, 0, 0)).tag();
            assert_ne!(t, w);
        }
    }

    #[test]
    fn odd_periods_rejected() {
        assert!(matches!(gen_p0(torus(3, 2, 2)), Err(GenError::Period(_))));
        assert!(matches!(gen_p1(torus(2, 2, 3)), Err(GenError::Period(_))));
    }

    #[test]
    fn p0_window_is_valid() {
        let p = gen_p0(Domain::cube(0, 3).unwrap()).unwrap();
        assert!(validate_cubic(&p).ok());
    }

    #[test]
    fn sigma_sz_is_p1() {
        let a = gen_p_sigma(&sigma("SZ"), torus(2, 2, 2)).unwrap();
        let b = gen_p1(torus(2, 2, 2)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sigma_columns_read_the_word() {
        for w in ["S", "SZ", "SSZ", "SSZZ", "SZZZ", "SSSZZ"] {
            let s = sigma(w);
            let pz = column_period(&s) * 2;
            let p = gen_p_sigma(&s, torus(2, 2, pz)).unwrap();
            let r = validate_cubic(&p);
            assert!(r.ok(), "{w}: {r}");
            for z in 0..pz {
                let c = vertex_config(&p, Vec3i::new(0, 0, z));
                assert_eq!(c.hand(), Some(s.at(z as i64)), "{w} at {z}");
                assert_eq!(c.screw_axis(), Some(Axis::Z));
                // the neighbouring parallel column is the mirror image
                let m = vertex_config(&p, Vec3i::new(1, 0, z));
                assert_eq!(m.hand(), Some(s.at(z as i64).swap()));
            }
        }
    }

    #[test]
    fn sigma_invariant_under_diagonal_shift() {
        let p = gen_p_sigma(&sigma("SSZ"), torus(4, 4, 6)).unwrap();
        assert_eq!(p.translate(Vec3i::new(1, 1, 0)), p);
        assert_ne!(p.translate(Vec3i::new(1, 0, 0)), p);
    }

    #[test]
    fn columns_twist_at_equal_letters() {
        let s = sigma("SSZ");
        let p = gen_column(&s, Domain::window(Vec3i::new(-1, -1, 0), Vec3i::new(1, 1, 5)).unwrap()).unwrap();
        assert!(!p.is_empty());
        assert_eq!(s.twist_positions(), vec![0]);
        assert!(sigma("SZ").is_untwisted());
    }

    #[test]
    fn sheet_is_all_monkey() {
        let p = gen_sheet(Domain::window(Vec3i::new(-3, -3, -1), Vec3i::new(3, 3, 1)).unwrap()).unwrap();
        for x in -2..=2 {
            for y in -2..=2 {
                assert!(matches!(vertex_config(&p, Vec3i::new(x, y, 0)), VertexConfig::Monkey { .. }));
            }
        }
    }

    #[test]
    fn slab_layer_screws() {
        let p = gen_slab(&sigma("SZ"), Domain::window(Vec3i::new(-3, -3, -1), Vec3i::new(3, 3, 1)).unwrap()).unwrap();
        for x in -2..=2 {
            for y in -2..=2 {
                assert_eq!(vertex_config(&p, Vec3i::new(x, y, 0)).screw_axis(), Some(Axis::X));
            }
        }
    }

    #[test]
    fn tau_sheets_are_p0() {
        assert_eq!(gen_p_tau(&tau("0"), torus(2, 2, 2)).unwrap(), gen_p0(torus(2, 2, 2)).unwrap());
    }

    #[test]
    fn tau_words_validate() {
        for w in ["0", "x", "xy", "0x", "0x0y", "xxy", "00x", "0xy"] {
            let t = tau(w);
            let pz = p_tau_period(&t).unwrap();
            assert!(pz as usize % t.len() == 0);
            let p = gen_p_tau(&t, torus(2, 2, pz)).unwrap();
            let r = validate_cubic(&p);
            assert!(r.ok(), "{w}: {r}");
            for z in 0..pz {
                let c = vertex_config(&p, Vec3i::new(0, 0, z));
                match t.at(z as i64).slab_axis() {
                    None => assert!(c.is_monkey()),
                    Some(a) => assert_eq!(c.screw_axis(), Some(a)),
                }
            }
        }
    }

    #[test]
    fn tau_layered_all_slabs_are_all_screw() {
        let t = tau("xy");
        let pz = p_tau_period(&t).unwrap();
        let p = gen_p_tau(&t, torus(2, 2, pz)).unwrap();
        let r = validate_cubic(&p);
        assert_eq!(r.count(VertexTag::S) + r.count(VertexTag::Z), 4 * pz as usize);
    }
}

//! Two discrete minimal surfaces that are not cubic polyhedra.

use std::sync::OnceLock;

use cubelat_lattice::{slot_of, faces_of_vertex, Axis, Domain, FacePatch, Vec3i};
use cubelat_local::{classify_mask, cubic_masks, flat_mask, flip_mask, screw_mask, validate_discrete_minimal, Hand};

use crate::build::{build_from_configs, odd};
use crate::error::GenError;

/// Configuration on the z-axis line of the Scherk-type surface.
fn scherk_line(z: i32) -> u16 {
    match z.signum() {
        0 => screw_mask(Axis::Z, Axis::X, Hand::S),
        1 => flat_mask(Axis::Y),
        _ => flat_mask(Axis::X),
    }
}

/// A layer of screws at `z = 0` with stacked flat half-planes above (normal y) and below (normal x).
pub fn gen_scherk(domain: Domain) -> Result<FacePatch, GenError> {
    let Domain::Window { lo, hi } = domain else {
        return Err(GenError::Period("the Scherk-type surface has no period along z".into()));
    };
    if !domain.is_interior(Vec3i::ZERO) {
        return Err(GenError::WindowTooSmall(format!("origin must be interior to window {lo} {hi}")));
    }
    build_from_configs(domain, |v| flip_mask(scherk_line(v.z), odd(v.x), odd(v.y), false))
}

/// Block offsets `(x, y)` of the 3x3 seed, row by row.
fn block_cells() -> [(i32, i32); 9] {
    let mut out = [(0, 0); 9];
    let mut k = 0;
    for y in -1..=1 {
        for x in -1..=1 {
            out[k] = (x, y);
            k += 1;
        }
    }
    out
}

/// Fold a coordinate into the seed range `-1..=1` by reflection in the planes `t = -1.5` and `t = 1.5`.
fn fold6(t: i32) -> (i32, bool) {
    let s = (t + 1).rem_euclid(6) - 1;
    if s <= 1 {
        (s, false)
    } else {
        (3 - s, true)
    }
}

fn flat_center_config(block: &[u16; 9], v: Vec3i) -> u16 {
    let (x, fx) = fold6(v.x);
    let (y, fy) = fold6(v.y);
    let k = ((y + 1) * 3 + (x + 1)) as usize;
    flip_mask(block[k], fx, fy, odd(v.z))
}

fn block_consistent(cells: &[(i32, i32)], masks: &[u16]) -> bool {
    let k = masks.len() - 1;
    let (x, y) = cells[k];
    let v = Vec3i::new(x, y, 0);
    for (s, f) in faces_of_vertex(v).into_iter().enumerate() {
        let here = masks[k] >> s & 1;
        for j in 0..k {
            let w = Vec3i::new(cells[j].0, cells[j].1, 0);
            if let Some(t) = slot_of(w, f) {
                if masks[j] >> t & 1 != here {
                    return false;
                }
            }
        }
    }
    true
}

/// Seed masks of the flat-centre block: flat centre, screws on the sides, saddles at the corners.
///
/// Found by a depth-first search; the first block whose reflection closes up on the
/// (6,6,2) torus as a discrete minimal surface is kept.
pub fn flat_center_block() -> &'static [u16; 9] {
    static BLOCK: OnceLock<[u16; 9]> = OnceLock::new();
    BLOCK.get_or_init(|| {
        let cells = block_cells();
        let candidates: Vec<Vec<u16>> = cells
            .iter()
            .map(|&(x, y)| match (x == 0, y == 0) {
                (true, true) => vec![flat_mask(Axis::Z)],
                (false, false) => cubic_masks().iter().copied().filter(|&m| classify_mask(m).is_monkey()).collect(),
                _ => cubic_masks()
                    .iter()
                    .copied()
                    .filter(|&m| classify_mask(m).screw_axis().is_some_and(|a| a != Axis::Z))
                    .collect(),
            })
            .collect();
        let torus = Domain::torus(6, 6, 2).expect("positive periods");
        let mut stack = Vec::with_capacity(9);
        fn rec(cells: &[(i32, i32)], cand: &[Vec<u16>], stack: &mut Vec<u16>, torus: Domain) -> Option<[u16; 9]> {
            if stack.len() == 9 {
                let block: [u16; 9] = stack.as_slice().try_into().ok()?;
                let p = build_from_configs(torus, |v| flat_center_config(&block, v)).ok()?;
                return validate_discrete_minimal(&p).ok().then_some(block);
            }
            for &m in &cand[stack.len()] {
                stack.push(m);
                if block_consistent(cells, stack) {
                    if let Some(b) = rec(cells, cand, stack, torus) {
                        return Some(b);
                    }
                }
                stack.pop();
            }
            None
        }
        rec(&cells, &candidates, &mut stack, torus).expect("a flat-centre block exists")
    })
}

/// A Flat vertex at the origin ringed by screws, extended by reflection.
pub fn gen_flat_center(domain: Domain) -> Result<FacePatch, GenError> {
    match domain {
        Domain::Window { lo, hi } => {
            for p in [Vec3i::new(-1, -1, 0), Vec3i::new(1, 1, 0)] {
                if !domain.is_interior(p) {
                    return Err(GenError::WindowTooSmall(format!(
                        "window {lo} {hi} must contain the 3x3 block around the origin in its interior"
                    )));
                }
            }
        }
        Domain::Torus(l) => {
            let [px, py, pz] = l.periods();
            if px % 6 != 0 || py % 6 != 0 || pz % 2 != 0 || !l.is_rect() {
                return Err(GenError::Period(format!("flat-centre surface needs periods that are multiples of (6,6,2), got {l}")));
            }
        }
    }
    let block = flat_center_block();
    build_from_configs(domain, |v| flat_center_config(block, v))
}

//! Tower parities and the elimination of vertical columns by pushing towers.

use std::collections::BTreeMap;

use cubelat_lattice::{Axis, Face, FacePatch, Vec3i};
use cubelat_local::{vertex_config, FaceDiagram};
use cubelat_transforms::{find_towers, is_tower, push_unchecked, Tower};

use crate::certificate::PushRecord;
use crate::error::ClassifyError;

/// Parity bit of each tower with a given axis, relative to a seed tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityMap {
    pub axis: Axis,
    pub seed: (i32, i32),
    pub parity: BTreeMap<(i32, i32), u8>,
}

impl ParityMap {
    pub fn towers_with(&self, bit: u8) -> Vec<(i32, i32)> {
        self.parity.iter().filter(|(_, p)| **p == bit).map(|(b, _)| *b).collect()
    }
}

fn diagram_at(patch: &FacePatch, axis: Axis, base: (i32, i32), level: i32) -> FaceDiagram {
    let mut p = Vec3i::axis(axis, level);
    p[axis.next()] = base.0;
    p[axis.prev()] = base.1;
    FaceDiagram::around(patch, Face::new(p, axis))
}

/// A tower at offset `(a, b)` from the seed, `a = b` mod 2, gets parity `a` if its diagram
/// equals the seed's and `a + 1` otherwise. Towers off the seed's checkerboard are left out.
pub fn tower_parity(patch: &FacePatch, axis: Axis, seed: &Tower) -> Result<ParityMap, ClassifyError> {
    let l = patch.domain().lattice().ok_or(ClassifyError::NotTorus)?;
    let towers: Vec<Tower> = find_towers(patch).into_iter().filter(|t| t.axis == axis).collect();
    // the offset is only defined modulo the projected lattice
    if towers.len() > 1 && l.basis().iter().any(|b| b[axis.next()].rem_euclid(2) == 1 || b[axis.prev()].rem_euclid(2) == 1) {
        return Err(ClassifyError::InconsistentParity(axis));
    }
    let reference = diagram_at(patch, axis, seed.base, seed.level);
    let mut parity = BTreeMap::new();
    for t in &towers {
        let (a, b) = (t.base.0 - seed.base.0, t.base.1 - seed.base.1);
        if (a - b).rem_euclid(2) != 0 {
            continue;
        }
        let same = diagram_at(patch, axis, t.base, seed.level) == reference;
        parity.insert(t.base, (a + i32::from(!same)).rem_euclid(2) as u8);
    }
    Ok(ParityMap { axis, seed: seed.base, parity })
}

fn has_columns(patch: &FacePatch, axis: Axis) -> bool {
    patch.domain().vertices().into_iter().any(|v| vertex_config(patch, v).screw_axis() == Some(axis))
}

/// Push every listed tower; all must be towers beforehand and stay towers in turn.
pub fn push_set(patch: &FacePatch, towers: &[Tower]) -> Option<FacePatch> {
    if !towers.iter().all(|t| is_tower(patch, t)) {
        return None;
    }
    let mut cur = patch.clone();
    for t in towers {
        if !is_tower(&cur, t) {
            return None;
        }
        cur = push_unchecked(&cur, t);
    }
    Some(cur)
}

/// Remove every screw with vertical (z) axis by pushing vertical towers.
///
/// Tries the parity-1 towers, then the parity-0 towers, then all of them, and finally every
/// subset when there are few towers.
pub fn eliminate_vertical_columns(patch: &FacePatch) -> Result<(FacePatch, Vec<PushRecord>), ClassifyError> {
    let axis = Axis::Z;
    if !has_columns(patch, axis) {
        return Ok((patch.clone(), Vec::new()));
    }
    let towers: Vec<Tower> = find_towers(patch).into_iter().filter(|t| t.axis == axis).collect();
    let Some(seed) = towers.first() else {
        return Err(ClassifyError::Precondition("no vertical towers".into()));
    };
    let pm = tower_parity(patch, axis, seed)?;
    let pick = |bases: &[(i32, i32)]| -> Vec<Tower> { towers.iter().filter(|t| bases.contains(&t.base)).copied().collect() };
    let mut tries: Vec<Vec<Tower>> = vec![pick(&pm.towers_with(1)), pick(&pm.towers_with(0)), towers.clone()];
    if towers.len() <= 12 {
        tries.extend((1u32..1 << towers.len()).map(|m| (0..towers.len()).filter(|i| m >> i & 1 == 1).map(|i| towers[i]).collect()));
    }
    for set in tries {
        if let Some(q) = push_set(patch, &set) {
            if !has_columns(&q, axis) {
                let recs = set.iter().map(|t| PushRecord { axis, base: t.base }).collect();
                return Ok((q, recs));
            }
        }
    }
    Err(ClassifyError::NoCertificate)
}

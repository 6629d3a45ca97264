//! Re-deriving a patch from one vertex and the vertex types.

use std::collections::{BTreeSet, VecDeque};

use cubelat_lattice::{slot_index, Dir, FacePatch, Vec3i};
use cubelat_local::{classify_mask, cubic_masks, VertexTag};

use crate::error::GenError;

/// Cubic masks of type `tag` agreeing with the faces `germ` along direction `d`.
///
/// `germ` holds, for each direction `e` perpendicular to `d`, whether slot `(d, e)` is occupied.
pub fn masks_with_germ(tag: VertexTag, d: Dir, germ: &[(Dir, bool)]) -> Vec<u16> {
    cubic_masks()
        .iter()
        .copied()
        .filter(|&m| classify_mask(m).tag() == tag)
        .filter(|&m| germ.iter().all(|&(e, b)| (m >> slot_index(d, e) & 1 == 1) == b))
        .collect()
}

fn germ_of(mask: u16, d: Dir) -> Vec<(Dir, bool)> {
    Dir::ALL
        .into_iter()
        .filter(|e| e.axis != d.axis)
        .map(|e| (e, mask >> slot_index(d, e) & 1 == 1))
        .collect()
}

/// Walk the interior vertices breadth-first from `v0`, deriving each configuration from
/// its parent's and its own type. Returns the number of vertices reached.
///
/// Fails at the first vertex where the derivation is not unique or disagrees with the patch.
pub fn propagate_from(patch: &FacePatch, v0: Vec3i) -> Result<usize, GenError> {
    let domain = *patch.domain();
    let key = |v: Vec3i| domain.reduce_vertex(v);
    let start = key(v0).filter(|_| domain.is_interior(v0)).ok_or(GenError::Inconsistent(v0))?;
    if !classify_mask(patch.mask_at(start)).is_cubic() {
        return Err(GenError::Inconsistent(start));
    }
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([(start, patch.mask_at(start))]);
    while let Some((v, mv)) = queue.pop_front() {
        for d in Dir::ALL {
            let w = v + d.vector();
            if !domain.is_interior(w) {
                continue;
            }
            let Some(wk) = key(w) else { continue };
            if seen.contains(&wk) {
                continue;
            }
            let actual = patch.mask_at(w);
            let tag = classify_mask(actual).tag();
            // slot (d, e) at v is the same face as slot (-d, e) at w
            let germ: Vec<(Dir, bool)> = germ_of(mv, d);
            let cands = masks_with_germ(tag, d.opposite(), &germ);
            if cands.len() != 1 || cands[0] != actual {
                return Err(GenError::Inconsistent(wk));
            }
            seen.insert(wk);
            queue.push_back((wk, cands[0]));
        }
    }
    Ok(seen.len())
}

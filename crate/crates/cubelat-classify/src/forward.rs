//! Random forward constructions: a layered base, staged tower pushes, then slab inserts.
//!
//! Choices come from a caller-supplied picker so the construction is reproducible from a seed.

use cubelat_gen::{gen_p_tau, p_tau_period, TauLetter, TauWord};
use cubelat_lattice::{Axis, Domain, FacePatch};
use cubelat_transforms::{find_towers, insert_slab, insertable_pattern, is_tower, push_tower, InsertPattern, InsertSpec, Plane, Shift};

use crate::certificate::{InsertKind, InsertRecord, PushRecord};

#[derive(Clone, Copy, Debug)]
pub struct ForwardOptions {
    pub max_volume: usize,
    pub max_tau_len: usize,
    pub max_inserts: usize,
}

impl Default for ForwardOptions {
    fn default() -> Self {
        ForwardOptions { max_volume: 64, max_tau_len: 3, max_inserts: 2 }
    }
}

#[derive(Clone, Debug)]
pub struct Forward {
    pub base: TauWord,
    pub domain: Domain,
    pub pushes: Vec<PushRecord>,
    pub inserts: Vec<InsertRecord>,
    pub patch: FacePatch,
}

/// Build one patch; `pick(n)` must return a value in `0..n`.
pub fn forward_construct(opts: ForwardOptions, pick: &mut dyn FnMut(usize) -> usize) -> Option<Forward> {
    let letters = [TauLetter::Sheet, TauLetter::X, TauLetter::Y];
    let (base, domain) = (0..32).find_map(|_| {
        let len = 1 + pick(opts.max_tau_len);
        let tau = TauWord::new((0..len).map(|_| letters[pick(3)]).collect()).ok()?;
        let pz = p_tau_period(&tau).ok()? as usize;
        let sizes: Vec<(usize, usize)> =
            [(2, 2), (2, 4), (4, 2), (4, 4)].into_iter().filter(|(x, y)| x * y * pz <= opts.max_volume).collect();
        if sizes.is_empty() {
            return None;
        }
        let (px, py) = sizes[pick(sizes.len())];
        Some((tau, Domain::torus(px as i32, py as i32, pz as i32).ok()?))
    })?;
    let mut patch = gen_p_tau(&base, domain).ok()?;
    let mut pushes = Vec::new();
    for axis in [Axis::Z, Axis::Y, Axis::X] {
        let stage: Vec<_> = find_towers(&patch).into_iter().filter(|t| t.axis == axis).collect();
        for t in stage {
            if pick(2) == 1 && is_tower(&patch, &t) {
                patch = push_tower(&patch, &t).ok()?;
                pushes.push(PushRecord { axis, base: t.base });
            }
        }
    }
    let mut inserts = Vec::new();
    for _ in 0..pick(opts.max_inserts + 1) {
        let l = *patch.domain().lattice()?;
        let layer = l.volume() / l.axis_period(Axis::Z) as usize;
        if l.volume() + layer > opts.max_volume {
            break;
        }
        let plane = Plane::new(Axis::Z, pick(l.axis_period(Axis::Z) as usize) as i32);
        let shift = if pick(2) == 0 { Shift::Plus } else { Shift::Minus };
        let (spec, kind) = match insertable_pattern(&patch, plane) {
            Some(InsertPattern::Trivial) => {
                let a = if pick(2) == 0 { Axis::X } else { Axis::Y };
                (InsertSpec::Trivial(a), InsertKind::Trivial(a))
            }
            Some(InsertPattern::Word { omega, .. }) => (InsertSpec::Word { count: 1 }, InsertKind::Word(omega)),
            None => continue,
        };
        let Ok(next) = insert_slab(&patch, plane, &spec, shift) else { continue };
        patch = next;
        inserts.push(InsertRecord { plane, kind, count: 1, shift });
    }
    Some(Forward { base, domain, pushes, inserts, patch })
}

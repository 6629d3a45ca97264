//! Recognising pushed layered polyhedra.
//!
//! A push complements a fixed set of wall faces, so a patch is a pushed `P_tau` exactly when
//! its difference from some `P_tau` is a sum of tube wall sets that can be pushed in stages.

use std::collections::{BTreeSet, HashMap};

use cubelat_gen::{gen_p_tau, p_tau_period, TauLetter, TauWord};
use cubelat_lattice::{Axis, Domain, FacePatch, Isometry, Lattice, PointOp, Vec3i};
use cubelat_transforms::{is_tower, push_unchecked, tower_walls, Tower};

use crate::certificate::PushRecord;
use crate::gf2::{BitVec, Gf2Span};

/// `frame` maps the input onto `patch`, which is `base` after `pushes`.
#[derive(Clone, Debug)]
pub struct PushedForm {
    pub frame: Isometry,
    pub base: TauWord,
    pub pushes: Vec<PushRecord>,
    pub patch: FacePatch,
}

/// One tube (line of cells) per axis-parallel line of the torus, anchored at a stored face.
pub fn tubes(domain: &Domain) -> Vec<Tower> {
    let Some(l) = domain.lattice() else { return Vec::new() };
    let mut out = Vec::new();
    for axis in Axis::ALL {
        let period = l.axis_period(axis);
        let mut seen = BTreeSet::new();
        for i in 0..domain.face_slot_count() {
            let f = domain.face_at_index(i);
            if f.normal != axis || seen.contains(&i) {
                continue;
            }
            for k in 0..period {
                seen.insert(domain.face_index(f.translate(Vec3i::axis(axis, k))).expect("torus"));
            }
            let c = f.corner;
            out.push(Tower { axis, base: (c[axis.next()], c[axis.prev()]), level: c[axis], diagram_class: 0 });
        }
    }
    out
}

fn wall_vector(domain: &Domain, t: &Tower) -> BitVec {
    let mut v = BitVec::zeros(domain.face_slot_count());
    for f in tower_walls(domain, t) {
        v.flip(domain.face_index(f).expect("torus"));
    }
    v
}

/// Primitive tau words up to rotation, shortest first.
pub fn tau_necklaces(max_len: usize) -> Vec<TauWord> {
    let alphabet = [TauLetter::Sheet, TauLetter::X, TauLetter::Y];
    let mut out = Vec::new();
    for len in 1..=max_len {
        for code in 0..3usize.pow(len as u32) {
            let w: Vec<TauLetter> = (0..len).map(|i| alphabet[code / 3usize.pow(i as u32) % 3]).collect();
            let is_min = (1..len).all(|r| {
                let rot: Vec<TauLetter> = (0..len).map(|i| w[(i + r) % len]).collect();
                w < rot
            });
            if is_min {
                out.push(TauWord::new(w).expect("non-empty"));
            }
        }
    }
    out
}

struct LatticeData {
    tubes: Vec<Tower>,
    span: Gf2Span,
    /// Base word, its patch and bits, and the z tubes that are towers in it.
    bases: Vec<(TauWord, FacePatch, BitVec, BitVec)>,
}

const MAX_TAU_LEN: usize = 8;

fn lattice_data(l: Lattice) -> LatticeData {
    let domain = Domain::Torus(l);
    let tubes = tubes(&domain);
    let gens: Vec<BitVec> = tubes.iter().map(|t| wall_vector(&domain, t)).collect();
    let rz = l.axis_period(Axis::Z);
    let bases = tau_necklaces(MAX_TAU_LEN.min(rz as usize))
        .into_iter()
        .filter(|t| p_tau_period(t).is_ok_and(|p| rz % p == 0))
        .filter_map(|t| {
            let p = gen_p_tau(&t, domain).ok()?;
            let bits = BitVec::from_bools(p.bits());
            let mut z = BitVec::zeros(tubes.len());
            for (i, tb) in tubes.iter().enumerate() {
                if tb.axis != Axis::Z || is_tower(&p, tb) {
                    z.set(i);
                }
            }
            Some((t, p, bits, z))
        })
        .collect();
    LatticeData { tubes, span: Gf2Span::new(&gens), bases }
}

/// Push the selected tubes stage by stage (z, then y, then x); every tube must be a tower
/// at the start of its stage and when its turn comes.
fn replay_stages(base: &FacePatch, tubes: &[Tower], combo: &BitVec) -> Option<Vec<PushRecord>> {
    let mut cur = base.clone();
    let mut out = Vec::new();
    for axis in [Axis::Z, Axis::Y, Axis::X] {
        let set: Vec<&Tower> = combo.ones().map(|i| &tubes[i]).filter(|t| t.axis == axis).collect();
        if !set.iter().all(|t| is_tower(&cur, t)) {
            return None;
        }
        for t in set {
            if !is_tower(&cur, t) {
                return None;
            }
            cur = push_unchecked(&cur, t);
            out.push(PushRecord { axis, base: t.base });
        }
    }
    Some(out)
}

const MAX_VARIANTS: usize = 4096;

/// Solutions `combo + kernel element`, lightest first.
fn variants(combo: &BitVec, kernel: &[BitVec]) -> Vec<BitVec> {
    if kernel.len() <= 16 {
        let mut all: Vec<BitVec> = Vec::with_capacity(1 << kernel.len());
        let mut cur = combo.clone();
        all.push(cur.clone());
        // Gray code walk over the kernel
        for i in 1u32..1 << kernel.len() {
            cur.xor_assign(&kernel[i.trailing_zeros() as usize]);
            all.push(cur.clone());
        }
        all.sort_by_key(|v| v.count_ones());
        all.truncate(MAX_VARIANTS);
        return all;
    }
    // too many to list: descend greedily, then add single kernel steps
    let mut cur = combo.clone();
    loop {
        let better = kernel.iter().map(|k| cur.xor(k)).min_by_key(|v| v.count_ones());
        match better {
            Some(b) if b.count_ones() < cur.count_ones() => cur = b,
            _ => break,
        }
    }
    let mut out = vec![cur.clone()];
    out.extend(kernel.iter().map(|k| cur.xor(k)));
    for (i, a) in kernel.iter().enumerate() {
        for b in &kernel[i + 1..] {
            out.push(cur.xor(a).xor(b));
        }
    }
    out.sort_by_key(|v| v.count_ones());
    out
}

/// Pushed-form search with per-lattice data kept between calls.
#[derive(Default)]
pub struct PushedSearch {
    cache: HashMap<Lattice, LatticeData>,
}

impl PushedSearch {
    /// Search frames `t + g` for `g` in `ops` in which the patch is a pushed `P_tau`.
    pub fn find(&mut self, y: &FacePatch, ops: &[PointOp]) -> Option<PushedForm> {
        self.search(y, ops, false)
    }

    /// Frames in which `y` is exactly some `P_tau`, with no pushes.
    pub fn find_exact(&mut self, y: &FacePatch, ops: &[PointOp]) -> Option<PushedForm> {
        // every P_tau has period 2 across its layers' in-plane axes
        let layered = |a: Axis| [a.next(), a.prev()].iter().all(|&b| y.translate(Vec3i::axis(b, 2)) == *y);
        let ops: Vec<PointOp> = ops.iter().copied().filter(|g| layered(g.inverse().apply_axis(Axis::Z))).collect();
        self.search(y, &ops, true)
    }

    fn search(&mut self, y: &FacePatch, ops: &[PointOp], exact: bool) -> Option<PushedForm> {
        let l = *y.domain().lattice()?;
        let mut tried: BTreeSet<(Lattice, Vec<bool>)> = BTreeSet::new();
        for &g in ops {
            let lg = l.transform(g);
            let yg = y.transform(Isometry::new(g, Vec3i::ZERO));
            if !tried.insert((lg, yg.bits().to_vec())) {
                continue;
            }
            let data = self.cache.entry(lg).or_insert_with(|| lattice_data(lg));
            if data.bases.is_empty() {
                continue;
            }
            for tz in 0..lg.axis_period(Axis::Z) {
                for ty in 0..2 {
                    for tx in 0..2 {
                        let t = Vec3i::new(tx, ty, tz);
                        let yt = yg.translate(t);
                        let bits = BitVec::from_bools(yt.bits());
                        for (tau, base, bb, allowed) in &data.bases {
                            if exact {
                                if bits == *bb {
                                    return Some(PushedForm {
                                        frame: Isometry::new(g, t),
                                        base: tau.clone(),
                                        pushes: Vec::new(),
                                        patch: yt,
                                    });
                                }
                                continue;
                            }
                            let Some(combo) = data.span.solve(&bits.xor(bb)) else { continue };
                            for v in variants(&combo, data.span.kernel()) {
                                if v.ones().any(|i| !allowed.get(i)) {
                                    continue;
                                }
                                if let Some(pushes) = replay_stages(base, &data.tubes, &v) {
                                    return Some(PushedForm {
                                        frame: Isometry::new(g, t),
                                        base: tau.clone(),
                                        pushes,
                                        patch: yt,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// Search every frame in which the patch is a pushed `P_tau`.
pub fn find_pushed_form(y: &FacePatch) -> Option<PushedForm> {
    PushedSearch::default().find(y, PointOp::all())
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_gen::gen_p0;
    use cubelat_transforms::{find_towers, push_tower};

    #[test]
    fn necklace_counts() {
        // 3, 3, 8, 18 primitive necklaces of length 1..4 over three letters
        let n = tau_necklaces(4);
        let by_len = |k| n.iter().filter(|w| w.len() == k).count();
        assert_eq!([by_len(1), by_len(2), by_len(3), by_len(4)], [3, 3, 8, 18]);
    }

    #[test]
    fn wall_span_kernel_contains_full_axis_sums() {
        let d = Domain::torus(2, 2, 2).unwrap();
        let ts = tubes(&d);
        assert_eq!(ts.len(), 12);
        let gens: Vec<BitVec> = ts.iter().map(|t| wall_vector(&d, t)).collect();
        let s = Gf2Span::new(&gens);
        assert!(s.kernel().len() >= 3);
    }

    #[test]
    fn recovers_pushes_on_p0() {
        let p = gen_p0(Domain::torus(4, 4, 2).unwrap()).unwrap();
        let towers: Vec<Tower> = find_towers(&p).into_iter().filter(|t| t.axis == Axis::Z).collect();
        let mut q = push_tower(&p, &towers[0]).unwrap();
        q = push_tower(&q, &towers[3]).unwrap();
        let f = find_pushed_form(&q).unwrap();
        assert_eq!(f.base.to_string(), "0");
        assert_eq!(f.pushes.len(), 2);
        assert_eq!(q.transform(f.frame), f.patch);
    }
}

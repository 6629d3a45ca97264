//! Vertex configurations as 12-bit masks over the face slots of a vertex.

use std::fmt;
use std::sync::OnceLock;

use cubelat_lattice::{slot_index, slots, Axis, Dir, PointOp, Vec3i};

/// Screw handedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hand {
    S,
    Z,
}

impl Hand {
    pub fn swap(self) -> Hand {
        match self {
            Hand::S => Hand::Z,
            Hand::Z => Hand::S,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Hand::S => 'S',
            Hand::Z => 'Z',
        }
    }

    fn sign(self) -> i32 {
        match self {
            Hand::S => 1,
            Hand::Z => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexTag {
    M,
    S,
    Z,
    Flat,
    Empty,
    Invalid,
}

impl VertexTag {
    pub fn name(self) -> &'static str {
        match self {
            VertexTag::M => "M",
            VertexTag::S => "S",
            VertexTag::Z => "Z",
            VertexTag::Flat => "Flat",
            VertexTag::Empty => "Empty",
            VertexTag::Invalid => "Invalid",
        }
    }
}

impl fmt::Display for VertexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classified state of the faces around one lattice vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexConfig {
    /// Monkey saddle; `diagonal` is the body diagonal of the mean normal, x-component +1.
    Monkey { diagonal: [i8; 3] },
    /// Screw with flanges along `axis`. `upper` is the line of the flange on the +axis side.
    Screw { hand: Hand, axis: Axis, upper: Axis },
    Flat(Axis),
    Empty,
    Invalid,
}

impl VertexConfig {
    pub fn tag(self) -> VertexTag {
        match self {
            VertexConfig::Monkey { .. } => VertexTag::M,
            VertexConfig::Screw { hand: Hand::S, .. } => VertexTag::S,
            VertexConfig::Screw { hand: Hand::Z, .. } => VertexTag::Z,
            VertexConfig::Flat(_) => VertexTag::Flat,
            VertexConfig::Empty => VertexTag::Empty,
            VertexConfig::Invalid => VertexTag::Invalid,
        }
    }

    pub fn is_cubic(self) -> bool {
        matches!(self, VertexConfig::Monkey { .. } | VertexConfig::Screw { .. })
    }

    pub fn is_screw(self) -> bool {
        matches!(self, VertexConfig::Screw { .. })
    }

    pub fn is_monkey(self) -> bool {
        matches!(self, VertexConfig::Monkey { .. })
    }

    pub fn screw_axis(self) -> Option<Axis> {
        match self {
            VertexConfig::Screw { axis, .. } => Some(axis),
            _ => None,
        }
    }

    pub fn hand(self) -> Option<Hand> {
        match self {
            VertexConfig::Screw { hand, .. } => Some(hand),
            _ => None,
        }
    }

    /// Line of the mean normal (defined up to sign) for M and screw vertices.
    ///
    /// For a screw the normal is the face diagonal perpendicular to the axis.
    pub fn mean_normal(self) -> Option<Vec3i> {
        match self {
            VertexConfig::Monkey { diagonal } => Some(Vec3i::new(diagonal[0] as i32, diagonal[1] as i32, diagonal[2] as i32)),
            VertexConfig::Screw { hand, axis, upper } => {
                let m = screw_mask(axis, upper, hand);
                Some(normal_sum(m))
            }
            VertexConfig::Flat(n) => Some(Vec3i::axis(n, 1)),
            _ => None,
        }
    }
}

impl fmt::Display for VertexConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexConfig::Monkey { diagonal } => {
                let s: String = diagonal.iter().map(|&d| if d > 0 { '+' } else { '-' }).collect();
                write!(f, "M {}", s)
            }
            VertexConfig::Screw { hand, axis, upper } => write!(f, "{} {} {}", hand.letter(), axis, upper),
            VertexConfig::Flat(n) => write!(f, "Flat {}", n),
            VertexConfig::Empty => write!(f, "Empty"),
            VertexConfig::Invalid => write!(f, "Invalid"),
        }
    }
}

fn det(a: Vec3i, b: Vec3i, c: Vec3i) -> i32 {
    a.cross(b).dot(c)
}

/// Mask of faces spanned by consecutive directions of a closed cycle.
pub fn mask_from_cycle(cycle: &[Dir]) -> u16 {
    let n = cycle.len();
    (0..n).fold(0u16, |m, i| m | 1 << slot_index(cycle[i], cycle[(i + 1) % n]))
}

/// Sum of `d_i x d_{i+1}` around the vertex-figure cycle of `m`.
fn normal_sum(m: u16) -> Vec3i {
    let cyc = cycle_of(m).expect("legal configuration has a cycle");
    let n = cyc.len();
    (0..n).fold(Vec3i::ZERO, |s, i| s + cyc[i].vector().cross(cyc[(i + 1) % n].vector()))
}

/// Walks the vertex-figure graph of `m`; returns the single cycle if every used
/// direction has degree 2 and all of them lie on one cycle.
pub fn cycle_of(m: u16) -> Option<Vec<Dir>> {
    let mut adj: [Vec<usize>; 6] = Default::default();
    for (k, (a, b)) in slots().iter().enumerate() {
        if m >> k & 1 == 1 {
            adj[a.index()].push(b.index());
            adj[b.index()].push(a.index());
        }
    }
    if adj.iter().any(|l| !(l.is_empty() || l.len() == 2)) {
        return None;
    }
    let used: Vec<usize> = (0..6).filter(|&i| adj[i].len() == 2).collect();
    let start = *used.first()?;
    let mut cyc = vec![start];
    let (mut prev, mut cur) = (start, adj[start][0]);
    while cur != start {
        cyc.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    if cyc.len() != used.len() {
        return None;
    }
    Some(cyc.into_iter().map(Dir::from_index).collect())
}

fn classify_uncached(m: u16) -> VertexConfig {
    if m == 0 {
        return VertexConfig::Empty;
    }
    let Some(cyc) = cycle_of(m) else {
        return VertexConfig::Invalid;
    };
    let n = cyc.len();
    if n == 4 {
        let mut axes: Vec<Axis> = cyc.iter().map(|d| d.axis).collect();
        axes.sort();
        axes.dedup();
        if axes.len() == 2 {
            return VertexConfig::Flat(Axis::third(axes[0], axes[1]));
        }
        return VertexConfig::Invalid;
    }
    if n != 6 {
        return VertexConfig::Invalid;
    }
    // a flange sits at d_k when its neighbours in the cycle are opposite
    let flanges: Vec<Dir> = (0..6)
        .filter(|&k| cyc[(k + 5) % 6] == cyc[(k + 1) % 6].opposite())
        .map(|k| cyc[k])
        .collect();
    match flanges.len() {
        0 => {
            let s = normal_sum(m);
            let mut g = [s.x.signum() as i8, s.y.signum() as i8, s.z.signum() as i8];
            if g[0] < 0 {
                g = g.map(|t| -t);
            }
            VertexConfig::Monkey { diagonal: g }
        }
        2 if flanges[0].axis == flanges[1].axis => {
            let axis = flanges[0].axis;
            let k = cyc.iter().position(|d| *d == Dir::plus(axis)).expect("flange direction in cycle");
            let h1 = cyc[(k + 1) % 6];
            let h2 = cyc[(k + 2) % 6];
            let c = det(h1.vector(), h2.vector(), Vec3i::axis(axis, 1));
            let hand = if c > 0 { Hand::S } else { Hand::Z };
            VertexConfig::Screw { hand, axis, upper: h1.axis }
        }
        _ => VertexConfig::Invalid,
    }
}

fn table() -> &'static [VertexConfig] {
    static TABLE: OnceLock<Vec<VertexConfig>> = OnceLock::new();
    TABLE.get_or_init(|| (0u16..4096).map(classify_uncached).collect())
}

/// Classification of an incident-face mask (bit k = slot k of `slots()`).
pub fn classify_mask(m: u16) -> VertexConfig {
    table()[m as usize & 0xfff]
}

/// The 16 masks of M, S and Z configurations, in increasing order.
pub fn cubic_masks() -> &'static [u16] {
    static M: OnceLock<Vec<u16>> = OnceLock::new();
    M.get_or_init(|| (0u16..4096).filter(|&m| classify_mask(m).is_cubic()).collect())
}

/// The 20 masks allowed in discrete minimal surfaces (cubic ones plus Flat and Empty).
pub fn minimal_masks() -> &'static [u16] {
    static M: OnceLock<Vec<u16>> = OnceLock::new();
    M.get_or_init(|| {
        (0u16..4096)
            .filter(|&m| {
                let c = classify_mask(m);
                c.is_cubic() || matches!(c, VertexConfig::Flat(_) | VertexConfig::Empty)
            })
            .collect()
    })
}

/// Mask of the screw with flange axis `axis`, upper flange line `upper` and handedness `hand`.
///
/// The cycle is `p, +a, -p, q, -a, -q` where `p = +upper` and `q` is chosen so that
/// `det(-p, q, e_a)` is +1 for S and -1 for Z.
pub fn screw_mask(axis: Axis, upper: Axis, hand: Hand) -> u16 {
    assert_ne!(axis, upper, "screw flange line must be perpendicular to its axis");
    let p = Dir::plus(upper);
    let w = Axis::third(axis, upper);
    let a = Dir::plus(axis);
    let q = [Dir::plus(w), Dir::minus(w)]
        .into_iter()
        .find(|q| det(p.opposite().vector(), q.vector(), a.vector()) == hand.sign())
        .expect("one sign works");
    mask_from_cycle(&[p, a, p.opposite(), q, a.opposite(), q.opposite()])
}

/// The monkey saddle `+x, +y, +z, -x, -y, -z` (diagonal (1,-1,1)).
pub fn monkey_base() -> u16 {
    let [px, mx, py, my, pz, mz] = Dir::ALL;
    mask_from_cycle(&[px, py, pz, mx, my, mz])
}

/// The four coplanar faces around a vertex with the given normal.
pub fn flat_mask(normal: Axis) -> u16 {
    let (a, b) = (normal.next(), normal.prev());
    mask_from_cycle(&[Dir::plus(a), Dir::plus(b), Dir::minus(a), Dir::minus(b)])
}

/// Image of a mask under a point operation fixing the vertex.
pub fn transform_mask(m: u16, g: PointOp) -> u16 {
    let mut out = 0u16;
    for (k, (a, b)) in slots().iter().enumerate() {
        if m >> k & 1 == 1 {
            out |= 1 << slot_index(g.apply_dir(*a), g.apply_dir(*b));
        }
    }
    out
}

/// Image of a mask under reflections in the given axes.
pub fn flip_mask(m: u16, x: bool, y: bool, z: bool) -> u16 {
    let s = |b: bool| if b { -1 } else { 1 };
    transform_mask(m, PointOp::new([0, 1, 2], [s(x), s(y), s(z)]).unwrap())
}

/// Directions `d` at which the edge germ of the vertex is a flange.
pub fn flange_dirs(m: u16) -> Vec<Dir> {
    Dir::ALL
        .into_iter()
        .filter(|&d| {
            let faces: Vec<Dir> = slots()
                .iter()
                .enumerate()
                .filter(|(k, (a, b))| m >> k & 1 == 1 && (*a == d || *b == d))
                .map(|(_, (a, b))| if *a == d { *b } else { *a })
                .collect();
            faces.len() == 2 && faces[0] == faces[1].opposite()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_cubic_masks() {
        assert_eq!(cubic_masks().len(), 16);
        assert_eq!(minimal_masks().len(), 20);
        for &m in cubic_masks() {
            assert_eq!(m.count_ones(), 6);
        }
    }

    #[test]
    fn screw_masks_round_trip() {
        for axis in Axis::ALL {
            for upper in Axis::ALL {
                if upper == axis {
                    continue;
                }
                for hand in [Hand::S, Hand::Z] {
                    let m = screw_mask(axis, upper, hand);
                    assert_eq!(classify_mask(m), VertexConfig::Screw { hand, axis, upper });
                    let f = flange_dirs(m);
                    assert_eq!(f, vec![Dir::plus(axis), Dir::minus(axis)]);
                }
            }
        }
    }

    #[test]
    fn monkey_has_no_flanges() {
        let m = monkey_base();
        assert!(classify_mask(m).is_monkey());
        assert!(flange_dirs(m).is_empty());
    }

    #[test]
    fn mirror_swaps_handedness() {
        for &m in cubic_masks() {
            let c = classify_mask(m);
            let r = classify_mask(flip_mask(m, true, false, false));
            match (c, r) {
                (VertexConfig::Monkey { .. }, VertexConfig::Monkey { .. }) => {}
                (VertexConfig::Screw { hand: a, .. }, VertexConfig::Screw { hand: b, .. }) => assert_eq!(a.swap(), b),
                _ => panic!("mirror changed type: {c} -> {r}"),
            }
        }
    }

    #[test]
    fn rotation_preserves_handedness() {
        for g in PointOp::all().iter().filter(|g| g.is_proper()) {
            for &m in cubic_masks() {
                assert_eq!(classify_mask(m).tag(), classify_mask(transform_mask(m, *g)).tag());
            }
        }
    }

    #[test]
    fn screw_mean_normal_is_face_diagonal() {
        let c = classify_mask(screw_mask(Axis::Z, Axis::X, Hand::S));
        let n = c.mean_normal().unwrap();
        assert_eq!(n.z, 0);
        assert_eq!(n.x.abs(), n.y.abs());
        assert_ne!(n.x, 0);
    }
}

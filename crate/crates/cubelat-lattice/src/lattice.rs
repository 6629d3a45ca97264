use std::fmt;

use crate::error::LatticeError;
use crate::geom::{gcd, lcm, Axis, Vec3i};
use crate::isometry::PointOp;

/// A full-rank translation lattice in lower-triangular Hermite normal form.
///
/// Basis rows: `(px,0,0)`, `(hyx,py,0)`, `(hzx,hzy,pz)` with
/// `0 <= hyx < px`, `0 <= hzx < px`, `0 <= hzy < py`.
/// Every point reduces to a unique representative in `[0,px) x [0,py) x [0,pz)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    pub px: i32,
    pub py: i32,
    pub pz: i32,
    pub hyx: i32,
    pub hzx: i32,
    pub hzy: i32,
}

impl Lattice {
    pub fn rect(px: i32, py: i32, pz: i32) -> Result<Lattice, LatticeError> {
        Lattice::new([px, py, pz], [0, 0, 0])
    }

    /// Periods plus shears `[hyx, hzx, hzy]`; shears are normalized into range.
    pub fn new(periods: [i32; 3], shears: [i32; 3]) -> Result<Lattice, LatticeError> {
        let [px, py, pz] = periods;
        if px < 1 || py < 1 || pz < 1 {
            return Err(LatticeError::BadPeriod(periods));
        }
        let [hyx, hzx, hzy] = shears;
        // reducing a3 by multiples of a2 changes hzx too
        let k = hzy.div_euclid(py);
        let hzy = hzy - k * py;
        let hzx = hzx - k * hyx;
        Ok(Lattice {
            px,
            py,
            pz,
            hyx: hyx.rem_euclid(px),
            hzx: hzx.rem_euclid(px),
            hzy,
        })
    }

    /// Hermite normal form of the lattice generated by three independent vectors.
    pub fn from_basis(basis: [Vec3i; 3]) -> Result<Lattice, LatticeError> {
        let mut rows: Vec<[i64; 3]> = basis.iter().map(|v| v.to_array().map(i64::from)).collect();
        let mut out = [[0i64; 3]; 3];
        // eliminate column 2, then 1, then 0
        for col in (0..3).rev() {
            loop {
                let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
                if nz.len() <= 1 {
                    break;
                }
                let piv = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
                for &i in &nz {
                    if i != piv {
                        let q = rows[i][col].div_euclid(rows[piv][col]);
                        for c in 0..3 {
                            rows[i][c] -= q * rows[piv][c];
                        }
                    }
                }
            }
            let piv = (0..rows.len())
                .find(|&i| rows[i][col] != 0)
                .ok_or(LatticeError::Degenerate)?;
            let mut r = rows.remove(piv);
            if r[col] < 0 {
                r = r.map(|t| -t);
            }
            out[col] = r;
        }
        let to = |t: i64| i32::try_from(t).map_err(|_| LatticeError::Degenerate);
        Lattice::new(
            [to(out[0][0])?, to(out[1][1])?, to(out[2][2])?],
            [to(out[1][0])?, to(out[2][0])?, to(out[2][1])?],
        )
    }

    pub fn periods(&self) -> [i32; 3] {
        [self.px, self.py, self.pz]
    }

    pub fn shears(&self) -> [i32; 3] {
        [self.hyx, self.hzx, self.hzy]
    }

    pub fn is_rect(&self) -> bool {
        self.hyx == 0 && self.hzx == 0 && self.hzy == 0
    }

    pub fn basis(&self) -> [Vec3i; 3] {
        [
            Vec3i::new(self.px, 0, 0),
            Vec3i::new(self.hyx, self.py, 0),
            Vec3i::new(self.hzx, self.hzy, self.pz),
        ]
    }

    pub fn volume(&self) -> usize {
        self.px as usize * self.py as usize * self.pz as usize
    }

    /// Unique representative of `v` modulo the lattice.
    pub fn reduce(&self, v: Vec3i) -> Vec3i {
        let mut v = v;
        let k = v.z.div_euclid(self.pz);
        v.z -= k * self.pz;
        v.y -= k * self.hzy;
        v.x -= k * self.hzx;
        let j = v.y.div_euclid(self.py);
        v.y -= j * self.py;
        v.x -= j * self.hyx;
        v.x = v.x.rem_euclid(self.px);
        v
    }

    pub fn contains(&self, v: Vec3i) -> bool {
        self.reduce(v) == Vec3i::ZERO
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.basis().iter().all(|b| other.contains(*b))
    }

    /// Smallest `k > 0` with `k * e_axis` in the lattice.
    pub fn axis_period(&self, axis: Axis) -> i32 {
        (1..=self.volume() as i32)
            .find(|&k| self.contains(Vec3i::axis(axis, k)))
            .expect("k = volume always lies in the lattice")
    }

    /// The largest rectangular lattice contained in this one.
    pub fn rect_sublattice(&self) -> Lattice {
        Lattice::rect(
            self.axis_period(Axis::X),
            self.axis_period(Axis::Y),
            self.axis_period(Axis::Z),
        )
        .expect("positive periods")
    }

    /// Rectangular lattice contained in both.
    pub fn common_rect(&self, other: &Lattice) -> Lattice {
        let a = self.rect_sublattice().periods();
        let b = other.rect_sublattice().periods();
        let p = [0, 1, 2].map(|i| lcm(a[i] as i64, b[i] as i64) as i32);
        Lattice::rect(p[0], p[1], p[2]).expect("positive periods")
    }

    pub fn transform(&self, g: PointOp) -> Lattice {
        Lattice::from_basis(self.basis().map(|b| g.apply(b))).expect("image of a full-rank lattice")
    }

    /// Cubic lattice `n Z^3` with `n` the lcm of all axis periods; invariant under every point op.
    pub fn cubic_sublattice(&self) -> Lattice {
        let r = self.rect_sublattice().periods();
        let n = r.iter().fold(1i64, |acc, &p| lcm(acc, p as i64)) as i32;
        Lattice::rect(n, n, n).expect("positive period")
    }

    /// True when `g` maps the lattice onto itself.
    pub fn is_invariant_under(&self, g: PointOp) -> bool {
        self.transform(g) == *self
    }

    pub fn index_in(&self, sup: &Lattice) -> usize {
        debug_assert!(self.is_sublattice_of(sup));
        self.volume() / sup.volume()
    }

    pub fn gcd_all(&self) -> i64 {
        [self.px, self.py, self.pz, self.hyx, self.hzx, self.hzy]
            .iter()
            .fold(0, |g, &t| gcd(g, t as i64))
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.px, self.py, self.pz)?;
        if !self.is_rect() {
            write!(f, " shear {} {} {}", self.hyx, self.hzx, self.hzy)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn wrap_examples() {
        let l = Lattice::rect(2, 2, 2).unwrap();
        assert_eq!(l.reduce(Vec3i::new(3, -1, 2)), Vec3i::new(1, 1, 0));
        assert_eq!(l.reduce(Vec3i::ZERO), Vec3i::ZERO);
        let l = Lattice::rect(4, 2, 6).unwrap();
        assert_eq!(l.reduce(Vec3i::new(4, 2, 6)), Vec3i::ZERO);
    }

    #[test]
    fn hnf_of_rotated_shear() {
        let l = Lattice::new([2, 2, 1], [0, 1, 1]).unwrap();
        assert!(l.contains(Vec3i::new(1, 1, 1)));
        assert_eq!(l.axis_period(Axis::Z), 2);
        let b = [Vec3i::new(1, 1, 1), Vec3i::new(2, 0, 0), Vec3i::new(0, 2, 0)];
        assert_eq!(Lattice::from_basis(b).unwrap(), l);
        assert_eq!(l.volume(), 4);
    }

    #[test]
    fn degenerate_basis_rejected() {
        let b = [Vec3i::new(1, 0, 0), Vec3i::new(2, 0, 0), Vec3i::new(0, 0, 1)];
        assert!(Lattice::from_basis(b).is_err());
        assert!(Lattice::rect(0, 1, 1).is_err());
    }

    fn arb_lattice() -> impl Strategy<Value = Lattice> {
        (1i32..5, 1i32..5, 1i32..5, 0i32..5, 0i32..5, 0i32..5)
            .prop_map(|(a, b, c, d, e, f)| Lattice::new([a, b, c], [d, e, f]).unwrap())
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_in_box(l in arb_lattice(), x in -30i32..30, y in -30i32..30, z in -30i32..30) {
            let v = Vec3i::new(x, y, z);
            let r = l.reduce(v);
            prop_assert_eq!(l.reduce(r), r);
            prop_assert!(l.contains(v - r));
            prop_assert!(r.x >= 0 && r.x < l.px && r.y >= 0 && r.y < l.py && r.z >= 0 && r.z < l.pz);
        }

        #[test]
        fn transform_preserves_volume(l in arb_lattice(), gi in 0usize..48) {
            let g = PointOp::all()[gi];
            let t = l.transform(g);
            prop_assert_eq!(t.volume(), l.volume());
            for b in l.basis() {
                prop_assert!(t.contains(g.apply(b)));
            }
            prop_assert!(l.rect_sublattice().is_sublattice_of(&l));
            prop_assert!(l.cubic_sublattice().is_invariant_under(g));
        }
    }
}

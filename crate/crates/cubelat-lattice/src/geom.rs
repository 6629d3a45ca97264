use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

/// A lattice point (or displacement) with integer coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3i {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Vec3i {
    pub const ZERO: Vec3i = Vec3i { x: 0, y: 0, z: 0 };

    pub const fn new(x: i32, y: i32, z: i32) -> Self {
        Vec3i { x, y, z }
    }

    pub fn from_array(a: [i32; 3]) -> Self {
        Vec3i::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [i32; 3] {
        [self.x, self.y, self.z]
    }

    /// Unit vector along `axis`, scaled by `k`.
    pub fn axis(axis: Axis, k: i32) -> Self {
        let mut v = Vec3i::ZERO;
        v[axis] = k;
        v
    }

    pub fn dot(self, o: Vec3i) -> i32 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3i) -> Vec3i {
        Vec3i::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn le_all(self, o: Vec3i) -> bool {
        self.x <= o.x && self.y <= o.y && self.z <= o.z
    }

    pub fn map(self, f: impl Fn(i32) -> i32) -> Vec3i {
        Vec3i::new(f(self.x), f(self.y), f(self.z))
    }
}

impl fmt::Display for Vec3i {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

impl Add for Vec3i {
    type Output = Vec3i;
    fn add(self, o: Vec3i) -> Vec3i {
        Vec3i::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3i {
    fn add_assign(&mut self, o: Vec3i) {
        *self = *self + o;
    }
}

impl Sub for Vec3i {
    type Output = Vec3i;
    fn sub(self, o: Vec3i) -> Vec3i {
        Vec3i::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl SubAssign for Vec3i {
    fn sub_assign(&mut self, o: Vec3i) {
        *self = *self - o;
    }
}

impl Neg for Vec3i {
    type Output = Vec3i;
    fn neg(self) -> Vec3i {
        Vec3i::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<i32> for Vec3i {
    type Output = Vec3i;
    fn mul(self, k: i32) -> Vec3i {
        Vec3i::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Index<Axis> for Vec3i {
    type Output = i32;
    fn index(&self, a: Axis) -> &i32 {
        match a {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
        }
    }
}

impl IndexMut<Axis> for Vec3i {
    fn index_mut(&mut self, a: Axis) -> &mut i32 {
        match a {
            Axis::X => &mut self.x,
            Axis::Y => &mut self.y,
            Axis::Z => &mut self.z,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i % 3]
    }

    /// Next axis in cyclic order X -> Y -> Z -> X.
    pub fn next(self) -> Axis {
        Axis::from_index(self.index() + 1)
    }

    pub fn prev(self) -> Axis {
        Axis::from_index(self.index() + 2)
    }

    /// The axis different from both `a` and `b` (which must differ).
    pub fn third(a: Axis, b: Axis) -> Axis {
        debug_assert_ne!(a, b);
        Axis::from_index(3 - a.index() - b.index())
    }

    pub fn letter(self) -> char {
        ['X', 'Y', 'Z'][self.index()]
    }

    pub fn parse(s: &str) -> Option<Axis> {
        match s {
            "X" | "x" => Some(Axis::X),
            "Y" | "y" => Some(Axis::Y),
            "Z" | "z" => Some(Axis::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One of the six signed unit directions; `index()` runs +x, -x, +y, -y, +z, -z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dir {
    pub axis: Axis,
    pub positive: bool,
}

impl Dir {
    pub const ALL: [Dir; 6] = [
        Dir::new(Axis::X, true),
        Dir::new(Axis::X, false),
        Dir::new(Axis::Y, true),
        Dir::new(Axis::Y, false),
        Dir::new(Axis::Z, true),
        Dir::new(Axis::Z, false),
    ];

    pub const fn new(axis: Axis, positive: bool) -> Dir {
        Dir { axis, positive }
    }

    pub fn plus(axis: Axis) -> Dir {
        Dir::new(axis, true)
    }

    pub fn minus(axis: Axis) -> Dir {
        Dir::new(axis, false)
    }

    pub fn index(self) -> usize {
        2 * self.axis.index() + usize::from(!self.positive)
    }

    pub fn from_index(i: usize) -> Dir {
        Dir::ALL[i]
    }

    pub fn sign(self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn vector(self) -> Vec3i {
        Vec3i::axis(self.axis, self.sign())
    }

    pub fn opposite(self) -> Dir {
        Dir::new(self.axis, !self.positive)
    }

    /// Inverse of `vector` for unit vectors.
    pub fn from_vector(v: Vec3i) -> Option<Dir> {
        Dir::ALL.iter().copied().find(|d| d.vector() == v)
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.positive { '+' } else { '-' };
        write!(f, "{}{}", s, self.axis.letter().to_ascii_lowercase())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

//! Linear algebra over GF(2) on packed bit vectors.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_bools(bits: &[bool]) -> BitVec {
        let mut v = BitVec::zeros(bits.len());
        for (i, _) in bits.iter().enumerate().filter(|(_, b)| **b) {
            v.set(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, o: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, o: &BitVec) -> BitVec {
        let mut v = self.clone();
        v.xor_assign(o);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Row-reduced span of a list of generators, remembering how each row was combined.
#[derive(Clone, Debug)]
pub struct Gf2Span {
    rows: Vec<(usize, BitVec, BitVec)>,
    kernel: Vec<BitVec>,
}

impl Gf2Span {
    pub fn new(gens: &[BitVec]) -> Gf2Span {
        let mut s = Gf2Span { rows: Vec::new(), kernel: Vec::new() };
        for (i, g) in gens.iter().enumerate() {
            let mut v = g.clone();
            let mut combo = BitVec::zeros(gens.len());
            combo.set(i);
            s.reduce(&mut v, &mut combo);
            match v.first_one() {
                Some(p) => s.rows.push((p, v, combo)),
                None => s.kernel.push(combo),
            }
        }
        s
    }

    fn reduce(&self, v: &mut BitVec, combo: &mut BitVec) {
        for (p, row, c) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Combinations of generators summing to zero.
    pub fn kernel(&self) -> &[BitVec] {
        &self.kernel
    }

    pub fn contains(&self, target: &BitVec) -> bool {
        let mut v = target.clone();
        for (p, row, _) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        v.is_zero()
    }

    /// Some combination of generators summing to `target`.
    pub fn solve(&self, target: &BitVec) -> Option<BitVec> {
        let n = self.rows.first().map(|r| r.2.len()).or(self.kernel.first().map(|k| k.len())).unwrap_or(0);
        let mut v = target.clone();
        let mut combo = BitVec::zeros(n);
        self.reduce(&mut v, &mut combo);
        v.is_zero().then_some(combo)
    }
}

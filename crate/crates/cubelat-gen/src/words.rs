//! Cyclic words naming the all-screw and layered families.

use std::fmt;
use std::str::FromStr;

use cubelat_lattice::Axis;
use cubelat_local::Hand;

use crate::error::GenError;

/// Least word among all rotations, reversals and letter swaps of `w`.
pub fn canonical_cyclic<T: Ord + Copy>(w: &[T], swap: impl Fn(T) -> T) -> Vec<T> {
    let n = w.len();
    let rev: Vec<T> = w.iter().rev().copied().collect();
    let sw: Vec<T> = w.iter().map(|&c| swap(c)).collect();
    let swrev: Vec<T> = rev.iter().map(|&c| swap(c)).collect();
    let mut best: Option<Vec<T>> = None;
    for base in [w.to_vec(), rev, sw, swrev] {
        for r in 0..n {
            let cand: Vec<T> = (0..n).map(|i| base[(i + r) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Shortest word whose repetition gives `w`.
pub fn primitive_root<T: PartialEq + Copy>(w: &[T]) -> Vec<T> {
    let n = w.len();
    for d in 1..=n {
        if n % d == 0 && (0..n).all(|i| w[i] == w[i % d]) {
            return w[..d].to_vec();
        }
    }
    w.to_vec()
}

/// Bi-infinite periodic sequence of screw handedness, given by one period.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaWord {
    letters: Vec<Hand>,
}

impl SigmaWord {
    pub fn new(letters: Vec<Hand>) -> Result<SigmaWord, GenError> {
        if letters.is_empty() {
            return Err(GenError::Parse { what: "sigma word", pos: 0, msg: "empty word".into() });
        }
        Ok(SigmaWord { letters })
    }

    pub fn letters(&self) -> &[Hand] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at any integer position.
    pub fn at(&self, i: i64) -> Hand {
        self.letters[i.rem_euclid(self.letters.len() as i64) as usize]
    }

    pub fn canonical(&self) -> SigmaWord {
        SigmaWord { letters: canonical_cyclic(&self.letters, Hand::swap) }
    }

    pub fn primitive(&self) -> SigmaWord {
        SigmaWord { letters: primitive_root(&self.letters) }
    }

    /// Canonical form of the primitive root: equal exactly for congruent columns.
    pub fn class(&self) -> SigmaWord {
        self.primitive().canonical()
    }

    pub fn swapped(&self) -> SigmaWord {
        SigmaWord { letters: self.letters.iter().map(|h| h.swap()).collect() }
    }

    /// Positions `i` where letters `i` and `i+1` agree (cyclically).
    pub fn twist_positions(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&i| self.letters[i] == self.letters[(i + 1) % n]).collect()
    }

    pub fn is_untwisted(&self) -> bool {
        self.twist_positions().is_empty()
    }
}

impl fmt::Display for SigmaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().map(|h| h.letter()).collect();
        f.write_str(&s)
    }
}

impl FromStr for SigmaWord {
    type Err = GenError;
    fn from_str(s: &str) -> Result<SigmaWord, GenError> {
        let letters = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c.to_ascii_uppercase() {
                'S' => Ok(Hand::S),
                'Z' => Ok(Hand::Z),
                _ => Err(GenError::Parse { what: "sigma word", pos: i, msg: format!("unexpected `{c}`") }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SigmaWord::new(letters)
    }
}

/// Layer letter: a sheet of monkey saddles, or an untwisted slab with axis x or y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TauLetter {
    Sheet,
    X,
    Y,
}

impl TauLetter {
    pub fn swap(self) -> TauLetter {
        match self {
            TauLetter::X => TauLetter::Y,
            TauLetter::Y => TauLetter::X,
            TauLetter::Sheet => TauLetter::Sheet,
        }
    }

    pub fn letter(self) -> char {
        match self {
            TauLetter::Sheet => '0',
            TauLetter::X => 'x',
            TauLetter::Y => 'y',
        }
    }

    pub fn slab_axis(self) -> Option<Axis> {
        match self {
            TauLetter::Sheet => None,
            TauLetter::X => Some(Axis::X),
            TauLetter::Y => Some(Axis::Y),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TauWord {
    letters: Vec<TauLetter>,
}

impl TauWord {
    pub fn new(letters: Vec<TauLetter>) -> Result<TauWord, GenError> {
        if letters.is_empty() {
            return Err(GenError::Parse { what: "tau word", pos: 0, msg: "empty word".into() });
        }
        Ok(TauWord { letters })
    }

    pub fn letters(&self) -> &[TauLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn at(&self, i: i64) -> TauLetter {
        self.letters[i.rem_euclid(self.letters.len() as i64) as usize]
    }

    pub fn canonical(&self) -> TauWord {
        TauWord { letters: canonical_cyclic(&self.letters, TauLetter::swap) }
    }

    pub fn primitive(&self) -> TauWord {
        TauWord { letters: primitive_root(&self.letters) }
    }

    pub fn class(&self) -> TauWord {
        self.primitive().canonical()
    }

    pub fn swapped(&self) -> TauWord {
        TauWord { letters: self.letters.iter().map(|t| t.swap()).collect() }
    }

    pub fn is_all_slabs(&self) -> bool {
        self.letters.iter().all(|t| *t != TauLetter::Sheet)
    }
}

impl fmt::Display for TauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().map(|t| t.letter()).collect();
        f.write_str(&s)
    }
}

impl FromStr for TauWord {
    type Err = GenError;
    fn from_str(s: &str) -> Result<TauWord, GenError> {
        let letters = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c.to_ascii_lowercase() {
                '0' => Ok(TauLetter::Sheet),
                'x' => Ok(TauLetter::X),
                'y' => Ok(TauLetter::Y),
                _ => Err(GenError::Parse { what: "tau word", pos: i, msg: format!("unexpected `{c}`") }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        TauWord::new(letters)
    }
}

//! Classification certificates, their text form, and rebuilding a patch from one.

use std::fmt;
use std::str::FromStr;

use cubelat_gen::{gen_p_sigma, gen_p_tau, SigmaWord, TauWord};
use cubelat_lattice::{Axis, Domain, FacePatch};
use cubelat_local::validate_cubic;
use cubelat_transforms::{
    insert_slab, insertable_pattern, push_tower, tower_by_base, InsertPattern, InsertSpec, Plane, Shift,
};

use crate::error::ClassifyError;

/// A tower push, named by axis and the base of its central cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PushRecord {
    pub axis: Axis,
    pub base: (i32, i32),
}

impl PushRecord {
    /// Stage in the staged push order: vertical, then y, then x.
    pub fn stage(&self) -> usize {
        match self.axis {
            Axis::Z => 0,
            Axis::Y => 1,
            Axis::X => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InsertKind {
    /// An untwisted slab with the given axis.
    Trivial(Axis),
    /// The slab forced by tower pushes, with pattern word over `{u, p}`.
    Word(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InsertRecord {
    pub plane: Plane,
    pub kind: InsertKind,
    pub count: usize,
    pub shift: Shift,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    AllScrewParallel(SigmaWord),
    AllScrewLayered(TauWord),
    Pushed { base: TauWord, pushes: Vec<PushRecord> },
    PushedPlusSlabs { base: TauWord, pushes: Vec<PushRecord>, inserts: Vec<InsertRecord> },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::AllScrewParallel(_) => "allscrew-parallel",
            Certificate::AllScrewLayered(_) => "allscrew-layered",
            Certificate::Pushed { .. } => "pushed",
            Certificate::PushedPlusSlabs { .. } => "pushed-plus-slabs",
        }
    }

    pub fn pushes(&self) -> &[PushRecord] {
        match self {
            Certificate::Pushed { pushes, .. } | Certificate::PushedPlusSlabs { pushes, .. } => pushes,
            _ => &[],
        }
    }

    pub fn inserts(&self) -> &[InsertRecord] {
        match self {
            Certificate::PushedPlusSlabs { inserts, .. } => inserts,
            _ => &[],
        }
    }
}

impl fmt::Display for InsertRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+insert {} {} ", self.plane.normal, self.plane.level)?;
        match &self.kind {
            InsertKind::Trivial(a) => write!(f, "trivial {}", a.letter().to_ascii_lowercase())?,
            InsertKind::Word(w) => write!(f, "word {w}")?,
        }
        write!(f, " {}", self.count)?;
        if self.shift == Shift::Minus {
            f.write_str(" -")?;
        }
        Ok(())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pushed = |f: &mut fmt::Formatter<'_>, base: &TauWord, pushes: &[PushRecord]| -> fmt::Result {
            write!(f, "pushed tau {base}")?;
            for p in pushes {
                write!(f, " push {} {} {}", p.axis, p.base.0, p.base.1)?;
            }
            Ok(())
        };
        match self {
            Certificate::AllScrewParallel(s) => write!(f, "allscrew sigma {s}"),
            Certificate::AllScrewLayered(t) => write!(f, "allscrew tau {t}"),
            Certificate::Pushed { base, pushes } => pushed(f, base, pushes),
            Certificate::PushedPlusSlabs { base, pushes, inserts } => {
                pushed(f, base, pushes)?;
                for r in inserts {
                    write!(f, "\n{r}")?;
                }
                Ok(())
            }
        }
    }
}

struct Tokens<'a> {
    toks: Vec<&'a str>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn err(&self, msg: impl Into<String>) -> ClassifyError {
        ClassifyError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn next(&mut self, what: &str) -> Result<&'a str, ClassifyError> {
        let t = self.toks.get(self.pos).copied().ok_or_else(|| self.err(format!("expected {what}")))?;
        self.pos += 1;
        Ok(t)
    }

    fn peek(&self) -> Option<&'a str> {
        self.toks.get(self.pos).copied()
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ClassifyError> {
        let t = self.next(kw)?;
        if t != kw {
            self.pos -= 1;
            return Err(self.err(format!("expected `{kw}`, got `{t}`")));
        }
        Ok(())
    }

    fn int(&mut self, what: &str) -> Result<i32, ClassifyError> {
        let t = self.next(what)?;
        t.parse().map_err(|_| {
            self.pos -= 1;
            self.err(format!("expected {what}, got `{t}`"))
        })
    }

    fn axis(&mut self) -> Result<Axis, ClassifyError> {
        let t = self.next("axis")?;
        Axis::parse(t).ok_or_else(|| {
            self.pos -= 1;
            self.err(format!("expected axis, got `{t}`"))
        })
    }

    fn word<T: FromStr>(&mut self, what: &str) -> Result<T, ClassifyError> {
        let t = self.next(what)?;
        t.parse().map_err(|_| {
            self.pos -= 1;
            self.err(format!("bad {what} `{t}`"))
        })
    }
}

impl FromStr for Certificate {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Certificate, ClassifyError> {
        let toks = Tokens { toks: s.split_whitespace().collect(), pos: 0 };
        let mut t = toks;
        let head = t.next("certificate kind")?;
        let (base, pushes) = match head {
            "allscrew" => {
                let kind = t.next("sigma or tau")?;
                let cert = match kind {
                    "sigma" => Certificate::AllScrewParallel(t.word("sigma word")?),
                    "tau" => {
                        let w: TauWord = t.word("tau word")?;
                        if !w.is_all_slabs() {
                            t.pos -= 1;
                            return Err(t.err("layered word uses only x and y"));
                        }
                        Certificate::AllScrewLayered(w)
                    }
                    other => {
                        t.pos -= 1;
                        return Err(t.err(format!("expected sigma or tau, got `{other}`")));
                    }
                };
                if t.peek().is_some() {
                    return Err(t.err("trailing input"));
                }
                return Ok(cert);
            }
            "pushed" => {
                t.keyword("tau")?;
                let base: TauWord = t.word("tau word")?;
                let mut pushes = Vec::new();
                while t.peek() == Some("push") {
                    t.pos += 1;
                    let axis = t.axis()?;
                    let i = t.int("coordinate")?;
                    let j = t.int("coordinate")?;
                    pushes.push(PushRecord { axis, base: (i, j) });
                }
                (base, pushes)
            }
            other => {
                t.pos -= 1;
                return Err(t.err(format!("unknown certificate kind `{other}`")));
            }
        };
        let mut inserts = Vec::new();
        while let Some(tok) = t.peek() {
            if tok != "+insert" {
                return Err(t.err(format!("expected `+insert`, got `{tok}`")));
            }
            t.pos += 1;
            let normal = t.axis()?;
            let level = t.int("level")?;
            let kind = match t.next("trivial or word")? {
                "trivial" => InsertKind::Trivial(t.axis()?),
                "word" => {
                    let w = t.next("pattern word")?;
                    if w.is_empty() || !w.chars().all(|c| c == 'u' || c == 'p') {
                        t.pos -= 1;
                        return Err(t.err(format!("pattern word over u and p expected, got `{w}`")));
                    }
                    InsertKind::Word(w.to_string())
                }
                other => {
                    t.pos -= 1;
                    return Err(t.err(format!("expected trivial or word, got `{other}`")));
                }
            };
            let count = t.int("count")?;
            if count < 1 {
                t.pos -= 1;
                return Err(t.err("count must be positive"));
            }
            let shift = match t.peek() {
                Some(s @ ("+" | "-")) => {
                    t.pos += 1;
                    s.parse().expect("sign token")
                }
                _ => Shift::Plus,
            };
            inserts.push(InsertRecord { plane: Plane::new(normal, level), kind, count: count as usize, shift });
        }
        Ok(if inserts.is_empty() {
            Certificate::Pushed { base, pushes }
        } else {
            Certificate::PushedPlusSlabs { base, pushes, inserts }
        })
    }
}

/// Replay a certificate on `domain` (the torus of its base polyhedron).
pub fn rebuild(c: &Certificate, domain: Domain) -> Result<FacePatch, ClassifyError> {
    if !domain.is_torus() {
        return Err(ClassifyError::NotTorus);
    }
    let out = match c {
        Certificate::AllScrewParallel(s) => gen_p_sigma(s, domain)?,
        Certificate::AllScrewLayered(t) => gen_p_tau(t, domain)?,
        Certificate::Pushed { base, pushes } => replay_pushes(gen_p_tau(base, domain)?, pushes)?,
        Certificate::PushedPlusSlabs { base, pushes, inserts } => {
            let mut p = replay_pushes(gen_p_tau(base, domain)?, pushes)?;
            for r in inserts {
                p = replay_insert(&p, r)?;
            }
            p
        }
    };
    let report = validate_cubic(&out);
    if !report.ok() {
        return Err(ClassifyError::Invalid(report.violations.len()));
    }
    Ok(out)
}

fn replay_pushes(mut p: FacePatch, pushes: &[PushRecord]) -> Result<FacePatch, ClassifyError> {
    for r in pushes {
        let t = tower_by_base(&p, r.axis, r.base)?;
        p = push_tower(&p, &t)?;
    }
    Ok(p)
}

fn replay_insert(p: &FacePatch, r: &InsertRecord) -> Result<FacePatch, ClassifyError> {
    let spec = match &r.kind {
        InsertKind::Trivial(a) => {
            if r.count != 1 {
                let mut cur = p.clone();
                for k in 0..r.count as i32 {
                    let pl = Plane::new(r.plane.normal, r.plane.level + k);
                    cur = insert_slab(&cur, pl, &InsertSpec::Trivial(*a), r.shift)?;
                }
                return Ok(cur);
            }
            InsertSpec::Trivial(*a)
        }
        InsertKind::Word(w) => {
            match insertable_pattern(p, r.plane) {
                Some(InsertPattern::Word { omega, .. }) if omega == *w => {}
                other => {
                    let found = other.map_or("none".to_string(), |o| o.to_string());
                    return Err(ClassifyError::Precondition(format!("pattern at plane is {found}, expected word {w}")));
                }
            }
            InsertSpec::Word { count: r.count }
        }
    };
    Ok(insert_slab(p, r.plane, &spec, r.shift)?)
}

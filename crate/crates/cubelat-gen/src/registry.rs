//! Generators selectable by name.

use cubelat_lattice::{Domain, FacePatch};

use crate::error::GenError;
use crate::families::{gen_column, gen_p0, gen_p1, gen_p_sigma, gen_p_tau, gen_sheet, gen_slab};
use crate::minimal::{gen_flat_center, gen_scherk};
use crate::words::{SigmaWord, TauWord};

/// The alphabet a generator's word argument is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordKind {
    Sigma,
    Tau,
}

pub trait Generator: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn word(&self) -> Option<WordKind>;
    fn generate(&self, word: Option<&str>, domain: Domain) -> Result<FacePatch, GenError>;
}

fn need<'a>(name: &'static str, word: Option<&'a str>) -> Result<&'a str, GenError> {
    word.ok_or(GenError::MissingWord(name))
}

macro_rules! plain {
    ($ty:ident, $name:literal, $summary:literal, $f:expr) => {
        pub struct $ty;
        impl Generator for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn summary(&self) -> &'static str {
                $summary
            }
            fn word(&self) -> Option<WordKind> {
                None
            }
            fn generate(&self, _word: Option<&str>, domain: Domain) -> Result<FacePatch, GenError> {
                $f(domain)
            }
        }
    };
}

macro_rules! worded {
    ($ty:ident, $name:literal, $summary:literal, $kind:ident, $w:ty, $f:expr) => {
        pub struct $ty;
        impl Generator for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn summary(&self) -> &'static str {
                $summary
            }
            fn word(&self) -> Option<WordKind> {
                Some(WordKind::$kind)
            }
            fn generate(&self, word: Option<&str>, domain: Domain) -> Result<FacePatch, GenError> {
                let w: $w = need($name, word)?.parse()?;
                $f(&w, domain)
            }
        }
    };
}

plain!(P0, "p0", "all monkey saddles", gen_p0);
plain!(P1, "p1", "screws alternating S/Z in a checkerboard", gen_p1);
plain!(Sheet, "sheet", "one layer of reflected monkey saddles at z = 0", gen_sheet);
plain!(Scherk, "scherk", "screw layer with flat half-planes (discrete minimal)", gen_scherk);
plain!(FlatCenter, "flatcenter", "flat vertex ringed by screws (discrete minimal)", gen_flat_center);
worded!(Sigma, "sigma", "all-screw polyhedron of a column word", Sigma, SigmaWord, gen_p_sigma);
worded!(Tau, "tau", "layered polyhedron of sheets and untwisted slabs", Tau, TauWord, gen_p_tau);
worded!(Column, "column", "a single screw column on the z-axis", Sigma, SigmaWord, gen_column);
worded!(Slab, "slab", "a column along x reflected in y, at z = 0", Sigma, SigmaWord, gen_slab);

pub fn generators() -> Vec<Box<dyn Generator>> {
    vec![
        Box::new(P0),
        Box::new(P1),
        Box::new(Sigma),
        Box::new(Tau),
        Box::new(Scherk),
        Box::new(FlatCenter),
        Box::new(Column),
        Box::new(Slab),
        Box::new(Sheet),
    ]
}

pub fn generator_by_name(name: &str) -> Result<Box<dyn Generator>, GenError> {
    let key = name.to_ascii_lowercase();
    generators()
        .into_iter()
        .find(|g| g.name() == key)
        .ok_or_else(|| GenError::UnknownGenerator(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_found() {
        let gs = generators();
        for g in &gs {
            assert_eq!(generator_by_name(g.name()).unwrap().name(), g.name());
        }
        let mut names: Vec<_> = gs.iter().map(|g| g.name()).collect();
        names.dedup();
        assert_eq!(names.len(), gs.len());
        assert!(matches!(generator_by_name("nope"), Err(GenError::UnknownGenerator(_))));
    }

    #[test]
    fn word_arguments() {
        let d = Domain::torus(2, 2, 2).unwrap();
        let sigma = generator_by_name("SIGMA").unwrap();
        assert_eq!(sigma.generate(Some("sz"), d).unwrap(), gen_p1(d).unwrap());
        assert_eq!(sigma.generate(None, d), Err(GenError::MissingWord("sigma")));
        assert!(matches!(sigma.generate(Some("SX"), d), Err(GenError::Parse { pos: 1, .. })));
        assert_eq!(generator_by_name("p0").unwrap().generate(Some("ignored"), d).unwrap(), gen_p0(d).unwrap());
    }
}

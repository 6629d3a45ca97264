//! Polyhedra whose vertices are all screws: a single column family or layers of slabs.

use std::collections::BTreeSet;

use cubelat_gen::{SigmaWord, TauLetter, TauWord};
use cubelat_lattice::{Axis, FacePatch, PointOp, Vec3i};
use cubelat_local::{vertex_config, Hand};

use crate::certificate::Certificate;
use crate::error::ClassifyError;

pub fn is_all_screw(patch: &FacePatch) -> bool {
    patch.domain().vertices().into_iter().all(|v| vertex_config(patch, v).is_screw())
}

/// Handedness read along the `axis` line through `start`.
pub fn read_column(patch: &FacePatch, start: Vec3i, axis: Axis) -> Result<SigmaWord, ClassifyError> {
    let l = patch.domain().lattice().ok_or(ClassifyError::NotTorus)?;
    let hands = (0..l.axis_period(axis))
        .map(|k| vertex_config(patch, start + Vec3i::axis(axis, k)).hand())
        .collect::<Option<Vec<Hand>>>()
        .ok_or(ClassifyError::NotAllScrew)?;
    Ok(SigmaWord::new(hands)?)
}

/// Canonical all-screw form: parallel columns give a sigma word, layered slabs a tau word.
pub fn classify_all_screw(patch: &FacePatch) -> Result<Certificate, ClassifyError> {
    let l = *patch.domain().lattice().ok_or(ClassifyError::NotTorus)?;
    let verts = patch.domain().vertices();
    let mut axes = BTreeSet::new();
    for &v in &verts {
        axes.insert(vertex_config(patch, v).screw_axis().ok_or(ClassifyError::NotAllScrew)?);
    }
    let axes: Vec<Axis> = axes.into_iter().collect();
    match axes.as_slice() {
        [a] => Ok(Certificate::AllScrewParallel(read_column(patch, verts[0], *a)?.class())),
        [a, b] => {
            let n = Axis::third(*a, *b);
            let op = PointOp::axis_to_z(n);
            let letters = (0..l.axis_period(n))
                .map(|k| {
                    let c = vertex_config(patch, Vec3i::axis(n, k)).screw_axis().expect("all screws");
                    if op.apply_axis(c) == Axis::X {
                        TauLetter::X
                    } else {
                        TauLetter::Y
                    }
                })
                .collect();
            Ok(Certificate::AllScrewLayered(TauWord::new(letters)?.class()))
        }
        _ => Err(ClassifyError::Precondition("screw axes in three directions".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubelat_gen::{gen_p0, gen_p1, gen_p_sigma, gen_p_tau, p_tau_period};
    use cubelat_lattice::Domain;

    #[test]
    fn round_trips() {
        let p = gen_p_sigma(&"SSZ".parse().unwrap(), Domain::torus(2, 2, 6).unwrap()).unwrap();
        assert_eq!(classify_all_screw(&p).unwrap().to_string(), "allscrew sigma SSZ");
        let t: TauWord = "xy".parse().unwrap();
        let p = gen_p_tau(&t, Domain::torus(2, 2, p_tau_period(&t).unwrap()).unwrap()).unwrap();
        assert_eq!(classify_all_screw(&p).unwrap().to_string(), "allscrew tau xy");
        let p = gen_p1(Domain::torus(2, 2, 2).unwrap()).unwrap();
        assert_eq!(classify_all_screw(&p).unwrap().to_string(), "allscrew sigma SZ");
        let p = gen_p0(Domain::torus(2, 2, 2).unwrap()).unwrap();
        assert_eq!(classify_all_screw(&p), Err(ClassifyError::NotAllScrew));
    }
}

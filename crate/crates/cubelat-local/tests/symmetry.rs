use cubelat_lattice::{Domain, Face, FacePatch, Isometry, PointOp, Vec3i};
use cubelat_local::{classify_mask, cubic_masks, minimal_masks, transform_mask, validate_cubic, VertexTag};
use proptest::prelude::*;

fn arb_op() -> impl Strategy<Value = PointOp> {
    (0..48usize).prop_map(|i| PointOp::all()[i])
}

proptest! {
    #[test]
    fn point_ops_permute_legal_masks(g in arb_op(), i in 0..16usize) {
        let m = cubic_masks()[i];
        let (a, b) = (classify_mask(m), classify_mask(transform_mask(m, g)));
        prop_assert!(b.is_cubic());
        match a.tag() {
            VertexTag::M => prop_assert_eq!(b.tag(), VertexTag::M),
            t if g.is_proper() => prop_assert_eq!(b.tag(), t),
            VertexTag::S => prop_assert_eq!(b.tag(), VertexTag::Z),
            _ => prop_assert_eq!(b.tag(), VertexTag::S),
        }
        prop_assert_eq!(b.screw_axis(), a.screw_axis().map(|x| g.apply_axis(x)));
    }

    #[test]
    fn minimal_masks_are_closed(g in arb_op(), i in 0..64usize) {
        let ms = minimal_masks();
        let m = ms[i % ms.len()];
        prop_assert!(ms.contains(&transform_mask(m, g)));
    }

    #[test]
    fn validity_is_isometry_invariant(g in arb_op(), bits in proptest::collection::vec(any::<bool>(), 24)) {
        let d = Domain::torus(2, 2, 2).unwrap();
        let faces: Vec<Face> = (0..24).filter(|&i| bits[i]).map(|i| d.face_at_index(i)).collect();
        let p = FacePatch::from_faces(d, faces).unwrap();
        let q = p.transform(Isometry::new(g, Vec3i::new(1, 0, 1)));
        prop_assert_eq!(validate_cubic(&p).ok(), validate_cubic(&q).ok());
    }
}

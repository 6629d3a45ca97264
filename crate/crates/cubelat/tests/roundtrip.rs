use cubelat::{parse_domain, parse_patch, serialize_domain, serialize_patch};
use cubelat_gen::{SigmaWord, TauWord};
use cubelat_lattice::{Domain, FacePatch, Lattice, Vec3i};
use proptest::prelude::*;

fn arb_domain() -> impl Strategy<Value = Domain> {
    prop_oneof![
        ((1..5, 1..5, 1..5), (0..4, 0..4, 0..4)).prop_map(|((x, y, z), (a, b, c))| {
            Domain::Torus(Lattice::new([x, y, z], [a, b, c]).unwrap())
        }),
        ((-3..3, -3..3, -3..3), (0..4, 0..4, 0..4)).prop_map(|((x, y, z), (a, b, c))| {
            let lo = Vec3i::new(x, y, z);
            Domain::window(lo, lo + Vec3i::new(a, b, c)).unwrap()
        }),
    ]
}

fn arb_patch() -> impl Strategy<Value = FacePatch> {
    arb_domain().prop_flat_map(|d| {
        let n = d.face_slot_count();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let faces = (0..n).filter(|&i| bits[i]).map(|i| d.face_at_index(i)).filter(|f| d.reduce_face(*f).is_some());
            FacePatch::from_faces(d, faces).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn patch_text_round_trips(p in arb_patch()) {
        let s = serialize_patch(&p);
        prop_assert_eq!(parse_patch(&s).unwrap(), p.clone());
        prop_assert_eq!(parse_domain(&serialize_domain(p.domain())).unwrap(), *p.domain());
    }

    #[test]
    fn words_serialize_to_canonical(s in "[SZsz]{1,8}", t in "[0xyXY]{1,8}") {
        let w: SigmaWord = s.parse().unwrap();
        let c = w.canonical();
        prop_assert_eq!(c.to_string().parse::<SigmaWord>().unwrap(), c.clone());
        prop_assert_eq!(c.to_string(), c.canonical().to_string());
        let w: TauWord = t.parse().unwrap();
        let c = w.canonical();
        prop_assert_eq!(c.to_string().parse::<TauWord>().unwrap(), c);
    }
}

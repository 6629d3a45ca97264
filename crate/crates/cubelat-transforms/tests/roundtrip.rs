use cubelat_gen::{gen_p0, gen_p_tau, p_tau_period, TauWord};
use cubelat_lattice::{Axis, Domain};
use cubelat_local::validate_cubic;
use cubelat_transforms::{
    find_slabs, find_towers, insert_slab, insertable_pattern, push_tower, remove_slab_shift, slab_at, InsertPattern,
    InsertSpec, Plane, Shift,
};
use proptest::prelude::*;

fn arb_tau() -> impl Strategy<Value = TauWord> {
    proptest::collection::vec(prop_oneof![Just('0'), Just('x'), Just('y')], 1..4)
        .prop_map(|v| v.into_iter().collect::<String>().parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tower_pushes_stay_cubic(picks in proptest::collection::vec(0usize..64, 1..5)) {
        let mut p = gen_p0(Domain::torus(4, 4, 4).unwrap()).unwrap();
        for k in picks {
            let towers = find_towers(&p);
            if towers.is_empty() {
                break;
            }
            let t = &towers[k % towers.len()];
            let q = push_tower(&p, t).unwrap();
            prop_assert!(validate_cubic(&q).ok());
            let back = find_towers(&q).into_iter().find(|u| u.axis == t.axis && u.base == t.base).unwrap();
            prop_assert_eq!(push_tower(&q, &back).unwrap(), p.clone());
            p = q;
        }
    }

    #[test]
    fn slab_removal_inverts_insertion(tau in arb_tau(), minus in any::<bool>()) {
        let pz = p_tau_period(&tau).unwrap();
        let p = gen_p_tau(&tau, Domain::torus(2, 2, pz).unwrap()).unwrap();
        let shift = if minus { Shift::Minus } else { Shift::Plus };
        for l in 0..pz {
            let pl = Plane::new(Axis::Z, l);
            if insertable_pattern(&p, pl) != Some(InsertPattern::Trivial) {
                continue;
            }
            for a in [Axis::X, Axis::Y] {
                let q = insert_slab(&p, pl, &InsertSpec::Trivial(a), shift).unwrap();
                prop_assert!(validate_cubic(&q).ok());
                let s = slab_at(&q, Axis::Z, l + 1).unwrap();
                prop_assert_eq!(remove_slab_shift(&q, &s, shift).unwrap(), p.clone());
            }
        }
    }

    #[test]
    fn removing_every_slab_leaves_sheets(tau in arb_tau()) {
        prop_assume!(!tau.is_all_slabs());
        let pz = p_tau_period(&tau).unwrap();
        let mut p = gen_p_tau(&tau, Domain::torus(2, 2, pz).unwrap()).unwrap();
        while let Some(s) = find_slabs(&p).into_iter().find(|s| s.normal == Axis::Z) {
            p = remove_slab_shift(&p, &s, Shift::Plus).unwrap();
        }
        let r = validate_cubic(&p);
        prop_assert!(r.ok());
        prop_assert_eq!(r.count(cubelat_local::VertexTag::M), p.domain().vertex_count());
    }
}

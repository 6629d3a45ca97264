//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use cubelat_classify::{
    classify, congruent, forward_construct, is_vertex_transitive, rebuild, Certificate, ForwardOptions,
};
use cubelat_enum::{enumerate_raw, enumerate_torus, EnumOptions, Mode};
use cubelat_gen::{
    column_period, gen_flat_center, gen_p0, gen_p1, gen_p_sigma, gen_p_tau, gen_scherk, p_tau_period, SigmaWord,
    TauLetter, TauWord,
};
use cubelat_lattice::{slot_index, Axis, Dir, Domain, FacePatch, Vec3i};
use cubelat_local::{
    all_face_diagrams, census_vertex_configs, classify_mask, cubic_masks, flat_mask, observed_face_diagrams,
    validate_cubic, validate_discrete_minimal, vertex_config, Hand, VertexTag,
};
use cubelat_topology::{topology_report, PiMultiple};
use cubelat_transforms::{
    find_towers, insert_slab, insertable_pattern, push_tower, remove_slab_shift, slab_at, slab_candidates,
    InsertPattern, InsertSpec, Plane, Shift,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn torus(x: i32, y: i32, z: i32) -> Domain {
    Domain::torus(x, y, z).unwrap()
}

/// Hamiltonian cycles of the octahedron on the six unit directions, as face masks.
fn octahedron_cycle_masks() -> Vec<u16> {
    let adjacent = |a: Dir, b: Dir| a.axis != b.axis;
    let mut out = BTreeSet::new();
    let rest: Vec<Dir> = Dir::ALL[1..].to_vec();
    fn perms(v: &mut Vec<Dir>, k: usize, f: &mut dyn FnMut(&[Dir])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            perms(v, k + 1, f);
            v.swap(k, i);
        }
    }
    let mut v = rest;
    perms(&mut v, 0, &mut |p: &[Dir]| {
        let cyc: Vec<Dir> = std::iter::once(Dir::ALL[0]).chain(p.iter().copied()).collect();
        if (0..6).all(|i| adjacent(cyc[i], cyc[(i + 1) % 6])) {
            let m = (0..6).fold(0u16, |m, i| m | 1 << slot_index(cyc[i], cyc[(i + 1) % 6]));
            out.insert(m);
        }
    });
    out.into_iter().collect()
}

fn c1_vertex_census() -> Check {
    let census = census_vertex_configs();
    let want: BTreeMap<VertexTag, usize> = [(VertexTag::M, 4), (VertexTag::S, 6), (VertexTag::Z, 6)].into();
    ensure!(census == want, "census {census:?}");
    let cycles = octahedron_cycle_masks();
    ensure!(cycles.len() == 16, "{} Hamiltonian cycles", cycles.len());
    let legal: BTreeSet<u16> = cubic_masks().iter().copied().collect();
    ensure!(cycles.iter().copied().collect::<BTreeSet<_>>() == legal, "cycle masks differ from legal masks");
    let mut by_tag: BTreeMap<VertexTag, usize> = BTreeMap::new();
    for m in &cycles {
        *by_tag.entry(classify_mask(*m).tag()).or_default() += 1;
    }
    ensure!(by_tag == want, "cycle tags {by_tag:?}");
    Ok("M 4, S 6, Z 6; 16 octahedron Hamiltonian cycles".into())
}

fn c2_face_census() -> Check {
    let all = all_face_diagrams();
    let count = |m: &BTreeMap<_, BTreeSet<_>>, c| m.get(&c).map_or(0, |s: &BTreeSet<_>| s.len());
    let centers = cubelat_local::FaceCenter::ALL;
    let counts: Vec<usize> = centers.iter().map(|c| count(&all, *c)).collect();
    ensure!(counts == [6, 3, 2, 9], "brute-force counts {counts:?}");
    let mut seen: BTreeMap<_, BTreeSet<_>> = BTreeMap::new();
    for (d, limit) in [(torus(2, 2, 2), 48), (torus(2, 4, 4), 96)] {
        let (ps, _) = enumerate_torus(d, EnumOptions { limit, ..EnumOptions::default() }).map_err(|e| e.to_string())?;
        for p in &ps {
            for (c, s) in observed_face_diagrams(p) {
                seen.entry(c).or_default().extend(s);
            }
        }
    }
    ensure!(seen == all, "enumerated diagrams {:?}", centers.iter().map(|c| count(&seen, *c)).collect::<Vec<_>>());
    Ok("normal 6, one flange 3, two flanges 2, missing 9; re-derived from (2,2,2) and (2,4,4) enumerations".into())
}

fn c3_topology() -> Check {
    for (name, p) in [("P0", gen_p0(torus(2, 2, 2))), ("P1", gen_p1(torus(2, 2, 2)))] {
        let p = p.map_err(|e| e.to_string())?;
        let r = topology_report(&p).map_err(|e| e.to_string())?;
        ensure!(
            (r.k, r.e, r.f, r.euler, r.genus.value(), r.orientable, r.missing_squares) == (8, 24, 12, -4, Some(3), true, 12),
            "{name}: {r}"
        );
        ensure!(r.defect_per_vertex == Some(PiMultiple::new(-1, 1)), "{name}: defect {:?}", r.defect_per_vertex);
    }
    Ok("P0 and P1: k 8, E 24, F 12, euler -4, genus 3, orientable, 12 missing squares, defect -pi".into())
}

fn c4_push() -> Check {
    let p = gen_p0(torus(4, 4, 4)).map_err(|e| e.to_string())?;
    let towers = find_towers(&p);
    ensure!(!towers.is_empty(), "no towers");
    for t in &towers {
        let q = push_tower(&p, t).map_err(|e| e.to_string())?;
        ensure!(validate_cubic(&q).ok(), "push of {t:?} invalid");
        ensure!(push_tower(&q, t).ok().as_ref() == Some(&p), "push of {t:?} not an involution");
        let cols: BTreeSet<Vec3i> = t
            .column_points()
            .iter()
            .flat_map(|c| (0..4).map(move |k| *c + Vec3i::axis(t.axis, k)))
            .filter_map(|v| p.domain().reduce_vertex(v))
            .collect();
        for v in p.domain().vertices() {
            let (a, b) = (vertex_config(&p, v).tag(), vertex_config(&q, v).tag());
            if cols.contains(&v) {
                ensure!(a == VertexTag::M && b != VertexTag::M, "{v} in tower did not change");
            } else {
                ensure!(a == b, "{v} outside tower changed {a} -> {b}");
            }
        }
    }
    Ok(format!("{} towers", towers.len()))
}

fn rotations_and_swaps(s: &SigmaWord) -> BTreeSet<SigmaWord> {
    let n = s.len();
    let mut out = BTreeSet::new();
    for w in [s.clone(), s.swapped()] {
        for r in 0..n {
            out.insert(SigmaWord::new((0..n).map(|i| w.letters()[(i + r) % n]).collect()).unwrap());
        }
    }
    out
}

fn all_words(n: usize) -> Vec<SigmaWord> {
    (0..1u32 << n)
        .map(|b| SigmaWord::new((0..n).map(|i| if b >> i & 1 == 1 { Hand::Z } else { Hand::S }).collect()).unwrap())
        .collect()
}

fn pushed_p0(rng: &mut StdRng, d: Domain) -> FacePatch {
    let mut p = gen_p0(d).unwrap();
    for _ in 0..rng.gen_range(0..5) {
        let ts = find_towers(&p);
        if let Some(t) = ts.choose(rng) {
            p = push_tower(&p, t).unwrap();
        }
    }
    p
}

fn c5_slabs() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let (mut trivial, mut word) = (0, 0);
    let mut done = 0;
    let mut attempts = 0;
    while done < 100 {
        attempts += 1;
        ensure!(attempts < 2000, "only {done} insertable planes found");
        let d = torus(*[2, 4].choose(&mut rng).unwrap(), *[2, 4].choose(&mut rng).unwrap(), *[2, 4, 6].choose(&mut rng).unwrap());
        let p = pushed_p0(&mut rng, d);
        let l = *d.lattice().unwrap();
        let planes: Vec<(Plane, InsertPattern)> = Axis::ALL
            .iter()
            .flat_map(|&n| (0..l.axis_period(n)).map(move |h| Plane::new(n, h)))
            .filter_map(|pl| insertable_pattern(&p, pl).map(|pat| (pl, pat)))
            .collect();
        let Some((pl, pat)) = planes.choose(&mut rng).cloned() else { continue };
        let shift = if rng.gen() { Shift::Plus } else { Shift::Minus };
        let spec = match &pat {
            InsertPattern::Trivial => {
                trivial += 1;
                let axes: Vec<Axis> = Axis::ALL.into_iter().filter(|a| *a != pl.normal).collect();
                InsertSpec::Trivial(*axes.choose(&mut rng).unwrap())
            }
            InsertPattern::Word { .. } => {
                word += 1;
                InsertSpec::Word { count: 1 }
            }
        };
        let q = insert_slab(&p, pl, &spec, shift).map_err(|e| format!("insert {pat} at {pl:?} on {d}: {e}"))?;
        let s = slab_at(&q, pl.normal, pl.level + 1).ok_or_else(|| format!("no slab after insert at {pl:?}"))?;
        let back = remove_slab_shift(&q, &s, shift).map_err(|e| e.to_string())?;
        ensure!(back == p, "remove after insert at {pl:?} on {d} is not the identity");
        let valid: BTreeSet<SigmaWord> = all_words(s.sigma.len())
            .into_iter()
            .filter(|w| !slab_candidates(&p, pl, s.axis, w, shift).is_empty())
            .collect();
        ensure!(valid == rotations_and_swaps(&s.sigma), "validating words {valid:?} for slab {}", s.sigma);
        done += 1;
    }
    Ok(format!("100 insertions ({trivial} trivial, {word} word patterns)"))
}

fn round_trip(p: &FacePatch) -> Result<&'static str, String> {
    let c = classify(p).map_err(|e| e.to_string())?;
    let r = rebuild(&c.certificate, c.domain).map_err(|e| e.to_string())?;
    ensure!(congruent(&r, p), "rebuild of `{}` not congruent", c.certificate);
    Ok(c.certificate.kind())
}

fn c6_classification() -> Check {
    let (ps, _) = enumerate_torus(torus(2, 2, 2), EnumOptions::default()).map_err(|e| e.to_string())?;
    for p in &ps {
        round_trip(p).map_err(|e| format!("census patch: {e}"))?;
    }
    let mut rng = StdRng::seed_from_u64(6);
    let mut kinds: BTreeMap<&'static str, usize> = BTreeMap::new();
    for i in 0..500 {
        let f = forward_construct(ForwardOptions::default(), &mut |n| rng.gen_range(0..n))
            .ok_or_else(|| format!("construction {i} failed"))?;
        ensure!(f.domain.lattice().map_or(0, |l| l.volume()) <= 64, "volume over 64");
        let kind = round_trip(&f.patch).map_err(|e| format!("construction {i} (base {}): {e}", f.base))?;
        *kinds.entry(kind).or_default() += 1;
    }
    Ok(format!("{} census patches, 500 constructions {kinds:?}", ps.len()))
}

fn certificate_word(c: &Certificate) -> Option<String> {
    match c {
        Certificate::AllScrewParallel(s) => Some(format!("sigma {}", s.class())),
        Certificate::AllScrewLayered(t) => Some(format!("tau {}", t.class())),
        Certificate::Pushed { base, pushes } if pushes.is_empty() => Some(format!("tau {}", base.class())),
        _ => None,
    }
}

fn c7_all_screw() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..25 {
        let n = rng.gen_range(1..7);
        let s = SigmaWord::new((0..n).map(|_| if rng.gen() { Hand::S } else { Hand::Z }).collect()).unwrap();
        let p = gen_p_sigma(&s, torus(2, 2, column_period(&s))).map_err(|e| e.to_string())?;
        let c = classify(&p).map_err(|e| format!("sigma {s}: {e}"))?;
        ensure!(c.certificate == Certificate::AllScrewParallel(s.class()), "sigma {s} -> {}", c.certificate);
    }
    for _ in 0..25 {
        let n = rng.gen_range(1..5);
        let letters = [TauLetter::Sheet, TauLetter::X, TauLetter::Y];
        let t = TauWord::new((0..n).map(|_| *letters.choose(&mut rng).unwrap()).collect()).unwrap();
        let pz = p_tau_period(&t).map_err(|e| e.to_string())?;
        let p = gen_p_tau(&t, torus(2, 2, pz)).map_err(|e| e.to_string())?;
        let c = classify(&p).map_err(|e| format!("tau {t}: {e}"))?;
        let single_slab = t.is_all_slabs() && t.letters().iter().all(|l| *l == t.letters()[0]);
        let want = if single_slab { "sigma SZ".to_string() } else { format!("tau {}", t.class()) };
        ensure!(certificate_word(&c.certificate).as_deref() == Some(want.as_str()), "tau {t} -> {}", c.certificate);
    }
    let d = torus(2, 2, 2);
    let p1 = gen_p1(d).map_err(|e| e.to_string())?;
    let tx = gen_p_tau(&"x".parse().unwrap(), d).map_err(|e| e.to_string())?;
    let sz = gen_p_sigma(&"SZ".parse().unwrap(), d).map_err(|e| e.to_string())?;
    ensure!(congruent(&p1, &tx) && congruent(&p1, &sz), "P1, tau x, sigma SZ not all congruent");
    Ok("25 sigma and 25 tau words; P1 = P_tau(x) = P_sigma(SZ)".into())
}

fn c8_uniform() -> Check {
    let mut cases: Vec<(String, FacePatch)> = Vec::new();
    for s in ["S", "SZ", "SSZZ"] {
        let w: SigmaWord = s.parse().unwrap();
        cases.push((format!("sigma {s}"), gen_p_sigma(&w, torus(2, 2, column_period(&w))).map_err(|e| e.to_string())?));
    }
    for t in ["x", "xy", "xxyy"] {
        let w: TauWord = t.parse().unwrap();
        let pz = p_tau_period(&w).map_err(|e| e.to_string())?;
        cases.push((format!("tau {t}"), gen_p_tau(&w, torus(2, 2, pz)).map_err(|e| e.to_string())?));
    }
    for (name, p) in &cases {
        let c = classify(p).map_err(|e| format!("{name}: {e}"))?;
        let r = rebuild(&c.certificate, c.domain).map_err(|e| e.to_string())?;
        ensure!(is_vertex_transitive(&r), "{name} rebuilt from `{}` is not vertex-transitive", c.certificate);
    }
    // tower-free, not all columns alike
    for s in ["SSSZ", "SSZ"] {
        let w: SigmaWord = s.parse().unwrap();
        let p = gen_p_sigma(&w, torus(2, 2, column_period(&w))).map_err(|e| e.to_string())?;
        ensure!(find_towers(&p).is_empty(), "sigma {s} has towers");
        ensure!(!is_vertex_transitive(&p), "sigma {s} is vertex-transitive");
    }
    let p0 = gen_p0(torus(4, 4, 4)).map_err(|e| e.to_string())?;
    let pushed = push_tower(&p0, &find_towers(&p0)[0]).map_err(|e| e.to_string())?;
    ensure!(!is_vertex_transitive(&pushed), "pushed P0 is vertex-transitive");
    Ok("six uniform words transitive; sigma SSSZ, SSZ and a pushed P0 are not".into())
}

fn c9_minimal() -> Check {
    let s = gen_scherk(Domain::cube(-4, 4).unwrap()).map_err(|e| e.to_string())?;
    let f = gen_flat_center(Domain::window(Vec3i::new(-4, -4, -2), Vec3i::new(4, 4, 2)).unwrap()).map_err(|e| e.to_string())?;
    for (name, p) in [("scherk", &s), ("flatcenter", &f)] {
        ensure!(validate_discrete_minimal(p).ok(), "{name} fails the minimal check");
        ensure!(!validate_cubic(p).ok(), "{name} passes the cubic check");
    }
    let d = torus(2, 2, 2);
    let opts = EnumOptions { mode: Mode::DiscreteMinimal, connected: false, ..EnumOptions::default() };
    let (raw, _) = enumerate_raw(d, opts).map_err(|e| e.to_string())?;
    let mut flats = 0;
    for p in &raw {
        for v in d.vertices() {
            let Some(a) = Axis::ALL.into_iter().find(|a| p.mask_at(v) == flat_mask(*a)) else { continue };
            flats += 1;
            for k in 1..d.lattice().unwrap().axis_period(a) {
                let m = p.mask_at(v + Vec3i::axis(a, k));
                ensure!(m == 0 || m == flat_mask(a), "flat line through {v} along {a} meets mask {m:#x}");
            }
        }
    }
    ensure!(flats > 0, "no flat vertices enumerated");
    Ok(format!("{} minimal surfaces on (2,2,2), {flats} flat vertices checked", raw.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("vertex census", c1_vertex_census),
        ("face diagram census", c2_face_census),
        ("topology of P0 and P1", c3_topology),
        ("push involution and locality", c4_push),
        ("slab insert/remove round trip", c5_slabs),
        ("classification at desk scale", c6_classification),
        ("all-screw words", c7_all_screw),
        ("uniform six", c8_uniform),
        ("discrete minimal surfaces", c9_minimal),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS {} {name}: {msg} ({secs:.2}s)", i + 1),
            Err(msg) => {
                println!("FAIL {} {name}: {msg} ({secs:.2}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria {failed:?}");
        std::process::exit(1);
    }
}

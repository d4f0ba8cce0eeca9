use std::path::Path;

use proptest::prelude::*;

use sutured::corpus::{random_gluable_pair, random_two_sided, rng, Limits};
use sutured::diagram::ops::{
    cap, disjoint, glue, identity_diagram, normalize, reinterpret_one_sided,
};
use sutured::diagram::{ArcDiagram, HeegaardDiagram, Orient};
use sutured::exterior::Subset;
use sutured::fixtures::fixture_library;
use sutured::GroupDescriptor;

const GROUPS: [GroupDescriptor; 3] = [
    GroupDescriptor {
        free_rank: 0,
        torsion_order: 1,
    },
    GroupDescriptor {
        free_rank: 1,
        torsion_order: 2,
    },
    GroupDescriptor {
        free_rank: 2,
        torsion_order: 3,
    },
];

#[test]
fn shipped_fixtures_match_the_library() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let lib = fixture_library();
    let on_disk = std::fs::read_dir(&dir)
        .unwrap()
        .filter(|e| {
            e.as_ref()
                .unwrap()
                .path()
                .extension()
                .is_some_and(|x| x == "json")
        })
        .count();
    assert_eq!(on_disk, lib.len());
    for (name, h) in &lib {
        let text = std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        assert_eq!(text, h.to_json(), "{name}");
        let back = HeegaardDiagram::from_json(&text).unwrap();
        assert_eq!(&back, h, "{name}");
        assert!(h.validate().is_empty(), "{name}: {:?}", h.validate());
        assert!(
            h.comment.as_deref().is_some_and(|c| !c.is_empty()),
            "{name}"
        );
    }
}

#[test]
fn surface_family_arc_counts() {
    for g in 0..3 {
        for p in 1..4 {
            for q in 1..4 {
                let z = ArcDiagram::surface_family(g, p, q).unwrap();
                assert!(z.violations().is_empty());
                assert_eq!(z.arc_count(), 2 * g + p + q - 2);
                assert_eq!(z.point_count(), 2 * z.arc_count());
                assert_eq!(z.components.len(), p);
            }
        }
    }
    assert!(ArcDiagram::surface_family(1, 0, 1).is_err());
}

#[test]
fn identity_has_product_shape() {
    let z = ArcDiagram::surface_family(1, 1, 2).unwrap();
    let h = identity_diagram(&z, GroupDescriptor::default()).unwrap();
    assert_eq!((h.n1(), h.a(), h.n0()), (z.arc_count(), 0, z.arc_count()));
    assert_eq!(h.b(), z.arc_count());
    assert_eq!(h.degree(), 0);
    assert!(h.validate().is_empty());
}

fn broken(f: impl FnOnce(&mut HeegaardDiagram)) -> Vec<String> {
    let mut h = fixture_library()
        .into_iter()
        .find(|(n, _)| n == "identity_n2")
        .unwrap()
        .1;
    f(&mut h);
    h.validate()
}

#[test]
fn validation_catches_bad_input() {
    assert!(!broken(|h| h.points[0].beta = "nowhere".into()).is_empty());
    assert!(!broken(|h| h.points[0].alpha = "nowhere".into()).is_empty());
    assert!(!broken(|h| h.points[0].sign = 2).is_empty());
    assert!(!broken(|h| h.group.torsion_order = 0).is_empty());
    assert!(!broken(|h| {
        let id = h.alpha_out[0].id.clone();
        h.alpha_in[0].id = id;
    })
    .is_empty());
    assert!(!broken(|h| h.boundary_left = None).is_empty());
}

#[test]
fn malformed_json_reports_position() {
    let err = HeegaardDiagram::from_json("{\n  \"group\": [1,\n")
        .unwrap_err()
        .to_string();
    assert!(err.contains("line"), "{err}");
    assert!(HeegaardDiagram::from_json("{\"unknown\": 1}").is_err());
}

#[test]
fn glue_rejects_mismatches() {
    let lib = fixture_library();
    let get = |n: &str| lib.iter().find(|(m, _)| m == n).unwrap().1.clone();
    let (a, b) = (get("identity_n1"), get("identity_n2"));
    assert!(glue(&a, &b).is_err());
    let mut c = get("identity_n1");
    c.alpha_out[0].orient = match c.alpha_out[0].orient {
        Orient::Same => Orient::Opposite,
        Orient::Opposite => Orient::Same,
    };
    assert!(glue(&a, &c).is_err());
    assert!(glue(&get("annulus_n1"), &get("annulus_n2")).is_err());
    assert!(disjoint(&get("annulus_n1"), &get("twisted_f1_m2")).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn json_round_trips(seed in any::<u64>(), gi in 0usize..3) {
        let h = random_two_sided(&mut rng(seed), GROUPS[gi], 3, &Limits::default());
        prop_assert!(h.validate().is_empty());
        prop_assert_eq!(HeegaardDiagram::from_json(&h.to_json()).unwrap(), h);
    }

    #[test]
    fn glue_counts(seed in any::<u64>(), gi in 0usize..3) {
        let (l, r) = random_gluable_pair(&mut rng(seed), GROUPS[gi], 2, &Limits::default());
        let h = glue(&l, &r).unwrap();
        prop_assert!(h.validate().is_empty(), "{:?}", h.validate());
        prop_assert_eq!(h.n1(), l.n1());
        prop_assert_eq!(h.n0(), r.n0());
        prop_assert_eq!(h.a(), l.a() + l.n0() + r.a());
        prop_assert_eq!(h.b(), l.b() + r.b());
        prop_assert_eq!(h.points.len(), l.points.len() + r.points.len());
        prop_assert_eq!(h.degree(), l.degree() + r.degree());
    }

    #[test]
    fn disjoint_counts(s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = GroupDescriptor::default();
        let h = random_two_sided(&mut rng(s1), g, 2, &Limits::default());
        let hp = random_two_sided(&mut rng(s2), g, 2, &Limits::default());
        let u = disjoint(&h, &hp).unwrap();
        prop_assert!(u.validate().is_empty(), "{:?}", u.validate());
        prop_assert_eq!((u.n1(), u.a(), u.n0(), u.b()), (h.n1() + hp.n1(), h.a() + hp.a(), h.n0() + hp.n0(), h.b() + hp.b()));
    }

    #[test]
    fn normalize_counts(seed in any::<u64>(), gi in 0usize..3) {
        let h = random_two_sided(&mut rng(seed), GROUPS[gi], 3, &Limits::default());
        let n = normalize(&h);
        prop_assert!(n.validate().is_empty(), "{:?}", n.validate());
        prop_assert!(n.has_roles());
        prop_assert_eq!((n.n1(), n.n0()), (h.n1(), h.n0()));
        prop_assert_eq!(n.a(), h.n1() + h.a() + h.n0());
        prop_assert_eq!(n.b(), h.b() + h.n1() + h.n0());
        prop_assert_eq!(n.points.len(), h.points.len() + 2 * (h.n1() + h.n0()));
        prop_assert_eq!(n.degree(), h.degree());
    }

    #[test]
    fn cap_counts(seed in any::<u64>(), ibits in any::<u64>(), jbits in any::<u64>()) {
        let h = normalize(&random_two_sided(&mut rng(seed), GroupDescriptor::default(), 3, &Limits::default()));
        let i = Subset(ibits & ((1 << h.n0()) - 1));
        let j = Subset(jbits & ((1 << h.n1()) - 1));
        let c = cap(&h, i, j).unwrap();
        prop_assert!(c.validate().is_empty(), "{:?}", c.validate());
        prop_assert!(c.is_ordinary());
        prop_assert_eq!(c.a(), h.n1() - j.len() + h.a() + i.len());
        prop_assert_eq!(c.b(), h.b());
    }

    #[test]
    fn one_sided_view_moves_all_arcs_out(seed in any::<u64>()) {
        let h = random_two_sided(&mut rng(seed), GroupDescriptor::default(), 3, &Limits::default());
        let r = reinterpret_one_sided(&h);
        prop_assert!(r.validate().is_empty(), "{:?}", r.validate());
        prop_assert_eq!((r.n1(), r.n0(), r.a(), r.b()), (h.n1() + h.n0(), 0, h.a(), h.b()));
    }
}

#[test]
fn cap_needs_roles() {
    let h = fixture_library()
        .into_iter()
        .find(|(n, _)| n == "identity_n1")
        .unwrap()
        .1;
    assert!(cap(&h, Subset::empty(), Subset::empty()).is_err());
}

#[test]
fn one_arc_identity_normal_form_and_cap() {
    let h = identity_diagram(&ArcDiagram::interval(1), GroupDescriptor::default()).unwrap();
    let n = normalize(&h);
    assert_eq!((n.b(), n.a(), n.n1() + n.n0()), (3, 2, 2));
    let core: Vec<&str> = n
        .beta
        .iter()
        .filter(|b| b.role == Some(sutured::diagram::Role::Core))
        .map(|b| b.id.as_str())
        .collect();
    let orig: Vec<&str> = h.beta.iter().map(|b| b.id.as_str()).collect();
    assert_eq!(core, orig);
    let c = cap(&n, Subset(1), Subset(1)).unwrap();
    assert!(c.is_ordinary());
    assert_eq!((c.b(), c.a()), (3, 3));
    let c = cap(&n, Subset::empty(), Subset(1)).unwrap();
    assert_eq!(c.a(), n.a());
}

#[test]
fn closed_normal_form_keeps_curves() {
    let h = fixture_library()
        .into_iter()
        .find(|(n, _)| n == "mixed_2x2")
        .unwrap()
        .1;
    let n = normalize(&h);
    assert_eq!(n.alpha_circles, h.alpha_circles);
    assert_eq!(n.points, h.points);
    assert_eq!(
        n.beta.iter().map(|b| &b.id).collect::<Vec<_>>(),
        h.beta.iter().map(|b| &b.id).collect::<Vec<_>>()
    );
}

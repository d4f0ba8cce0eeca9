use num_traits::{One, Zero};
use proptest::prelude::*;

use sutured::bsda::{bsda_z, bsda_zh, enumerate_generators, gr_da};
use sutured::corpus::{random_gluable_pair, random_two_sided, rng, Limits};
use sutured::diagram::build::{annulus, ordinary_from_matrix};
use sutured::diagram::ops::{glue, identity_diagram, normalize};
use sutured::diagram::ArcDiagram;
use sutured::exterior::{compose, global_unit, GradedMap, Subset};
use sutured::fixtures::fixture;
use sutured::rings::parse::parse_zh;
use sutured::rings::Augment;
use sutured::{GroupDescriptor, Z};

fn leibniz(m: &[Vec<i64>]) -> i64 {
    fn go(m: &[Vec<i64>], row: usize, used: &mut Vec<usize>) -> i64 {
        if row == m.len() {
            let inv = (0..used.len()).flat_map(|i| (i + 1..used.len()).map(move |j| (i, j)));
            let inv = inv.filter(|&(i, j)| used[i] > used[j]).count();
            return if inv % 2 == 0 { 1 } else { -1 };
        }
        let mut s = 0;
        for c in 0..m.len() {
            if !used.contains(&c) && m[row][c] != 0 {
                used.push(c);
                s += m[row][c] * go(m, row + 1, used);
                used.pop();
            }
        }
        s
    }
    go(m, 0, &mut vec![])
}

fn is_sign(u: Option<Z>) -> bool {
    u.is_some_and(|u| u == Z::one() || u == -Z::one())
}

#[test]
fn annulus_counts_points() {
    for n in 1..=6 {
        let f = bsda_z(&annulus(n, false));
        assert_eq!(f.entry(Subset::empty(), Subset::empty()), Z::from(n));
        assert_eq!(f.nonzero_count(), 1);
    }
}

#[test]
fn weighted_annulus_is_a_geometric_sum() {
    for n in 1..=6 {
        let text: Vec<String> = (0..n).map(|k| format!("t^{k}")).collect();
        let want = parse_zh(&text.join(" + "), 1).unwrap();
        let f = bsda_zh(&annulus(n, true));
        assert_eq!(f.entry(Subset::empty(), Subset::empty()), want);
    }
}

#[test]
fn identity_is_signed_identity() {
    let g = GroupDescriptor::default();
    for n in 1..=5 {
        let f = bsda_z(&identity_diagram(&ArcDiagram::interval(n), g).unwrap());
        let s = if n % 2 == 0 { Z::one() } else { -Z::one() };
        assert_eq!(f, GradedMap::identity(n).scale(&s), "n = {n}");
    }
    let genus = ArcDiagram::surface_family(1, 1, 1).unwrap();
    let f = bsda_z(&identity_diagram(&genus, g).unwrap());
    assert_eq!(f, GradedMap::identity(2));
}

#[test]
fn crossed_generator_grading() {
    let h = fixture("mixed_2x2").unwrap();
    let gens = enumerate_generators(&h);
    assert_eq!(gens.len(), 2);
    let data: Vec<_> = gens.iter().map(|x| gr_da(&h, x).unwrap()).collect();
    let crossed = data.iter().find(|d| d.inv_sigma_x == 1).unwrap();
    assert_eq!((crossed.intersection_parity, crossed.total), (1, 0));
    let straight = data.iter().find(|d| d.inv_sigma_x == 0).unwrap();
    assert_eq!((straight.intersection_parity, straight.total), (0, 0));
    assert_eq!(
        bsda_z(&h).entry(Subset::empty(), Subset::empty()),
        Z::from(2)
    );
}

#[test]
fn glued_halves_close_a_loop() {
    let (l, r) = (
        fixture("halfproj_left").unwrap(),
        fixture("halfproj_right").unwrap(),
    );
    let h = glue(&l, &r).unwrap();
    let f = bsda_z(&h);
    assert!(!f.is_zero());
    assert!(is_sign(
        global_unit(&f, &compose(&bsda_z(&l), &bsda_z(&r)).unwrap()).unwrap()
    ));
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-2i64..=2, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closed_diagram_gives_determinant(m in matrix(4)) {
        let h = ordinary_from_matrix(&m, m.len());
        let f = bsda_z(&h);
        prop_assert_eq!(f.degree, 0);
        prop_assert!(f.nonzero_count() <= 1);
        prop_assert_eq!(f.entry(Subset::empty(), Subset::empty()), Z::from(leibniz(&m)));
    }

    #[test]
    fn entries_are_homogeneous(seed in any::<u64>()) {
        let h = random_two_sided(&mut rng(seed), GroupDescriptor::default(), 3, &Limits::default());
        let f = bsda_z(&h);
        prop_assert_eq!(f.degree, h.degree());
        for ((i, j), _) in f.entries() {
            prop_assert_eq!(j.len() as i64 - i.len() as i64, h.degree());
        }
    }

    #[test]
    fn gradings_are_parity_sums(seed in any::<u64>()) {
        let h = random_two_sided(&mut rng(seed), GroupDescriptor::default(), 3, &Limits::default());
        for x in enumerate_generators(&h) {
            let d = gr_da(&h, &x).unwrap();
            let sum = usize::from(d.intersection_parity) + d.inv_sigma_x + d.inv_idempotent + usize::from(d.correction);
            prop_assert_eq!(usize::from(d.total), sum % 2);
            prop_assert_eq!(x.points.len(), h.b());
        }
    }

    #[test]
    fn augmentation_recovers_integer_map(seed in any::<u64>(), f in 0usize..3) {
        let g = GroupDescriptor { free_rank: f, torsion_order: 1 };
        let h = random_two_sided(&mut rng(seed), g, 2, &Limits::default());
        let lifted = bsda_zh(&h).map_values(|x| x.augmentation());
        prop_assert_eq!(lifted, bsda_z(&h));
    }

    #[test]
    fn gluing_composes(seed in any::<u64>()) {
        let (l, r) = random_gluable_pair(&mut rng(seed), GroupDescriptor::default(), 2, &Limits::default());
        let h = glue(&l, &r).unwrap();
        let comp = compose(&bsda_z(&l), &bsda_z(&r)).unwrap();
        prop_assert!(is_sign(global_unit(&bsda_z(&h), &comp).unwrap()));
    }

    #[test]
    fn normal_form_keeps_the_map(seed in any::<u64>()) {
        let h = random_two_sided(&mut rng(seed), GroupDescriptor::default(), 3, &Limits::default());
        prop_assert!(is_sign(global_unit(&bsda_z(&normalize(&h)), &bsda_z(&h)).unwrap()));
    }
}

#[test]
fn empty_generator_set_gives_zero() {
    let h = ordinary_from_matrix(&[vec![0, 0], vec![1, 1]], 2);
    assert!(enumerate_generators(&h).is_empty());
    assert!(bsda_z(&h).entry(Subset::empty(), Subset::empty()).is_zero());
}

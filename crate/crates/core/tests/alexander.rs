use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use sutured::alexander::{
    alexander_function, alexander_functor_equivalent, alexander_functor_qh, alexander_functor_z,
    alexander_functor_zg, compare_bsda_alexander, random_equivalent_presentation, AlexRing,
};
use sutured::bsda::{bsda_z, bsda_zh};
use sutured::corpus::{random_gluable_pair, random_two_sided, rng, Limits};
use sutured::diagram::build::annulus;
use sutured::diagram::ops::{glue, normalize};
use sutured::exterior::{global_unit, Subset};
use sutured::fixtures::fixture_library;
use sutured::homology::presentation_z;
use sutured::rings::parse::parse_zh;
use sutured::{GroupDescriptor, Matrix, Z};

fn cofactor(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * cofactor(&minor)
        })
        .sum()
}

fn is_sign(u: Option<Z>) -> bool {
    u.is_some_and(|u| u.abs().is_one())
}

#[test]
fn every_fixture_matches_over_each_ring() {
    for (name, h) in fixture_library() {
        let z = compare_bsda_alexander(&h, AlexRing::Z).unwrap();
        assert!(
            matches!(z.unit.as_deref(), Some("+1") | Some("-1")),
            "{name}: {:?}",
            z.unit
        );
        for ring in [AlexRing::ZG, AlexRing::QH] {
            assert!(
                compare_bsda_alexander(&h, ring).unwrap().pass(),
                "{name} over {ring:?}"
            );
        }
    }
}

#[test]
fn weighted_annulus_functor() {
    for n in 1..=5 {
        let text: Vec<String> = (0..n).map(|k| format!("t^{k}")).collect();
        let want = parse_zh(&text.join(" + "), 1).unwrap().project_free();
        let f = alexander_functor_zg(&normalize(&annulus(n, true))).unwrap();
        assert_eq!(f.entry(Subset::empty(), Subset::empty()), want);
        let c = compare_bsda_alexander(&annulus(n, true), AlexRing::ZG).unwrap();
        assert_eq!(c.unit.as_deref(), Some("+t^0"));
    }
}

#[test]
fn character_component_vanishes() {
    let h = fixture_library()
        .into_iter()
        .find(|(n, _)| n == "qh_vanishing")
        .unwrap()
        .1;
    let f = alexander_functor_qh(&normalize(&h)).unwrap();
    let comps = f.entry(Subset::empty(), Subset::empty()).components(2);
    assert!(comps[0].is_zero());
    assert!(!comps[1].is_zero());
    assert!(bsda_z(&h).is_zero());
    assert!(!bsda_zh(&h).is_zero());
}

#[test]
fn functor_needs_roles() {
    let h = fixture_library()
        .into_iter()
        .find(|(n, _)| n == "identity_n2")
        .unwrap()
        .1;
    assert!(alexander_functor_z(&h).is_err());
}

#[test]
fn wrong_vector_count_is_an_error() {
    let m = Matrix::from_rows(vec![vec![Z::one()], vec![Z::zero()]], 1);
    assert!(alexander_function(&m, &[]).is_err());
    assert!(alexander_function(&m, &[vec![Z::one()]]).is_err());
}

fn tall() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1..=4usize).prop_flat_map(|r| {
        (0..=r).prop_flat_map(move |c| {
            (
                prop::collection::vec(prop::collection::vec(-3i64..=3, r), r),
                Just(c),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn function_is_bordered_determinant((full, c) in tall()) {
        let r = full.len();
        let m = Matrix::from_rows(full.iter().map(|row| row[..c].iter().map(|&x| Z::from(x)).collect()).collect(), c);
        let u: Vec<Vec<Z>> = (c..r).map(|j| full.iter().map(|row| Z::from(row[j])).collect()).collect();
        prop_assert_eq!(alexander_function(&m, &u).unwrap(), Z::from(cofactor(&full)));
    }

    #[test]
    fn presentation_does_not_matter(seed in any::<u64>(), p in any::<u64>()) {
        let h = random_two_sided(&mut rng(seed), GroupDescriptor::default(), 2, &Limits::default());
        let hn = normalize(&h);
        let base = alexander_functor_z(&hn).unwrap();
        let ep = random_equivalent_presentation(&presentation_z(&hn).matrix, p);
        let f = alexander_functor_equivalent(&hn, &ep).unwrap();
        prop_assert!(is_sign(global_unit(&f, &base).unwrap()));
    }

    #[test]
    fn glued_diagrams_match(seed in any::<u64>(), gi in 0usize..3) {
        let g = [
            GroupDescriptor { free_rank: 0, torsion_order: 1 },
            GroupDescriptor { free_rank: 1, torsion_order: 1 },
            GroupDescriptor { free_rank: 1, torsion_order: 2 },
        ][gi];
        let (l, r) = random_gluable_pair(&mut rng(seed), g, 1, &Limits::default());
        let h = glue(&l, &r).unwrap();
        for ring in [AlexRing::Z, AlexRing::ZG, AlexRing::QH] {
            prop_assert!(compare_bsda_alexander(&h, ring).unwrap().pass(), "{:?}", ring);
        }
    }
}

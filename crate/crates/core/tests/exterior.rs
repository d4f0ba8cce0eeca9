use num_traits::One;
use proptest::prelude::*;

use sutured::exterior::{
    braiding, compose, epsilon_basis, phi_map, super_tensor, wedge, wedge_basis, ExtElement,
    GradedMap, Subset,
};
use sutured::Z;

/// Sign of sorting the concatenation of two index lists, by bubble sort.
fn sort_sign(a: &[usize], b: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut swaps = 0;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((swaps % 2 == 1, v))
}

fn subset(n: usize) -> impl Strategy<Value = Subset> {
    (0..1u64 << n).prop_map(Subset)
}

fn element(n: usize) -> impl Strategy<Value = ExtElement<Z>> {
    prop::collection::vec((0..1u64 << n, -3i64..=3), 0..5).prop_map(move |ts| {
        ts.into_iter().fold(ExtElement::zero(n), |e, (s, c)| {
            e.plus_term(Subset(s), Z::from(c))
        })
    })
}

fn graded_map(src: usize, tgt: usize) -> impl Strategy<Value = GradedMap<Z>> {
    let lo = -(src as i64);
    (
        lo..=tgt as i64,
        prop::collection::vec((0..1u64 << src, 0..1u64 << tgt, -2i64..=2), 0..8),
    )
        .prop_map(move |(d, es)| {
            let mut f = GradedMap::zero(src, tgt, d);
            for (i, j, v) in es {
                let (i, j) = (Subset(i), Subset(j));
                if j.len() as i64 == i.len() as i64 + d {
                    f.add_entry(i, j, Z::from(v));
                }
            }
            f
        })
}

proptest! {
    #[test]
    fn basis_wedge_matches_sorting(i in subset(6), j in subset(6)) {
        let a: Vec<usize> = i.iter().collect();
        let b: Vec<usize> = j.iter().collect();
        let got = wedge_basis(i, j).map(|(neg, s)| (neg, s.iter().collect::<Vec<_>>()));
        prop_assert_eq!(got, sort_sign(&a, &b));
    }

    #[test]
    fn wedge_is_associative(x in element(5), y in element(5), z in element(5)) {
        let l = wedge(&wedge(&x, &y).unwrap(), &z).unwrap();
        let r = wedge(&x, &wedge(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn wedge_is_graded_commutative(i in subset(5), j in subset(5)) {
        let x = ExtElement::<Z>::basis(5, i);
        let y = ExtElement::<Z>::basis(5, j);
        let xy = wedge(&x, &y).unwrap();
        let yx = wedge(&y, &x).unwrap();
        let want = if i.len() * j.len() % 2 == 1 { yx.neg() } else { yx };
        prop_assert_eq!(xy, want);
    }

    #[test]
    fn composition_is_associative(f in graded_map(2, 3), g in graded_map(3, 2), h in graded_map(2, 3)) {
        let l = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let r = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn identity_is_neutral(f in graded_map(3, 2)) {
        prop_assert_eq!(compose(&GradedMap::identity(2), &f).unwrap(), f.clone());
        prop_assert_eq!(compose(&f, &GradedMap::identity(3)).unwrap(), f);
    }

    #[test]
    fn apply_agrees_with_composition(f in graded_map(2, 3), g in graded_map(3, 2), x in element(2)) {
        let gf = compose(&g, &f).unwrap();
        prop_assert_eq!(gf.apply(&x), g.apply(&f.apply(&x)));
    }

    #[test]
    fn super_tensor_interchange(
        f in graded_map(2, 2), g in graded_map(1, 2), fp in graded_map(1, 2), gp in graded_map(2, 1),
    ) {
        let l = compose(&super_tensor(&f, &g), &super_tensor(&fp, &gp)).unwrap();
        let r = super_tensor(&compose(&f, &fp).unwrap(), &compose(&g, &gp).unwrap());
        let want = if (f.degree * gp.degree).rem_euclid(2) == 1 { r.scale(&-Z::one()) } else { r };
        prop_assert_eq!(l, want);
    }

    #[test]
    fn braiding_squares_to_identity(n in 0usize..4, np in 0usize..4, d in 0i64..2, dp in 0i64..2) {
        let b = braiding::<Z>(n, d, np, dp);
        let back = braiding::<Z>(np, dp, n, d);
        prop_assert_eq!(compose(&back, &b).unwrap(), GradedMap::identity(n + np));
    }

    #[test]
    fn phi_is_an_involution_with_identity_at_zero(n in 0usize..4, np in 0usize..4, d in 0i64..2) {
        let p = phi_map::<Z>(n, np, d);
        prop_assert_eq!(compose(&p, &p).unwrap(), GradedMap::identity(n + np));
        prop_assert_eq!(phi_map::<Z>(n, np, 0), GradedMap::identity(n + np));
    }

    #[test]
    fn inversions_match_pair_count(i in subset(7), j in subset(7)) {
        let want = i.iter().flat_map(|a| j.iter().map(move |b| (a, b))).filter(|(a, b)| a > b).count();
        prop_assert_eq!(i.inversions_with(j), want);
    }
}

#[test]
fn epsilon_pairs_complements() {
    let n = 4;
    for i in Subset::all(n) {
        for k in Subset::all(n) {
            let e = epsilon_basis(i, k, n);
            if k == i.complement(n) {
                let (neg, _) =
                    sort_sign(&i.iter().collect::<Vec<_>>(), &k.iter().collect::<Vec<_>>())
                        .unwrap();
                assert_eq!(e, if neg { -1 } else { 1 });
            } else {
                assert_eq!(e, 0);
            }
        }
    }
}

#[test]
fn inhomogeneous_entries_are_rejected() {
    let bad = GradedMap::<Z>::from_entries(2, 2, 0, [((Subset::empty(), Subset(1)), Z::one())]);
    assert!(bad.is_err());
    let range = GradedMap::<Z>::from_entries(1, 1, 0, [((Subset(2), Subset(2)), Z::one())]);
    assert!(range.is_err());
}

#[test]
fn shapes_must_match_to_compose() {
    let f = GradedMap::<Z>::identity(2);
    let g = GradedMap::<Z>::identity(3);
    assert!(compose(&g, &f).is_err());
}

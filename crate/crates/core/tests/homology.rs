use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use sutured::bsda::bsda_z;
use sutured::corpus::{random_two_sided, rng, Limits};
use sutured::diagram::build::{annulus, ordinary_from_matrix};
use sutured::diagram::ops::{cap, identity_diagram, normalize};
use sutured::diagram::ArcDiagram;
use sutured::exterior::{global_unit, Subset};
use sutured::fixtures::fixture;
use sutured::homology::{
    chi_sfh_surrogate, coker_rank, generator_sum, k_element, kernel_istar, presentation_z,
    torsion_order, vfn_sut, weakly_balanced,
};
use sutured::{GroupDescriptor, Matrix, Z};

fn zm(rows: &[Vec<i64>], cols: usize) -> Matrix<Z> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Z::from(x)).collect())
            .collect(),
        cols,
    )
}

/// Determinant by cofactor expansion along the first row.
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
fn small_torsion_orders() {
    assert_eq!(torsion_order(&zm(&[vec![2, 0], vec![0, 3]], 2)), Z::from(6));
    assert_eq!(torsion_order(&zm(&[vec![2, 4], vec![6, 8]], 2)), Z::from(8));
    assert_eq!(torsion_order(&zm(&[vec![1, 2, 3]], 3)), Z::one());
    assert_eq!(torsion_order(&zm(&[vec![1], vec![2]], 1)), Z::zero());
    assert_eq!(
        coker_rank(&zm(&[vec![2, 0, 0], vec![0, 0, 0], vec![0, 0, 3]], 3)),
        1
    );
    assert_eq!(coker_rank(&zm(&[vec![0, 0], vec![0, 0], vec![0, 0]], 2)), 3);
}

#[test]
fn annulus_prefactor_is_point_count() {
    for n in 1..=5 {
        let ker = kernel_istar(&normalize(&annulus(n, false))).unwrap();
        assert_eq!(ker.prefactor, Z::from(n));
        assert_eq!((ker.k, ker.rank_ker), (0, 0));
        assert!(ker.injective && ker.core_nonsingular);
    }
}

#[test]
fn identity_kernel_is_the_diagonal() {
    let g = GroupDescriptor::default();
    for n in 1..=3 {
        let hn = normalize(&identity_diagram(&ArcDiagram::interval(n), g).unwrap());
        let ker = kernel_istar(&hn).unwrap();
        assert_eq!(ker.k, n as i64);
        assert_eq!(ker.rank_ker, n);
        assert_eq!(ker.prefactor, Z::one());
        let ke = k_element(&hn).unwrap();
        assert_eq!(ke.wedge.degree(), Some(n));
    }
}

#[test]
fn degenerate_fixtures() {
    let idle = kernel_istar(&normalize(&fixture("idle_circle").unwrap())).unwrap();
    assert!(!idle.injective);
    let dup = kernel_istar(&normalize(&fixture("dup_beta").unwrap())).unwrap();
    assert!(dup.prefactor.is_zero());
    for name in ["idle_circle", "dup_beta"] {
        let hn = normalize(&fixture(name).unwrap());
        assert!(k_element(&hn).unwrap().wedge.is_zero(), "{name}");
        assert!(vfn_sut(&hn).unwrap().is_zero(), "{name}");
        assert!(bsda_z(&hn).is_zero(), "{name}");
    }
}

#[test]
fn kernel_needs_roles() {
    assert!(kernel_istar(&fixture("identity_n1").unwrap()).is_err());
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn square_torsion_order_is_abs_det(m in matrix(4)) {
        let d = cofactor(&m);
        let t = torsion_order(&zm(&m, m.len()));
        prop_assert_eq!(t, Z::from(d.abs()));
        prop_assert_eq!(coker_rank(&zm(&m, m.len())) == 0, d != 0);
    }

    #[test]
    fn generator_sum_is_det(m in matrix(4)) {
        let h = ordinary_from_matrix(&m, m.len());
        let d = Z::from(cofactor(&m));
        prop_assert_eq!(generator_sum(&h).unwrap(), d.clone());
        prop_assert_eq!(presentation_z(&h).matrix.det().unwrap(), d.clone());
        if !d.is_zero() {
            prop_assert_eq!(chi_sfh_surrogate(&h).unwrap(), d);
        }
    }

    #[test]
    fn frohman_nicas_agrees_up_to_sign(seed in any::<u64>()) {
        let h = random_two_sided(&mut rng(seed), GroupDescriptor::default(), 2, &Limits::default());
        let hn = normalize(&h);
        let v = vfn_sut(&hn).unwrap();
        prop_assert!(is_sign(global_unit(&v, &bsda_z(&hn)).unwrap()));
    }

    #[test]
    fn capped_sums_fill_the_map(seed in any::<u64>()) {
        let h = normalize(&random_two_sided(&mut rng(seed), GroupDescriptor::default(), 2, &Limits::default()));
        let f = bsda_z(&h);
        for i in Subset::all(h.n0()) {
            for j in Subset::all(h.n1()) {
                let c = cap(&h, i, j).unwrap();
                let s = generator_sum(&c).unwrap();
                prop_assert_eq!(c.a() == c.b(), weakly_balanced(&h, i, j));
                prop_assert_eq!(s.is_zero(), f.entry(i, j).is_zero());
                prop_assert_eq!(s.abs(), f.entry(i, j).abs());
            }
        }
    }
}

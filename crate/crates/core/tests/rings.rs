use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use sutured::rings::cyclo::euler_phi;
use sutured::rings::laurent::{Laurent, Mono};
use sutured::rings::parse::parse_zh;
use sutured::rings::qh::{character_map, divisors};
use sutured::rings::{cyclotomic_polynomial, smith_normal_form};
use sutured::{CycloElem, Matrix, QHElem, Ring, FG, Z, ZH};

fn zm(rows: &[Vec<i64>]) -> Matrix<Z> {
    let c = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Z::from(x)).collect())
            .collect(),
        c,
    )
}

/// Sum over permutations with the sign from counting inversions.
fn leibniz(rows: &[Vec<i64>]) -> i64 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = rows.len();
    perms(n)
        .into_iter()
        .map(|p| {
            let inv = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let s = if inv % 2 == 0 { 1 } else { -1 };
            s * (0..n).map(|i| rows[i][p[i]]).product::<i64>()
        })
        .sum()
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))
}

fn rect() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=4usize, 1..=4usize)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

proptest! {
    #[test]
    fn determinants_agree_with_leibniz(m in square(5)) {
        let want = Z::from(leibniz(&m));
        let a = zm(&m);
        prop_assert_eq!(a.det_bareiss(), want.clone());
        prop_assert_eq!(a.det_expansion(), want.clone());
        prop_assert_eq!(a.det().unwrap(), want);
    }

    #[test]
    fn smith_form_reconstructs(m in rect()) {
        let a = zm(&m);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.u.det_bareiss().abs().is_one());
        prop_assert!(s.v.det_bareiss().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        prop_assert_eq!(s.rank(), a.rank());
    }

    #[test]
    fn zh_text_round_trips(
        terms in prop::collection::vec((-5i64..=5, -3i64..=3, -2i64..=2, 0u32..6), 0..5),
        m in 1u32..=6,
    ) {
        let e = terms.iter().fold(ZH::zero_with(m), |acc, &(c, a, b, s)| {
            acc + Laurent::term(Z::from(c), Mono::new(vec![a, b], s % m), m)
        });
        let back = parse_zh(&e.to_string(), m).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn trivial_character_sums_torsion(
        terms in prop::collection::vec((-5i64..=5, -2i64..=2, 0u32..6), 0..5),
        m in 1u32..=6,
    ) {
        let e = terms.iter().fold(ZH::zero_with(m), |acc, &(c, a, s)| {
            acc + Laurent::term(Z::from(c), Mono::new(vec![a], s % m), m)
        });
        let c0 = character_map(0, &e, m).unwrap();
        for (h, c) in c0.terms() {
            prop_assert_eq!(h.tors(), 0);
            let want: Z = e.terms().filter(|(g, _)| g.free() == h.free()).map(|(_, x)| x.clone()).sum();
            prop_assert_eq!(c.clone(), CycloElem::rational(want.into()));
        }
        let total: Z = e.terms().map(|(_, x)| x.clone()).sum();
        let got: Z = c0.terms().map(|(_, c)| c.as_rational().unwrap().to_integer()).sum();
        prop_assert_eq!(got, total);
    }
}

/// Polynomial product over the integers, lowest degree first.
fn pmul(a: &[Z], b: &[Z]) -> Vec<Z> {
    let mut out = vec![Z::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn cyclotomic_products_give_x_to_the_n_minus_one() {
    for n in 1..=24u32 {
        let prod = divisors(n).into_iter().fold(vec![Z::one()], |acc, d| {
            pmul(&acc, &cyclotomic_polynomial(d))
        });
        let mut want = vec![Z::zero(); n as usize + 1];
        want[0] = -Z::one();
        want[n as usize] = Z::one();
        assert_eq!(prod, want, "n = {n}");
    }
}

#[test]
fn euler_phi_counts_coprime_residues() {
    for n in 1..=40u32 {
        let want = (1..=n).filter(|k| k.gcd(&n) == 1).count();
        assert_eq!(euler_phi(n), want);
        assert_eq!(cyclotomic_polynomial(n).len() - 1, want);
    }
}

#[test]
fn zeta_powers_cycle() {
    for d in 1..=9 {
        let z = CycloElem::zeta_pow(d, 1);
        let p = (0..d).fold(CycloElem::one(), |a, _| a * z.clone());
        assert_eq!(p, CycloElem::one());
        let sum = (0..d as i64).fold(CycloElem::zero(), |a, k| a + CycloElem::zeta_pow(d, k));
        assert_eq!(sum.is_zero(), d > 1);
        assert_eq!(z.clone() * z.inverse().unwrap(), CycloElem::one());
    }
}

#[test]
fn one_minus_s_splits_as_zero_and_two() {
    let e = parse_zh("1 - s", 2).unwrap();
    let q = QHElem::from_zh(&e, 2);
    let comps = q.components(2);
    assert!(comps[0].is_zero());
    assert_eq!(comps[1], FG::constant(CycloElem::integer(2)));
    assert!(!q.is_zero());
}

#[test]
fn order_three_character_images() {
    let e = parse_zh("1 + s + s^2", 3).unwrap();
    let c = QHElem::from_zh(&e, 3).components(3);
    assert_eq!(c[0], FG::constant(CycloElem::integer(3)));
    assert!(c[1].is_zero());
}

#[test]
fn parser_rejects_garbage() {
    for bad in ["1 +", "t^", "x", "2**t", "s^1/2"] {
        assert!(parse_zh(bad, 2).is_err(), "{bad}");
    }
}

#[test]
fn integer_units() {
    let a = Z::from(6);
    assert_eq!(Z::units_between(&a, &-a.clone()), vec![-Z::one()]);
    assert!(Z::units_between(&a, &Z::from(3)).is_empty());
    assert_eq!(Z::units_between(&Z::zero(), &Z::zero()), vec![Z::one()]);
}

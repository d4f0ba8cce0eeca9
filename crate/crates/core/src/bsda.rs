//! Generators, the `gr_DA` grading and the matrices `[BSDA]` over `Z` and `Z[H]`.

use num_traits::One;

use crate::diagram::ops::{reinterpret_one_sided, Rebase};
use crate::diagram::{AlphaKind, CPoint, Compiled, HeegaardDiagram};
use crate::exterior::{epsilon_basis, ExtElement, GradedMap, Subset};
use crate::rings::{sign, GroupDescriptor, Ring, Z, ZH};

/// One intersection point per β circle, listed in β order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub points: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BsdaError {
    #[error("generator has {got} entries for {want} β circles")]
    Length { got: usize, want: usize },
    #[error("generator point {0} is not on its β circle")]
    WrongBeta(usize),
    #[error("generator uses α curve {0:?} twice")]
    Repeated(String),
    #[error("generator leaves α circle {0:?} unoccupied")]
    Uncovered(String),
}

/// All parts of the grading of one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingData {
    pub intersection_parity: u8,
    pub inv_sigma_x: usize,
    pub inv_idempotent: usize,
    pub correction: u8,
    pub total: u8,
    /// Occupied outgoing arcs.
    pub o_l: Subset,
    /// Unoccupied outgoing arcs; the output subset `J`.
    pub o_l_bar: Subset,
    /// Occupied incoming arcs; the input subset `I`.
    pub o_r: Subset,
    pub o_r_bar: Subset,
    pub k: usize,
    pub l: usize,
}

/// Generators in lexicographic order of (β order, point order).
pub fn enumerate_generators(h: &HeegaardDiagram) -> Vec<Generator> {
    let c = h.compile();
    enumerate_compiled(&c)
        .into_iter()
        .map(|points| Generator { points })
        .collect()
}

pub(crate) fn enumerate_compiled(c: &Compiled) -> Vec<Vec<usize>> {
    let total = c.n1 + c.a + c.n0;
    let mut used = vec![false; total];
    let mut cur = Vec::with_capacity(c.b);
    let mut out = vec![];
    fn rec(
        c: &Compiled,
        k: usize,
        uncovered: usize,
        used: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if c.b - k < uncovered {
            return;
        }
        if k == c.b {
            if uncovered == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for &p in &c.by_beta[k] {
            let a = c.points[p].alpha;
            if used[a] {
                continue;
            }
            let circle = matches!(c.kind(a), AlphaKind::Circle(_));
            used[a] = true;
            cur.push(p);
            rec(c, k + 1, uncovered - usize::from(circle), used, cur, out);
            cur.pop();
            used[a] = false;
        }
    }
    rec(c, 0, c.a, &mut used, &mut cur, &mut out);
    out
}

fn grading(c: &Compiled, x: &[usize]) -> GradingData {
    let pts: Vec<&CPoint> = x.iter().map(|&p| &c.points[p]).collect();
    let intersection_parity = (pts.iter().filter(|p| p.sign < 0).count() % 2) as u8;
    let mut inv = 0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i].alpha > pts[j].alpha {
                inv += 1;
            }
        }
    }
    let mut o_l = Subset::empty();
    let mut o_r = Subset::empty();
    for p in &pts {
        match c.kind(p.alpha) {
            AlphaKind::Out(j) => o_l = o_l.insert(j),
            AlphaKind::In(i) => o_r = o_r.insert(i),
            AlphaKind::Circle(_) => {}
        }
    }
    let o_l_bar = o_l.complement(c.n1);
    let jc = o_l;
    let inv_idempotent = o_l_bar.inversions_with(jc);
    let k = o_r.len();
    let correction = ((c.a * k + c.n1 * k) % 2) as u8;
    let total =
        ((intersection_parity as usize + inv + inv_idempotent + correction as usize) % 2) as u8;
    GradingData {
        intersection_parity,
        inv_sigma_x: inv,
        inv_idempotent,
        correction,
        total,
        o_l,
        o_l_bar,
        o_r,
        o_r_bar: o_r.complement(c.n0),
        k,
        l: c.n1 - o_l.len(),
    }
}

/// Grading of a generator, after checking it is valid for `h`.
pub fn gr_da(h: &HeegaardDiagram, x: &Generator) -> Result<GradingData, BsdaError> {
    let c = h.compile();
    if x.points.len() != c.b {
        return Err(BsdaError::Length {
            got: x.points.len(),
            want: c.b,
        });
    }
    let mut used = vec![false; c.alpha_ids.len()];
    for (k, &p) in x.points.iter().enumerate() {
        if p >= c.points.len() || c.points[p].beta != k {
            return Err(BsdaError::WrongBeta(p));
        }
        let a = c.points[p].alpha;
        if used[a] {
            return Err(BsdaError::Repeated(c.alpha_ids[a].clone()));
        }
        used[a] = true;
    }
    for ci in 0..c.a {
        if !used[c.n1 + ci] {
            return Err(BsdaError::Uncovered(c.alpha_ids[c.n1 + ci].clone()));
        }
    }
    Ok(grading(&c, &x.points))
}

/// `Σ_x (-1)^{gr(x)} value(x)` assembled by idempotents.
fn assemble<R: Ring>(
    h: &HeegaardDiagram,
    value: impl Fn(&Compiled, &[usize]) -> R,
) -> GradedMap<R> {
    let c = h.compile();
    let mut f = GradedMap::zero(c.n0, c.n1, c.degree());
    for x in enumerate_compiled(&c) {
        let g = grading(&c, &x);
        let v = value(&c, &x) * sign::<R>(g.total as i64);
        f.add_entry(g.o_r, g.o_l_bar, v);
    }
    f
}

/// `[BSDA]` over the integers.
pub fn bsda_z(h: &HeegaardDiagram) -> GradedMap<Z> {
    assemble(h, |_, _| Z::one())
}

/// `[BSDA]` over `Z[H]`, weighting each generator by the product of its point weights.
pub fn bsda_zh(h: &HeegaardDiagram) -> GradedMap<ZH> {
    let m = h.group.torsion_order;
    assemble(h, |c, x| {
        let mut g = crate::rings::Mono::identity();
        for &p in x {
            g = g.mul(&c.points[p].weight, m);
        }
        ZH::term(Z::one(), g, m)
    })
}

/// The one-sided invariant as an element of `Λ*Z^{n0} ⊗ Λ*Z^{n1}`, incoming coordinates first.
///
/// Coefficients are expressed on the original incoming basis, which differs by a sign per
/// arc from the basis of the reversed incoming boundary.
pub fn bsdd_element(h: &HeegaardDiagram) -> ExtElement<Z> {
    let n0 = h.n0();
    let one_sided = reinterpret_one_sided(h);
    let f = bsda_z(&one_sided);
    let mut e = ExtElement::zero(n0 + h.n1());
    for ((_, t), v) in f.entries() {
        let s = t.low(n0);
        e = e.plus_term(*t, v.clone() * sign::<Z>(s.len() as i64));
    }
    e
}

/// `(ε ⊗ id) ∘ (id ⊗ k)` for `k` in `Λ*Z^{n0} ⊗ Λ*Z^{n1}` of homogeneous degree `kdeg`.
pub fn one_sided_composition<R: Ring>(
    k: &ExtElement<R>,
    n0: usize,
    n1: usize,
    kdeg: i64,
) -> GradedMap<R> {
    assert_eq!(k.n, n0 + n1, "element rank must be n0 + n1");
    let mut f = GradedMap::zero(n0, n1, kdeg - n0 as i64);
    for i in Subset::all(n0) {
        let ic = i.complement(n0);
        let eps = epsilon_basis(i, ic, n0);
        for (t, v) in k.terms() {
            if t.low(n0) != ic {
                continue;
            }
            let j = t.high(n0);
            let e = i64::from(eps < 0) + (n0 * j.len()) as i64;
            let s = sign::<R>(e);
            f.add_entry(i, j, v.clone() * s);
        }
    }
    f
}

/// Apply a lift-change rebase to a map over `Z[H]`.
pub fn rebase(f: &GradedMap<ZH>, r: &Rebase, g: &GroupDescriptor) -> GradedMap<ZH> {
    let mut out = GradedMap::zero(f.src, f.tgt, f.degree);
    for (&(i, j), v) in f.entries() {
        let hit = match r {
            Rebase::None => None,
            Rebase::Out(k, w) => j.contains(*k).then_some(w),
            Rebase::In(k, w) => i.contains(*k).then_some(w),
        };
        let v = match hit {
            Some(w) => v.clone() * ZH::monomial(w, g),
            None => v.clone(),
        };
        out.add_entry(i, j, v);
    }
    out
}

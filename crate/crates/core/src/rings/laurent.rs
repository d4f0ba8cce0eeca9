//! Laurent polynomials over `Z^r x Z/m`, i.e. group rings `Z[H]`, `Z[G]` and `F[G]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cyclo::CycloElem;
use super::{Augment, Ring, Z};

/// `H = Z^free_rank x Z/torsion_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub free_rank: usize,
    pub torsion_order: u32,
}

impl Default for GroupDescriptor {
    fn default() -> Self {
        GroupDescriptor {
            free_rank: 0,
            torsion_order: 1,
        }
    }
}

/// Group element: free exponents and torsion exponent.
///
/// Trailing zero free exponents are not significant.
#[derive(Clone, Debug, Default)]
pub struct Mono {
    free: Vec<i64>,
    tors: u32,
}

impl Mono {
    pub fn new(mut free: Vec<i64>, tors: u32) -> Self {
        while free.last() == Some(&0) {
            free.pop();
        }
        Mono { free, tors }
    }

    pub fn identity() -> Self {
        Mono::default()
    }

    /// The `i`-th free generator (0-based) raised to `k`.
    pub fn var(i: usize, k: i64) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = k;
        Mono::new(v, 0)
    }

    pub fn free(&self) -> &[i64] {
        &self.free
    }

    pub fn free_exp(&self, i: usize) -> i64 {
        self.free.get(i).copied().unwrap_or(0)
    }

    pub fn tors(&self) -> u32 {
        self.tors
    }

    pub fn is_identity(&self) -> bool {
        self.free.is_empty() && self.tors == 0
    }

    /// Product in `H` with torsion order `m`.
    pub fn mul(&self, o: &Mono, m: u32) -> Mono {
        let n = self.free.len().max(o.free.len());
        let free = (0..n).map(|i| self.free_exp(i) + o.free_exp(i)).collect();
        Mono::new(free, (self.tors + o.tors) % m.max(1))
    }

    pub fn inverse(&self, m: u32) -> Mono {
        Mono::new(
            self.free.iter().map(|x| -x).collect(),
            (m.max(1) - self.tors % m.max(1)) % m.max(1),
        )
    }

    /// Same element with the torsion part dropped.
    pub fn free_part(&self) -> Mono {
        Mono::new(self.free.clone(), 0)
    }

    fn cmp_free(&self, o: &Mono) -> Ordering {
        let n = self.free.len().max(o.free.len());
        for i in 0..n {
            match self.free_exp(i).cmp(&o.free_exp(i)) {
                Ordering::Equal => {}
                x => return x,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for Mono {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Mono {}
impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.cmp_free(o).then(self.tors.cmp(&o.tors))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        for (i, &e) in self.free.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("t{}", i + 1)),
                _ => parts.push(format!("t{}^{e}", i + 1)),
            }
        }
        match self.tors {
            0 => {}
            1 => parts.push("s".into()),
            k => parts.push(format!("s^{k}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// An element of `H`, stored relative to a group descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HWeight {
    pub free_exponents: Vec<i64>,
    pub torsion_exponent: u32,
}

impl HWeight {
    pub fn identity(g: &GroupDescriptor) -> Self {
        HWeight {
            free_exponents: vec![0; g.free_rank],
            torsion_exponent: 0,
        }
    }

    pub fn from_mono(m: &Mono, g: &GroupDescriptor) -> Self {
        HWeight {
            free_exponents: (0..g.free_rank).map(|i| m.free_exp(i)).collect(),
            torsion_exponent: m.tors() % g.torsion_order.max(1),
        }
    }

    pub fn mono(&self) -> Mono {
        Mono::new(self.free_exponents.clone(), self.torsion_exponent)
    }

    pub fn inverse(&self, g: &GroupDescriptor) -> Self {
        HWeight::from_mono(&self.mono().inverse(g.torsion_order), g)
    }

    pub fn mul(&self, o: &HWeight, g: &GroupDescriptor) -> Self {
        HWeight::from_mono(&self.mono().mul(&o.mono(), g.torsion_order), g)
    }

    pub fn is_identity(&self) -> bool {
        self.mono().is_identity()
    }
}

impl fmt::Display for HWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mono().fmt(f)
    }
}

/// Coefficient rings usable inside [`Laurent`].
pub trait Coef: Ring {
    /// Sign and absolute-value text when the coefficient prints without brackets.
    fn simple_text(&self) -> Option<(bool, String)>;
}

impl Coef for Z {
    fn simple_text(&self) -> Option<(bool, String)> {
        Some((self.is_negative(), self.abs().to_string()))
    }
}

impl Coef for CycloElem {
    fn simple_text(&self) -> Option<(bool, String)> {
        let x = self.as_rational()?;
        let a = x.abs();
        let t = if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        };
        Some((x.is_negative(), t))
    }
}

/// Finite sum of `coef * h` over group elements `h`, with torsion order `m`.
///
/// `m = 1` marks torsion-free elements, which combine with any torsion order.
#[derive(Clone, Debug)]
pub struct Laurent<C> {
    m: u32,
    terms: BTreeMap<Mono, C>,
}

/// `Z[H]`; torsion-free instances are `Z[G]`.
pub type ZH = Laurent<Z>;
/// `Z[G]`, the torsion-free quotient.
pub type ZG = Laurent<Z>;
/// `F[G]` for a cyclotomic field `F`.
pub type FG = Laurent<CycloElem>;

impl<C: Coef> Laurent<C> {
    pub fn zero_with(m: u32) -> Self {
        Laurent {
            m: m.max(1),
            terms: BTreeMap::new(),
        }
    }

    pub fn term(coef: C, h: Mono, m: u32) -> Self {
        let m = m.max(1);
        let h = Mono::new(h.free, h.tors % m);
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(h, coef);
        }
        Laurent { m, terms }
    }

    pub fn monomial(h: &HWeight, g: &GroupDescriptor) -> Self {
        Self::term(C::one(), h.mono(), g.torsion_order)
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Mono::identity(), 1)
    }

    pub fn torsion_order(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, h: &Mono) -> C {
        self.terms.get(h).cloned().unwrap_or_else(C::zero)
    }

    /// Reinterpret with torsion order `m`, which must be compatible.
    pub fn with_order(mut self, m: u32) -> Self {
        let m = m.max(1);
        assert!(
            self.m == 1 || self.m == m,
            "torsion orders {} and {m} differ",
            self.m
        );
        self.m = m;
        self
    }

    fn common(&self, o: &Self) -> u32 {
        match (self.m, o.m) {
            (1, e) | (e, 1) => e,
            (a, b) if a == b => a,
            (a, b) => panic!("mixed group rings with torsion orders {a} and {b}"),
        }
    }

    /// Checked sum that reports mismatched torsion orders.
    pub fn try_add(&self, o: &Self) -> Result<Self, super::RingError> {
        self.check(o)?;
        Ok(self.clone() + o.clone())
    }

    /// Checked product that reports mismatched torsion orders.
    pub fn try_mul(&self, o: &Self) -> Result<Self, super::RingError> {
        self.check(o)?;
        Ok(self.clone() * o.clone())
    }

    fn check(&self, o: &Self) -> Result<(), super::RingError> {
        if self.m != 1 && o.m != 1 && self.m != o.m {
            return Err(super::RingError::Mixed(format!(
                "torsion orders {} and {}",
                self.m, o.m
            )));
        }
        Ok(())
    }

    fn insert(terms: &mut BTreeMap<Mono, C>, h: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&h) {
            Some(x) => {
                let v = x.clone() + c;
                if v.is_zero() {
                    terms.remove(&h);
                } else {
                    *x = v;
                }
            }
            None => {
                terms.insert(h, c);
            }
        }
    }

    /// Multiply by a group element.
    pub fn shift(&self, h: &Mono) -> Self {
        let m = self.m;
        Laurent {
            m,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(h, m), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (k, x) in &self.terms {
            Self::insert(&mut terms, k.clone(), x.clone() * c.clone());
        }
        Laurent { m: self.m, terms }
    }

    pub fn leading(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    pub fn trailing(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next()
    }

    /// Monomial with unit coefficient: `Some((c, h))`.
    pub fn as_unit_monomial(&self) -> Option<(C, Mono)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (h, c) = self.terms.iter().next()?;
        C::one().exact_div(c)?;
        Some((c.clone(), h.clone()))
    }

    /// Apply a coefficient map and a group map.
    pub fn map<D: Coef>(&self, m: u32, f: impl Fn(&Mono, &C) -> (Mono, D)) -> Laurent<D> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let (h, d) = f(k, c);
            Laurent::<D>::insert(&mut terms, h, d);
        }
        Laurent { m: m.max(1), terms }
    }

    fn max_free_len(&self) -> usize {
        self.terms.keys().map(|k| k.free.len()).max().unwrap_or(0)
    }

    /// Per-variable minimum and maximum free exponents.
    fn degree_box(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.max_free_len();
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for k in self.terms.keys() {
            for i in 0..n {
                lo[i] = lo[i].min(k.free_exp(i));
                hi[i] = hi[i].max(k.free_exp(i));
            }
        }
        (lo, hi)
    }
}

impl Laurent<Z> {
    /// Image in `Z[G]` under `s -> 1`.
    pub fn project_free(&self) -> ZG {
        self.map(1, |h, c| (h.free_part(), c.clone()))
    }

    /// Image in `F_d[G]` under `s -> zeta_d`.
    pub fn to_component(&self, d: u32) -> FG {
        self.map(1, |h, c| {
            let z = CycloElem::zeta_pow(d, h.tors() as i64);
            (
                h.free_part(),
                z * CycloElem::rational(num_rational::BigRational::from_integer(c.clone())),
            )
        })
    }
}

impl<C: Coef> PartialEq for Laurent<C> {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms
    }
}

impl<C: Coef> Zero for Laurent<C> {
    fn zero() -> Self {
        Self::zero_with(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coef> One for Laurent<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coef> Add for Laurent<C> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let m = self.common(&o);
        let mut terms = self.terms;
        for (k, c) in o.terms {
            Self::insert(&mut terms, k, c);
        }
        Laurent { m, terms }
    }
}

impl<C: Coef> Neg for Laurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent {
            m: self.m,
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<C: Coef> Sub for Laurent<C> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<C: Coef> Mul for Laurent<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let m = self.common(&o);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                Self::insert(&mut terms, a.mul(b, m), x.clone() * y.clone());
            }
        }
        Laurent { m, terms }
    }
}

impl<C: Coef> Ring for Laurent<C> {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let m = self.common(d);
        if let Some((c, h)) = d.as_unit_monomial() {
            let inv = C::one().exact_div(&c)?;
            return Some(self.shift(&h.inverse(m)).scale(&inv));
        }
        if m > 1 {
            return None;
        }
        // Leading-term division, with quotient exponents confined to the degree box.
        let n = self.max_free_len().max(d.max_free_len());
        let (alo, ahi) = self.degree_box();
        let (dlo, dhi) = d.degree_box();
        let get = |v: &Vec<i64>, i: usize| v.get(i).copied().unwrap_or(0);
        let (dlead, dcoef) = d.leading().map(|(a, b)| (a.clone(), b.clone()))?;
        let mut r = self.clone();
        let mut quo = Self::zero();
        while let Some((rl, rc)) = r.leading().map(|(a, b)| (a.clone(), b.clone())) {
            let qc = rc.exact_div(&dcoef)?;
            let qh = rl.mul(&dlead.inverse(1), 1);
            for i in 0..n {
                let e = qh.free_exp(i);
                if self.is_zero()
                    || e < get(&alo, i) - get(&dlo, i)
                    || e > get(&ahi, i) - get(&dhi, i)
                {
                    return None;
                }
            }
            let t = Self::term(qc, qh, 1);
            r = r - t.clone() * d.clone();
            quo = quo + t;
        }
        Some(quo)
    }

    fn in_domain(&self) -> bool {
        self.m == 1 && self.terms.values().all(|c| c.in_domain())
    }

    fn clearing_unit(row: &[Self]) -> Option<(Self, Self)> {
        let n = row.iter().map(|x| x.max_free_len()).max().unwrap_or(0);
        let mut lo = vec![0i64; n];
        for x in row {
            for k in x.terms.keys() {
                for (i, l) in lo.iter_mut().enumerate() {
                    *l = (*l).min(k.free_exp(i));
                }
            }
        }
        if lo.iter().all(|&l| l == 0) {
            return None;
        }
        let up = Mono::new(lo.iter().map(|l| -l).collect(), 0);
        let down = Mono::new(lo, 0);
        Some((Self::term(C::one(), up, 1), Self::term(C::one(), down, 1)))
    }

    fn units_between(a: &Self, b: &Self) -> Vec<Self> {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return vec![Self::one()],
            (false, false) => {}
            _ => return vec![],
        }
        let m = a.common(b);
        let mut out = vec![];
        for t in 0..m {
            let bt = b.shift(&Mono::new(vec![], t));
            let amin = a.trailing().map(|(h, _)| h.free_part()).expect("nonzero");
            let bmin = bt.trailing().map(|(h, _)| h.free_part()).expect("nonzero");
            let g = amin.mul(&bmin.inverse(1), 1);
            let bg = bt.shift(&g);
            let (h0, a0) = a.trailing().expect("nonzero");
            let b0 = bg.coeff(h0);
            for c in C::units_between(a0, &b0) {
                if bg.scale(&c) == *a {
                    let u = Self::term(c, g.mul(&Mono::new(vec![], t), m), m);
                    if !out.contains(&u) {
                        out.push(u);
                    }
                }
            }
        }
        out
    }
}

impl Augment for Laurent<Z> {
    fn augmentation(&self) -> Z {
        self.terms.values().fold(Z::zero(), |a, c| a + c)
    }
}

impl<C: Coef> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (h, c) in &self.terms {
            let mono = (!h.is_identity()).then(|| h.to_string());
            let (neg, body) = match c.simple_text() {
                Some((neg, abs)) => {
                    let body = match (&mono, abs.as_str()) {
                        (None, _) => abs,
                        (Some(mo), "1") => mo.clone(),
                        (Some(mo), _) => format!("{abs}*{mo}"),
                    };
                    (neg, body)
                }
                None => {
                    let body = match &mono {
                        None => format!("({c})"),
                        Some(mo) => format!("({c})*{mo}"),
                    };
                    (false, body)
                }
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}

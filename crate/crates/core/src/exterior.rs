//! Exterior algebras `Λ*R^n` with subset bases, and graded maps with super signs.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::rings::{sign, Ring};

/// Subset of `{0, .., 63}`, printed 1-based.
///
/// Ordered by cardinality, then lexicographically on the sorted elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Subset(pub u64);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn from_indices(v: impl IntoIterator<Item = usize>) -> Self {
        Subset(v.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        Subset(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, o: Self) -> Self {
        Subset(self.0 | o.0)
    }

    pub fn intersects(self, o: Self) -> bool {
        self.0 & o.0 != 0
    }

    /// Complement inside `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Shift every element up by `k`.
    pub fn shift(self, k: usize) -> Self {
        Subset(self.0 << k)
    }

    /// Elements `>= k`, shifted down by `k`.
    pub fn high(self, k: usize) -> Self {
        Subset(self.0 >> k)
    }

    /// Elements `< k`.
    pub fn low(self, k: usize) -> Self {
        Subset(self.0 & Subset::full(k).0)
    }

    pub fn max_elem(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// `#{(i, j) in self x o : i > j}`.
    pub fn inversions_with(self, o: Self) -> usize {
        self.iter().map(|i| o.low(i).len()).sum()
    }

    /// All subsets of `{0, .., n-1}` in basis order.
    pub fn all(n: usize) -> Vec<Subset> {
        let mut v: Vec<Subset> = (0..1u64 << n).map(Subset).collect();
        v.sort();
        v
    }

    /// All `k`-element subsets of `{0, .., n-1}` in basis order.
    pub fn of_size(n: usize, k: usize) -> Vec<Subset> {
        Subset::all(n)
            .into_iter()
            .filter(|s| s.len() == k)
            .collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, o: &Self) -> Ordering {
        self.len().cmp(&o.len()).then_with(|| {
            let a: Vec<usize> = self.iter().collect();
            let b: Vec<usize> = o.iter().collect();
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// Errors from exterior-algebra constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("rank mismatch: {0} vs {1}")]
    Rank(usize, usize),
    #[error("entry in{i} -> out{j} violates degree {degree}")]
    Inhomogeneous { i: Subset, j: Subset, degree: i64 },
    #[error("subset {0} exceeds ambient rank {1}")]
    OutOfRange(Subset, usize),
    #[error("maps have different shapes")]
    Shape,
}

/// Element of `Λ*R^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtElement<R> {
    pub n: usize,
    terms: BTreeMap<Subset, R>,
}

impl<R: Ring> ExtElement<R> {
    pub fn zero(n: usize) -> Self {
        ExtElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, s: Subset) -> Self {
        Self::zero(n).plus_term(s, R::one())
    }

    /// Degree-one element with the given coordinates.
    pub fn vector(coords: &[R]) -> Self {
        let mut e = Self::zero(coords.len());
        for (i, c) in coords.iter().enumerate() {
            e = e.plus_term(Subset::from_indices([i]), c.clone());
        }
        e
    }

    pub fn plus_term(mut self, s: Subset, c: R) -> Self {
        assert!(
            s.max_elem().is_none_or(|m| m < self.n),
            "subset out of range"
        );
        if c.is_zero() {
            return self;
        }
        let v = match self.terms.remove(&s) {
            Some(x) => x + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(s, v);
        }
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: Subset) -> R {
        self.terms.get(&s).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms, `None` when mixed or zero.
    pub fn degree(&self) -> Option<usize> {
        let ds: BTreeSet<usize> = self.terms.keys().map(|s| s.len()).collect();
        (ds.len() == 1).then(|| *ds.iter().next().unwrap())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "rank mismatch");
        o.terms
            .iter()
            .fold(self.clone(), |acc, (s, c)| acc.plus_term(*s, c.clone()))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.terms.iter().fold(Self::zero(self.n), |acc, (s, x)| {
            acc.plus_term(*s, x.clone() * c.clone())
        })
    }

    /// Same coefficients in a larger ambient rank.
    pub fn embed(&self, n: usize) -> Self {
        assert!(n >= self.n);
        ExtElement {
            n,
            terms: self.terms.clone(),
        }
    }
}

/// `γ_I ∧ γ_J` as a sign and subset, or `None` if they overlap.
pub fn wedge_basis(i: Subset, j: Subset) -> Option<(bool, Subset)> {
    if i.intersects(j) {
        return None;
    }
    Some((i.inversions_with(j) % 2 == 1, i.union(j)))
}

pub fn wedge<R: Ring>(
    x: &ExtElement<R>,
    y: &ExtElement<R>,
) -> Result<ExtElement<R>, ExteriorError> {
    if x.n != y.n {
        return Err(ExteriorError::Rank(x.n, y.n));
    }
    let mut out = ExtElement::zero(x.n);
    for (i, a) in &x.terms {
        for (j, b) in &y.terms {
            if let Some((neg, s)) = wedge_basis(*i, *j) {
                let v = a.clone() * b.clone();
                out = out.plus_term(s, if neg { -v } else { v });
            }
        }
    }
    Ok(out)
}

/// Coefficient of `x ∧ y` on the top basis element of `Λ*R^n0`.
pub fn epsilon<R: Ring>(x: &ExtElement<R>, y: &ExtElement<R>, n0: usize) -> R {
    let w = wedge(&x.embed(n0.max(x.n)), &y.embed(n0.max(y.n))).expect("same rank");
    w.coeff(Subset::full(n0))
}

/// `ε(γ_I, γ_K)` on basis elements.
pub fn epsilon_basis(i: Subset, k: Subset, n0: usize) -> i64 {
    match wedge_basis(i, k) {
        Some((neg, s)) if s == Subset::full(n0) => {
            if neg {
                -1
            } else {
                1
            }
        }
        _ => 0,
    }
}

/// `(-1)^{d |x'|} x ∧ x'[+n]` in rank `n + n'`.
pub fn monoidal_phi<R: Ring>(x: &ExtElement<R>, xp: &ExtElement<R>, d: i64) -> ExtElement<R> {
    let n = x.n;
    let total = n + xp.n;
    let mut out = ExtElement::zero(total);
    for (i, a) in &x.terms {
        for (j, b) in &xp.terms {
            let js = j.shift(n);
            let (neg, s) = wedge_basis(*i, js).expect("disjoint after shift");
            let mut v = a.clone() * b.clone();
            if neg ^ ((d * j.len() as i64).rem_euclid(2) == 1) {
                v = -v;
            }
            out = out.plus_term(s, v);
        }
    }
    out
}

/// Homogeneous map `Λ*R^src -> Λ*R^tgt` with entries indexed by (input subset, output subset).
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap<R> {
    pub src: usize,
    pub tgt: usize,
    pub degree: i64,
    entries: BTreeMap<(Subset, Subset), R>,
}

impl<R: Ring> GradedMap<R> {
    pub fn zero(src: usize, tgt: usize, degree: i64) -> Self {
        GradedMap {
            src,
            tgt,
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut f = Self::zero(n, n, 0);
        for s in Subset::all(n) {
            f.entries.insert((s, s), R::one());
        }
        f
    }

    /// Build from entries, rejecting inhomogeneous or out-of-range ones.
    pub fn from_entries(
        src: usize,
        tgt: usize,
        degree: i64,
        entries: impl IntoIterator<Item = ((Subset, Subset), R)>,
    ) -> Result<Self, ExteriorError> {
        let mut f = Self::zero(src, tgt, degree);
        for ((i, j), v) in entries {
            f.try_add(i, j, v)?;
        }
        Ok(f)
    }

    /// Add `v` to the entry at `(i, j)`.
    pub fn try_add(&mut self, i: Subset, j: Subset, v: R) -> Result<(), ExteriorError> {
        if v.is_zero() {
            return Ok(());
        }
        if i.max_elem().is_some_and(|m| m >= self.src) {
            return Err(ExteriorError::OutOfRange(i, self.src));
        }
        if j.max_elem().is_some_and(|m| m >= self.tgt) {
            return Err(ExteriorError::OutOfRange(j, self.tgt));
        }
        if j.len() as i64 != i.len() as i64 + self.degree {
            return Err(ExteriorError::Inhomogeneous {
                i,
                j,
                degree: self.degree,
            });
        }
        let v = match self.entries.remove(&(i, j)) {
            Some(x) => x + v,
            None => v,
        };
        if !v.is_zero() {
            self.entries.insert((i, j), v);
        }
        Ok(())
    }

    pub fn add_entry(&mut self, i: Subset, j: Subset, v: R) {
        self.try_add(i, j, v).expect("homogeneous entry");
    }

    pub fn entry(&self, i: Subset, j: Subset) -> R {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(R::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Subset, Subset), &R)> {
        self.entries.iter()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map_values<S: Ring>(&self, f: impl Fn(&R) -> S) -> GradedMap<S> {
        let mut g = GradedMap::zero(self.src, self.tgt, self.degree);
        for ((i, j), v) in &self.entries {
            g.add_entry(*i, *j, f(v));
        }
        g
    }

    pub fn scale(&self, u: &R) -> Self {
        self.map_values(|v| v.clone() * u.clone())
    }

    pub fn apply(&self, x: &ExtElement<R>) -> ExtElement<R> {
        assert_eq!(x.n, self.src, "rank mismatch");
        let mut out = ExtElement::zero(self.tgt);
        for ((i, j), v) in &self.entries {
            let c = x.coeff(*i);
            if !c.is_zero() {
                out = out.plus_term(*j, v.clone() * c);
            }
        }
        out
    }

    /// Render as `out{..} <- in{..}: value` lines.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for ((i, j), v) in &self.entries {
            s.push_str(&format!("out{j} <- in{i}: {v}\n"));
        }
        s
    }
}

/// `g ∘ f`.
pub fn compose<R: Ring>(g: &GradedMap<R>, f: &GradedMap<R>) -> Result<GradedMap<R>, ExteriorError> {
    if f.tgt != g.src {
        return Err(ExteriorError::Rank(f.tgt, g.src));
    }
    let mut by_src: BTreeMap<Subset, Vec<(Subset, &R)>> = BTreeMap::new();
    for ((j, k), v) in &g.entries {
        by_src.entry(*j).or_default().push((*k, v));
    }
    let mut h = GradedMap::zero(f.src, g.tgt, f.degree + g.degree);
    for ((i, j), a) in &f.entries {
        if let Some(row) = by_src.get(j) {
            for (k, b) in row {
                h.add_entry(*i, *k, (*b).clone() * a.clone());
            }
        }
    }
    Ok(h)
}

/// `f ⊗ g` with the super sign `(-1)^{deg(f) |I'|}`, on the tensor basis `I ∪ (I' + n)`.
pub fn super_tensor<R: Ring>(f: &GradedMap<R>, g: &GradedMap<R>) -> GradedMap<R> {
    super_tensor_with_parity(f, f.degree, g)
}

/// As [`super_tensor`], with the sign computed from `fdeg` instead of `f.degree`.
pub fn super_tensor_with_parity<R: Ring>(
    f: &GradedMap<R>,
    fdeg: i64,
    g: &GradedMap<R>,
) -> GradedMap<R> {
    let mut h = GradedMap::zero(f.src + g.src, f.tgt + g.tgt, f.degree + g.degree);
    for ((i, j), a) in &f.entries {
        for ((ip, jp), b) in &g.entries {
            let v = a.clone() * b.clone() * sign::<R>(fdeg * ip.len() as i64);
            h.add_entry(i.union(ip.shift(f.src)), j.union(jp.shift(f.tgt)), v);
        }
    }
    h
}

/// The structure map `Φ_{d,d'}` on the tensor basis of `Λ*R^n ⊗ Λ*R^n'`.
///
/// `d` is the shift of the first factor; only it contributes to the sign.
pub fn phi_map<R: Ring>(n: usize, np: usize, d: i64) -> GradedMap<R> {
    let mut f = GradedMap::zero(n + np, n + np, 0);
    for i in Subset::all(n) {
        for ip in Subset::all(np) {
            let x = ExtElement::<R>::basis(n, i);
            let y = ExtElement::<R>::basis(np, ip);
            for (s, c) in monoidal_phi(&x, &y, d).terms() {
                f.add_entry(i.union(ip.shift(n)), *s, c.clone());
            }
        }
    }
    f
}

/// Braiding `v ⊗ w ↦ (-1)^{|v||w|} w ⊗ v` for objects of ranks `n`, `np` and shifts `d`, `dp`.
pub fn braiding<R: Ring>(n: usize, d: i64, np: usize, dp: i64) -> GradedMap<R> {
    let mut f = GradedMap::zero(n + np, np + n, 0);
    for i in Subset::all(n) {
        for ip in Subset::all(np) {
            let e = (i.len() as i64 - d) * (ip.len() as i64 - dp);
            f.add_entry(i.union(ip.shift(n)), ip.union(i.shift(np)), sign::<R>(e));
        }
    }
    f
}

/// The unit `u` with `f = u * g`, when one exists.
pub fn global_unit<R: Ring>(
    f: &GradedMap<R>,
    g: &GradedMap<R>,
) -> Result<Option<R>, ExteriorError> {
    if f.src != g.src || f.tgt != g.tgt {
        return Err(ExteriorError::Shape);
    }
    if f.degree != g.degree && !f.is_zero() && !g.is_zero() {
        return Ok(None);
    }
    let keys: BTreeSet<(Subset, Subset)> =
        f.entries.keys().chain(g.entries.keys()).copied().collect();
    let pairs: Vec<(R, R)> = keys
        .iter()
        .map(|&(i, j)| (f.entry(i, j), g.entry(i, j)))
        .collect();
    if pairs.is_empty() {
        return Ok(Some(R::one()));
    }
    Ok(R::global_unit(&pairs))
}

/// `f = u * g` for one unit `u`.
pub fn eq_up_to_global_unit<R: Ring>(
    f: &GradedMap<R>,
    g: &GradedMap<R>,
) -> Result<bool, ExteriorError> {
    Ok(global_unit(f, g)?.is_some())
}

impl<R: Ring> fmt::Display for GradedMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {} ({} -> {})", self.degree, self.src, self.tgt)?;
        f.write_str(&self.render())
    }
}

impl<R: Ring> fmt::Display for ExtElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("({c})*g{s}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<R: Ring> ExtElement<R> {
    /// Negation of every coefficient.
    pub fn neg(&self) -> Self {
        self.scale(&-R::one())
    }
}

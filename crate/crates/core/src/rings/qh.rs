//! `Q[H] = Q[Z/m][G]`, split as a product of `Q(zeta_d)[G]` over divisors `d | m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{FG, ZH};
use super::{Ring, RingError};

/// Divisors of `m` in ascending order.
pub fn divisors(m: u32) -> Vec<u32> {
    (1..=m.max(1))
        .filter(|d| m.max(1).is_multiple_of(*d))
        .collect()
}

/// Component `i` (ascending divisor order) of the character map `Z[H] -> F_d[G]`.
pub fn character_map(i: usize, e: &ZH, m: u32) -> Result<FG, RingError> {
    let ds = divisors(m);
    let d = *ds.get(i).ok_or(RingError::Component {
        index: i,
        count: ds.len(),
    })?;
    Ok(e.to_component(d))
}

/// Element of `Q[H]`: one component per divisor of `m`.
///
/// `m = 0` marks a scalar that is broadcast to every component.
#[derive(Clone, Debug)]
pub struct QHElem {
    m: u32,
    comps: Vec<FG>,
}

impl QHElem {
    pub fn from_components(m: u32, comps: Vec<FG>) -> Self {
        assert_eq!(comps.len(), divisors(m).len(), "one component per divisor");
        QHElem { m: m.max(1), comps }
    }

    /// Image of a `Z[H]` element under all characters.
    pub fn from_zh(e: &ZH, m: u32) -> Self {
        let comps = divisors(m).into_iter().map(|d| e.to_component(d)).collect();
        QHElem { m: m.max(1), comps }
    }

    fn scalar(c: FG) -> Self {
        QHElem {
            m: 0,
            comps: vec![c],
        }
    }

    pub fn torsion_order(&self) -> u32 {
        self.m
    }

    /// Component list, expanded against torsion order `m`.
    pub fn components(&self, m: u32) -> Vec<FG> {
        if self.m == 0 {
            vec![self.comps[0].clone(); divisors(m).len()]
        } else {
            assert_eq!(self.m, m.max(1), "torsion order mismatch");
            self.comps.clone()
        }
    }

    pub fn component(&self, i: usize) -> FG {
        if self.m == 0 {
            self.comps[0].clone()
        } else {
            self.comps[i].clone()
        }
    }

    fn zip(self, o: Self, f: impl Fn(FG, FG) -> FG) -> Self {
        match (self.m, o.m) {
            (0, 0) => {
                let a = self.comps.into_iter().next().unwrap();
                let b = o.comps.into_iter().next().unwrap();
                QHElem::scalar(f(a, b))
            }
            (a, b) if a != 0 && b != 0 && a != b => {
                panic!("mixed Q[H] rings with torsion orders {a} and {b}")
            }
            _ => {
                let m = self.m.max(o.m);
                let (x, y) = (self.components(m), o.components(m));
                QHElem {
                    m,
                    comps: x.into_iter().zip(y).map(|(a, b)| f(a, b)).collect(),
                }
            }
        }
    }
}

impl PartialEq for QHElem {
    fn eq(&self, o: &Self) -> bool {
        let m = self.m.max(o.m);
        if m == 0 {
            return self.comps == o.comps;
        }
        self.components(m) == o.components(m)
    }
}

impl Zero for QHElem {
    fn zero() -> Self {
        Self::scalar(FG::zero())
    }
    fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }
}

impl One for QHElem {
    fn one() -> Self {
        Self::scalar(FG::one())
    }
}

impl Add for QHElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.zip(o, |a, b| a + b)
    }
}

impl Sub for QHElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.zip(o, |a, b| a - b)
    }
}

impl Mul for QHElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.zip(o, |a, b| a * b)
    }
}

impl Neg for QHElem {
    type Output = Self;
    fn neg(self) -> Self {
        QHElem {
            m: self.m,
            comps: self.comps.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Ring for QHElem {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let m = self.m.max(d.m);
        let n = if m == 0 { 1 } else { divisors(m).len() };
        let comps = (0..n)
            .map(|i| self.component(i).exact_div(&d.component(i)))
            .collect::<Option<Vec<_>>>()?;
        Some(QHElem { m, comps })
    }

    fn in_domain(&self) -> bool {
        self.m <= 1
    }

    fn units_between(a: &Self, b: &Self) -> Vec<Self> {
        Self::global_unit(&[(a.clone(), b.clone())])
            .into_iter()
            .collect()
    }

    /// Units of `Q[H]` act independently on each component.
    fn global_unit(pairs: &[(Self, Self)]) -> Option<Self> {
        let m = pairs.iter().map(|(a, b)| a.m.max(b.m)).max().unwrap_or(0);
        if m == 0 {
            let p: Vec<(FG, FG)> = pairs
                .iter()
                .map(|(a, b)| (a.component(0), b.component(0)))
                .collect();
            return FG::global_unit(&p).map(QHElem::scalar);
        }
        let n = divisors(m).len();
        let comps = (0..n)
            .map(|i| {
                let p: Vec<(FG, FG)> = pairs
                    .iter()
                    .map(|(a, b)| (a.component(i), b.component(i)))
                    .collect();
                FG::global_unit(&p)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(QHElem { m, comps })
    }
}

impl fmt::Display for QHElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "{}", self.comps[0]);
        }
        let parts: Vec<String> = divisors(self.m)
            .iter()
            .zip(&self.comps)
            .map(|(d, c)| format!("[d={d}] {c}"))
            .collect();
        f.write_str(&parts.join(" | "))
    }
}

//! Cyclotomic fields `Q(zeta_d) = Q[x]/Phi_d(x)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Ring, Z};

type QPoly = Vec<BigRational>;

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Vec<Z>>> = RefCell::new(HashMap::new());
}

/// Coefficients (low to high) of the `d`-th cyclotomic polynomial.
///
/// Obtained by dividing `x^d - 1` exactly by `Phi_e` for every proper divisor `e` of `d`.
pub fn cyclotomic_polynomial(d: u32) -> Vec<Z> {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = PHI_CACHE.with(|c| c.borrow().get(&d).cloned()) {
        return p;
    }
    let mut num: Vec<Z> = vec![Z::zero(); d as usize + 1];
    num[0] = -Z::one();
    num[d as usize] = Z::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            num = div_monic_exact(&num, &cyclotomic_polynomial(e));
        }
    }
    PHI_CACHE.with(|c| c.borrow_mut().insert(d, num.clone()));
    num
}

fn div_monic_exact(num: &[Z], den: &[Z]) -> Vec<Z> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![Z::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            r[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

/// Euler's totient.
pub fn euler_phi(d: u32) -> usize {
    (1..=d).filter(|k| num_integer::gcd(*k, d) == 1).count()
}

/// Element of `Q(zeta_d)`, stored in the power basis `1, z, ..., z^(phi(d)-1)`.
///
/// `d = 1` stands for a rational scalar; such values combine with any field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElem {
    d: u32,
    c: QPoly,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut qv = vec![BigRational::zero(); r.len() - db];
    for i in (0..qv.len()).rev() {
        let c = &r[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[i + j] -= t;
        }
        qv[i] = c;
    }
    trim(&mut r);
    trim(&mut qv);
    (qv, r)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut r: QPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero)
                - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    trim(&mut r);
    r
}

impl CycloElem {
    /// The rational scalar `x`.
    pub fn rational(x: BigRational) -> Self {
        CycloElem { d: 1, c: vec![x] }
    }

    pub fn integer(x: i64) -> Self {
        Self::rational(q(x))
    }

    /// `zeta_d^k`.
    pub fn zeta_pow(d: u32, k: i64) -> Self {
        let k = k.rem_euclid(d as i64) as usize;
        let mut p = vec![BigRational::zero(); k + 1];
        p[k] = q(1);
        Self::from_poly(d, p)
    }

    /// Reduce a polynomial in `z` modulo `Phi_d`.
    pub fn from_poly(d: u32, p: QPoly) -> Self {
        let phi: QPoly = cyclotomic_polynomial(d)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let (_, mut r) = poly_divrem(&p, &phi);
        let n = euler_phi(d);
        r.resize(n, BigRational::zero());
        Self::normal(d, r)
    }

    fn normal(d: u32, c: QPoly) -> Self {
        if d > 1 && c.iter().skip(1).all(Zero::is_zero) {
            let x = c.into_iter().next().unwrap_or_else(BigRational::zero);
            return Self::rational(x);
        }
        CycloElem { d, c }
    }

    /// Field index `d`; `1` for rational scalars.
    pub fn field(&self) -> u32 {
        self.d
    }

    /// Power-basis coefficients.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    /// The rational value when the element is a scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.d == 1).then(|| &self.c[0])
    }

    fn common(&self, o: &Self) -> u32 {
        match (self.d, o.d) {
            (1, e) | (e, 1) => e,
            (a, b) if a == b => a,
            (a, b) => panic!("mixed cyclotomic fields Q(z_{a}) and Q(z_{b})"),
        }
    }

    fn lifted(&self, d: u32) -> QPoly {
        let mut c = self.c.clone();
        c.resize(euler_phi(d), BigRational::zero());
        c
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(x) = self.as_rational() {
            return Some(Self::rational(x.recip()));
        }
        let phi: QPoly = cyclotomic_polynomial(self.d)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        // Extended Euclid: track s with s * self == r (mod phi).
        let (mut r0, mut r1) = (phi, {
            let mut a = self.c.clone();
            trim(&mut a);
            a
        });
        let (mut s0, mut s1): (QPoly, QPoly) = (vec![], vec![q(1)]);
        while r1.len() > 1 {
            let (qq, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&qq, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let k = r1[0].recip();
        let s: QPoly = s1.into_iter().map(|x| x * &k).collect();
        Some(Self::from_poly(self.d, s))
    }
}

impl Zero for CycloElem {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CycloElem {
    fn one() -> Self {
        Self::rational(q(1))
    }
}

impl Add for CycloElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let d = self.common(&o);
        let (a, b) = (self.lifted(d), o.lifted(d));
        Self::normal(d, a.into_iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl Sub for CycloElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for CycloElem {
    type Output = Self;
    fn neg(self) -> Self {
        CycloElem {
            d: self.d,
            c: self.c.into_iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for CycloElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = self.common(&o);
        if d == 1 {
            return Self::rational(&self.c[0] * &o.c[0]);
        }
        Self::from_poly(d, poly_mul(&self.c, &o.c))
    }
}

impl Ring for CycloElem {
    fn exact_div(&self, den: &Self) -> Option<Self> {
        den.inverse().map(|i| self.clone() * i)
    }

    fn units_between(a: &Self, b: &Self) -> Vec<Self> {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => vec![Self::one()],
            (false, false) => vec![a.clone() * b.inverse().expect("nonzero")],
            _ => vec![],
        }
    }
}

fn fmt_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let neg = x.is_negative();
            let a = x.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", fmt_rational(&a)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

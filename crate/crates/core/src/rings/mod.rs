//! Exact coefficient rings, matrices, determinants and Smith normal form.

pub mod cyclo;
pub mod integer;
pub mod laurent;
pub mod matrix;
pub mod parse;
pub mod qh;
pub mod snf;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use cyclo::{cyclotomic_polynomial, CycloElem};
pub use laurent::{GroupDescriptor, HWeight, Laurent, Mono, FG, ZG, ZH};
pub use matrix::Matrix;
pub use qh::QHElem;
pub use snf::{smith_normal_form, Snf};

/// Integers.
pub type Z = num_bigint::BigInt;

/// Commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `Some(q)` with `q * d == self` when such `q` exists and is unique.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    /// Whether the element lives in a ring that is an integral domain.
    fn in_domain(&self) -> bool {
        true
    }

    /// A unit `u` (with inverse) such that `u * x` is polynomial for every `x` in `row`.
    fn clearing_unit(_row: &[Self]) -> Option<(Self, Self)> {
        None
    }

    /// All units `u` with `a == u * b`; when both are zero, `[1]`.
    fn units_between(a: &Self, b: &Self) -> Vec<Self>;

    /// One unit `u` with `f == u * g` simultaneously for every pair.
    fn global_unit(pairs: &[(Self, Self)]) -> Option<Self> {
        let Some((a, b)) = pairs.iter().find(|(a, b)| !a.is_zero() || !b.is_zero()) else {
            return Some(Self::one());
        };
        Self::units_between(a, b)
            .into_iter()
            .find(|u| pairs.iter().all(|(f, g)| *f == u.clone() * g.clone()))
    }
}

/// Rings with a map to the integers sending every group element to 1.
pub trait Augment {
    fn augmentation(&self) -> Z;
}

/// `a == u * b` for some unit `u` of the ring.
pub fn eq_up_to_unit<R: Ring>(a: &R, b: &R) -> bool {
    !R::units_between(a, b).is_empty()
}

/// `(-1)^e` in `R`.
pub fn sign<R: Ring>(e: i64) -> R {
    if e.rem_euclid(2) == 0 {
        R::one()
    } else {
        -R::one()
    }
}

/// Error from ring-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("operands belong to different rings ({0})")]
    Mixed(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("component index {index} out of range ({count} components)")]
    Component { index: usize, count: usize },
}

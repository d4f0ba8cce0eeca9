use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Augment, Ring, Z};

impl Ring for Z {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    fn units_between(a: &Self, b: &Self) -> Vec<Self> {
        if a == b {
            vec![Z::one()]
        } else if *a == -b {
            vec![-Z::one()]
        } else {
            vec![]
        }
    }
}

impl Augment for Z {
    fn augmentation(&self) -> Z {
        self.clone()
    }
}

/// Sign of an integer as `-1`, `0` or `1`.
pub fn signum(x: &Z) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

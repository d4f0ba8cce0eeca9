//! Smith normal form over the integers.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Matrix, Z};

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, `d1 | d2 | ...`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: Matrix<Z>,
    pub d: Matrix<Z>,
    pub v: Matrix<Z>,
}

impl Snf {
    /// Diagonal entries, `min(rows, cols)` of them.
    pub fn diagonal(&self) -> Vec<Z> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn row_op(m: &mut Matrix<Z>, dst: usize, src: usize, k: &Z) {
    for j in 0..m.cols() {
        let v = m.get(dst, j).clone() + k * m.get(src, j);
        m.set(dst, j, v);
    }
}

fn col_op(m: &mut Matrix<Z>, dst: usize, src: usize, k: &Z) {
    for i in 0..m.rows() {
        let v = m.get(i, dst).clone() + k * m.get(i, src);
        m.set(i, dst, v);
    }
}

fn swap_cols(m: &mut Matrix<Z>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.get(i, a).clone();
        let y = m.get(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

fn negate_row(m: &mut Matrix<Z>, i: usize) {
    for j in 0..m.cols() {
        let v = -m.get(i, j).clone();
        m.set(i, j, v);
    }
}

/// Smith normal form with transforms.
pub fn smith_normal_form(m: &Matrix<Z>) -> Snf {
    let (r, c) = (m.rows(), m.cols());
    let mut d = m.clone();
    d.row_labels.clear();
    d.col_labels.clear();
    let mut u = Matrix::<Z>::identity(r);
    let mut v = Matrix::<Z>::identity(c);
    let mut t = 0;
    while t < r.min(c) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = d.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                row_op(&mut d, i, t, &-q.clone());
                row_op(&mut u, i, t, &-q);
                if !d.get(i, t).is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                col_op(&mut d, j, t, &-q.clone());
                col_op(&mut v, j, t, &-q);
                if !d.get(t, j).is_zero() {
                    swap_cols(&mut d, t, j);
                    swap_cols(&mut v, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let p = d.get(t, t).clone();
            let bad = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    row_op(&mut d, t, i, &Z::one());
                    row_op(&mut u, t, i, &Z::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }
    Snf { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: Vec<Vec<i64>>, c: usize) -> Matrix<Z> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Z::from).collect())
                .collect(),
            c,
        )
    }

    #[test]
    fn diag_two_three() {
        let s = smith_normal_form(&z(vec![vec![2, 0], vec![0, 3]], 2));
        assert_eq!(s.diagonal(), vec![Z::from(1), Z::from(6)]);
    }

    #[test]
    fn zero_one_by_one() {
        let s = smith_normal_form(&z(vec![vec![0]], 1));
        assert_eq!(s.diagonal(), vec![Z::zero()]);
    }
}

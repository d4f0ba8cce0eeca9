//! Dense matrices over a [`Ring`], exact determinants and ranks.

use std::collections::HashMap;
use std::fmt;

use super::{Ring, RingError};

/// Dense row-major matrix with optional row and column labels.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

/// Largest size for which determinants use the subset expansion over domains.
const EXPANSION_LIMIT: usize = 6;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
            row_labels: vec![],
            col_labels: vec![],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Build from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(rows: Vec<Vec<R>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols,
            data,
            row_labels: vec![],
            col_labels: vec![],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut p = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = p.get(i, j).clone() + a.clone() * o.get(k, j).clone();
                    p.set(i, j, v);
                }
            }
        }
        p
    }

    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Submatrix on the given row and column indices, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
            row_labels: rows
                .iter()
                .filter_map(|&i| self.row_labels.get(i).cloned())
                .collect(),
            col_labels: cols
                .iter()
                .filter_map(|&j| self.col_labels.get(j).cloned())
                .collect(),
        }
    }

    /// Append columns to the right.
    pub fn with_columns(&self, extra: &[Vec<R>]) -> Self {
        let cols = self.cols + extra.len();
        let mut m = Self::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for (k, v) in extra.iter().enumerate() {
                assert_eq!(v.len(), self.rows, "appended column length");
                m.set(i, self.cols + k, v[i].clone());
            }
        }
        m.row_labels = self.row_labels.clone();
        m
    }

    /// Exact determinant; `1` for the empty matrix.
    pub fn det(&self) -> Result<R, RingError> {
        if self.rows != self.cols {
            return Err(RingError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let domain = self.data.iter().all(|x| x.in_domain());
        if self.rows <= EXPANSION_LIMIT || !domain {
            Ok(self.det_expansion())
        } else {
            Ok(self.det_bareiss())
        }
    }

    /// Leibniz expansion, summed over column subsets used by leading rows.
    pub fn det_expansion(&self) -> R {
        let n = self.rows;
        assert_eq!(n, self.cols, "square matrix required");
        if n == 0 {
            return R::one();
        }
        assert!(n < 64, "matrix too large for subset expansion");
        let mut layer: HashMap<u64, R> = HashMap::from([(0u64, R::one())]);
        for k in 0..n {
            let mut next: HashMap<u64, R> = HashMap::new();
            for (mask, val) in &layer {
                for j in 0..n {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    let a = self.get(k, j);
                    if a.is_zero() {
                        continue;
                    }
                    let above = (mask >> (j + 1)).count_ones();
                    let mut t = val.clone() * a.clone();
                    if above % 2 == 1 {
                        t = -t;
                    }
                    let e = next.entry(mask | (1 << j)).or_insert_with(R::zero);
                    *e = e.clone() + t;
                }
            }
            next.retain(|_, v| !v.is_zero());
            layer = next;
        }
        layer.remove(&((1u64 << n) - 1)).unwrap_or_else(R::zero)
    }

    /// Rows cleared to polynomial form; returns the scaled copy and the product of the inverses.
    fn cleared(&self) -> (Self, R) {
        let mut m = self.clone();
        let mut undo = R::one();
        for i in 0..m.rows {
            if let Some((u, uinv)) = R::clearing_unit(m.row(i)) {
                for j in 0..m.cols {
                    let v = m.get(i, j).clone() * u.clone();
                    m.set(i, j, v);
                }
                undo = undo * uinv;
            }
        }
        (m, undo)
    }

    /// Fraction-free Bareiss elimination; requires an integral domain.
    pub fn det_bareiss(&self) -> R {
        let n = self.rows;
        assert_eq!(n, self.cols, "square matrix required");
        if n == 0 {
            return R::one();
        }
        let (mut a, undo) = self.cleared();
        let mut neg = false;
        let mut prev = R::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        neg = !neg;
                    }
                    None => return R::zero(),
                }
            }
            let piv = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = piv.clone() * a.get(i, j).clone()
                        - a.get(i, k).clone() * a.get(k, j).clone();
                    let v = v.exact_div(&prev).expect("Bareiss division is exact");
                    a.set(i, j, v);
                }
                a.set(i, k, R::zero());
            }
            prev = piv;
        }
        let d = a.get(n - 1, n - 1).clone() * undo;
        if neg {
            -d
        } else {
            d
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
        if a < self.row_labels.len() && b < self.row_labels.len() {
            self.row_labels.swap(a, b);
        }
    }

    /// Rank over the fraction field, by fraction-free elimination; requires a domain.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.cleared();
        let mut r = 0;
        let mut prev = R::one();
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let piv = a.get(r, c).clone();
            for i in r + 1..a.rows {
                for j in c + 1..a.cols {
                    let v = piv.clone() * a.get(i, j).clone()
                        - a.get(i, c).clone() * a.get(r, j).clone();
                    let v = v.exact_div(&prev).expect("fraction-free division is exact");
                    a.set(i, j, v);
                }
                a.set(i, c, R::zero());
            }
            prev = piv;
            r += 1;
        }
        r
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

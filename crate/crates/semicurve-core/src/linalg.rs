//! Fraction-free linear algebra over ℤ: rank, echelon forms and primitive
//! nullspace bases.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix. Every input in this crate is integral, so rational
/// arithmetic is replaced by fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows<T: Clone + Into<BigInt>>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, x) in r.iter().enumerate() {
                m.data[i * cols + j] = x.clone().into();
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::from(1);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(self.cols, &rows)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| idx.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        Self::from_rows(idx.len(), &rows)
    }

    /// Appends the rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Bareiss elimination to row echelon form; returns the pivot columns.
    fn bareiss(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prev = BigInt::from(1);
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let piv = self.get(r, c).clone();
            for i in r + 1..self.rows {
                let lead = self.get(i, c).clone();
                for j in c + 1..self.cols {
                    let num = &piv * self.get(i, j) - &lead * self.get(r, j);
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free step left a remainder");
                    self.set(i, j, q);
                }
                self.set(i, c, BigInt::zero());
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().bareiss().len()
    }

    /// Integer reduced echelon form: each pivot column has a single nonzero
    /// entry, rows are primitive. Returns the matrix and its pivot columns.
    pub fn integer_rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.bareiss();
        for (r, &c) in pivots.iter().enumerate().rev() {
            m.make_row_primitive(r);
            for i in 0..r {
                let lead = m.get(i, c).clone();
                if lead.is_zero() {
                    continue;
                }
                let piv = m.get(r, c).clone();
                for j in 0..m.cols {
                    let v = &piv * m.get(i, j) - &lead * m.get(r, j);
                    m.set(i, j, v);
                }
                m.make_row_primitive(i);
            }
        }
        for r in 0..pivots.len() {
            m.make_row_primitive(r);
        }
        m.rows = pivots.len();
        m.data.truncate(pivots.len() * m.cols);
        (m, pivots)
    }

    fn make_row_primitive(&mut self, i: usize) {
        let g = self.row(i).iter().fold(BigInt::zero(), |a, x| a.gcd(x));
        if g.is_zero() {
            return;
        }
        let lead_neg = self.row(i).iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let g = if lead_neg { -g } else { g };
        for j in 0..self.cols {
            let v = self.get(i, j) / &g;
            self.set(i, j, v);
        }
    }

    /// Basis of the right kernel: one vector per free column, primitive and
    /// with first nonzero entry positive.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let (m, pivots) = self.integer_rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let l = pivots
            .iter()
            .enumerate()
            .fold(BigInt::from(1), |acc, (r, &c)| acc.lcm(m.get(r, c)));
        free.iter()
            .map(|&f| {
                let mut v = vec![BigInt::zero(); self.cols];
                v[f] = l.clone();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -(m.get(r, f) * &l) / m.get(r, c);
                }
                primitive(v)
            })
            .collect()
    }
}

/// Divides by the content and makes the first nonzero entry positive.
pub fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    if g.is_zero() {
        return v;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if neg { -g } else { g };
    for x in &mut v {
        *x = &*x / &g;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_rows(rows[0].len(), &rows)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        let j = m(&[&[5, -1, -1], &[1, 2, -2], &[4, -3, 1]]);
        assert_eq!(j.rank(), 2);
        assert_eq!(j.nullspace(), vec![ints(&[4, 9, 11])]);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert!(Matrix::identity(4).nullspace().is_empty());
        assert_eq!(Matrix::zeros(2, 3).nullspace().len(), 3);
    }

    #[test]
    fn nullspace_free_columns() {
        let a = m(&[&[1, 1, 0, 0], &[0, 0, 1, -1]]);
        assert_eq!(a.nullspace(), vec![ints(&[1, -1, 0, 0]), ints(&[0, 0, 1, 1])]);
    }
}

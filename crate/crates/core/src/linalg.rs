//! Dense matrices over a [`FieldSpec`] with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Coeff, FieldSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from rows; every row must have `cols` entries.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Coeff>>) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!("row of length {} in a {cols}-column matrix", row.len())));
            }
            data.extend(row);
        }
        Ok(Matrix { field, rows: r, cols, data })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols);
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    /// `self[r][c] += v`.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Coeff) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(&self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[Coeff] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Coeff> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coeff::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Coeff]) -> Result<Vec<Coeff>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<Coeff> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if !pivot_row[j].is_zero() {
                        let v = f.sub(m.get(i, j), &f.mul(&factor, &pivot_row[j]));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let f = self.field;
        let (e, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(e.get(i, free));
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Coeff]) -> Result<Option<Vec<Coeff>>> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch("right-hand side length".into()));
        }
        let f = self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (e, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = e.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank of the span of a list of vectors of equal length.
pub fn span_rank(field: FieldSpec, len: usize, vectors: &[Vec<Coeff>]) -> usize {
    Matrix::from_rows(field, len, vectors.to_vec()).expect("vectors of equal length").rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_and_nullspace() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).unwrap().iter().all(Coeff::is_zero));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m = [&[1i64, 1][..], &[1, -1]];
        assert_eq!(Matrix::from_i64(FieldSpec::rationals(), &m).rank(), 2);
        assert_eq!(Matrix::from_i64(FieldSpec::prime(2).unwrap(), &m).rank(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[q.from_i64(1), q.from_i64(2)]).unwrap().is_none());
        let x = m.solve(&[q.from_i64(3), q.from_i64(3)]).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), vec![q.from_i64(3), q.from_i64(3)]);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-2i64..3, 12), p in prop_oneof![Just(0u64), Just(3)]) {
            let f = FieldSpec::new(p).unwrap();
            let rows: Vec<Vec<Coeff>> = entries.chunks(4).map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let m = Matrix::from_rows(f, 4, rows).unwrap();
            prop_assert_eq!(m.rank() + m.nullspace().len(), 4);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}

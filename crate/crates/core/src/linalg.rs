//! Dense matrices over an exact field.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<F> {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<F>) -> Matrix<F> {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Matrix<F>> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Matrix<G>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn same_shape(&self, o: &Matrix<F>) {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "matrix shape mismatch"
        );
    }

    pub fn add(&self, o: &Matrix<F>) -> Matrix<F> {
        self.same_shape(o);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Matrix<F>) -> Matrix<F> {
        self.same_shape(o);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Matrix::<F>::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Matrix<F> {
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rank(self.to_rows(), self.cols)
    }

    /// Inverse of a square matrix by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Matrix::<F>::identity(n).to_rows();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            inv.swap(col, p);
            let s = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = a[col][j].mul(&s);
                inv[col][j] = inv[col][j].mul(&s);
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                    inv[r][j] = inv[r][j].sub(&f.mul(&inv[col][j]));
                }
            }
        }
        Matrix::from_rows(inv).ok()
    }
}

/// Rank by fraction-free (Bareiss) elimination.
pub fn rank<F: Field>(mut a: Vec<Vec<F>>, cols: usize) -> usize {
    let rows = a.len();
    let mut prev = F::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let prev_inv = prev.inv().expect("Bareiss pivots are nonzero");
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = v.mul(&prev_inv);
            }
            a[i][c] = F::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Dimension of {v : A v = 0} for an equation matrix with `cols` unknowns.
pub fn nullity<F: Field>(equations: Vec<Vec<F>>, cols: usize) -> usize {
    cols - rank(equations, cols)
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CycElem, RatFn};

    fn m(rows: &[&[i64]]) -> Matrix<CycElem> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycElem::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn products_and_rank() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.rank(), 2);
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(a.mul(&a.inverse().unwrap()), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(a.trace(), CycElem::from_int(5));
    }

    #[test]
    fn symbolic_rank() {
        let q = RatFn::q();
        let one = RatFn::one();
        let a = Matrix::from_rows(vec![
            vec![q.clone(), one.clone()],
            vec![q.pow(2), q.clone()],
        ])
        .unwrap();
        assert_eq!(a.rank(), 1);
        let b = Matrix::from_rows(vec![vec![q.clone(), one.clone()], vec![one, q]]).unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(nullity(b.to_rows(), 2), 0);
    }
}

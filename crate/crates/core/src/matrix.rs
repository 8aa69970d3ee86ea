//! Dense matrices over a generic ring.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scalar::{Embed, Field, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<T> = rows.into_iter().flatten().collect();
        Self::new(r, c, data)
    }

    /// 2×2 from entries in reading order.
    pub fn m2(a: T, b: T, c: T, d: T) -> Self {
        Matrix { rows: 2, cols: 2, data: vec![a, b, c, d] }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, s: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * b.clone();
                }
                data.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    /// Nonnegative power by repeated squaring.
    pub fn pow(&self, e: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut b = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.matmul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.matmul(&b);
            }
        }
        acc
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |a, i| a + self.get(i, i).clone())
    }

    /// Determinant by cofactor expansion (the matrices here are small).
    pub fn det(&self) -> T {
        assert!(self.is_square());
        match self.rows {
            0 => T::one(),
            1 => self.data[0].clone(),
            2 => {
                self.data[0].clone() * self.data[3].clone() - self.data[1].clone() * self.data[2].clone()
            }
            n => {
                let mut acc = T::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let minor = self.minor(0, j).det();
                    let term = a.clone() * minor;
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != r && j != c {
                    data.push(self.get(i, j).clone());
                }
            }
        }
        Matrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, x)| {
                if k / self.cols == k % self.cols {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
    }

    /// The scalar λ when the matrix is λ·I.
    pub fn as_scalar(&self) -> Option<T> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let d = self.data[0].clone();
        for (k, x) in self.data.iter().enumerate() {
            let diag = k / self.cols == k % self.cols;
            if (diag && *x != d) || (!diag && !x.is_zero()) {
                return None;
            }
        }
        Some(d)
    }

    /// Exact test for M = λN with λ ≠ 0, via vanishing 2×2 minors against a
    /// pivot entry.
    pub fn projective_eq(&self, other: &Self) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        let Some(p) = other.data.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let (mp, np) = (&self.data[p], &other.data[p]);
        if mp.is_zero() {
            return false;
        }
        self.data
            .iter()
            .zip(&other.data)
            .all(|(m, n)| m.clone() * np.clone() == mp.clone() * n.clone())
    }

    pub fn is_projective_identity(&self) -> bool {
        self.as_scalar().is_some_and(|s| !s.is_zero())
    }
}

impl<T: Field> Matrix<T> {
    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 2 {
            let det = self.det();
            let di = det.try_inv()?;
            let [a, b, c, d] = [&self.data[0], &self.data[1], &self.data[2], &self.data[3]];
            return Some(Matrix::m2(
                d.clone() * di.clone(),
                -(b.clone() * di.clone()),
                -(c.clone() * di.clone()),
                a.clone() * di,
            ));
        }
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let pinv = a.get(col, col).try_inv()?;
            for j in 0..n {
                let v = a.get(col, j).clone() * pinv.clone();
                a.set(col, j, v);
                let w = inv.get(col, j).clone() * pinv.clone();
                inv.set(col, j, w);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(r, j).clone() - f.clone() * a.get(col, j).clone();
                    a.set(r, j, v);
                    let w = inv.get(r, j).clone() - f.clone() * inv.get(col, j).clone();
                    inv.set(r, j, w);
                }
            }
        }
        Some(inv)
    }

    /// Scale so that the first nonzero entry is 1.
    pub fn projective_normalize(&self) -> Option<Self> {
        let p = self.data.iter().find(|x| !x.is_zero())?;
        let s = p.try_inv()?;
        Some(self.scale(&s))
    }
}

impl<T: Ring + Embed> Matrix<T> {
    pub fn to_complex(&self) -> Matrix<Complex<f64>> {
        self.map(Embed::to_complex)
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Ring> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        self.matmul(&rhs)
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for r in self.data.chunks(self.cols.max(1)) {
            l.entry(&r);
        }
        l.finish()
    }
}

impl<T: Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).collect();
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_rows(vec![
            vec![r(2), r(1), r(0)],
            vec![r(1), r(3), r(1)],
            vec![r(0), r(1), r(4)],
        ]);
        assert_eq!(m.det(), r(18));
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        let s = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)]]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn power_and_projective() {
        let m = Matrix::m2(r(1), r(1), r(0), r(1));
        assert_eq!(m.pow(5), Matrix::m2(r(1), r(5), r(0), r(1)));
        let n = m.scale(&r(-3));
        assert!(m.projective_eq(&n));
        assert!(!m.projective_eq(&m.pow(2)));
        assert!(Matrix::scalar(2, r(7)).is_projective_identity());
        assert_eq!(Matrix::scalar(3, r(7)).as_scalar(), Some(r(7)));
    }
}

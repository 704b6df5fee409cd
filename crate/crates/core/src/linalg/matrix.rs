use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A real column vector of arbitrary (small) length.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T>(Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self(coords)
    }

    pub fn from_f64(coords: &[f64]) -> Self {
        Self(coords.iter().map(|&x| T::lit(x)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![T::zero(); n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = T::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    /// Euclidean dot product.
    pub fn dot(&self, other: &Self) -> T {
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn norm_max(&self) -> T {
        self.0.iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn scale(&self, s: T) -> Self {
        Self(self.0.iter().map(|&x| x * s).collect())
    }

    /// `self + s * other`
    pub fn axpy(&self, s: T, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a + s * b).collect())
    }

    /// Unit Euclidean rescaling.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == T::zero() || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(T::one() / n))
    }

    /// Sine of the angle between the lines spanned by `self` and `other`.
    ///
    /// This is the chordal distance on projective space.
    pub fn projective_distance(&self, other: &Self) -> T {
        let (na, nb) = (self.norm(), other.norm());
        if na == T::zero() || nb == T::zero() {
            return T::one();
        }
        let c = (self.dot(other) / (na * nb)).abs().min(T::one());
        // sin = |a x b| / (|a||b|); computed from the Gram determinant for accuracy near 0.
        let g = (na * na * nb * nb - self.dot(other) * self.dot(other)).max(T::zero());
        let s = g.sqrt() / (na * nb);
        if s.is_finite() {
            s.min(T::one())
        } else {
            (T::one() - c * c).max(T::zero()).sqrt()
        }
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.0[i]
    }
}

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: Self) -> Vector<T> {
        Vector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: Self) -> Vector<T> {
        Vector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

impl<T: Scalar> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        Vector(self.0.iter().map(|&a| -a).collect())
    }
}

impl<T: Scalar> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_rows_f64(rows: &[&[f64]]) -> Self {
        Self::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| T::lit(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<T>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vector::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "columns of unequal length");
            for i in 0..r {
                m[(i, j)] = col[i];
            }
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

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn col(&self, j: usize) -> Vector<T> {
        Vector::new((0..self.rows).map(|i| self[(i, j)]).collect())
    }

    pub fn row(&self, i: usize) -> Vector<T> {
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn columns(&self) -> Vec<Vector<T>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector<T>) -> Vector<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        Vector::new(
            (0..self.rows)
                .map(|i| (0..self.cols).fold(T::zero(), |acc, j| acc + self[(i, j)] * v[j]))
                .collect(),
        )
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    /// Largest absolute entry.
    pub fn norm_max(&self) -> T {
        self.data.iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn frobenius(&self) -> T {
        self.data.iter().fold(T::zero(), |a, &x| a + x * x).sqrt()
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |a, i| a + self[(i, i)])
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    /// Determinant via partial-pivot elimination.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[(i, k)].abs().partial_cmp(&a[(j, k)].abs()).unwrap())
                .unwrap_or(k);
            if a[(p, k)] == T::zero() {
                return T::zero();
            }
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let piv = a[(k, k)];
            det = det * piv;
            for i in k + 1..n {
                let f = a[(i, k)] / piv;
                for j in k..n {
                    let v = a[(k, j)];
                    a[(i, j)] = a[(i, j)] - f * v;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solves `self * X = rhs` by Gauss-Jordan elimination with partial pivoting.
    ///
    /// Returns `None` when a pivot falls below `tol` times the largest entry.
    pub fn solve(&self, rhs: &Self, tol: T) -> Option<Self> {
        assert!(self.is_square());
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let scale = self.norm_max().max(T::min_positive_value());
        let mut a = self.hstack(rhs);
        let w = a.cols;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[(i, k)].abs().partial_cmp(&a[(j, k)].abs()).unwrap())
                .unwrap();
            if a[(p, k)].abs() <= tol * scale {
                return None;
            }
            a.swap_rows(p, k);
            let piv = a[(k, k)];
            for j in 0..w {
                a[(k, j)] = a[(k, j)] / piv;
            }
            for i in 0..n {
                if i != k {
                    let f = a[(i, k)];
                    if f != T::zero() {
                        for j in 0..w {
                            let v = a[(k, j)];
                            a[(i, j)] = a[(i, j)] - f * v;
                        }
                    }
                }
            }
        }
        let mut x = Self::zeros(n, rhs.cols);
        for i in 0..n {
            for j in 0..rhs.cols {
                x[(i, j)] = a[(i, n + j)];
            }
        }
        Some(x)
    }

    pub fn inverse(&self, tol: T) -> Option<Self> {
        self.solve(&Self::identity(self.rows), tol)
    }

    /// Matrix exponential by scaling and squaring with a Taylor core.
    pub fn exp(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let norm = self.norm_max() * T::lit(n as f64);
        let mut squarings = 0u32;
        let mut s = T::one();
        while norm * s > T::half() {
            s = s * T::half();
            squarings += 1;
        }
        let a = self.scale(s);
        let mut term = Self::identity(n);
        let mut sum = Self::identity(n);
        for k in 1..=20 {
            term = (&term * &a).scale(T::one() / T::lit(k as f64));
            sum = &sum + &term;
        }
        for _ in 0..squarings {
            sum = &sum * &sum;
        }
        sum
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut m = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    m[(i, j)] = m[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

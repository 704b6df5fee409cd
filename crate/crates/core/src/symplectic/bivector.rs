use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Index pairs of the basis `e_i∧e_j`, `i < j`, in lexicographic order:
/// `12, 13, 14, 23, 24, 34` (zero-based here).
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Sign of `e_P ∧ e_{P'}` against `e1∧e2∧e3∧e4`, where `P'` is the
/// complementary pair of `P`.
const COMPLEMENT: [(usize, i8); 6] = [(5, 1), (4, -1), (3, 1), (2, 1), (1, -1), (0, 1)];

/// Element of `Λ²ℝ⁴` in the lexicographic basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bivector<T> {
    c: [T; 6],
}

impl<T: Scalar> Bivector<T> {
    pub fn new(c: [T; 6]) -> Self {
        Self { c }
    }

    pub fn from_f64(c: [f64; 6]) -> Self {
        Self {
            c: c.map(T::lit),
        }
    }

    pub fn zero() -> Self {
        Self { c: [T::zero(); 6] }
    }

    /// `e_i ∧ e_j` for `i < j` (zero-based).
    pub fn basis(i: usize, j: usize) -> Self {
        let k = PAIRS
            .iter()
            .position(|&p| p == (i, j))
            .expect("basis bivector needs i < j < 4");
        let mut c = [T::zero(); 6];
        c[k] = T::one();
        Self { c }
    }

    /// `u ∧ v`.
    pub fn wedge(u: &Vector<T>, v: &Vector<T>) -> Self {
        let mut c = [T::zero(); 6];
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            c[k] = u[i] * v[j] - u[j] * v[i];
        }
        Self { c }
    }

    pub fn coeffs(&self) -> &[T; 6] {
        &self.c
    }

    pub fn to_vector(&self) -> Vector<T> {
        Vector::new(self.c.to_vec())
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            c: self.c.map(|x| x * s),
        }
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> T {
        self.c.iter().fold(T::zero(), |a, &x| a + x * x).sqrt()
    }

    /// Coefficient of `b ∧ b'` on `e1∧e2∧e3∧e4`.
    pub fn wedge4(&self, other: &Self) -> T {
        COMPLEMENT
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (k, &(l, s))| {
                let term = self.c[k] * other.c[l];
                if s > 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
    }

    /// Antisymmetric 4×4 coefficient matrix `A` with `A_ij = b_ij`.
    pub fn to_matrix(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(4, 4);
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            m[(i, j)] = self.c[k];
            m[(j, i)] = -self.c[k];
        }
        m
    }

    /// Image under the induced map `Λ²M`.
    pub fn transform(&self, m: &Matrix<T>) -> Self {
        Self::new(second_compound(m).mul_vec(&self.to_vector()).as_slice().try_into().unwrap())
    }
}

/// 6×6 matrix of `Λ²M` in the lexicographic basis.
pub fn second_compound<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let mut out = Matrix::zeros(6, 6);
    for (r, &(i, j)) in PAIRS.iter().enumerate() {
        for (c, &(k, l)) in PAIRS.iter().enumerate() {
            out[(r, c)] = m[(i, k)] * m[(j, l)] - m[(i, l)] * m[(j, k)];
        }
    }
    out
}

impl<T> Index<usize> for Bivector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.c[i]
    }
}

impl<T: Scalar> Add for Bivector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c) {
            *x = *x + y;
        }
        Self { c }
    }
}

impl<T: Scalar> Sub for Bivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for Bivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { c: self.c.map(|x| -x) }
    }
}

impl<T: Scalar> fmt::Display for Bivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["12", "13", "14", "23", "24", "34"];
        let mut first = true;
        for (x, n) in self.c.iter().zip(names) {
            if *x == T::zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{x}·e{n}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge4_of_basis_pairs() {
        let b = Bivector::<f64>::basis;
        assert_eq!(b(0, 1).wedge4(&b(2, 3)), 1.0);
        assert_eq!(b(0, 2).wedge4(&b(1, 3)), -1.0);
        assert_eq!(b(0, 3).wedge4(&b(1, 2)), 1.0);
        assert_eq!(b(0, 2).wedge4(&b(0, 2)), 0.0);
    }

    #[test]
    fn wedge_is_decomposable() {
        let u = Vector::<f64>::from_f64(&[1.0, 2.0, -0.5, 3.0]);
        let v = Vector::from_f64(&[0.3, -1.0, 2.0, 0.7]);
        let b = Bivector::wedge(&u, &v);
        assert!(b.wedge4(&b).abs() < 1e-12);
    }

    #[test]
    fn compound_matches_wedge_of_images() {
        let m = Matrix::<f64>::from_rows_f64(&[
            &[1.0, 2.0, 0.0, -1.0],
            &[0.5, 1.0, 3.0, 0.0],
            &[0.0, -2.0, 1.0, 1.0],
            &[1.0, 0.0, 0.0, 2.0],
        ]);
        let u = Vector::from_f64(&[1.0, 0.0, 2.0, -1.0]);
        let v = Vector::from_f64(&[0.0, 1.0, 1.0, 3.0]);
        let lhs = Bivector::wedge(&u, &v).transform(&m);
        let rhs = Bivector::wedge(&m.mul_vec(&u), &m.mul_vec(&v));
        assert!((lhs - rhs).norm() < 1e-12);
        // Λ⁴ scales by the determinant
        let b = Bivector::wedge(&u, &v);
        let c = Bivector::wedge(&v, &Vector::from_f64(&[1.0, 1.0, 0.0, 0.0]));
        let before = b.wedge4(&c);
        let after = b.transform(&m).wedge4(&c.transform(&m));
        assert!((after - m.determinant() * before).abs() < 1e-10);
    }
}

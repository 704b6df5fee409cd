//! Jacobi-based decompositions for the small matrices used throughout the crate.

use super::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymEigen<T> {
    /// Eigenvalues in ascending order.
    pub values: Vec<T>,
    /// Orthonormal eigenvectors as columns, matching `values`.
    pub vectors: Matrix<T>,
}

/// Cyclic Jacobi eigenvalue iteration. The input is symmetrised first.
pub fn sym_eigen<T: Scalar>(m: &Matrix<T>) -> SymEigen<T> {
    assert!(m.is_square(), "eigendecomposition of non-square matrix");
    let n = m.rows();
    let mut a = m.clone();
    for i in 0..n {
        for j in i + 1..n {
            let s = (a[(i, j)] + a[(j, i)]) * T::half();
            a[(i, j)] = s;
            a[(j, i)] = s;
        }
    }
    let mut v = Matrix::identity(n);
    let eps = T::epsilon();
    for _ in 0..MAX_SWEEPS {
        let off = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .fold(T::zero(), |acc, (i, j)| acc + a[(i, j)] * a[(i, j)]);
        let diag = (0..n).fold(T::zero(), |acc, i| acc + a[(i, i)] * a[(i, i)]);
        if off <= eps * eps * diag || off == T::zero() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (T::two() * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].partial_cmp(&a[(j, j)]).unwrap());
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let cols: Vec<Vector<T>> = order.iter().map(|&i| v.col(i)).collect();
    SymEigen {
        values,
        vectors: Matrix::from_columns(&cols),
    }
}

/// Thin singular value decomposition `A = U Σ Vᵀ` with a complete `V`.
#[derive(Debug, Clone)]
pub struct Svd<T> {
    /// Left singular vectors for the nonzero singular values (columns).
    pub u: Matrix<T>,
    /// Singular values, descending; length = number of columns of `A`.
    pub sigma: Vec<T>,
    /// Right singular vectors (columns), complete orthonormal basis.
    pub v: Matrix<T>,
}

/// One-sided (Hestenes) Jacobi SVD.
///
/// Wide inputs are padded with zero rows so that `V` is always complete.
pub fn svd<T: Scalar>(m: &Matrix<T>) -> Svd<T> {
    let n = m.cols();
    let rows = m.rows().max(n);
    let mut a = Matrix::zeros(rows, n);
    for i in 0..m.rows() {
        for j in 0..n {
            a[(i, j)] = m[(i, j)];
        }
    }
    let mut v = Matrix::identity(n);
    let eps = T::epsilon();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (mut alpha, mut beta, mut gamma) = (T::zero(), T::zero(), T::zero());
                for i in 0..rows {
                    alpha = alpha + a[(i, p)] * a[(i, p)];
                    beta = beta + a[(i, q)] * a[(i, q)];
                    gamma = gamma + a[(i, p)] * a[(i, q)];
                }
                if gamma == T::zero() || gamma.abs() <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (T::two() * gamma);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for i in 0..rows {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = c * aip - s * aiq;
                    a[(i, q)] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = c * vip - s * viq;
                    v[(i, q)] = s * vip + c * viq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let norms: Vec<T> = (0..n).map(|j| a.col(j).norm()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());
    let sigma: Vec<T> = order.iter().map(|&j| norms[j]).collect();
    let v_cols: Vec<Vector<T>> = order.iter().map(|&j| v.col(j)).collect();
    let u_cols: Vec<Vector<T>> = order
        .iter()
        .filter(|&&j| norms[j] > T::zero())
        .map(|&j| {
            let c = a.col(j).scale(T::one() / norms[j]);
            Vector::new(c.as_slice()[..m.rows()].to_vec())
        })
        .collect();
    Svd {
        u: if u_cols.is_empty() {
            Matrix::zeros(m.rows(), 0)
        } else {
            Matrix::from_columns(&u_cols)
        },
        sigma,
        v: Matrix::from_columns(&v_cols),
    }
}

/// Numerical rank: singular values above `tol * max(σ_max, 1)`.
fn rank_threshold<T: Scalar>(sigma: &[T], tol: T) -> T {
    let smax = sigma.first().copied().unwrap_or(T::zero());
    tol * smax.max(T::one())
}

pub fn rank<T: Scalar>(m: &Matrix<T>, tol: T) -> usize {
    let s = svd(m);
    let thr = rank_threshold(&s.sigma, tol);
    s.sigma.iter().filter(|&&x| x > thr).count()
}

/// Orthonormal basis (columns) of the kernel of `m`.
pub fn nullspace<T: Scalar>(m: &Matrix<T>, tol: T) -> Matrix<T> {
    let s = svd(m);
    let thr = rank_threshold(&s.sigma, tol);
    let cols: Vec<Vector<T>> = s
        .sigma
        .iter()
        .enumerate()
        .filter(|(_, &x)| x <= thr)
        .map(|(j, _)| s.v.col(j))
        .collect();
    if cols.is_empty() {
        Matrix::zeros(m.cols(), 0)
    } else {
        Matrix::from_columns(&cols)
    }
}

/// Orthonormal basis (columns) of the column space of `m`.
pub fn column_space<T: Scalar>(m: &Matrix<T>, tol: T) -> Matrix<T> {
    let s = svd(m);
    let thr = rank_threshold(&s.sigma, tol);
    let r = s.sigma.iter().filter(|&&x| x > thr).count();
    if r == 0 {
        return Matrix::zeros(m.rows(), 0);
    }
    Matrix::from_columns(&(0..r).map(|j| s.u.col(j)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_eigen_of_known_matrix() {
        let m = Matrix::<f64>::from_rows_f64(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let e = sym_eigen(&m);
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
        let recon = {
            let d = Matrix::from_diagonal(&e.values);
            &(&e.vectors * &d) * &e.vectors.transpose()
        };
        assert!((&recon - &m).norm_max() < 1e-13);
    }

    #[test]
    fn svd_reconstructs_and_finds_kernel() {
        let m = Matrix::<f64>::from_rows_f64(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]]);
        assert_eq!(rank(&m, 1e-9), 1);
        let k = nullspace(&m, 1e-9);
        assert_eq!(k.cols(), 2);
        for j in 0..2 {
            assert!(m.mul_vec(&k.col(j)).norm() < 1e-12);
        }
        let c = column_space(&m, 1e-9);
        assert_eq!(c.cols(), 1);
    }

    #[test]
    fn eigen_works_in_f32() {
        let m = Matrix::<f32>::from_rows_f64(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let e = sym_eigen(&m);
        assert!((e.values[0] + 1.0).abs() < 1e-6);
        assert!((e.values[1] - 1.0).abs() < 1e-6);
    }
}

//! Small fixed-dimension real linear algebra: bilinear form spaces,
//! subspaces, inertia, intersections and projective normalization.

mod decomp;
mod matrix;

pub use decomp::{column_space, nullspace, rank, svd, sym_eigen, Svd, SymEigen};
pub use matrix::{Matrix, Vector};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerance};

/// Vector of a bilinear form space.
pub type FormVector<T> = Vector<T>;

/// Inertia `(positive, negative, zero)` of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub const fn new(pos: usize, neg: usize, zero: usize) -> Self {
        Self { pos, neg, zero }
    }

    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.zero
    }

    pub fn is_degenerate(&self) -> bool {
        self.zero > 0
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.pos, self.neg, self.zero)
    }
}

/// Linear subspace of `ℝⁿ`, stored with a Euclidean-orthonormal basis.
///
/// Bases are not canonical; equality is mutual containment.
#[derive(Debug, Clone)]
pub struct Subspace<T> {
    basis: Matrix<T>,
}

impl<T: Scalar> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Self {
            basis: Matrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the columns of `m`.
    pub fn from_matrix(m: &Matrix<T>, tol: T) -> Self {
        Self {
            basis: column_space(m, tol),
        }
    }

    /// Span of a list of vectors of a common length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vector<T>], tol: T) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        Ok(Self::from_matrix(&Matrix::from_columns(vectors), tol))
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Orthonormal basis as columns.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector<T>> {
        self.basis.columns()
    }

    /// Orthogonal (Euclidean) projection onto the subspace.
    pub fn project(&self, v: &Vector<T>) -> Vector<T> {
        let coeffs = self.basis.transpose().mul_vec(v);
        self.basis.mul_vec(&coeffs)
    }

    /// Relative residual of `v` off the subspace.
    pub fn residual(&self, v: &Vector<T>) -> T {
        let n = v.norm();
        if n == T::zero() {
            return T::zero();
        }
        (v - &self.project(v)).norm() / n
    }

    pub fn contains(&self, v: &Vector<T>, tol: T) -> bool {
        self.residual(v) <= tol
    }

    pub fn contains_subspace(&self, other: &Self, tol: T) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v, tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dim() == other.dim()
            && self.contains_subspace(other, tol)
            && other.contains_subspace(self, tol)
    }

    /// `a + b`.
    pub fn sum(&self, other: &Self, tol: T) -> Self {
        Self::from_matrix(&self.basis.hstack(&other.basis), tol)
    }
}

/// `a ∩ b`, from the kernel of `[A | -B]`.
pub fn intersect<T: Scalar>(a: &Subspace<T>, b: &Subspace<T>, tol: T) -> Result<Subspace<T>> {
    if a.ambient() != b.ambient() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient(),
            found: b.ambient(),
        });
    }
    let n = a.ambient();
    if a.dim() == 0 || b.dim() == 0 {
        return Ok(Subspace::zero(n));
    }
    let stacked = a.basis().hstack(&b.basis().scale(-T::one()));
    let kernel = nullspace(&stacked, tol);
    if kernel.cols() == 0 {
        return Ok(Subspace::zero(n));
    }
    let mut top = Matrix::zeros(a.dim(), kernel.cols());
    for i in 0..a.dim() {
        for j in 0..kernel.cols() {
            top[(i, j)] = kernel[(i, j)];
        }
    }
    Ok(Subspace::from_matrix(&(a.basis() * &top), tol))
}

/// Canonical representative of `[v]`: the entry of largest absolute value
/// becomes `+1`; ties go to the lowest index.
pub fn projective_normalize<T: Scalar>(v: &Vector<T>) -> Result<Vector<T>> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut best = 0;
    for i in 1..v.len() {
        if v[i].abs() > v[best].abs() {
            best = i;
        }
    }
    if v.is_empty() || v[best] == T::zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.scale(T::one() / v[best]))
}

/// Frame of a subspace adapted to the form: vectors with `q = +1`, `q = -1`
/// and a basis of the radical.
#[derive(Debug, Clone)]
pub struct OrthoFrame<T> {
    pub positive: Vec<Vector<T>>,
    pub negative: Vec<Vector<T>>,
    pub null: Vec<Vector<T>>,
}

impl<T> OrthoFrame<T> {
    pub fn signature(&self) -> Signature {
        Signature::new(self.positive.len(), self.negative.len(), self.null.len())
    }
}

/// Real vector space with a nondegenerate symmetric bilinear form.
#[derive(Debug, Clone)]
pub struct QuadSpace<T> {
    gram: Matrix<T>,
    tol: Tolerance<T>,
}

impl<T: Scalar> QuadSpace<T> {
    pub fn new(gram: Matrix<T>, tol: Tolerance<T>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch {
                expected: gram.rows(),
                found: gram.cols(),
            });
        }
        if !gram.is_finite() {
            return Err(Error::NonFinite);
        }
        let scale = gram.norm_max().max(T::one());
        if (&gram - &gram.transpose()).norm_max() > tol.alg * scale {
            return Err(Error::NotSymmetric);
        }
        if gram.determinant().abs() <= tol.rank * scale {
            return Err(Error::DegenerateForm);
        }
        Ok(Self { gram, tol })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn tol(&self) -> &Tolerance<T> {
        &self.tol
    }

    fn check(&self, v: &Vector<T>) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `vᵀ G w`.
    pub fn inner(&self, v: &Vector<T>, w: &Vector<T>) -> Result<T> {
        self.check(v)?;
        self.check(w)?;
        Ok(v.dot(&self.gram.mul_vec(w)))
    }

    /// Quadratic form `v·v`. Panics on dimension mismatch.
    pub fn q(&self, v: &Vector<T>) -> T {
        self.dot(v, v)
    }

    /// Unchecked form evaluation for internal use on vectors of known length.
    pub(crate) fn dot(&self, v: &Vector<T>, w: &Vector<T>) -> T {
        v.dot(&self.gram.mul_vec(w))
    }

    /// Gram matrix of the form restricted to `sub`, in its stored basis.
    pub fn restricted_gram(&self, sub: &Subspace<T>) -> Matrix<T> {
        let b = sub.basis();
        &(&b.transpose() * &self.gram) * b
    }

    fn zero_threshold(&self) -> T {
        self.tol.rank * self.gram.norm_max().max(T::one())
    }

    /// Inertia of the form restricted to `sub`.
    pub fn signature(&self, sub: &Subspace<T>) -> Signature {
        if sub.dim() == 0 {
            return Signature::new(0, 0, 0);
        }
        let e = sym_eigen(&self.restricted_gram(sub));
        let thr = self.zero_threshold();
        e.values.iter().fold(Signature::new(0, 0, 0), |mut s, &l| {
            if l > thr {
                s.pos += 1;
            } else if l < -thr {
                s.neg += 1;
            } else {
                s.zero += 1;
            }
            s
        })
    }

    pub fn full_signature(&self) -> Signature {
        self.signature(&Subspace::full(self.dim()))
    }

    /// `S^⊥ = { w | v·w = 0 ∀ v ∈ S }`.
    pub fn orthogonal_complement(&self, sub: &Subspace<T>) -> Subspace<T> {
        if sub.dim() == 0 {
            return Subspace::full(self.dim());
        }
        let constraints = &sub.basis().transpose() * &self.gram;
        Subspace {
            basis: nullspace(&constraints, self.tol.rank),
        }
    }

    /// Frame of `sub` diagonalising the restricted form.
    pub fn frame(&self, sub: &Subspace<T>) -> OrthoFrame<T> {
        let mut frame = OrthoFrame {
            positive: Vec::new(),
            negative: Vec::new(),
            null: Vec::new(),
        };
        if sub.dim() == 0 {
            return frame;
        }
        let e = sym_eigen(&self.restricted_gram(sub));
        let thr = self.zero_threshold();
        for (j, &l) in e.values.iter().enumerate() {
            let v = sub.basis().mul_vec(&e.vectors.col(j));
            if l > thr {
                frame.positive.push(v.scale(T::one() / l.sqrt()));
            } else if l < -thr {
                frame.negative.push(v.scale(T::one() / (-l).sqrt()));
            } else {
                frame.null.push(v);
            }
        }
        frame
    }

    /// Whether the form vanishes identically on `sub`.
    pub fn is_totally_isotropic(&self, sub: &Subspace<T>) -> bool {
        self.restricted_gram(sub).norm_max() <= self.tol.alg * self.gram.norm_max().max(T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag3() -> QuadSpace<f64> {
        QuadSpace::new(Matrix::from_diagonal(&[1.0, 1.0, -1.0]), Tolerance::default()).unwrap()
    }

    fn w_space() -> QuadSpace<f64> {
        QuadSpace::new(
            Matrix::from_rows_f64(&[
                &[1.0, 0.0, 0.0, 0.0, 0.0],
                &[0.0, 1.0, 0.0, 0.0, 0.0],
                &[0.0, 0.0, -1.0, 0.0, 0.0],
                &[0.0, 0.0, 0.0, 0.0, -0.5],
                &[0.0, 0.0, 0.0, -0.5, 0.0],
            ]),
            Tolerance::default(),
        )
        .unwrap()
    }

    fn v(x: &[f64]) -> Vector<f64> {
        Vector::from_f64(x)
    }

    #[test]
    fn inner_examples() {
        let s = diag3();
        assert_eq!(s.inner(&v(&[0., 0., 1.]), &v(&[0., 0., 1.])).unwrap(), -1.0);
        assert_eq!(s.inner(&v(&[1., 0., 0.]), &v(&[0., 1., 0.])).unwrap(), 0.0);
        let w = w_space();
        assert_eq!(
            w.inner(&v(&[0., 0., 0., 1., 0.]), &v(&[0., 0., 0., 0., 1.])).unwrap(),
            -0.5
        );
    }

    #[test]
    fn inner_dimension_mismatch() {
        let err = diag3().inner(&v(&[1., 0.]), &v(&[1., 0., 0.])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn degenerate_gram_rejected() {
        let g = Matrix::from_diagonal(&[1.0, 0.0]);
        assert_eq!(QuadSpace::new(g, Tolerance::default()).unwrap_err(), Error::DegenerateForm);
    }

    #[test]
    fn signature_examples() {
        let w = w_space();
        assert_eq!(w.full_signature(), Signature::new(3, 2, 0));
        let null = Subspace::span(5, &[v(&[1., 0., 1., 0., 0.])], 1e-9).unwrap();
        assert_eq!(w.signature(&null), Signature::new(0, 0, 1));
        let mixed =
            Subspace::span(5, &[v(&[1., 0., 0., 0., 0.]), v(&[0., 0., 0., 1., 1.])], 1e-9).unwrap();
        assert_eq!(w.signature(&mixed), Signature::new(1, 1, 0));
    }

    #[test]
    fn complement_examples() {
        let w = w_space();
        assert_eq!(w.orthogonal_complement(&Subspace::full(5)).dim(), 0);
        let s = v(&[1., 2., 0., 1., 0.]);
        let line = Subspace::span(5, std::slice::from_ref(&s), 1e-9).unwrap();
        let perp = w.orthogonal_complement(&line);
        assert_eq!(perp.dim(), 4);
        assert!(w.orthogonal_complement(&perp).approx_eq(&line, 1e-9));
        let n = v(&[1., 0., 1., 0., 0.]);
        let nl = Subspace::span(5, std::slice::from_ref(&n), 1e-9).unwrap();
        assert!(w.orthogonal_complement(&nl).contains(&n, 1e-9));
    }

    #[test]
    fn intersect_examples() {
        let e = |i| Vector::<f64>::basis(4, i);
        let s = Subspace::span(4, &[e(0), e(1)], 1e-9).unwrap();
        assert!(intersect(&s, &s, 1e-9).unwrap().approx_eq(&s, 1e-9));
        let t = Subspace::span(4, &[e(2), e(3)], 1e-9).unwrap();
        assert_eq!(intersect(&s, &t, 1e-9).unwrap().dim(), 0);
        let u = Subspace::span(4, &[e(1), e(2)], 1e-9).unwrap();
        let i = intersect(&s, &u, 1e-9).unwrap();
        assert!(i.approx_eq(&Subspace::span(4, &[e(1)], 1e-9).unwrap(), 1e-9));
    }

    #[test]
    fn projective_normalize_examples() {
        assert_eq!(
            projective_normalize(&v(&[0., 0., 2., 0., 0.])).unwrap(),
            v(&[0., 0., 1., 0., 0.])
        );
        assert_eq!(
            projective_normalize(&v(&[-3., 0., 0., 0., 0.])).unwrap(),
            v(&[1., 0., 0., 0., 0.])
        );
        assert_eq!(
            projective_normalize(&v(&[1., -2., 0., 0., 0.])).unwrap(),
            v(&[-0.5, 1., 0., 0., 0.])
        );
        assert_eq!(projective_normalize(&v(&[0., 0.])).unwrap_err(), Error::ZeroVector);
        // tie: lowest index wins
        assert_eq!(projective_normalize(&v(&[-2., 2.])).unwrap(), v(&[1., -1.]));
    }

    #[test]
    fn works_over_f32() {
        let s = QuadSpace::<f32>::new(Matrix::from_diagonal(&[1.0, 1.0, -1.0]), Tolerance::default())
            .unwrap();
        assert_eq!(s.full_signature(), Signature::new(2, 1, 0));
    }
}

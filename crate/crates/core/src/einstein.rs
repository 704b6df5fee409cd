//! The null-cone model of the 3-dimensional Einstein universe.
//!
//! Points are null lines of `W ≅ ℝ^{3,2}`, written in coordinates
//! `(x, y, z, u, v)` with quadratic form `x² + y² − z² − uv`. With this
//! convention the Minkowski embedding `(x, y, z) ↦ [x, y, z, x²+y²−z², 1]`
//! lands on the null cone and the improper point is `[0, 0, 0, 1, 0]`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{projective_normalize, FormVector, Matrix, QuadSpace, Signature, Subspace};
use crate::scalar::{Scalar, Tolerance};

/// Causal relation of a point to a chosen origin and improper point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalType {
    Timelike,
    Spacelike,
    Lightlike,
}

/// How two Einstein tori meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntersectionKind {
    PhotonPair,
    SpacelikeCircle,
    TimelikeCircle,
    Equal,
}

impl IntersectionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::PhotonPair => "photon-pair",
            Self::SpacelikeCircle => "spacelike",
            Self::TimelikeCircle => "timelike",
            Self::Equal => "equal",
        }
    }
}

/// A point of Ein³: a projectively normalized null vector.
#[derive(Debug, Clone, PartialEq)]
pub struct EinPoint<T> {
    rep: FormVector<T>,
}

impl<T: Scalar> EinPoint<T> {
    pub fn rep(&self) -> &FormVector<T> {
        &self.rep
    }
}

/// A photon: a totally isotropic 2-plane of `W`.
#[derive(Debug, Clone)]
pub struct PhotonW<T> {
    plane: Subspace<T>,
}

impl<T: Scalar> PhotonW<T> {
    pub fn plane(&self) -> &Subspace<T> {
        &self.plane
    }
}

/// Einstein torus `s^⊥` with a unit spacelike, sign-canonical normal `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct EinsteinTorus<T> {
    normal: FormVector<T>,
}

impl<T: Scalar> EinsteinTorus<T> {
    pub fn normal(&self) -> &FormVector<T> {
        &self.normal
    }
}

/// Result of intersecting two Einstein tori.
#[derive(Debug, Clone)]
pub struct IntersectionClass<T> {
    pub kind: IntersectionKind,
    /// The 3-dimensional subspace whose projectivized null cone is the
    /// intersection. Absent for equal tori.
    pub carrier: Option<Subspace<T>>,
    pub eta: T,
}

/// `W` with the fixed Gram convention.
#[derive(Debug, Clone)]
pub struct EinModel<T> {
    space: QuadSpace<T>,
}

impl<T: Scalar> Default for EinModel<T> {
    fn default() -> Self {
        Self::standard(Tolerance::default())
    }
}

impl<T: Scalar> EinModel<T> {
    pub fn standard(tol: Tolerance<T>) -> Self {
        let h = -T::half();
        let (o, z) = (T::one(), T::zero());
        let gram = Matrix::from_rows(&[
            vec![o, z, z, z, z],
            vec![z, o, z, z, z],
            vec![z, z, -o, z, z],
            vec![z, z, z, z, h],
            vec![z, z, z, h, z],
        ]);
        Self {
            space: QuadSpace::new(gram, tol).expect("standard Gram matrix is nondegenerate"),
        }
    }

    pub fn space(&self) -> &QuadSpace<T> {
        &self.space
    }

    pub fn tol(&self) -> &Tolerance<T> {
        self.space.tol()
    }

    pub fn inner(&self, v: &FormVector<T>, w: &FormVector<T>) -> Result<T> {
        self.space.inner(v, w)
    }

    fn check5(&self, v: &FormVector<T>) -> Result<()> {
        if v.len() != 5 {
            return Err(Error::DimensionMismatch {
                expected: 5,
                found: v.len(),
            });
        }
        if !v.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(())
    }

    /// Cosine-like normalized product `v·w / (|v||w|)` with Euclidean norms.
    fn rel_inner(&self, v: &FormVector<T>, w: &FormVector<T>) -> T {
        self.space.dot(v, w) / (v.norm() * w.norm())
    }

    /// Validates `v` as a null vector and returns its point.
    pub fn point(&self, v: &FormVector<T>) -> Result<EinPoint<T>> {
        self.check5(v)?;
        let rep = projective_normalize(v)?;
        let q = self.rel_inner(&rep, &rep);
        if q.abs() > self.tol().alg {
            return Err(Error::NotNull { value: q.as_f64() });
        }
        Ok(EinPoint { rep })
    }

    pub fn minkowski_embed(&self, p: [T; 3]) -> Result<EinPoint<T>> {
        let [x, y, z] = p;
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        self.point(&FormVector::new(vec![x, y, z, x * x + y * y - z * z, T::one()]))
    }

    /// Inverse of the Minkowski embedding; `None` on the light cone of the
    /// improper point.
    pub fn to_minkowski(&self, v: &FormVector<T>) -> Option<[T; 3]> {
        let last = v[4];
        if last.abs() <= self.tol().alg * v.norm() {
            return None;
        }
        Some([v[0] / last, v[1] / last, v[2] / last])
    }

    pub fn improper_point(&self) -> EinPoint<T> {
        EinPoint {
            rep: FormVector::basis(5, 3),
        }
    }

    /// Points on a common photon: their reps are orthogonal.
    pub fn incident(&self, p: &EinPoint<T>, q: &EinPoint<T>) -> bool {
        self.rel_inner(&p.rep, &q.rep).abs() <= self.tol().alg
    }

    /// The degenerate hyperplane `p^⊥`.
    pub fn light_cone(&self, p: &EinPoint<T>) -> Subspace<T> {
        let line = Subspace::span(5, std::slice::from_ref(&p.rep), self.tol().rank).expect("length checked");
        self.space.orthogonal_complement(&line)
    }

    fn span3(&self, p: &EinPoint<T>, p0: &EinPoint<T>, pinf: &EinPoint<T>) -> Result<Subspace<T>> {
        let vs = [p.rep.normalized()?, p0.rep.normalized()?, pinf.rep.normalized()?];
        let s = Subspace::span(5, &vs, self.tol().rank)?;
        if s.dim() < 3 {
            return Err(Error::Degenerate(
                "p coincides with the origin or the improper point".into(),
            ));
        }
        Ok(s)
    }

    /// Causal character of `p` relative to the Minkowski patch with origin
    /// `p0` and improper point `pinf`.
    ///
    /// Points on the light cone of `p0` are lightlike. Points on the light
    /// cone of `pinf` lie outside the patch; they are reported as lightlike as
    /// well since they sit on a photon of the boundary cone.
    pub fn classify_point(
        &self,
        p: &EinPoint<T>,
        p0: &EinPoint<T>,
        pinf: &EinPoint<T>,
    ) -> Result<CausalType> {
        if self.incident(p0, pinf) {
            return Err(Error::Incident("origin and improper point"));
        }
        if self.incident(p, p0) || self.incident(p, pinf) {
            return Ok(CausalType::Lightlike);
        }
        let span = self.span3(p, p0, pinf)?;
        match self.space.signature(&span) {
            Signature { pos: 1, neg: 2, zero: 0 } => Ok(CausalType::Timelike),
            Signature { pos: 2, neg: 1, zero: 0 } => Ok(CausalType::Spacelike),
            s => Err(Error::Degenerate(format!("span has signature {s}"))),
        }
    }

    /// Whether the light cones of `p`, `p0`, `pinf` have no common point.
    pub fn triple_lightcone_empty(
        &self,
        p: &EinPoint<T>,
        p0: &EinPoint<T>,
        pinf: &EinPoint<T>,
    ) -> Result<bool> {
        if self.incident(p0, pinf) {
            return Err(Error::Incident("origin and improper point"));
        }
        let span = self.span3(p, p0, pinf)?;
        let perp = self.space.orthogonal_complement(&span);
        let sig = self.space.signature(&perp);
        Ok(sig.pos == perp.dim() && perp.dim() > 0)
    }

    /// Builds a torus from a spacelike normal, rescaled to unit length with
    /// a canonical sign.
    pub fn torus(&self, s: &FormVector<T>) -> Result<EinsteinTorus<T>> {
        self.check5(s)?;
        let canon = projective_normalize(s)?;
        let q = self.space.q(&canon);
        if q <= self.tol().alg * canon.dot(&canon) {
            return Err(Error::NotSpacelike { value: q.as_f64() });
        }
        Ok(EinsteinTorus {
            normal: canon.scale(T::one() / q.sqrt()),
        })
    }

    /// Torus from a normal already known to have `q = 1`; only the sign is
    /// canonicalized, so no precision is lost renormalizing.
    pub(crate) fn torus_from_unit(&self, s: &FormVector<T>) -> Result<EinsteinTorus<T>> {
        self.check5(s)?;
        let q = self.space.q(s);
        if (q - T::one()).abs() > T::lit(1e-6) * s.dot(s).max(T::one()) {
            return Err(Error::NotSpacelike { value: q.as_f64() });
        }
        let canon = projective_normalize(s)?;
        let sign = if canon.dot(s) < T::zero() { -T::one() } else { T::one() };
        Ok(EinsteinTorus { normal: s.scale(sign) })
    }

    /// The hyperplane `s^⊥` carrying the torus.
    pub fn torus_hyperplane(&self, t: &EinsteinTorus<T>) -> Subspace<T> {
        let line = Subspace::span(5, std::slice::from_ref(&t.normal), self.tol().rank).expect("length checked");
        self.space.orthogonal_complement(&line)
    }

    /// `η = |s₁·s₂|` for unit normals.
    pub fn eta(&self, t1: &EinsteinTorus<T>, t2: &EinsteinTorus<T>) -> T {
        self.space.dot(&t1.normal, &t2.normal).abs()
    }

    pub fn classify_torus_pair(
        &self,
        t1: &EinsteinTorus<T>,
        t2: &EinsteinTorus<T>,
    ) -> IntersectionClass<T> {
        let eta = self.eta(t1, t2);
        if (&t1.normal - &t2.normal).norm() <= self.tol().alg {
            return IntersectionClass {
                kind: IntersectionKind::Equal,
                carrier: None,
                eta,
            };
        }
        let span = Subspace::span(5, &[t1.normal.clone(), t2.normal.clone()], self.tol().rank)
            .expect("length checked");
        let carrier = self.space.orthogonal_complement(&span);
        let kind = if (eta - T::one()).abs() <= self.tol().alg {
            IntersectionKind::PhotonPair
        } else if eta > T::one() {
            IntersectionKind::SpacelikeCircle
        } else {
            IntersectionKind::TimelikeCircle
        };
        IntersectionClass {
            kind,
            carrier: Some(carrier),
            eta,
        }
    }

    /// Splits a degenerate carrier of signature `(1,1,1)` into the two
    /// isotropic planes through its radical.
    pub fn photon_pair_from_degenerate(
        &self,
        carrier: &Subspace<T>,
    ) -> Result<(PhotonW<T>, PhotonW<T>)> {
        let frame = self.space.frame(carrier);
        if frame.signature() != Signature::new(1, 1, 1) {
            return Err(Error::Degenerate(format!(
                "carrier has signature {}, expected (1,1,1)",
                frame.signature()
            )));
        }
        let (a, b, r) = (&frame.positive[0], &frame.negative[0], &frame.null[0]);
        let tol = self.tol().rank;
        let first = Subspace::span(5, &[a + b, r.clone()], tol)?;
        let second = Subspace::span(5, &[a - b, r.clone()], tol)?;
        Ok((self.photon(first)?, self.photon(second)?))
    }

    /// Validates an isotropic 2-plane.
    pub fn photon(&self, plane: Subspace<T>) -> Result<PhotonW<T>> {
        if plane.dim() != 2 {
            return Err(Error::RankDeficient {
                expected: 2,
                found: plane.dim(),
            });
        }
        if !self.space.is_totally_isotropic(&plane) {
            return Err(Error::NotIsotropic);
        }
        Ok(PhotonW { plane })
    }

    /// Orthogonal reflection `v ↦ v − 2 (v·s)/(s·s) s`.
    pub fn reflect(&self, s: &FormVector<T>, v: &FormVector<T>) -> Result<FormVector<T>> {
        self.check5(s)?;
        self.check5(v)?;
        let ss = self.space.q(s);
        if ss.abs() <= self.tol().alg * s.dot(s) {
            return Err(Error::NullVector);
        }
        Ok(v.axpy(-T::two() * self.space.dot(v, s) / ss, s))
    }

    /// Matrix of `R_s ∘ R_s'` restricted to `span{s, s'}` in the basis
    /// `(s, s')`, for unit spacelike `s`, `s'`.
    pub fn composition_matrix(&self, s: &FormVector<T>, s2: &FormVector<T>) -> Matrix<T> {
        let c = self.space.dot(s, s2);
        let two = T::two();
        Matrix::from_rows(&[
            vec![two * two * c * c - T::one(), two * c],
            vec![-two * c, -T::one()],
        ])
    }

    /// The two non-unit eigenvalues of `R_s ∘ R_s'`:
    /// `2c² − 1 ± 2c √(c² − 1)` with `c = s·s'`.
    pub fn composition_eigenvalues(
        &self,
        s: &FormVector<T>,
        s2: &FormVector<T>,
    ) -> [Complex<T>; 2] {
        let c = self.space.dot(s, s2);
        let base = T::two() * c * c - T::one();
        let disc = c * c - T::one();
        if disc >= T::zero() {
            let d = T::two() * c * disc.sqrt();
            [Complex::new(base + d, T::zero()), Complex::new(base - d, T::zero())]
        } else {
            let d = T::two() * c * (-disc).sqrt();
            [Complex::new(base, d), Complex::new(base, -d)]
        }
    }
}

//! Anti-de Sitter crooked planes.
//!
//! `V = V₀ ⊕ V₀` with `ω = ω₀ ⊕ −ω₀` and `ω₀(x, y) = xᵀJy`,
//! `J = [[0, 1], [−1, 0]]`. Graphs of elements of `SL(V₀)` are Lagrangian,
//! and the involution `I ⊕ −I` fixes exactly the complement of their
//! image. Coordinates on `V` are `(x1, x2, y1, y2)`.

use crate::crooked::{CrookedSurface, LightlikeQuadrilateral};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Scalar, Tolerance};
use crate::symplectic::{Plane2, SympSpace};

fn j<T: Scalar>() -> Matrix<T> {
    Matrix::from_rows(&[vec![T::zero(), T::one()], vec![-T::one(), T::zero()]])
}

/// `ω₀(x, y) = x₁y₂ − x₂y₁`.
pub fn omega0<T: Scalar>(x: &Vector<T>, y: &Vector<T>) -> T {
    x[0] * y[1] - x[1] * y[0]
}

fn check2<T: Scalar>(x: &Vector<T>) -> Result<()> {
    if x.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: x.len(),
        });
    }
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// An element of `SL(2, ℝ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdsPoint<T> {
    m: Matrix<T>,
}

impl<T: Scalar> AdsPoint<T> {
    pub fn new(m: Matrix<T>, tol: T) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: if m.rows() != 2 { m.rows() } else { m.cols() },
            });
        }
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let det = m.determinant();
        if (det - T::one()).abs() > tol {
            return Err(Error::NotSpecialLinear { det: det.as_f64() });
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self {
            m: Matrix::identity(2),
        }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.m
    }

    /// Exact inverse `[[d, −b], [−c, a]]`.
    pub fn inverse(&self) -> Self {
        let m = &self.m;
        Self {
            m: Matrix::from_rows(&[vec![m[(1, 1)], -m[(0, 1)]], vec![-m[(1, 0)], m[(0, 0)]]]),
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            m: &self.m * &other.m,
        }
    }
}

/// Crooked plane based at `base`, defined by the directions `a`, `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdsCrookedPlane<T> {
    pub base: AdsPoint<T>,
    pub a: Vector<T>,
    pub b: Vector<T>,
}

impl<T: Scalar> AdsCrookedPlane<T> {
    pub fn new(base: AdsPoint<T>, a: Vector<T>, b: Vector<T>, tol: T) -> Result<Self> {
        check2(&a)?;
        check2(&b)?;
        if omega0(&a, &b).abs() <= tol * a.norm() * b.norm() {
            return Err(Error::Degenerate("directions a and b are parallel".into()));
        }
        Ok(Self { base, a, b })
    }

    /// The same plane translated on the left by `g`.
    pub fn translate(&self, g: &AdsPoint<T>) -> Self {
        Self {
            base: g.compose(&self.base),
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }
}

/// Traceless 2×2 matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2Vector<T> {
    m: Matrix<T>,
}

impl<T: Scalar> Sl2Vector<T> {
    pub fn new(m: Matrix<T>, tol: T) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: m.rows(),
            });
        }
        if m.trace().abs() > tol * m.norm_max().max(T::one()) {
            return Err(Error::Degenerate("matrix is not traceless".into()));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.m
    }

    /// `A X A⁻¹`.
    pub fn conjugate(&self, a: &AdsPoint<T>) -> Self {
        Self {
            m: &(a.matrix() * &self.m) * a.inverse().matrix(),
        }
    }

    /// Upper half of the null cone: `X₂₁ − X₁₂ > 0`.
    pub fn is_upper(&self) -> bool {
        self.m[(1, 0)] - self.m[(0, 1)] > T::zero()
    }
}

/// Horocycle `{X ∈ H² | K(X, ξ) = −r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Horocycle<T> {
    pub xi: Sl2Vector<T>,
    pub r: T,
}

/// The four reduced inequalities `ω₀(x', c)² > ω₀(f x', c)²`, normalized by
/// `|x'|²|c|²`; positive means satisfied.
#[derive(Debug, Clone)]
pub struct AdsReport<T> {
    /// Order: `(a', b), (a', a), (b', b), (b', a)`.
    pub margins: [T; 4],
    pub disjoint: bool,
}

/// The DGK comparison `K(ξ, fξ'f⁻¹) − K(ξ, ξ')` for the four endpoint pairs.
#[derive(Debug, Clone)]
pub struct DgkReport<T> {
    /// Same order as [`AdsReport::margins`].
    pub margins: [T; 4],
    pub disjoint: bool,
    /// Set when two endpoints coincide.
    pub coincident: Option<String>,
}

/// `SL(V₀)` inside the Lagrangian Grassmannian of `V₀ ⊕ V₀`.
#[derive(Debug, Clone)]
pub struct AdsModel<T> {
    space: SympSpace<T>,
}

impl<T: Scalar> Default for AdsModel<T> {
    fn default() -> Self {
        Self::new(Tolerance::default())
    }
}

impl<T: Scalar> AdsModel<T> {
    pub fn new(tol: Tolerance<T>) -> Self {
        let jm = j::<T>();
        let omega = jm.direct_sum(&jm.scale(-T::one()));
        Self {
            space: SympSpace::new(omega, tol).expect("J ⊕ −J is nondegenerate"),
        }
    }

    pub fn space(&self) -> &SympSpace<T> {
        &self.space
    }

    pub fn tol(&self) -> &Tolerance<T> {
        self.space.tol()
    }

    pub fn point(&self, m: Matrix<T>) -> Result<AdsPoint<T>> {
        AdsPoint::new(m, self.tol().alg)
    }

    pub fn crooked_plane(&self, base: AdsPoint<T>, a: Vector<T>, b: Vector<T>) -> Result<AdsCrookedPlane<T>> {
        AdsCrookedPlane::new(base, a, b, self.tol().alg)
    }

    /// `graph(f) = [I; f]`.
    pub fn embed(&self, f: &AdsPoint<T>) -> Result<Plane2<T>> {
        let m = f.matrix();
        self.space.plane(
            &Vector::new(vec![T::one(), T::zero(), m[(0, 0)], m[(1, 0)]]),
            &Vector::new(vec![T::zero(), T::one(), m[(0, 1)], m[(1, 1)]]),
        )
    }

    /// `A ⊕ B`, acting by `graph(f) ↦ graph(B f A⁻¹)`.
    pub fn block(&self, a: &AdsPoint<T>, b: &AdsPoint<T>) -> Matrix<T> {
        a.matrix().direct_sum(b.matrix())
    }

    /// `I ⊕ −I` applied to a plane.
    pub fn involution(&self, l: &Plane2<T>) -> Result<Plane2<T>> {
        let d = Matrix::from_diagonal(&[T::one(), T::one(), -T::one(), -T::one()]);
        self.space.transform_plane(&d, l)
    }

    /// The quadrilateral of an AdS crooked plane, normalized so that
    /// `ω(u₊,v₋) = ω(u₋,v₊) = 1`. With `w = ω₀(a,b) > 0` (swapping `a`, `b`
    /// otherwise) and base `I`:
    ///
    /// ```text
    /// u₊ = (a; a)/2w   v₊ = (a; −a)   u₋ = −(b; b)/2w   v₋ = (b; −b)
    /// ```
    ///
    /// so that `P_∞ = [I; I]`, `P₀ = [I; −I]` and the wing vertices `P_±`
    /// are fixed by the involution. A general base `f` applies `I ⊕ f`.
    pub fn ads_quadrilateral(&self, p: &AdsCrookedPlane<T>) -> Result<LightlikeQuadrilateral<T>> {
        let (mut a, mut b) = (p.a.clone(), p.b.clone());
        let mut w = omega0(&a, &b);
        if w.abs() <= self.tol().alg * a.norm() * b.norm() {
            return Err(Error::Degenerate("directions a and b are parallel".into()));
        }
        if w < T::zero() {
            std::mem::swap(&mut a, &mut b);
            w = -w;
        }
        let f = p.base.matrix();
        let stack = |x: &Vector<T>, y: &Vector<T>| {
            let fy = f.mul_vec(y);
            Vector::new(vec![x[0], x[1], fy[0], fy[1]])
        };
        let k = T::one() / (T::two() * w);
        let quad = LightlikeQuadrilateral {
            u_plus: stack(&a, &a).scale(k),
            u_minus: stack(&b, &b).scale(-k),
            v_plus: stack(&a, &(-&a)),
            v_minus: stack(&b, &(-&b)),
        };
        self.space.validate_quad(&quad)?;
        Ok(quad)
    }

    pub fn crooked_surface(&self, p: &AdsCrookedPlane<T>) -> Result<CrookedSurface<T>> {
        CrookedSurface::new(&self.space, self.ads_quadrilateral(p)?)
    }

    /// `(f, a, b, a', b')` with the first plane moved to the identity.
    fn reduce<'a>(
        &self,
        p1: &'a AdsCrookedPlane<T>,
        p2: &'a AdsCrookedPlane<T>,
    ) -> (AdsPoint<T>, [&'a Vector<T>; 2], [&'a Vector<T>; 2]) {
        let f = p1.base.inverse().compose(&p2.base);
        (f, [&p1.a, &p1.b], [&p2.a, &p2.b])
    }

    /// The four reduced inequalities.
    pub fn ads_report(&self, p1: &AdsCrookedPlane<T>, p2: &AdsCrookedPlane<T>) -> AdsReport<T> {
        let (f, [a, b], [a2, b2]) = self.reduce(p1, p2);
        let mut margins = [T::zero(); 4];
        for (k, (x, c)) in [(a2, b), (a2, a), (b2, b), (b2, a)].into_iter().enumerate() {
            let fx = f.matrix().mul_vec(x);
            let lhs = omega0(x, c);
            let rhs = omega0(&fx, c);
            margins[k] = (lhs * lhs - rhs * rhs) / (x.dot(x) * c.dot(c));
        }
        let alg = self.tol().alg;
        AdsReport {
            margins,
            disjoint: margins.iter().all(|&m| m > alg),
        }
    }

    pub fn ads_disjoint(&self, p1: &AdsCrookedPlane<T>, p2: &AdsCrookedPlane<T>) -> bool {
        self.ads_report(p1, p2).disjoint
    }

    /// `a ↦ −a aᵀ J`.
    pub fn boundary_lift(&self, a: &Vector<T>) -> Result<Sl2Vector<T>> {
        check2(a)?;
        if a.norm() == T::zero() {
            return Err(Error::ZeroVector);
        }
        let mut aat = Matrix::zeros(2, 2);
        for i in 0..2 {
            for k in 0..2 {
                aat[(i, k)] = a[i] * a[k];
            }
        }
        Ok(Sl2Vector {
            m: (&aat * &j()).scale(-T::one()),
        })
    }

    /// `K(X, Y) = Tr(XY)`.
    pub fn killing(&self, x: &Sl2Vector<T>, y: &Sl2Vector<T>) -> T {
        (x.matrix() * y.matrix()).trace()
    }

    pub fn horocycle(&self, xi: Sl2Vector<T>, r: T) -> Result<Horocycle<T>> {
        if !(r.is_finite() && r > T::zero()) {
            return Err(Error::Horocycle("radius must be positive"));
        }
        let k = self.killing(&xi, &xi);
        if k.abs() > self.tol().alg * xi.matrix().norm_max().powi(2) {
            return Err(Error::Horocycle("center is not on the null cone"));
        }
        if !xi.is_upper() {
            return Err(Error::Horocycle("center is not on the upper null cone"));
        }
        Ok(Horocycle { xi, r })
    }

    /// `d = arccosh(−½ (K/(2rr') + 2rr'/K))` with `K = K(ξ, ξ')`.
    ///
    /// With `x = −K/(2rr')` the argument is `cosh(ln x)`, so `d = |ln x|`;
    /// this form is exact at `x = 1` and has no cancellation near it.
    pub fn horocycle_distance(&self, h1: &Horocycle<T>, h2: &Horocycle<T>) -> Result<T> {
        let k = self.killing(&h1.xi, &h2.xi);
        let scale = h1.xi.matrix().norm_max() * h2.xi.matrix().norm_max();
        if k >= -self.tol().alg * scale {
            return Err(Error::Horocycle("K(ξ, ξ') must be negative"));
        }
        let x = -k / (T::two() * h1.r * h2.r);
        Ok(x.ln().abs())
    }

    /// DGK comparison via `K(ξ, fξ'f⁻¹) > K(ξ, ξ')` for all endpoints
    /// `ξ ∈ {a, b}`, `ξ' ∈ {a', b'}`.
    pub fn dgk_report(&self, p1: &AdsCrookedPlane<T>, p2: &AdsCrookedPlane<T>) -> Result<DgkReport<T>> {
        let (f, [a, b], [a2, b2]) = self.reduce(p1, p2);
        let alg = self.tol().alg;
        let mut margins = [T::zero(); 4];
        let mut coincident = None;
        let names = [("a'", "b"), ("a'", "a"), ("b'", "b"), ("b'", "a")];
        for (k, (x, c)) in [(a2, b), (a2, a), (b2, b), (b2, a)].into_iter().enumerate() {
            let xi = self.boundary_lift(c)?;
            let xi2 = self.boundary_lift(x)?;
            let scale = x.dot(x) * c.dot(c);
            let base = self.killing(&xi, &xi2);
            if base.abs() <= alg * scale && coincident.is_none() {
                coincident = Some(format!(
                    "endpoints {} and {} coincide",
                    names[k].0, names[k].1
                ));
            }
            margins[k] = (self.killing(&xi, &xi2.conjugate(&f)) - base) / scale;
        }
        let disjoint = coincident.is_none() && margins.iter().all(|&m| m > alg);
        Ok(DgkReport {
            margins,
            disjoint,
            coincident,
        })
    }

    pub fn dgk_criterion(&self, p1: &AdsCrookedPlane<T>, p2: &AdsCrookedPlane<T>) -> Result<bool> {
        Ok(self.dgk_report(p1, p2)?.disjoint)
    }
}

//! Lightlike quadrilaterals and crooked surfaces in the symplectic model.
//!
//! A quadrilateral is a basis `u₊, u₋, v₊, v₋` of `V` with
//! `ω(u₊,v₋) = ω(u₋,v₊) = 1` and all other mutual products zero. Its
//! crooked surface is the union of the wings
//!
//! ```text
//! W₊ = { L ∋ t·u₊ + s·v₊ | ts ≥ 0 },   W₋ = { L ∋ t·u₋ + s·v₋ | ts ≤ 0 }
//! ```
//!
//! and the open stem: Lagrangians meeting both `S₁ = ⟨u₊, v₋⟩` and
//! `S₂ = ⟨u₋, v₊⟩` that are timelike with respect to `P₀ = ⟨v₊, v₋⟩` and
//! `P_∞ = ⟨u₊, u₋⟩`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{svd, Matrix, Vector};
use crate::scalar::Scalar;
use crate::symplectic::{Plane2, SympSpace};

/// Which wing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WingSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceRegion {
    WingPlus,
    WingMinus,
    Stem,
}

impl SurfaceRegion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::WingPlus => "wing+",
            Self::WingMinus => "wing-",
            Self::Stem => "stem",
        }
    }
}

impl fmt::Display for SurfaceRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LightlikeQuadrilateral<T> {
    pub u_plus: Vector<T>,
    pub u_minus: Vector<T>,
    pub v_plus: Vector<T>,
    pub v_minus: Vector<T>,
}

impl<T: Scalar> LightlikeQuadrilateral<T> {
    /// `(e1, e2, e4, e3)`, valid for the standard form.
    pub fn canonical() -> Self {
        let e = |i| Vector::basis(4, i);
        Self {
            u_plus: e(0),
            u_minus: e(1),
            v_plus: e(3),
            v_minus: e(2),
        }
    }

    /// Image under a linear map.
    pub fn transform(&self, g: &Matrix<T>) -> Self {
        Self {
            u_plus: g.mul_vec(&self.u_plus),
            u_minus: g.mul_vec(&self.u_minus),
            v_plus: g.mul_vec(&self.v_plus),
            v_minus: g.mul_vec(&self.v_minus),
        }
    }

    /// Edge vectors in the order `u₊, u₋, v₊, v₋`.
    pub fn edges(&self) -> [&Vector<T>; 4] {
        [&self.u_plus, &self.u_minus, &self.v_plus, &self.v_minus]
    }
}

impl<T: Scalar> SympSpace<T> {
    /// Validates the six products of a quadrilateral.
    pub fn quad_new(
        &self,
        u_plus: Vector<T>,
        u_minus: Vector<T>,
        v_plus: Vector<T>,
        v_minus: Vector<T>,
    ) -> Result<LightlikeQuadrilateral<T>> {
        for x in [&u_plus, &u_minus, &v_plus, &v_minus] {
            if x.len() != 4 {
                return Err(Error::DimensionMismatch {
                    expected: 4,
                    found: x.len(),
                });
            }
            if !x.is_finite() {
                return Err(Error::NonFinite);
            }
        }
        let q = LightlikeQuadrilateral {
            u_plus,
            u_minus,
            v_plus,
            v_minus,
        };
        self.validate_quad(&q)?;
        Ok(q)
    }

    pub fn validate_quad(&self, q: &LightlikeQuadrilateral<T>) -> Result<()> {
        let w = |a: &Vector<T>, b: &Vector<T>| self.omega(a, b);
        let checks = [
            ("ω(u+,v-) = 1", w(&q.u_plus, &q.v_minus) - T::one()),
            ("ω(u-,v+) = 1", w(&q.u_minus, &q.v_plus) - T::one()),
            ("ω(u+,u-) = 0", w(&q.u_plus, &q.u_minus)),
            ("ω(u+,v+) = 0", w(&q.u_plus, &q.v_plus)),
            ("ω(u-,v-) = 0", w(&q.u_minus, &q.v_minus)),
            ("ω(v+,v-) = 0", w(&q.v_plus, &q.v_minus)),
        ];
        let max = checks.iter().fold(T::zero(), |m, (_, d)| m.max(d.abs()));
        if max > self.tol().alg {
            let failed: Vec<String> = checks
                .iter()
                .filter(|(_, d)| d.abs() > self.tol().alg)
                .map(|(name, d)| format!("{name} off by {:e}", d.as_f64()))
                .collect();
            return Err(Error::InvalidQuadrilateral {
                detail: failed.join(", "),
                max_deviation: max.as_f64(),
            });
        }
        Ok(())
    }
}

/// A crooked surface with its derived vertices and stem splitting.
#[derive(Debug, Clone)]
pub struct CrookedSurface<T> {
    space: SympSpace<T>,
    quad: LightlikeQuadrilateral<T>,
    p0: Plane2<T>,
    p_inf: Plane2<T>,
    p_plus: Plane2<T>,
    p_minus: Plane2<T>,
    s1: Plane2<T>,
    s2: Plane2<T>,
}

/// One of the 16 strict inequalities; positive `value` means satisfied.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityMargin<T> {
    /// Edge of the other surface being tested, e.g. `"u'+"`.
    pub photon: String,
    /// `1` when tested against the first surface, `2` for the second.
    pub against: u8,
    pub sign: WingSign,
    pub value: T,
}

#[derive(Debug, Clone)]
pub struct DisjointnessReport<T> {
    pub margins: Vec<InequalityMargin<T>>,
    pub disjoint: bool,
}

impl<T: Scalar> DisjointnessReport<T> {
    /// Margins within `band` of zero.
    pub fn ambiguous(&self, band: T) -> impl Iterator<Item = &InequalityMargin<T>> {
        self.margins.iter().filter(move |m| m.value.abs() <= band)
    }

    pub fn min_margin(&self) -> T {
        self.margins
            .iter()
            .fold(T::infinity(), |m, x| m.min(x.value))
    }
}

impl<T: Scalar> CrookedSurface<T> {
    pub fn new(space: &SympSpace<T>, quad: LightlikeQuadrilateral<T>) -> Result<Self> {
        space.validate_quad(&quad)?;
        let q = &quad;
        let p0 = space.plane(&q.v_plus, &q.v_minus)?;
        let p_inf = space.plane(&q.u_plus, &q.u_minus)?;
        let p_plus = space.plane(&q.u_plus, &q.v_plus)?;
        let p_minus = space.plane(&q.u_minus, &q.v_minus)?;
        let s1 = space.plane(&q.u_plus, &q.v_minus)?;
        let s2 = space.plane(&q.u_minus, &q.v_plus)?;
        Ok(Self {
            space: space.clone(),
            quad,
            p0,
            p_inf,
            p_plus,
            p_minus,
            s1,
            s2,
        })
    }

    pub fn space(&self) -> &SympSpace<T> {
        &self.space
    }

    pub fn quad(&self) -> &LightlikeQuadrilateral<T> {
        &self.quad
    }

    pub fn p0(&self) -> &Plane2<T> {
        &self.p0
    }

    pub fn p_inf(&self) -> &Plane2<T> {
        &self.p_inf
    }

    pub fn p_plus(&self) -> &Plane2<T> {
        &self.p_plus
    }

    pub fn p_minus(&self) -> &Plane2<T> {
        &self.p_minus
    }

    pub fn s1(&self) -> &Plane2<T> {
        &self.s1
    }

    pub fn s2(&self) -> &Plane2<T> {
        &self.s2
    }

    pub fn wing_vertex(&self, sign: WingSign) -> &Plane2<T> {
        match sign {
            WingSign::Plus => &self.p_plus,
            WingSign::Minus => &self.p_minus,
        }
    }

    fn wing_edges(&self, sign: WingSign) -> (&Vector<T>, &Vector<T>) {
        match sign {
            WingSign::Plus => (&self.quad.u_plus, &self.quad.v_plus),
            WingSign::Minus => (&self.quad.u_minus, &self.quad.v_minus),
        }
    }

    fn require_lagrangian(l: &Plane2<T>) -> Result<()> {
        if l.is_lagrangian() {
            Ok(())
        } else {
            Err(Error::NotLagrangian)
        }
    }

    /// Coordinates `(t, s)` of the line `l ∩ P_±` in the basis `(u_±, v_±)`,
    /// or `None` when `l` is transverse to `P_±`.
    fn wing_line(&self, l: &Plane2<T>, sign: WingSign) -> Option<(T, T)> {
        let vertex = self.wing_vertex(sign);
        if self.space.transverse(l, vertex) {
            return None;
        }
        let l_unit = Matrix::from_columns(&[l.u().normalized().ok()?, l.v().normalized().ok()?]);
        let stacked = l_unit.hstack(&vertex.basis().scale(-T::one()));
        let d = svd(&stacked);
        let k = d.v.col(3);
        Some((k[2], k[3]))
    }

    /// Coordinates of `l ∩ P_±` against the unit edges `û_±`, `v̂_±`,
    /// scaled to unit length. `None` when `l` is transverse to `P_±`.
    pub fn wing_coordinates(&self, l: &Plane2<T>, sign: WingSign) -> Option<(T, T)> {
        let (t, s) = self.wing_line(l, sign)?;
        let (u, v) = self.wing_edges(sign);
        let (t, s) = (t * u.norm(), s * v.norm());
        let n = (t * t + s * s).sqrt();
        Some((t / n, s / n))
    }

    pub fn wing_contains(&self, l: &Plane2<T>, sign: WingSign) -> Result<bool> {
        Self::require_lagrangian(l)?;
        let tol = self.space.tol();
        if l.same_as(self.wing_vertex(sign), tol.geo) {
            return Ok(true);
        }
        let Some((t, s)) = self.wing_coordinates(l, sign) else {
            return Ok(false);
        };
        let ts = t * s;
        Ok(match sign {
            WingSign::Plus => ts >= -tol.alg,
            WingSign::Minus => ts <= tol.alg,
        })
    }

    /// Open stem membership.
    pub fn stem_contains(&self, l: &Plane2<T>) -> Result<bool> {
        Self::require_lagrangian(l)?;
        let sp = &self.space;
        if sp.transverse(l, &self.s1) || sp.transverse(l, &self.s2) {
            return Ok(false);
        }
        if !sp.transverse(l, &self.p0) || !sp.transverse(l, &self.p_inf) {
            return Ok(false);
        }
        match sp.maslov(&self.p0, l, &self.p_inf) {
            Ok(m) => Ok(m.abs() == 2),
            Err(Error::NotTransverse(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// First matching region in the order wing+, wing−, stem.
    pub fn surface_contains(&self, l: &Plane2<T>) -> Result<Option<SurfaceRegion>> {
        if self.wing_contains(l, WingSign::Plus)? {
            return Ok(Some(SurfaceRegion::WingPlus));
        }
        if self.wing_contains(l, WingSign::Minus)? {
            return Ok(Some(SurfaceRegion::WingMinus));
        }
        if self.stem_contains(l)? {
            return Ok(Some(SurfaceRegion::Stem));
        }
        Ok(None)
    }

    /// The two photon inequalities, normalized and signed so that a
    /// positive value means the inequality holds:
    /// `ω(p,v₊)ω(p,u₊)` and `−ω(p,v₋)ω(p,u₋)`, all vectors at unit length.
    pub fn photon_margins(&self, p: &Vector<T>) -> Result<[T; 2]> {
        let p = p.normalized()?;
        let q = &self.quad;
        let w = |x: &Vector<T>| self.space.omega(&p, x) / x.norm();
        Ok([w(&q.v_plus) * w(&q.u_plus), -(w(&q.v_minus) * w(&q.u_minus))])
    }

    /// Whether the photon `[p]` misses the surface. Margins within eps_alg
    /// count as touching.
    pub fn photon_disjoint(&self, p: &Vector<T>) -> Result<bool> {
        let alg = self.space.tol().alg;
        Ok(self.photon_margins(p)?.iter().all(|&m| m > alg))
    }

    /// An explicit Lagrangian through `p` on the surface, built from the
    /// first violated inequality. `None` when both inequalities hold.
    pub fn intersection_witness(&self, p: &Vector<T>) -> Result<Option<(Plane2<T>, SurfaceRegion)>> {
        let margins = self.photon_margins(p)?;
        let alg = self.space.tol().alg;
        let p = p.normalized()?;
        for (sign, region, margin) in [
            (WingSign::Plus, SurfaceRegion::WingPlus, margins[0]),
            (WingSign::Minus, SurfaceRegion::WingMinus, margins[1]),
        ] {
            if margin > alg {
                continue;
            }
            let (u, v) = self.wing_edges(sign);
            let (u, v) = (u.normalized()?, v.normalized()?);
            let w = u
                .scale(self.space.omega(&p, &v))
                .axpy(-self.space.omega(&p, &u), &v);
            let vertex = self.wing_vertex(sign);
            let plane = match self.space.plane(&p, &w) {
                Ok(l) => l,
                Err(Error::RankDeficient { .. }) => vertex.clone(),
                Err(e) => return Err(e),
            };
            return Ok(Some((plane, region)));
        }
        Ok(None)
    }

    /// The 16 inequalities: each edge of `other` against `self`, and each
    /// edge of `self` against `other`.
    pub fn disjointness_report(&self, other: &Self) -> Result<DisjointnessReport<T>> {
        let names = ["u+", "u-", "v+", "v-"];
        let mut margins = Vec::with_capacity(16);
        for (against, target, source, prime) in [(1u8, self, other, "'"), (2u8, other, self, "")] {
            for (name, edge) in names.iter().zip(source.quad.edges()) {
                let m = target.photon_margins(edge)?;
                for (sign, value) in [(WingSign::Plus, m[0]), (WingSign::Minus, m[1])] {
                    margins.push(InequalityMargin {
                        photon: format!("{}{}{}", &name[..1], prime, &name[1..]),
                        against,
                        sign,
                        value,
                    });
                }
            }
        }
        let alg = self.space.tol().alg;
        let disjoint = margins.iter().all(|m| m.value > alg);
        Ok(DisjointnessReport { margins, disjoint })
    }

    pub fn surfaces_disjoint(&self, other: &Self) -> Result<bool> {
        Ok(self.disjointness_report(other)?.disjoint)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (SympSpace<f64>, CrookedSurface<f64>) {
        let s = SympSpace::default();
        let c = CrookedSurface::new(&s, LightlikeQuadrilateral::canonical()).unwrap();
        (s, c)
    }

    fn v(x: &[f64]) -> Vector<f64> {
        Vector::from_f64(x)
    }

    fn e(i: usize) -> Vector<f64> {
        Vector::basis(4, i)
    }

    #[test]
    fn quad_new_examples() {
        let s = SympSpace::<f64>::default();
        assert!(s.quad_new(e(0), e(1), e(3), e(2)).is_ok());
        match s.quad_new(e(0), e(1), e(2), e(3)) {
            Err(Error::InvalidQuadrilateral { max_deviation, .. }) => assert_eq!(max_deviation, 1.0),
            other => panic!("expected invalid quadrilateral, got {other:?}"),
        }
        assert!(s.quad_new(e(0).scale(2.0), e(1), e(3), e(2).scale(0.5)).is_ok());
    }

    #[test]
    fn derived_planes() {
        let (_, c) = setup();
        for p in [c.p0(), c.p_inf(), c.p_plus(), c.p_minus()] {
            assert!(p.is_lagrangian());
        }
        assert!(!c.s1().is_lagrangian() && !c.s2().is_lagrangian());
    }

    #[test]
    fn wing_examples() {
        let (s, c) = setup();
        let (up, um, vp, vm) = (e(0), e(1), e(3), e(2));
        // Lagrangian containing u+ only: span{u+, u-}
        let l = s.plane(&up, &um).unwrap();
        assert!(c.wing_contains(&l, WingSign::Plus).unwrap());
        // span{u+ − v+, u- − v-} meets P+ in u+ − v+ (ts = −1)
        let bad = s.plane(&(&up - &vp), &(&um - &vm)).unwrap();
        assert!(bad.is_lagrangian());
        assert!(!c.wing_contains(&bad, WingSign::Plus).unwrap());
        // and P- in u- − v-
        assert!(c.wing_contains(&bad, WingSign::Minus).unwrap());
        assert!(c.wing_contains(c.p_plus(), WingSign::Plus).unwrap());
        // span{u+ + v+, u- − v-} is not Lagrangian
        assert_eq!(
            c.wing_contains(&s.plane(&(&up + &vp), &(&um - &vm)).unwrap(), WingSign::Plus),
            Err(Error::NotLagrangian)
        );
    }

    #[test]
    fn stem_examples() {
        let (s, c) = setup();
        let q = c.quad().clone();
        let l = s
            .plane(&(&q.u_plus + &q.v_minus), &(&q.u_minus + &q.v_plus))
            .unwrap();
        assert!(l.is_lagrangian());
        assert!(c.stem_contains(&l).unwrap());
        assert_eq!(c.surface_contains(&l).unwrap(), Some(SurfaceRegion::Stem));
        assert!(!c.stem_contains(c.p0()).unwrap());
        assert!(!c.stem_contains(c.p_plus()).unwrap());
        // spacelike member of the stem torus: m = 0
        let other = s
            .plane(&(&q.u_plus + &q.v_minus), &(&q.u_minus.scale(-1.0) + &q.v_plus))
            .unwrap();
        assert!(other.is_lagrangian());
        assert!(!c.stem_contains(&other).unwrap());
    }

    #[test]
    fn surface_contains_examples() {
        let (s, c) = setup();
        assert_eq!(c.surface_contains(c.p_plus()).unwrap(), Some(SurfaceRegion::WingPlus));
        assert_eq!(c.surface_contains(c.p_minus()).unwrap(), Some(SurfaceRegion::WingMinus));
        let nd = s.plane(&e(0), &e(2)).unwrap();
        assert_eq!(c.surface_contains(&nd).unwrap_err(), Error::NotLagrangian);
    }

    #[test]
    fn photon_examples() {
        let (_, c) = setup();
        assert!(!c.photon_disjoint(&e(0)).unwrap());
        let p = v(&[1., 1., -1., 1.]);
        let m = c.photon_margins(&p).unwrap();
        assert!(m[0] > 0.0 && m[1] > 0.0);
        assert!(c.photon_disjoint(&p).unwrap());
        assert!(c.photon_disjoint(&p.scale(-7.0)).unwrap());
        assert!(!c.photon_disjoint(&v(&[1., 0., 1., 0.])).unwrap());
        assert!(c.intersection_witness(&p).unwrap().is_none());
    }

    #[test]
    fn witnesses_lie_on_the_surface() {
        let (_, c) = setup();
        for p in [v(&[1., 0., 1., 0.]), v(&[1., 2., 0.5, 3.]), v(&[0.2, 1., 1., -1.]), e(0)] {
            let (l, region) = c.intersection_witness(&p).unwrap().expect("violated");
            assert!(l.is_lagrangian());
            assert!(l.subspace(1e-9).contains(&p, 1e-9));
            let sign = match region {
                SurfaceRegion::WingPlus => WingSign::Plus,
                _ => WingSign::Minus,
            };
            assert!(c.wing_contains(&l, sign).unwrap());
        }
    }

    #[test]
    fn identical_surfaces_touch() {
        let (_, c) = setup();
        let r = c.disjointness_report(&c).unwrap();
        assert_eq!(r.margins.len(), 16);
        assert!(!r.disjoint);
        assert!(r.ambiguous(1e-9).count() > 0);
        assert!(!c.surfaces_disjoint(&c).unwrap());
    }
}

//! Symplectic splittings `V = S ⊕ S^⊥` and graphs of maps `S → S^⊥`.

use super::{Plane2, SympSpace};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// `V = S ⊕ S^⊥` with ω-normalized bases `(a1, a2)` of `S` and `(b1, b2)`
/// of `S^⊥`: `ω(a1, a2) = ω(b1, b2) = 1`.
#[derive(Debug, Clone)]
pub struct Splitting<T> {
    s: Plane2<T>,
    s_perp: Plane2<T>,
    a: [Vector<T>; 2],
    b: [Vector<T>; 2],
}

impl<T: Scalar> Splitting<T> {
    pub fn s(&self) -> &Plane2<T> {
        &self.s
    }

    pub fn s_perp(&self) -> &Plane2<T> {
        &self.s_perp
    }

    /// ω-normalized basis of `S`.
    pub fn a(&self) -> &[Vector<T>; 2] {
        &self.a
    }

    /// ω-normalized basis of `S^⊥`.
    pub fn b(&self) -> &[Vector<T>; 2] {
        &self.b
    }

    /// `S^⊥ ⊕ S`.
    pub fn swapped(&self) -> Self {
        Self {
            s: self.s_perp.clone(),
            s_perp: self.s.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

/// Linear map `S → S^⊥` as a 2×2 matrix in the ω-normalized bases:
/// `f(a_j) = Σ_i f_ij b_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Map2<T> {
    m: Matrix<T>,
}

impl<T: Scalar> Map2<T> {
    pub fn new(m: Matrix<T>) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: if m.rows() != 2 { m.rows() } else { m.cols() },
            });
        }
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self { m })
    }

    pub fn from_f64(rows: [[f64; 2]; 2]) -> Self {
        Self {
            m: Matrix::from_rows_f64(&[&rows[0], &rows[1]]),
        }
    }

    pub fn zero() -> Self {
        Self { m: Matrix::zeros(2, 2) }
    }

    pub fn identity() -> Self {
        Self {
            m: Matrix::identity(2),
        }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.m
    }

    /// `Det(f)`, defined by `f*(ω_B) = Det(f) ω_A`.
    pub fn det_omega(&self) -> T {
        // Kahan's 2×2 determinant: exact products keep the rounding to one ulp.
        let m = &self.m;
        let w = m[(0, 1)] * m[(1, 0)];
        let err = (-m[(0, 1)]).mul_add(m[(1, 0)], w);
        m[(0, 0)].mul_add(m[(1, 1)], -w) + err
    }

    /// `[[f22, −f12], [−f21, f11]]`.
    pub fn adjugate(&self) -> Self {
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

    pub fn scale(&self, s: T) -> Self {
        Self { m: self.m.scale(s) }
    }
}

impl<T: Scalar> SympSpace<T> {
    /// Validates a splitting and fixes ω-normalized bases of both summands.
    pub fn splitting(&self, s: Plane2<T>, s_perp: Plane2<T>) -> Result<Splitting<T>> {
        if s.is_lagrangian() || s_perp.is_lagrangian() {
            return Err(Error::Lagrangian);
        }
        let scale = s.basis().norm_max() * s_perp.basis().norm_max();
        for x in [s.u(), s.v()] {
            for y in [s_perp.u(), s_perp.v()] {
                if self.omega(&x, &y).abs() > self.tol().alg * scale * self.omega_matrix().norm_max() {
                    return Err(Error::Degenerate("summands are not ω-orthogonal".into()));
                }
            }
        }
        let normalize = |p: &Plane2<T>| {
            let (u, v) = (p.u(), p.v());
            let w = self.omega(&u, &v);
            [u, v.scale(T::one() / w)]
        };
        let a = normalize(&s);
        let b = normalize(&s_perp);
        Ok(Splitting { s, s_perp, a, b })
    }

    fn graph_between(&self, m: &Matrix<T>, from: &[Vector<T>; 2], to: &[Vector<T>; 2]) -> Result<Plane2<T>> {
        let col = |j: usize| from[j].axpy(m[(0, j)], &to[0]).axpy(m[(1, j)], &to[1]);
        self.plane(&col(0), &col(1))
    }

    /// `graph(f) = { a + f(a) | a ∈ S }`.
    pub fn graph(&self, f: &Map2<T>, sp: &Splitting<T>) -> Result<Plane2<T>> {
        self.graph_between(f.matrix(), sp.a(), sp.b())
    }

    /// `graph(f)^⊥ = graph(−Adj f)`, a map `S^⊥ → S`.
    pub fn perp_graph(&self, f: &Map2<T>, sp: &Splitting<T>) -> Result<Plane2<T>> {
        if (f.det_omega() + T::one()).abs() <= self.tol().alg {
            return Err(Error::DetMinusOne);
        }
        let g = f.adjugate().scale(-T::one());
        self.graph_between(g.matrix(), sp.b(), sp.a())
    }

    /// `|1 − Det f| / |1 + Det f|`.
    pub fn eta_from_det(&self, f: &Map2<T>) -> Result<T> {
        let d = f.det_omega();
        if (d + T::one()).abs() <= self.tol().alg {
            return Err(Error::DetMinusOne);
        }
        Ok((T::one() - d).abs() / (T::one() + d).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::einstein::EinModel;
    use crate::symplectic::Bivector;

    fn setup() -> (SympSpace<f64>, Splitting<f64>) {
        let s = SympSpace::default();
        let u = Bivector::basis(0, 2) - Bivector::basis(1, 3);
        let split = s.splitting_from_spacelike(&u).unwrap();
        (s, split)
    }

    fn orthogonal(s: &SympSpace<f64>, p: &Plane2<f64>, q: &Plane2<f64>) -> bool {
        [p.u(), p.v()]
            .iter()
            .all(|x| [q.u(), q.v()].iter().all(|y| s.omega(x, y).abs() < 1e-12))
    }

    #[test]
    fn splitting_bases_are_normalized() {
        let (s, sp) = setup();
        assert!((s.omega(&sp.a()[0], &sp.a()[1]) - 1.0).abs() < 1e-12);
        assert!((s.omega(&sp.b()[0], &sp.b()[1]) - 1.0).abs() < 1e-12);
        let bad = s.splitting(sp.s().clone(), sp.s().clone());
        assert!(bad.is_err());
    }

    #[test]
    fn graph_examples() {
        let (s, sp) = setup();
        assert!(s.graph(&Map2::zero(), &sp).unwrap().same_as(sp.s(), 1e-9));
        let id = s.graph(&Map2::identity(), &sp).unwrap();
        assert!(!id.is_lagrangian());
        let flip = Map2::from_f64([[1.0, 0.0], [0.0, -1.0]]);
        assert_eq!(flip.det_omega(), -1.0);
        assert!(s.graph(&flip, &sp).unwrap().is_lagrangian());
        let g = s.graph(&Map2::from_f64([[0.3, 2.0], [-1.0, 0.5]]), &sp).unwrap();
        assert!(s.transverse(&g, sp.s_perp()));
    }

    #[test]
    fn det_examples() {
        let (s, sp) = setup();
        assert_eq!(Map2::<f64>::identity().det_omega(), 1.0);
        let f = Map2::<f64>::from_f64([[1.0, 2.0], [3.0, 4.0]]);
        assert!((f.det_omega() + 2.0).abs() < 1e-12);
        let (a, b) = (sp.a(), sp.b());
        let apply = |j: usize| b[0].scale(f.matrix()[(0, j)]).axpy(f.matrix()[(1, j)], &b[1]);
        let lhs = s.omega(&apply(0), &apply(1));
        assert!((lhs - f.det_omega() * s.omega(&a[0], &a[1])).abs() < 1e-12);
    }

    #[test]
    fn adjugate_examples() {
        let f = Map2::<f64>::from_f64([[1.0, 2.0], [3.0, 4.0]]);
        assert_eq!(f.adjugate(), Map2::from_f64([[4.0, -2.0], [-3.0, 1.0]]));
        assert_eq!(Map2::<f64>::identity().adjugate(), Map2::identity());
        assert_eq!(f.adjugate().adjugate(), f);
        let prod = f.adjugate().compose(&f);
        assert_eq!(prod, Map2::identity().scale(f.det_omega()));
    }

    #[test]
    fn perp_graph_examples() {
        let (s, sp) = setup();
        assert!(s.perp_graph(&Map2::zero(), &sp).unwrap().same_as(sp.s_perp(), 1e-9));
        for f in [
            Map2::identity(),
            Map2::from_f64([[0.3, 2.0], [-1.0, 0.5]]),
            Map2::from_f64([[3.0, 0.0], [0.0, 1.0]]),
        ] {
            let g = s.graph(&f, &sp).unwrap();
            let p = s.perp_graph(&f, &sp).unwrap();
            assert!(orthogonal(&s, &g, &p));
            assert!(p.same_as(&s.symplectic_complement(&g).unwrap(), 1e-9));
        }
        let flip = Map2::from_f64([[1.0, 0.0], [0.0, -1.0]]);
        assert_eq!(s.perp_graph(&flip, &sp).unwrap_err(), Error::DetMinusOne);
    }

    #[test]
    fn eta_from_det_examples() {
        let (s, sp) = setup();
        assert_eq!(s.eta_from_det(&Map2::identity()).unwrap(), 0.0);
        assert_eq!(s.eta_from_det(&Map2::zero()).unwrap(), 1.0);
        let f = Map2::from_f64([[3.0, 0.0], [0.0, 1.0]]);
        assert_eq!(s.eta_from_det(&f).unwrap(), 0.5);
        // direct computation through μ and the null-cone model
        let model = EinModel::default();
        let t = s.graph(&f, &sp).unwrap();
        let t_split = s.splitting(t.clone(), s.perp_graph(&f, &sp).unwrap()).unwrap();
        let t1 = s.splitting_torus(&model, &sp).unwrap();
        let t2 = s.splitting_torus(&model, &t_split).unwrap();
        assert!((model.eta(&t1, &t2) - 0.5).abs() < 1e-12);
    }
}

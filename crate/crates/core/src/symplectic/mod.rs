//! The symplectic model: `(V, ω)` with `dim V = 4`, its second exterior
//! power `Λ²V` carrying the split form of signature `(3,3)`, and the
//! Lagrangian Grassmannian as the Einstein universe inside `W = ker ω`.
//!
//! The default form is `ω(e1,e3) = ω(e2,e4) = 1`. Any other nondegenerate
//! form is accepted; `vol` and `ω*` are recomputed from it, and a Darboux
//! basis links `W` to the `(x, y, z, u, v)` coordinates of [`crate::einstein`].

mod bivector;
mod graph;

pub use bivector::{second_compound, Bivector, PAIRS};
pub use graph::{Map2, Splitting};

use crate::einstein::{EinModel, EinPoint, EinsteinTorus};
use crate::error::{Error, Result};
use crate::linalg::{column_space, nullspace, sym_eigen, FormVector, Matrix, Subspace, Vector};
use crate::scalar::{Scalar, Tolerance};

/// Whether `ω` vanishes on a plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaneTag {
    Lagrangian,
    Nondegenerate,
}

/// A 2-plane of `V` with the basis it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane2<T> {
    basis: Matrix<T>,
    tag: PlaneTag,
}

impl<T: Scalar> Plane2<T> {
    /// Basis as the columns of a 4×2 matrix.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn u(&self) -> Vector<T> {
        self.basis.col(0)
    }

    pub fn v(&self) -> Vector<T> {
        self.basis.col(1)
    }

    pub fn tag(&self) -> PlaneTag {
        self.tag
    }

    pub fn is_lagrangian(&self) -> bool {
        self.tag == PlaneTag::Lagrangian
    }

    pub fn subspace(&self, tol: T) -> Subspace<T> {
        Subspace::from_matrix(&self.basis, tol)
    }

    /// Same plane, compared as column spans.
    pub fn same_as(&self, other: &Self, tol: T) -> bool {
        self.subspace(tol).approx_eq(&other.subspace(tol), tol)
    }
}

/// `(V, ω)` together with the derived data on `Λ²V`.
#[derive(Debug, Clone)]
pub struct SympSpace<T> {
    omega: Matrix<T>,
    /// `vol = c · e1∧e2∧e3∧e4`.
    vol: T,
    omega_star: Bivector<T>,
    darboux: Matrix<T>,
    to_w: Matrix<T>,
    from_w: Matrix<T>,
    tol: Tolerance<T>,
}

impl<T: Scalar> Default for SympSpace<T> {
    fn default() -> Self {
        Self::standard(Tolerance::default())
    }
}

impl<T: Scalar> SympSpace<T> {
    /// `ω(e1,e3) = ω(e2,e4) = 1`.
    pub fn standard(tol: Tolerance<T>) -> Self {
        let mut omega = Matrix::zeros(4, 4);
        omega[(0, 2)] = T::one();
        omega[(2, 0)] = -T::one();
        omega[(1, 3)] = T::one();
        omega[(3, 1)] = -T::one();
        Self::new(omega, tol).expect("standard form is nondegenerate")
    }

    pub fn new(omega: Matrix<T>, tol: Tolerance<T>) -> Result<Self> {
        if omega.rows() != 4 || omega.cols() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: if omega.rows() != 4 { omega.rows() } else { omega.cols() },
            });
        }
        if !omega.is_finite() {
            return Err(Error::NonFinite);
        }
        let scale = omega.norm_max().max(T::one());
        if (&omega + &omega.transpose()).norm_max() > tol.alg * scale {
            return Err(Error::NotAntisymmetric);
        }
        let w = |i: usize, j: usize| omega[(i, j)];
        let pf = w(0, 1) * w(2, 3) - w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2);
        if pf.abs() <= tol.rank * scale * scale {
            return Err(Error::DegenerateForm);
        }
        // (ω∧ω)(vol) = 2 Pf(ω) c = −2
        let vol = -T::one() / pf;

        let mut gram6 = Matrix::zeros(6, 6);
        let mut rhs = Matrix::zeros(6, 1);
        for (r, &(i, j)) in PAIRS.iter().enumerate() {
            let br = Bivector::<T>::basis(i, j);
            for (c, &(k, l)) in PAIRS.iter().enumerate() {
                gram6[(r, c)] = br.wedge4(&Bivector::basis(k, l)) / vol;
            }
            rhs[(r, 0)] = w(i, j);
        }
        let star = gram6.solve(&rhs, tol.rank).ok_or(Error::DegenerateForm)?;
        let omega_star = Bivector::new(std::array::from_fn(|k| star[(k, 0)]));

        let darboux = darboux_basis(&omega, tol.rank)?;
        let inv = darboux.inverse(tol.rank).ok_or(Error::DegenerateForm)?;
        let (phi, phi_inv) = w_coordinates::<T>();
        let to_w = &phi * &second_compound(&inv);
        let from_w = &second_compound(&darboux) * &phi_inv;

        Ok(Self {
            omega,
            vol,
            omega_star,
            darboux,
            to_w,
            from_w,
            tol,
        })
    }

    pub fn omega_matrix(&self) -> &Matrix<T> {
        &self.omega
    }

    pub fn tol(&self) -> &Tolerance<T> {
        &self.tol
    }

    /// The scalar `c` with `vol = c · e1∧e2∧e3∧e4`.
    pub fn vol(&self) -> T {
        self.vol
    }

    /// Columns form a basis with `ω(b1,b3) = ω(b2,b4) = 1`, others zero.
    pub fn darboux(&self) -> &Matrix<T> {
        &self.darboux
    }

    fn check4(&self, x: &Vector<T>) -> Result<()> {
        if x.len() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: x.len(),
            });
        }
        if !x.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(())
    }

    /// `ω(x, y) = xᵀ Ω y`.
    pub fn omega(&self, x: &Vector<T>, y: &Vector<T>) -> T {
        x.dot(&self.omega.mul_vec(y))
    }

    /// `ω` extended linearly to bivectors: `ω(u∧v) = ω(u, v)`.
    pub fn omega_of(&self, b: &Bivector<T>) -> T {
        PAIRS
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (k, &(i, j))| acc + self.omega[(i, j)] * b[k])
    }

    /// `ω(u,v)` with error-free products and a compensated sum. Near
    /// `ω(S) = 0` the plain sum loses most of its digits.
    fn omega_compensated(&self, u: &Vector<T>, v: &Vector<T>) -> T {
        let (mut sum, mut carry) = (T::zero(), T::zero());
        let mut add = |x: T| {
            let t = sum + x;
            carry = carry
                + if sum.abs() >= x.abs() {
                    (sum - t) + x
                } else {
                    (x - t) + sum
                };
            sum = t;
        };
        for i in 0..4 {
            for j in 0..4 {
                let a = self.omega[(i, j)] * u[i];
                if a == T::zero() {
                    continue;
                }
                let p = a * v[j];
                add(p);
                add(a.mul_add(v[j], -p));
            }
        }
        sum + carry
    }

    fn omega_scale(&self) -> T {
        self.omega.norm_max().max(T::one())
    }

    /// The signature-(3,3) form on `Λ²V`: `b∧b' = (b·b') vol`.
    pub fn wedge_product(&self, b1: &Bivector<T>, b2: &Bivector<T>) -> T {
        b1.wedge4(b2) / self.vol
    }

    /// `ω*` with `ω*·(u∧v) = ω(u,v)`.
    pub fn omega_star(&self) -> Bivector<T> {
        self.omega_star
    }

    /// Validates a plane spanned by `u`, `v` and tags it.
    pub fn plane(&self, u: &Vector<T>, v: &Vector<T>) -> Result<Plane2<T>> {
        self.check4(u)?;
        self.check4(v)?;
        let (nu, nv) = (u.norm(), v.norm());
        let area = Bivector::wedge(u, v).norm();
        if nu == T::zero() || nv == T::zero() || area <= self.tol.rank * nu * nv {
            return Err(Error::RankDeficient {
                expected: 2,
                found: if nu == T::zero() && nv == T::zero() { 0 } else { 1 },
            });
        }
        let tag = if self.omega(u, v).abs() <= self.tol.alg * nu * nv * self.omega_scale() {
            PlaneTag::Lagrangian
        } else {
            PlaneTag::Nondegenerate
        };
        Ok(Plane2 {
            basis: Matrix::from_columns(&[u.clone(), v.clone()]),
            tag,
        })
    }

    /// Plane spanned by the columns of a 4×2 matrix.
    pub fn plane_from_matrix(&self, m: &Matrix<T>) -> Result<Plane2<T>> {
        if m.rows() != 4 || m.cols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: m.rows(),
            });
        }
        self.plane(&m.col(0), &m.col(1))
    }

    /// Image of a plane under a linear map of `V`.
    pub fn transform_plane(&self, g: &Matrix<T>, p: &Plane2<T>) -> Result<Plane2<T>> {
        self.plane_from_matrix(&(g * p.basis()))
    }

    /// Whether `gᵀ Ω g = Ω`.
    pub fn is_symplectic(&self, g: &Matrix<T>) -> bool {
        g.rows() == 4
            && g.cols() == 4
            && (&(&(&g.transpose() * &self.omega) * g) - &self.omega).norm_max()
                <= self.tol.alg * self.omega_scale() * g.norm_max().max(T::one()).powi(2)
    }

    /// `ι(P) = u∧v` for the stored basis.
    pub fn plucker(&self, p: &Plane2<T>) -> Bivector<T> {
        Bivector::wedge(&p.u(), &p.v())
    }

    /// The plane of a decomposable bivector, with a basis chosen so that
    /// its Plücker image is exactly `b`.
    pub fn bivector_to_plane(&self, b: &Bivector<T>) -> Result<Plane2<T>> {
        if !b.is_finite() {
            return Err(Error::NonFinite);
        }
        let n = b.norm();
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        let bb = b.wedge4(b) / (n * n);
        if bb.abs() > self.tol.alg {
            return Err(Error::NotDecomposable {
                value: self.wedge_product(b, b).as_f64(),
            });
        }
        let cs = column_space(&b.to_matrix(), self.tol.rank);
        if cs.cols() != 2 {
            return Err(Error::NotDecomposable {
                value: self.wedge_product(b, b).as_f64(),
            });
        }
        let (c1, c2) = (cs.col(0), cs.col(1));
        let w = Bivector::wedge(&c1, &c2);
        let lambda = w.to_vector().dot(&b.to_vector()) / (n * n);
        self.plane(&c1.scale(T::one() / lambda), &c2)
    }

    /// `P ∩ Q = 0`, decided by the normalized value of `ι(P)·ι(Q)`.
    pub fn transverse(&self, p: &Plane2<T>, q: &Plane2<T>) -> bool {
        self.transversality(p, q).abs() > self.tol.alg
    }

    /// `ι(P)∧ι(Q)` on `e1234`, divided by the Euclidean norms of both bivectors.
    pub fn transversality(&self, p: &Plane2<T>, q: &Plane2<T>) -> T {
        let (a, b) = (self.plucker(p), self.plucker(q));
        a.wedge4(&b) / (a.norm() * b.norm())
    }

    /// `R_{ω*}(b) = b + (b·ω*) ω*`.
    pub fn reflect_omega_star(&self, b: &Bivector<T>) -> Bivector<T> {
        *b + self.omega_star.scale(self.wedge_product(b, &self.omega_star))
    }

    /// The ω-orthogonal plane of a nondegenerate plane.
    pub fn symplectic_complement(&self, s: &Plane2<T>) -> Result<Plane2<T>> {
        if s.is_lagrangian() {
            return Err(Error::Lagrangian);
        }
        let constraints = &s.basis().transpose() * &self.omega;
        let k = nullspace(&constraints, self.tol.rank);
        if k.cols() != 2 {
            return Err(Error::RankDeficient {
                expected: 2,
                found: k.cols(),
            });
        }
        self.plane(&k.col(0), &k.col(1))
    }

    /// Maslov index `m(L, P, L')`: the signature of
    /// `v ↦ ω(π_L v, π_{L'} v)` restricted to `P`.
    pub fn maslov(&self, l: &Plane2<T>, p: &Plane2<T>, l2: &Plane2<T>) -> Result<i32> {
        if !(l.is_lagrangian() && p.is_lagrangian() && l2.is_lagrangian()) {
            return Err(Error::NotLagrangian);
        }
        if !self.transverse(l, l2) {
            return Err(Error::NotTransverse("L and L'"));
        }
        if !self.transverse(l, p) {
            return Err(Error::NotTransverse("L and P"));
        }
        if !self.transverse(p, l2) {
            return Err(Error::NotTransverse("P and L'"));
        }
        let frame = l.basis().hstack(l2.basis());
        let inv = frame
            .inverse(self.tol.rank)
            .ok_or(Error::NotTransverse("L and L'"))?;
        let split = |v: &Vector<T>| {
            let c = inv.mul_vec(v);
            let on_l = l.basis().mul_vec(&Vector::new(vec![c[0], c[1]]));
            let on_l2 = l2.basis().mul_vec(&Vector::new(vec![c[2], c[3]]));
            (on_l, on_l2)
        };
        let (p1, p2) = (p.u().normalized()?, p.v().normalized()?);
        let parts = [split(&p1), split(&p2)];
        let mut q = Matrix::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                q[(i, j)] = T::half()
                    * (self.omega(&parts[i].0, &parts[j].1) + self.omega(&parts[j].0, &parts[i].1));
            }
        }
        let e = sym_eigen(&q);
        let thr = self.tol.alg * q.norm_max().max(self.tol.alg);
        if e.values.iter().any(|x| x.abs() <= thr) {
            return Err(Error::NotTransverse("form degenerate on P"));
        }
        Ok(e.values.iter().map(|&x| if x > T::zero() { 1 } else { -1 }).sum())
    }

    /// `μ(S) = ι(S) + ½ ω(ι(S)) ω*` for an ω-normalized basis of `S`.
    pub fn mu(&self, s: &Plane2<T>) -> Result<Bivector<T>> {
        if s.is_lagrangian() {
            return Err(Error::Lagrangian);
        }
        let b = self.plucker(s);
        let w = self.omega_compensated(&s.u(), &s.v());
        Ok(b.scale(T::one() / w) + self.omega_star.scale(T::half()))
    }

    /// The splitting `S ⊕ S^⊥` whose μ-image is the line of `u`:
    /// `S = [u − ω*]`, `S^⊥ = [u + ω*]` after rescaling to `u·u = 2`.
    pub fn splitting_from_spacelike(&self, u: &Bivector<T>) -> Result<Splitting<T>> {
        if !u.is_finite() {
            return Err(Error::NonFinite);
        }
        let n = u.norm();
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        let w = self.wedge_product(u, &self.omega_star);
        if w.abs() > self.tol.alg * n * self.omega_star.norm() {
            return Err(Error::NotInW { value: w.as_f64() });
        }
        let q = self.wedge_product(u, u);
        if q <= self.tol.alg * n * n {
            return Err(Error::NotSpacelike { value: q.as_f64() });
        }
        let u = u.scale((T::two() / q).sqrt());
        let s = self.bivector_to_plane(&(u - self.omega_star))?;
        let s_perp = self.bivector_to_plane(&(u + self.omega_star))?;
        self.splitting(s, s_perp)
    }

    /// Whether a Lagrangian lies on the Einstein torus of a splitting,
    /// i.e. meets `S` (equivalently `S^⊥`) nontrivially.
    pub fn lagrangian_in_torus(&self, l: &Plane2<T>, sp: &Splitting<T>) -> Result<bool> {
        if !l.is_lagrangian() {
            return Err(Error::NotLagrangian);
        }
        Ok(!self.transverse(l, sp.s()))
    }

    /// Coordinates `(x, y, z, u, v)` of a bivector in `W = ker ω`.
    pub fn to_w(&self, b: &Bivector<T>) -> Result<FormVector<T>> {
        let w = self.omega_of(b);
        if w.abs() > self.tol.alg * b.norm() * self.omega_scale() {
            return Err(Error::NotInW { value: w.as_f64() });
        }
        Ok(self.to_w.mul_vec(&b.to_vector()))
    }

    /// Inverse of [`Self::to_w`].
    pub fn from_w(&self, x: &FormVector<T>) -> Result<Bivector<T>> {
        if x.len() != 5 {
            return Err(Error::DimensionMismatch {
                expected: 5,
                found: x.len(),
            });
        }
        let b = self.from_w.mul_vec(x);
        Ok(Bivector::new(std::array::from_fn(|k| b[k])))
    }

    /// The point of Ein³ given by a Lagrangian plane.
    pub fn lagrangian_point(&self, model: &EinModel<T>, l: &Plane2<T>) -> Result<EinPoint<T>> {
        if !l.is_lagrangian() {
            return Err(Error::NotLagrangian);
        }
        let b = self.plucker(l);
        model.point(&self.to_w(&b.scale(T::one() / b.norm()))?)
    }

    /// The Lagrangian plane of a point of Ein³.
    pub fn point_lagrangian(&self, p: &EinPoint<T>) -> Result<Plane2<T>> {
        self.bivector_to_plane(&self.from_w(p.rep())?)
    }

    /// The Einstein torus of a splitting, with normal `μ(S)`. Since
    /// `μ(S)·μ(S) = ½` identically, `√2 μ(S)` is used as the unit normal.
    pub fn splitting_torus(&self, model: &EinModel<T>, sp: &Splitting<T>) -> Result<EinsteinTorus<T>> {
        let w = self.to_w(&self.mu(sp.s())?)?;
        model.torus_from_unit(&w.scale(T::two().sqrt()))
    }
}

/// Symplectic Gram–Schmidt. Returns `B` with columns `(x1, x2, y1, y2)`
/// satisfying `ω(x_i, y_i) = 1` and all other pairings zero.
fn darboux_basis<T: Scalar>(omega: &Matrix<T>, tol: T) -> Result<Matrix<T>> {
    let w = |x: &Vector<T>, y: &Vector<T>| x.dot(&omega.mul_vec(y));
    let mut pool: Vec<Vector<T>> = (0..4).map(|i| Vector::basis(4, i)).collect();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for _ in 0..2 {
        let x = pool.remove(first_max(pool.iter().map(|z| z.norm())));
        let y = pool.remove(first_max(pool.iter().map(|z| w(&x, z).abs())));
        let wxy = w(&x, &y);
        if wxy.abs() <= tol {
            return Err(Error::DegenerateForm);
        }
        let y = y.scale(T::one() / wxy);
        pool = pool
            .iter()
            .map(|z| z.axpy(w(&y, z), &x).axpy(-w(&x, z), &y))
            .collect();
        xs.push(x);
        ys.push(y);
    }
    Ok(Matrix::from_columns(&[
        xs[0].clone(),
        xs[1].clone(),
        ys[0].clone(),
        ys[1].clone(),
    ]))
}

/// Index of the first maximal value.
fn first_max<T: Scalar>(values: impl Iterator<Item = T>) -> usize {
    let mut best = (0, T::neg_infinity());
    for (i, x) in values.enumerate() {
        if x > best.1 {
            best = (i, x);
        }
    }
    best.0
}

/// The isometry between `ker ω` (for the standard form) and the
/// `(x, y, z, u, v)` model with `Q = x² + y² − z² − uv`, and its inverse.
fn w_coordinates<T: Scalar>() -> (Matrix<T>, Matrix<T>) {
    let r = T::one() / T::two().sqrt();
    let s = T::two().sqrt();
    let z = T::zero();
    // columns: b12 b13 b14 b23 b24 b34
    let phi = Matrix::from_rows(&[
        vec![z, r, z, z, -r, z],
        vec![r, z, z, z, z, r],
        vec![r, z, z, z, z, -r],
        vec![z, z, -s, z, z, z],
        vec![z, z, z, s, z, z],
    ]);
    let phi_inv = Matrix::from_rows(&[
        vec![z, r, r, z, z],
        vec![r, z, z, z, z],
        vec![z, z, z, -r, z],
        vec![z, z, z, z, r],
        vec![-r, z, z, z, z],
        vec![z, r, -r, z, z],
    ]);
    (phi, phi_inv)
}

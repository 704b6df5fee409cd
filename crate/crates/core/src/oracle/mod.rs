//! Brute-force ground truth: seeded random objects, point clouds on tori and
//! crooked surfaces, chordal gaps, and sampling probes that never consult the
//! closed-form criteria they are used to test.

mod suites;

pub use suites::{run_all, run_suite, Failure, SuiteReport, SUITES};

use rand::{Rng as _, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::ads::AdsPoint;
use crate::crooked::{CrookedSurface, LightlikeQuadrilateral, SurfaceRegion, WingSign};
use crate::einstein::{EinModel, EinsteinTorus, IntersectionKind};
use crate::error::{Error, Result};
use crate::linalg::{column_space, nullspace, projective_normalize, FormVector, Matrix, Subspace, Vector};
use crate::scalar::Scalar;
use crate::symplectic::{Bivector, Map2, Plane2, SympSpace};

/// Rejections allowed before a generator gives up.
pub const MAX_REJECTIONS: usize = 10_000;

/// Seeded ChaCha8 stream. Equal seeds give equal streams.
#[derive(Debug, Clone)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent child stream for trial `index`; does not advance `self`.
    pub fn split(&self, index: u64) -> Self {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(index.wrapping_add(1));
        Self::new(r.next_u64())
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.inner.random_range(lo..hi)
    }

    pub fn normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.inner.random_range(0..n)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.inner.random_bool(p)
    }

    pub fn normal_vector<T: Scalar>(&mut self, n: usize) -> Vector<T> {
        Vector::new((0..n).map(|_| T::lit(self.normal())).collect())
    }

    pub fn unit_vector<T: Scalar>(&mut self, n: usize) -> Vector<T> {
        loop {
            let v = self.normal_vector::<T>(n);
            if let Ok(u) = v.normalized() {
                return u;
            }
        }
    }
}

fn retry<T>(mut f: impl FnMut() -> Option<T>) -> Result<T> {
    for _ in 0..MAX_REJECTIONS {
        if let Some(x) = f() {
            return Ok(x);
        }
    }
    Err(Error::RetryExhausted(MAX_REJECTIONS))
}

/// Sine of the angle between the lines of `a` and `b`, computed as
/// `|â − b̂||â + b̂|/2` to keep precision near zero.
pub fn chordal<T: Scalar>(a: &Vector<T>, b: &Vector<T>) -> Result<T> {
    let (a, b) = (a.normalized()?, b.normalized()?);
    Ok(chordal_unit(&a, &b))
}

fn chordal_unit<T: Scalar>(a: &Vector<T>, b: &Vector<T>) -> T {
    let (mut d, mut s) = (T::zero(), T::zero());
    for (x, y) in a.iter().zip(b.iter()) {
        d = d + (*x - *y) * (*x - *y);
        s = s + (*x + *y) * (*x + *y);
    }
    (d.sqrt() * s.sqrt() * T::half()).min(T::one())
}

/// `exp(Ω⁻¹S)` for a symmetric `S` with entries uniform in `[−1, 1]`.
pub fn random_sp4<T: Scalar>(space: &SympSpace<T>, rng: &mut Rng) -> Matrix<T> {
    let mut s = Matrix::zeros(4, 4);
    for i in 0..4 {
        for j in i..4 {
            let x = T::lit(rng.uniform(-1.0, 1.0));
            s[(i, j)] = x;
            s[(j, i)] = x;
        }
    }
    let inv = space
        .omega_matrix()
        .inverse(T::zero())
        .expect("symplectic form is invertible");
    (&inv * &s).exp()
}

/// `exp(H)` for a traceless `H` with entries uniform in `[−1.5, 1.5]`.
pub fn random_sl2<T: Scalar>(rng: &mut Rng) -> AdsPoint<T> {
    let mut u = || T::lit(rng.uniform(-1.5, 1.5));
    let (a, b, c) = (u(), u(), u());
    let h = Matrix::from_rows(&[vec![a, b], vec![c, -a]]);
    let e = h.exp();
    let det = e.determinant();
    AdsPoint::new(e.scale(T::one() / det.sqrt()), T::lit(1e-6)).expect("exp of a traceless matrix")
}

/// Unit spacelike vector of the 𝖶-model. Draws with `q < 10⁻³|v|²` are
/// rejected so normals stay well conditioned.
pub fn random_unit_spacelike<T: Scalar>(model: &EinModel<T>, rng: &mut Rng) -> Result<FormVector<T>> {
    retry(|| {
        let v = rng.normal_vector::<T>(5);
        let q = model.space().q(&v);
        (q > T::lit(1e-3) * v.dot(&v)).then(|| v.scale(T::one() / q.sqrt()))
    })
}

/// Columns `x1, x2` of the Darboux basis span a reference Lagrangian.
fn reference_lagrangian<T: Scalar>(space: &SympSpace<T>) -> Matrix<T> {
    let d = space.darboux();
    Matrix::from_columns(&[d.col(0), d.col(1)])
}

pub fn random_lagrangian<T: Scalar>(space: &SympSpace<T>, rng: &mut Rng) -> Result<Plane2<T>> {
    let l0 = reference_lagrangian(space);
    retry(|| {
        let g = random_sp4(space, rng);
        let l = space.plane_from_matrix(&(&g * &l0)).ok()?;
        l.is_lagrangian().then_some(l)
    })
}

/// Plane with `|ω(u, v)| ≥ 10⁻³|u||v|`.
pub fn random_nondegenerate_plane<T: Scalar>(space: &SympSpace<T>, rng: &mut Rng) -> Result<Plane2<T>> {
    retry(|| {
        let (u, v) = (rng.normal_vector::<T>(4), rng.normal_vector::<T>(4));
        let w = space.omega(&u, &v).abs();
        if w < T::lit(1e-3) * u.norm() * v.norm() {
            return None;
        }
        space.plane(&u, &v).ok()
    })
}

/// The canonical quadrilateral moved into the Darboux frame of `space`, then
/// by a random symplectic matrix.
pub fn random_quadrilateral<T: Scalar>(space: &SympSpace<T>, rng: &mut Rng) -> Result<LightlikeQuadrilateral<T>> {
    let base = LightlikeQuadrilateral::canonical().transform(space.darboux());
    retry(|| {
        let q = base.transform(&random_sp4(space, rng));
        space.validate_quad(&q).ok().map(|_| q)
    })
}

pub fn random_surface<T: Scalar>(space: &SympSpace<T>, rng: &mut Rng) -> Result<CrookedSurface<T>> {
    CrookedSurface::new(space, random_quadrilateral(space, rng)?)
}

/// 2×2 map with entries uniform in `[−2, 2]`.
pub fn random_map2<T: Scalar>(rng: &mut Rng) -> Map2<T> {
    let mut u = || rng.uniform(-2.0, 2.0);
    Map2::from_f64([[u(), u()], [u(), u()]])
}

/// Unit vectors `w1`, `w2` with `p^ω = span{p, w1, w2}` and `w1, w2 ⟂ p`.
/// Every Lagrangian through `[p]` is `span{p, cos θ w1 + sin θ w2}`.
pub fn photon_pencil<T: Scalar>(space: &SympSpace<T>, p: &Vector<T>) -> Result<[Vector<T>; 2]> {
    let p = p.normalized()?;
    let row = Matrix::from_rows(&[space.omega_matrix().transpose().mul_vec(&p).into_vec()]);
    let k = nullspace(&row, space.tol().rank);
    let cols: Vec<Vector<T>> = k.columns().iter().map(|c| c.axpy(-c.dot(&p), &p)).collect();
    let rest = column_space(&Matrix::from_columns(&cols), space.tol().rank);
    if rest.cols() != 2 {
        return Err(Error::RankDeficient {
            expected: 2,
            found: rest.cols(),
        });
    }
    Ok([rest.col(0).normalized()?, rest.col(1).normalized()?])
}

/// Symplectic matrix taking the Lagrangian `from` onto `to`.
pub fn lagrangian_transport<T: Scalar>(
    space: &SympSpace<T>,
    from: &Plane2<T>,
    to: &Plane2<T>,
    rng: &mut Rng,
) -> Result<Matrix<T>> {
    let frame_from = lagrangian_frame(space, from, rng)?;
    let frame_to = lagrangian_frame(space, to, rng)?;
    let inv = frame_from
        .inverse(space.tol().rank)
        .ok_or(Error::Degenerate("singular Lagrangian frame".into()))?;
    Ok(&frame_to * &inv)
}

/// `(l1, l2, m1, m2)` with `ω(l_i, m_j) = δ_ij` and `span{m}` Lagrangian.
fn lagrangian_frame<T: Scalar>(space: &SympSpace<T>, l: &Plane2<T>, rng: &mut Rng) -> Result<Matrix<T>> {
    let (l1, l2) = (l.u().normalized()?, l.v().normalized()?);
    let k = retry(|| {
        let k = random_lagrangian(space, rng).ok()?;
        (space.transversality(l, &k).abs() > T::lit(0.05)).then_some(k)
    })?;
    let (k1, k2) = (k.u(), k.v());
    let m = Matrix::from_rows(&[
        vec![space.omega(&l1, &k1), space.omega(&l1, &k2)],
        vec![space.omega(&l2, &k1), space.omega(&l2, &k2)],
    ]);
    let c = m
        .inverse(space.tol().rank)
        .ok_or(Error::NotTransverse("frame complement"))?;
    let m1 = k1.scale(c[(0, 0)]).axpy(c[(1, 0)], &k2);
    let m2 = k1.scale(c[(0, 1)]).axpy(c[(1, 1)], &k2);
    Ok(Matrix::from_columns(&[l1, l2, m1, m2]))
}

/// A labelled point of the 𝖶-model.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePoint<T> {
    /// Projectively normalized representative.
    pub rep: FormVector<T>,
    pub label: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SampleCloud<T> {
    pub points: Vec<SamplePoint<T>>,
}

impl<T: Scalar> SampleCloud<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn extend(&mut self, other: SampleCloud<T>) {
        self.points.extend(other.points);
    }

    pub fn relabel(mut self, label: &'static str) -> Self {
        for p in &mut self.points {
            p.label = label;
        }
        self
    }

    /// Minkowski-patch coordinates of the points off the light cone of
    /// `p_∞`, and the number of points dropped.
    pub fn minkowski(&self, model: &EinModel<T>) -> (Vec<([T; 3], &'static str)>, usize) {
        let mut out = Vec::with_capacity(self.len());
        let mut dropped = 0;
        for p in &self.points {
            match model.to_minkowski(&p.rep) {
                Some(x) => out.push((x, p.label)),
                None => dropped += 1,
            }
        }
        (out, dropped)
    }
}

/// `n` points of the torus `s^⊥ ∩ null cone`, uniform in the angles of an
/// adapted frame `x = cos θ p₁ + sin θ p₂ + cos φ n₁ + sin φ n₂`.
pub fn sample_torus<T: Scalar>(
    model: &EinModel<T>,
    t: &EinsteinTorus<T>,
    n: usize,
    rng: &mut Rng,
) -> Result<SampleCloud<T>> {
    let frame = model.space().frame(&model.torus_hyperplane(t));
    if frame.positive.len() != 2 || frame.negative.len() != 2 {
        return Err(Error::Degenerate(format!("torus hyperplane has signature {}", frame.signature())));
    }
    let (p, q) = (&frame.positive, &frame.negative);
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let th = T::lit(rng.uniform(0.0, std::f64::consts::TAU));
        let ph = T::lit(rng.uniform(0.0, std::f64::consts::TAU));
        let x = p[0]
            .scale(th.cos())
            .axpy(th.sin(), &p[1])
            .axpy(ph.cos(), &q[0])
            .axpy(ph.sin(), &q[1]);
        points.push(SamplePoint {
            rep: projective_normalize(&x)?,
            label: "torus",
        });
    }
    Ok(SampleCloud { points })
}

/// Region proportions for [`sample_surface`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionMix {
    pub wing_plus: f64,
    pub wing_minus: f64,
    pub stem: f64,
}

impl Default for RegionMix {
    fn default() -> Self {
        Self {
            wing_plus: 0.4,
            wing_minus: 0.4,
            stem: 0.2,
        }
    }
}

impl RegionMix {
    fn counts(&self, n: usize) -> [usize; 3] {
        let total = self.wing_plus + self.wing_minus + self.stem;
        let plus = ((n as f64) * self.wing_plus / total).round() as usize;
        let minus = (((n as f64) * self.wing_minus / total).round() as usize).min(n - plus);
        [plus, minus, n - plus - minus]
    }
}

fn unit_edges<T: Scalar>(c: &CrookedSurface<T>) -> Result<[Vector<T>; 4]> {
    let q = c.quad();
    Ok([
        q.u_plus.normalized()?,
        q.u_minus.normalized()?,
        q.v_plus.normalized()?,
        q.v_minus.normalized()?,
    ])
}

/// Photon of the wing at angle `θ ∈ [0, π/2]`: `cos θ û₊ + sin θ v̂₊` or
/// `cos θ û₋ − sin θ v̂₋`.
pub fn wing_photon<T: Scalar>(c: &CrookedSurface<T>, sign: WingSign, theta: T) -> Result<Vector<T>> {
    let [up, um, vp, vm] = unit_edges(c)?;
    Ok(match sign {
        WingSign::Plus => up.scale(theta.cos()).axpy(theta.sin(), &vp),
        WingSign::Minus => um.scale(theta.cos()).axpy(-theta.sin(), &vm),
    })
}

/// `span{cos α û₊ + sin α v̂₋, cos β û₋ + sin β v̂₊}`, a Lagrangian on the
/// torus of the stem.
pub fn stem_pair<T: Scalar>(edges: &[Vector<T>; 4], alpha: T, beta: T) -> (Vector<T>, Vector<T>) {
    let [up, um, vp, vm] = edges;
    (
        up.scale(alpha.cos()).axpy(alpha.sin(), vm),
        um.scale(beta.cos()).axpy(beta.sin(), vp),
    )
}

/// `n` Lagrangians on the surface, drawn from the wing and stem
/// parametrizations and tagged with their region.
pub fn sample_surface_planes<T: Scalar>(
    c: &CrookedSurface<T>,
    n: usize,
    mix: RegionMix,
    rng: &mut Rng,
) -> Result<Vec<(Plane2<T>, SurfaceRegion)>> {
    let space = c.space();
    let [plus, minus, stem] = mix.counts(n);
    let mut out = Vec::with_capacity(n);
    for (sign, region, count) in [
        (WingSign::Plus, SurfaceRegion::WingPlus, plus),
        (WingSign::Minus, SurfaceRegion::WingMinus, minus),
    ] {
        for _ in 0..count {
            let l = retry(|| {
                let th = T::lit(rng.uniform(0.0, std::f64::consts::FRAC_PI_2));
                let p = wing_photon(c, sign, th).ok()?;
                let [w1, w2] = photon_pencil(space, &p).ok()?;
                let ph = T::lit(rng.uniform(0.0, std::f64::consts::PI));
                space.plane(&p, &w1.scale(ph.cos()).axpy(ph.sin(), &w2)).ok()
            })?;
            out.push((l, region));
        }
    }
    let edges = unit_edges(c)?;
    for _ in 0..stem {
        let l = retry(|| {
            let a = T::lit(rng.uniform(0.0, std::f64::consts::PI));
            let b = T::lit(rng.uniform(0.0, std::f64::consts::PI));
            let (w, w2) = stem_pair(&edges, a, b);
            let l = space.plane(&w, &w2).ok()?;
            c.stem_contains(&l).ok()?.then_some(l)
        })?;
        out.push((l, SurfaceRegion::Stem));
    }
    Ok(out)
}

/// [`sample_surface_planes`] mapped to the 𝖶-model.
pub fn sample_surface<T: Scalar>(
    model: &EinModel<T>,
    c: &CrookedSurface<T>,
    n: usize,
    mix: RegionMix,
    rng: &mut Rng,
) -> Result<SampleCloud<T>> {
    let planes = sample_surface_planes(c, n, mix, rng)?;
    let mut points = Vec::with_capacity(planes.len());
    for (l, region) in planes {
        let p = c.space().lagrangian_point(model, &l)?;
        points.push(SamplePoint {
            rep: projective_normalize(p.rep())?,
            label: region.as_str(),
        });
    }
    Ok(SampleCloud { points })
}

/// Smallest chordal distance between points of the two clouds.
pub fn min_gap<T: Scalar>(a: &SampleCloud<T>, b: &SampleCloud<T>) -> Result<T> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Empty("sample cloud"));
    }
    let unit = |c: &SampleCloud<T>| -> Result<Vec<Vector<T>>> { c.points.iter().map(|p| p.rep.normalized()).collect() };
    let (ua, ub) = (unit(a)?, unit(b)?);
    let mut best = T::infinity();
    for x in &ua {
        for y in &ub {
            best = best.min(chordal_unit(x, y));
        }
    }
    Ok(best)
}

/// Outcome of [`probe_intersection_type`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentProbe<T> {
    pub kind: IntersectionKind,
    /// Median of `Q(t)/|t|²` over the sampled chords.
    pub median: T,
    pub samples: usize,
}

fn quad_form<T: Scalar>(g: &Matrix<T>, x: &Vector<T>, y: &Vector<T>) -> T {
    x.dot(&g.mul_vec(y))
}

/// Root of `a λ² + b λ + c` of smallest modulus, if real.
fn small_root<T: Scalar>(a: T, b: T, c: T) -> Option<T> {
    let disc = b * b - T::lit(4.0) * a * c;
    if disc < T::zero() {
        return None;
    }
    let q = -T::half() * (b + b.signum() * disc.sqrt());
    if q == T::zero() {
        return if a == T::zero() { None } else { Some(T::zero()) };
    }
    let r1 = c / q;
    if a == T::zero() {
        return Some(r1);
    }
    let r2 = q / a;
    Some(if r1.abs() <= r2.abs() { r1 } else { r2 })
}

/// Causal character of the intersection curve of two tori, found by
/// sampling null points of the carrier `span{s₁, s₂}^⊥`, stepping along the
/// null cone by a short chord and reading the sign of `Q` on it.
/// A median within `tol.alg` of zero means the chords are null, i.e. the
/// curve is a pair of photons.
pub fn probe_intersection_type<T: Scalar>(
    model: &EinModel<T>,
    t1: &EinsteinTorus<T>,
    t2: &EinsteinTorus<T>,
    n: usize,
    rng: &mut Rng,
) -> Result<TangentProbe<T>> {
    if n < 3 {
        return Err(Error::InsufficientSamples("need at least three chords"));
    }
    let tol = *model.tol();
    let span = Subspace::span(5, &[t1.normal().clone(), t2.normal().clone()], tol.rank)?;
    if span.dim() < 2 {
        return Err(Error::Degenerate("tori are equal".into()));
    }
    let carrier = model.space().orthogonal_complement(&span);
    let g = model.space().restricted_gram(&carrier);
    let h = T::lit(1e-3);
    let mut values = Vec::with_capacity(n);
    for _ in 0..10 * n {
        if values.len() == n {
            break;
        }
        let c = rng.unit_vector::<T>(3);
        let d = rng.unit_vector::<T>(3);
        let a = quad_form(&g, &d, &d);
        if a.abs() < T::lit(1e-8) {
            continue;
        }
        let Some(lambda) = small_root(a, T::two() * quad_form(&g, &c, &d), quad_form(&g, &c, &c)) else {
            continue;
        };
        let Ok(x) = c.axpy(lambda, &d).normalized() else {
            continue;
        };
        let grad = g.mul_vec(&x);
        let Ok(gn) = grad.normalized() else {
            continue;
        };
        if grad.norm() < T::lit(1e-6) {
            continue;
        }
        let e0 = rng.unit_vector::<T>(3);
        let Ok(e) = e0.axpy(-e0.dot(&x), &x).normalized() else {
            continue;
        };
        let base = x.axpy(h, &e);
        let Some(mu) = small_root(
            quad_form(&g, &gn, &gn),
            T::two() * quad_form(&g, &base, &gn),
            quad_form(&g, &base, &base),
        ) else {
            continue;
        };
        let t = e.scale(h).axpy(mu, &gn);
        values.push(quad_form(&g, &t, &t) / t.dot(&t));
    }
    if values.len() < n {
        return Err(Error::InsufficientSamples("carrier null cone rarely hit"));
    }
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite chord values"));
    let median = values[n / 2];
    let kind = if median.abs() <= tol.alg {
        IntersectionKind::PhotonPair
    } else if median > T::zero() {
        IntersectionKind::SpacelikeCircle
    } else {
        IntersectionKind::TimelikeCircle
    };
    Ok(TangentProbe {
        kind,
        median,
        samples: n,
    })
}

/// A Lagrangian through a photon that lies on a surface.
#[derive(Debug, Clone)]
pub struct PhotonHit<T> {
    pub plane: Plane2<T>,
    pub region: SurfaceRegion,
    pub theta: T,
}

/// Scans the pencil of Lagrangians `L(θ)` through `[p]` on a grid of
/// `samples` angles in `[0, π]`. Crossings of `P₊`, `P₋` and the stem torus
/// are located by sign change and bisection, then tested with the
/// membership predicates. A pencil lying entirely in one of those loci is
/// tested at every grid point.
pub fn photon_hits<T: Scalar>(c: &CrookedSurface<T>, p: &Vector<T>, samples: usize) -> Result<Vec<PhotonHit<T>>> {
    let space = c.space();
    let p = p.normalized()?;
    let [w1, w2] = photon_pencil(space, &p)?;
    let (b1, b2) = (Bivector::wedge(&p, &w1), Bivector::wedge(&p, &w2));
    let unit = |b: Bivector<T>| b.scale(T::one() / b.norm());
    let targets = [
        unit(space.plucker(c.p_plus())),
        unit(space.plucker(c.p_minus())),
        unit(space.plucker(c.s1())),
    ];
    let at = |th: T| b1.scale(th.cos()) + b2.scale(th.sin());
    let plane_at = |th: T| space.plane(&p, &w1.scale(th.cos()).axpy(th.sin(), &w2));
    let pi = T::PI();
    let grid: Vec<T> = (0..=samples).map(|i| pi * T::lit(i as f64) / T::lit(samples as f64)).collect();
    let alg = space.tol().alg;
    let mut hits = Vec::new();
    let test = |th: T, hits: &mut Vec<PhotonHit<T>>| -> Result<()> {
        let l = plane_at(th)?;
        if let Some(region) = c.surface_contains(&l)? {
            hits.push(PhotonHit {
                plane: l,
                region,
                theta: th,
            });
        }
        Ok(())
    };
    for target in &targets {
        let f = |th: T| at(th).wedge4(target);
        let vals: Vec<T> = grid.iter().map(|&th| f(th)).collect();
        if vals.iter().all(|v| v.abs() <= alg) {
            for &th in &grid {
                test(th, &mut hits)?;
            }
            continue;
        }
        for i in 0..samples {
            if vals[i] * vals[i + 1] > T::zero() {
                continue;
            }
            let (mut lo, mut hi, mut flo) = (grid[i], grid[i + 1], vals[i]);
            for _ in 0..64 {
                let mid = T::half() * (lo + hi);
                let fm = f(mid);
                if fm == T::zero() {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (fm > T::zero()) == (flo > T::zero()) && flo != T::zero() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            test(T::half() * (lo + hi), &mut hits)?;
        }
    }
    Ok(hits)
}

/// How far `l` is from satisfying membership of `region`: the normalized
/// transversality against the relevant locus, plus any violation of the
/// wing sign or of the stem's Maslov condition (reported as `1`).
pub fn membership_residual<T: Scalar>(c: &CrookedSurface<T>, l: &Plane2<T>, region: SurfaceRegion) -> T {
    let space = c.space();
    match region {
        SurfaceRegion::WingPlus | SurfaceRegion::WingMinus => {
            let sign = if region == SurfaceRegion::WingPlus {
                WingSign::Plus
            } else {
                WingSign::Minus
            };
            let vertex = c.wing_vertex(sign);
            let tr = space.transversality(l, vertex).abs();
            if l.same_as(vertex, space.tol().geo) {
                return tr;
            }
            let deficit = match c.wing_coordinates(l, sign) {
                None => T::one(),
                Some((t, s)) => match sign {
                    WingSign::Plus => (-t * s).max(T::zero()),
                    WingSign::Minus => (t * s).max(T::zero()),
                },
            };
            tr.max(deficit)
        }
        SurfaceRegion::Stem => {
            let tr = space
                .transversality(l, c.s1())
                .abs()
                .max(space.transversality(l, c.s2()).abs());
            match space.maslov(c.p0(), l, c.p_inf()) {
                Ok(m) if m.abs() == 2 => tr,
                _ => T::one(),
            }
        }
    }
}

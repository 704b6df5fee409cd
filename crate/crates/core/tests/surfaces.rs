use ein3::crooked::{SurfaceRegion, WingSign};
use ein3::linalg::{Matrix, Vector};
use ein3::oracle::{min_gap, random_sp4, random_surface, sample_surface, RegionMix, Rng};
use ein3::{AdsModel, CrookedSurface, EinModel, LightlikeQuadrilateral, SympSpace};

fn v(c: &[f64]) -> Vector<f64> {
    Vector::from_f64(c)
}

fn canonical(s: &SympSpace) -> CrookedSurface {
    CrookedSurface::new(s, LightlikeQuadrilateral::canonical()).unwrap()
}

#[test]
fn quadrilateral_validation() {
    let s = SympSpace::default();
    let e = |i| Vector::<f64>::basis(4, i);
    assert!(s.quad_new(e(0), e(1), e(3), e(2)).is_ok());
    assert!(s.quad_new(e(0), e(1), e(2), e(3)).is_err());
    assert!(s.quad_new(e(0).scale(2.0), e(1), e(3), e(2).scale(0.5)).is_ok());
}

#[test]
fn photon_examples() {
    let s = SympSpace::default();
    let c = canonical(&s);
    assert!(!c.photon_disjoint(&v(&[1., 0., 0., 0.])).unwrap());
    assert!(c.photon_disjoint(&v(&[1., 1., -1., 1.])).unwrap());
    assert!(!c.photon_disjoint(&v(&[1., 0., 1., 0.])).unwrap());
    let (l, region) = c.intersection_witness(&v(&[1., 0., 1., 0.])).unwrap().unwrap();
    assert_eq!(c.surface_contains(&l).unwrap(), Some(region));
    assert!(c.intersection_witness(&v(&[1., 1., -1., 1.])).unwrap().is_none());
}

#[test]
fn regions_are_exclusive_and_vertices_sit_in_wings() {
    let s = SympSpace::default();
    let c = canonical(&s);
    assert_eq!(c.surface_contains(c.p_plus()).unwrap(), Some(SurfaceRegion::WingPlus));
    assert_eq!(c.surface_contains(c.p_minus()).unwrap(), Some(SurfaceRegion::WingMinus));
    assert!(!c.stem_contains(c.p0()).unwrap());
    let mut rng = Rng::new(4);
    for _ in 0..2000 {
        let l = ein3::oracle::random_lagrangian(&s, &mut rng).unwrap();
        let wp = c.wing_contains(&l, WingSign::Plus).unwrap();
        let wm = c.wing_contains(&l, WingSign::Minus).unwrap();
        let st = c.stem_contains(&l).unwrap();
        assert!([wp, wm, st].iter().filter(|&&b| b).count() <= 1);
    }
}

#[test]
fn membership_is_projectively_invariant() {
    let s = SympSpace::default();
    let mut rng = Rng::new(8);
    for _ in 0..50 {
        let c = random_surface(&s, &mut rng).unwrap();
        let q = c.quad().clone();
        let (a, b) = (rng.uniform(0.2, 5.0), rng.uniform(0.2, 5.0));
        let scaled = LightlikeQuadrilateral {
            u_plus: q.u_plus.scale(a),
            v_minus: q.v_minus.scale(1.0 / a),
            u_minus: q.u_minus.scale(b),
            v_plus: q.v_plus.scale(1.0 / b),
        };
        let c2 = CrookedSurface::new(&s, scaled).unwrap();
        for _ in 0..40 {
            let l = ein3::oracle::random_lagrangian(&s, &mut rng).unwrap();
            assert_eq!(c.surface_contains(&l).unwrap(), c2.surface_contains(&l).unwrap());
        }
    }
}

#[test]
fn a_surface_meets_itself_and_a_perturbation_sharing_an_edge() {
    let s = SympSpace::default();
    let c = canonical(&s);
    assert!(!c.surfaces_disjoint(&c).unwrap());
    // shear fixing e1 and preserving ω
    let g = Matrix::from_rows_f64(&[&[1., 0., 0.1, 0.], &[0., 1., 0., 0.], &[0., 0., 1., 0.], &[0., 0., 0., 1.]]);
    assert!(s.is_symplectic(&g));
    let c2 = CrookedSurface::new(&s, c.quad().transform(&g)).unwrap();
    assert!(!c.surfaces_disjoint(&c2).unwrap());
}

#[test]
fn disjointness_is_symplectically_invariant() {
    let s = SympSpace::default();
    let mut rng = Rng::new(12);
    for _ in 0..100 {
        let (c1, c2) = (random_surface(&s, &mut rng).unwrap(), random_surface(&s, &mut rng).unwrap());
        let r = c1.disjointness_report(&c2).unwrap();
        if r.ambiguous(1e-6).next().is_some() {
            continue;
        }
        let g = random_sp4(&s, &mut rng);
        let moved = |c: &CrookedSurface| CrookedSurface::new(&s, c.quad().transform(&g)).unwrap();
        assert_eq!(r.disjoint, moved(&c1).surfaces_disjoint(&moved(&c2)).unwrap());
    }
}

#[test]
fn separated_ads_planes_give_separated_samples() {
    let ads = AdsModel::default();
    let m = EinModel::default();
    let f = ads.point(Matrix::from_rows_f64(&[&[0., -1.], &[1., 0.]])).unwrap();
    let p1 = ads.crooked_plane(ads.point(Matrix::identity(2)).unwrap(), v(&[1., -2.]), v(&[1., -1.])).unwrap();
    let p2 = ads.crooked_plane(f, v(&[1., 1.]), v(&[2., 1.])).unwrap();
    assert!(ads.ads_disjoint(&p1, &p2));
    assert!(ads.dgk_criterion(&p1, &p2).unwrap());
    let (c1, c2) = (ads.crooked_surface(&p1).unwrap(), ads.crooked_surface(&p2).unwrap());
    assert!(c1.surfaces_disjoint(&c2).unwrap());
    let mut rng = Rng::new(1);
    let a = sample_surface(&m, &c1, 400, RegionMix::default(), &mut rng).unwrap();
    let b = sample_surface(&m, &c2, 400, RegionMix::default(), &mut rng).unwrap();
    assert!(min_gap(&a, &b).unwrap() > 1e-3);
}

#[test]
fn identity_translation_is_never_disjoint() {
    let ads = AdsModel::default();
    let id = ads.point(Matrix::identity(2)).unwrap();
    let p1 = ads.crooked_plane(id.clone(), v(&[1., 0.]), v(&[0., 1.])).unwrap();
    let p2 = ads.crooked_plane(id, v(&[1., 1.]), v(&[1., -1.])).unwrap();
    assert!(!ads.ads_disjoint(&p1, &p2));
    assert!(!ads.dgk_criterion(&p1, &p2).unwrap());
}

#[test]
fn horocycle_distance_formula() {
    let ads = AdsModel::default();
    let xi = ads.boundary_lift(&v(&[1., 0.])).unwrap();
    let xi2 = ads.boundary_lift(&v(&[0., 1.])).unwrap();
    assert_eq!(ads.killing(&xi, &xi2), -1.0);
    // K = −1 = −2 r r' with r = 1, r' = 1/2
    let h1 = ads.horocycle(xi.clone(), 1.0).unwrap();
    let h2 = ads.horocycle(xi2.clone(), 0.5).unwrap();
    assert_eq!(ads.horocycle_distance(&h1, &h2).unwrap(), 0.0);
    // K = −8 r r' with r = r' = 1/(2√2)
    let r = 0.125f64.sqrt();
    let h1 = ads.horocycle(xi, r).unwrap();
    let h2 = ads.horocycle(xi2, r).unwrap();
    let d = ads.horocycle_distance(&h1, &h2).unwrap();
    assert!((d - (17.0f64 / 8.0).acosh()).abs() < 1e-12);
}

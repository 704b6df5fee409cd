use ein3::einstein::{CausalType, IntersectionKind};
use ein3::linalg::Vector;
use ein3::oracle::{random_lagrangian, random_map2, random_nondegenerate_plane, random_sp4, random_unit_spacelike, Rng};
use ein3::symplectic::{Bivector, Map2};
use ein3::{EinModel, SympSpace};
use proptest::prelude::*;

fn v(c: &[f64]) -> Vector<f64> {
    Vector::from_f64(c)
}

#[test]
fn minkowski_patch_trichotomy() {
    let m = EinModel::default();
    let p0 = m.minkowski_embed([0.0, 0.0, 0.0]).unwrap();
    let pinf = m.improper_point();
    let cases = [
        ([0.0, 0.0, 1.0], CausalType::Timelike, true),
        ([1.0, 0.0, 0.0], CausalType::Spacelike, false),
        ([1.0, 0.0, 1.0], CausalType::Lightlike, false),
    ];
    for (x, kind, empty) in cases {
        let p = m.minkowski_embed(x).unwrap();
        assert_eq!(m.classify_point(&p, &p0, &pinf).unwrap(), kind);
        assert_eq!(m.triple_lightcone_empty(&p, &p0, &pinf).unwrap(), empty);
    }
}

#[test]
fn timelike_iff_empty_triple_cone() {
    let m = EinModel::default();
    let p0 = m.minkowski_embed([0.0, 0.0, 0.0]).unwrap();
    let pinf = m.improper_point();
    let mut rng = Rng::new(11);
    for _ in 0..1000 {
        let x = [rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)];
        let p = m.minkowski_embed(x).unwrap();
        let kind = m.classify_point(&p, &p0, &pinf).unwrap();
        if kind == CausalType::Lightlike {
            continue;
        }
        let empty = m.triple_lightcone_empty(&p, &p0, &pinf).unwrap();
        assert_eq!(empty, kind == CausalType::Timelike, "{x:?}");
    }
}

#[test]
fn torus_pairs_follow_eta() {
    let m = EinModel::default();
    let mut rng = Rng::new(3);
    for _ in 0..500 {
        let t1 = m.torus(&random_unit_spacelike(&m, &mut rng).unwrap()).unwrap();
        let t2 = m.torus(&random_unit_spacelike(&m, &mut rng).unwrap()).unwrap();
        let class = m.classify_torus_pair(&t1, &t2);
        let carrier = class.carrier.unwrap();
        let sig = m.space().signature(&carrier);
        match class.kind {
            IntersectionKind::TimelikeCircle => assert!(class.eta < 1.0 && (sig.pos, sig.neg) == (1, 2)),
            IntersectionKind::SpacelikeCircle => assert!(class.eta > 1.0 && (sig.pos, sig.neg) == (2, 1)),
            k => panic!("unexpected {k:?} at eta {}", class.eta),
        }
    }
}

#[test]
fn composition_eigenvalues_match_the_kind() {
    let m = EinModel::default();
    let s1 = v(&[1., 0., 0., 0., 0.]);
    for (s2, real) in [(v(&[0.5, 0.75f64.sqrt(), 0., 0., 0.]), false), (v(&[2., 0., 0., 3., 1.]), true)] {
        let [l1, l2] = m.composition_eigenvalues(&s1, &s2);
        assert!((l1 * l2 - 1.0).norm() < 1e-12);
        if real {
            assert!(l1.im.abs() < 1e-12 && (l1.re - l2.re).abs() > 1.0);
        } else {
            assert!((l1.norm() - 1.0).abs() < 1e-12 && l1.im.abs() > 1e-12);
        }
    }
}

#[test]
fn lagrangians_land_on_the_null_cone() {
    let s = SympSpace::default();
    let m = EinModel::default();
    let mut rng = Rng::new(5);
    for _ in 0..500 {
        let l = random_lagrangian(&s, &mut rng).unwrap();
        let b = s.plucker(&l);
        let scale = b.norm() * b.norm();
        assert!(s.wedge_product(&s.omega_star(), &b).abs() <= 1e-12 * (1.0 + b.norm()));
        assert!(s.wedge_product(&b, &b).abs() <= 1e-12 * scale);
        let p = s.lagrangian_point(&m, &l).unwrap();
        let back = s.point_lagrangian(&p).unwrap();
        assert!(back.same_as(&l, 1e-8));
    }
}

#[test]
fn transversality_matches_intersection() {
    let s = SympSpace::default();
    let mut rng = Rng::new(9);
    for i in 0..300 {
        let p = random_nondegenerate_plane(&s, &mut rng).unwrap();
        let q = if i % 3 == 0 {
            // share a vector with p
            let w = rng.normal_vector(4);
            s.plane(&p.u(), &w).unwrap()
        } else {
            random_nondegenerate_plane(&s, &mut rng).unwrap()
        };
        let tol = s.tol().rank;
        let cap = ein3::linalg::intersect(&p.subspace(tol), &q.subspace(tol), 1e-7).unwrap();
        assert_eq!(s.transverse(&p, &q), cap.dim() == 0);
    }
}

#[test]
fn maslov_examples_and_invariance() {
    let s = SympSpace::default();
    let l = s.plane(&v(&[1., 0., 0., 0.]), &v(&[0., 1., 0., 0.])).unwrap();
    let l2 = s.plane(&v(&[0., 0., 1., 0.]), &v(&[0., 0., 0., 1.])).unwrap();
    let p = s.plane(&v(&[1., 0., 1., 0.]), &v(&[0., 1., 0., 1.])).unwrap();
    let q = s.plane(&v(&[1., 0., 1., 0.]), &v(&[0., 1., 0., -1.])).unwrap();
    assert_eq!(s.maslov(&l, &p, &l2).unwrap(), 2);
    assert_eq!(s.maslov(&l, &q, &l2).unwrap(), 0);
    assert_eq!(s.maslov(&l2, &p, &l).unwrap(), -2);
    let mut rng = Rng::new(21);
    for _ in 0..200 {
        let g = random_sp4(&s, &mut rng);
        let t = |x| s.transform_plane(&g, x).unwrap();
        assert_eq!(s.maslov(&t(&l), &t(&p), &t(&l2)).unwrap(), 2);
        assert_eq!(s.maslov(&t(&l), &t(&q), &t(&l2)).unwrap(), 0);
    }
}

#[test]
fn mu_is_shared_by_complements() {
    let s = SympSpace::default();
    let mut rng = Rng::new(13);
    for _ in 0..300 {
        let p = random_nondegenerate_plane(&s, &mut rng).unwrap();
        let perp = s.symplectic_complement(&p).unwrap();
        let (a, b) = (s.mu(&p).unwrap(), s.mu(&perp).unwrap());
        // equal as spacelike lines; the representatives differ by sign
        assert!((a + b).norm() <= 1e-9 * (1.0 + b.norm()));
        assert!((s.wedge_product(&a, &a) - 0.5).abs() < 1e-9);
        assert!(s.wedge_product(&a, &s.omega_star()).abs() < 1e-9);
    }
}

#[test]
fn graph_eta_matches_determinant() {
    let s = SympSpace::default();
    let m = EinModel::default();
    let mut rng = Rng::new(17);
    let u = Bivector::basis(0, 2) - Bivector::basis(1, 3);
    let sp = s.splitting_from_spacelike(&u).unwrap();
    let base = s.splitting_torus(&m, &sp).unwrap();
    let mut seen = 0;
    while seen < 300 {
        let f: Map2<f64> = random_map2(&mut rng);
        if (f.det_omega() + 1.0).abs() < 0.05 {
            continue;
        }
        seen += 1;
        let t = s.splitting(s.graph(&f, &sp).unwrap(), s.perp_graph(&f, &sp).unwrap()).unwrap();
        let eta = m.eta(&base, &s.splitting_torus(&m, &t).unwrap());
        assert!((eta - s.eta_from_det(&f).unwrap()).abs() < 1e-9);
    }
}

proptest! {
    #[test]
    fn adjugate_identities(a in -4.0..4.0f64, b in -4.0..4.0f64, c in -4.0..4.0f64, d in -4.0..4.0f64) {
        let f = Map2::<f64>::from_f64([[a, b], [c, d]]);
        let adj = f.adjugate();
        let prod = adj.compose(&f);
        let det = f.det_omega();
        let m = prod.matrix();
        prop_assert!((m[(0, 0)] - det).abs() < 1e-12 && (m[(1, 1)] - det).abs() < 1e-12);
        prop_assert!(m[(0, 1)].abs() < 1e-12 && m[(1, 0)].abs() < 1e-12);
        let back = adj.adjugate();
        prop_assert!((back.matrix() - f.matrix()).norm_max() == 0.0);
    }

    #[test]
    fn adjugate_of_integer_maps_is_exact(a in -9i32..9, b in -9i32..9, c in -9i32..9, d in -9i32..9) {
        let f = Map2::<f64>::from_f64([[a as f64, b as f64], [c as f64, d as f64]]);
        let m = f.adjugate().compose(&f);
        let det = f.det_omega();
        prop_assert_eq!(det, (a * d - b * c) as f64);
        prop_assert_eq!((m.matrix()[(0, 0)], m.matrix()[(0, 1)]), (det, 0.0));
    }

    #[test]
    fn reflection_is_an_involution(seed in any::<u64>()) {
        let m = EinModel::default();
        let mut rng = Rng::new(seed);
        let s = random_unit_spacelike(&m, &mut rng).unwrap();
        let x: Vector<f64> = rng.normal_vector(5);
        let twice = m.reflect(&s, &m.reflect(&s, &x).unwrap()).unwrap();
        prop_assert!((&twice - &x).norm() <= 1e-12 * (1.0 + x.norm()) * (1.0 + s.dot(&s)));
    }
}

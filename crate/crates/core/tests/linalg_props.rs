use ein3::linalg::{intersect, projective_normalize, Matrix, Subspace, Vector};
use ein3::{EinModel, Tolerance};
use proptest::prelude::*;

fn coords(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0..3.0f64, n)
}

fn vectors(k: usize) -> impl Strategy<Value = Vec<Vector<f64>>> {
    prop::collection::vec(coords(5).prop_map(Vector::new), k)
}

proptest! {
    #[test]
    fn inner_is_bilinear_and_symmetric(x in coords(5), y in coords(5), z in coords(5), a in -2.0..2.0f64) {
        let m = EinModel::default();
        let (x, y, z) = (Vector::new(x), Vector::new(y), Vector::new(z));
        let s = m.space();
        let lhs = s.inner(&x.axpy(a, &y), &z).unwrap();
        let rhs = s.inner(&x, &z).unwrap() + a * s.inner(&y, &z).unwrap();
        let scale = 1.0 + x.norm() * z.norm() + a.abs() * y.norm() * z.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        prop_assert!((s.inner(&x, &y).unwrap() - s.inner(&y, &x).unwrap()).abs() <= 1e-12 * (1.0 + x.norm() * y.norm()));
    }

    #[test]
    fn signatures_add_up(vs in vectors(2)) {
        let m = EinModel::default();
        let sub = Subspace::span(5, &vs, 1e-9).unwrap();
        let sig = m.space().signature(&sub);
        prop_assume!(sig.zero == 0);
        let perp = m.space().orthogonal_complement(&sub);
        let sp = m.space().signature(&perp);
        prop_assert_eq!((sig.pos + sp.pos, sig.neg + sp.neg, sp.zero), (3, 2, 0));
    }

    #[test]
    fn dimension_formula(a in vectors(3), b in vectors(3), shared in 0usize..3) {
        let mut b = b;
        for (i, v) in a.iter().take(shared).enumerate() {
            b[i] = v.clone();
        }
        let sa = Subspace::span(5, &a, 1e-9).unwrap();
        let sb = Subspace::span(5, &b, 1e-9).unwrap();
        let cap = intersect(&sa, &sb, 1e-9).unwrap();
        let cup = sa.sum(&sb, 1e-9);
        prop_assert_eq!(cap.dim() + cup.dim(), sa.dim() + sb.dim());
    }

    #[test]
    fn projective_normalize_is_idempotent(x in coords(5), lambda in prop_oneof![-5.0..-0.1f64, 0.1..5.0f64]) {
        let v = Vector::new(x);
        prop_assume!(v.norm() > 1e-3);
        let n = projective_normalize(&v).unwrap();
        prop_assert!((&projective_normalize(&n).unwrap() - &n).norm() < 1e-14);
        prop_assert!((&projective_normalize(&v.scale(lambda)).unwrap() - &n).norm() < 1e-12);
    }
}

#[test]
fn orthogonal_complement_of_improper_point() {
    let m = EinModel::default();
    let pinf = Subspace::span(5, &[Vector::from_f64(&[0., 0., 0., 1., 0.])], 1e-9).unwrap();
    let perp = m.space().orthogonal_complement(&pinf);
    assert_eq!(perp.dim(), 4);
    assert!(perp.contains(&Vector::from_f64(&[0., 0., 0., 1., 0.]), 1e-12));
    assert!(!perp.contains(&Vector::from_f64(&[0., 0., 0., 0., 1.]), 1e-6));
}

#[test]
fn matrix_exp_of_nilpotent() {
    let n = Matrix::<f64>::from_rows_f64(&[&[0., 1.], &[0., 0.]]);
    let e = n.exp();
    let want = Matrix::from_rows_f64(&[&[1., 1.], &[0., 1.]]);
    assert!((&e - &want).norm_max() < 1e-14);
    assert_eq!(Tolerance::<f64>::default().alg, 1e-9);
}

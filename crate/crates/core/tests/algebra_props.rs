use nk6_core::octonion::{Octonion, CANONICAL_TRIPLES};
use nk6_core::sphere::{almost_complex, tangent_project};
use nk6_core::{SpherePoint, Vec7};
use proptest::prelude::*;

fn oct() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-10.0f64..10.0).prop_map(Octonion)
}

fn imag() -> impl Strategy<Value = Vec7> {
    prop::array::uniform7(-10.0f64..10.0).prop_map(Vec7)
}

fn close(a: &Octonion, b: &Octonion, scale: f64) -> bool {
    (*a - *b).norm() <= 1e-12 * (1.0 + scale)
}

proptest! {
    #[test]
    fn norm_is_multiplicative(a in oct(), b in oct()) {
        let lhs = (a * b).norm();
        let rhs = a.norm() * b.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs), "{lhs} vs {rhs}");
    }

    #[test]
    fn product_is_bilinear(a in oct(), b in oct(), c in oct(), t in -5.0f64..5.0) {
        let scale = (a.norm() + b.norm() * t.abs()) * c.norm();
        prop_assert!(close(&((a + b * t) * c), &(a * c + (b * c) * t), scale));
        prop_assert!(close(&(c * (a + b * t)), &(c * a + (c * b) * t), scale));
    }

    #[test]
    fn alternative_laws(a in oct(), b in oct()) {
        let scale = a.norm() * a.norm() * b.norm();
        prop_assert!(close(&(a * (a * b)), &((a * a) * b), scale));
        prop_assert!(close(&((b * a) * a), &(b * (a * a)), scale));
    }

    #[test]
    fn conjugation_reverses_products(a in oct(), b in oct()) {
        let scale = a.norm() * b.norm();
        prop_assert!(close(&(a * b).conjugate(), &(b.conjugate() * a.conjugate()), scale));
    }

    #[test]
    fn cross_product_laws(x in imag(), y in imag()) {
        let c = x.cross(&y);
        let scale = x.norm() * y.norm();
        prop_assert!((c + y.cross(&x)).max_abs() <= 1e-12 * (1.0 + scale));
        prop_assert!(c.dot(&x).abs() <= 1e-11 * (1.0 + scale * x.norm()));
        prop_assert!(c.dot(&y).abs() <= 1e-11 * (1.0 + scale * y.norm()));
        let lagrange = x.norm_sq() * y.norm_sq() - x.dot(&y).powi(2);
        prop_assert!((c.norm_sq() - lagrange).abs() <= 1e-10 * (1.0 + scale * scale));
    }

    #[test]
    fn cross_matches_product_plus_inner(x in imag(), y in imag()) {
        let prod = x.to_octonion() * y.to_octonion();
        let expected = Octonion::from_imaginary(x.cross(&y).0);
        let lifted = prod + Octonion::real(x.dot(&y));
        prop_assert!(close(&lifted, &expected, x.norm() * y.norm()));
        prop_assert!(x.to_octonion().cross(&y.to_octonion()).unwrap().is_pure_imaginary());
    }

    #[test]
    fn j_is_an_orthogonal_complex_structure(p in imag(), v in imag()) {
        prop_assume!(p.norm() > 1e-3);
        let sp = SpherePoint::normalize(p).unwrap();
        let t = tangent_project(&sp, &v);
        let jt = almost_complex(&sp, &t).unwrap();
        let jjt = almost_complex(&sp, &jt).unwrap();
        let scale = 1.0 + t.norm();
        prop_assert!((jjt + t).max_abs() <= 1e-12 * scale);
        prop_assert!((jt.norm() - t.norm()).abs() <= 1e-12 * scale);
        prop_assert!(jt.dot(&t).abs() <= 1e-11 * scale * scale);
        prop_assert!(jt.dot(&sp.position()).abs() <= 1e-12 * scale);
    }
}

#[test]
fn fano_lines_close_cyclically() {
    for [i, j, k] in CANONICAL_TRIPLES {
        let (i, j, k) = (i as usize, j as usize, k as usize);
        let e = Octonion::basis;
        assert_eq!(e(i) * e(j), e(k));
        assert_eq!(e(j) * e(k), e(i));
        assert_eq!(e(k) * e(i), e(j));
        assert_eq!(e(j) * e(i), -e(k));
    }
}

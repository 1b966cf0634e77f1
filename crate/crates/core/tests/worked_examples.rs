use nk6_core::acms::{self, eta, phi_natural, phi_prime, pivot_line, xi_field, y_one, AcmStructure, EtaForm};
use nk6_core::calculus::exterior_derivative;
use nk6_core::hypersphere::{coordinate_tangent, sample_points, scalar_invariants, unit_normal};
use nk6_core::sampling::Sampler;
use nk6_core::{DiffConfig, HypersphereParam, MPoint, Vec7};
use proptest::prelude::*;

fn param(r: f64) -> HypersphereParam {
    HypersphereParam::new(r).unwrap()
}

fn witness_point() -> MPoint {
    MPoint::new(param(0.0), [0.6, 0.8, 0.0, 0.0, 0.0, 0.0]).unwrap()
}

fn d_eta(x: &MPoint, u: &Vec7, v: &Vec7) -> f64 {
    exterior_derivative(&EtaForm(x.param()), &x.position(), u, v, &DiffConfig::default()).unwrap()
}

#[test]
fn natural_structure_witness() {
    let x = witness_point();
    let x12 = coordinate_tangent(1, 2, &x).unwrap();
    let x13 = coordinate_tangent(1, 3, &x).unwrap();
    let g = x12.dot(&phi_natural(&x, &x13).unwrap());
    assert!((g + 0.6).abs() <= 1e-12, "{g}");
    assert!(d_eta(&x, &x12, &x13).abs() <= 1e-8);
}

#[test]
fn normal_product_y_values() {
    let x = witness_point();
    let (x1, x2) = (0.6, 0.8);
    let y12 = y_one(2, &x).unwrap();
    let y15 = y_one(5, &x).unwrap();
    let y16 = y_one(6, &x).unwrap();
    let d15 = d_eta(&x, &y12, &y15);
    let g15 = y12.dot(&phi_prime(&x, &y15).unwrap());
    assert!((d15 + x1 * x1).abs() <= 1e-10, "{d15}");
    assert!((g15 + x1 * x1).abs() <= 1e-10, "{g15}");
    let d16 = d_eta(&x, &y12, &y16);
    let g16 = y12.dot(&phi_prime(&x, &y16).unwrap());
    assert!((d16 - x1 * x2).abs() <= 1e-10, "{d16}");
    assert!((g16 - x1 * x2).abs() <= 1e-10, "{g16}");
}

#[test]
fn y_fields_are_horizontal() {
    let mut s = Sampler::new(9);
    for r in [-0.5, 0.0, 0.8] {
        for _ in 0..50 {
            let x = s.point_on(param(r));
            for b in 2..=6 {
                let y = y_one(b, &x).unwrap();
                assert!(eta(&x, &y).abs() < 1e-12);
                assert!(y.dot(&unit_normal(&x)).abs() < 1e-12);
                assert!(y.dot(&x.position()).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn basis_values_at_e1() {
    let x = MPoint::new(param(0.0), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
    assert_eq!(unit_normal(&x), -Vec7::basis(7));
    assert_eq!(xi_field(&x), -Vec7::basis(6));
    assert_eq!(phi_natural(&x, &Vec7::basis(2)).unwrap(), Vec7::basis(3));
    assert_eq!(phi_prime(&x, &Vec7::basis(2)).unwrap(), Vec7::basis(5));
}

#[test]
fn scalar_spot_values() {
    let i0 = scalar_invariants(param(0.0));
    assert_eq!((i0.tau, i0.f, i0.alpha), (20.0, 0.0, 0.0));
    let i6 = scalar_invariants(param(0.6));
    assert!((i6.tau - 31.25).abs() < 1e-12);
    assert!((i6.f + 0.75).abs() < 1e-12 && (i6.alpha + 0.75).abs() < 1e-12);
}

#[test]
fn samples_are_on_m_r_and_centred() {
    for r in [-0.7, 0.0, 0.3] {
        let pts = sample_points(param(r), 4000, 123);
        let mut mean = [0.0; 6];
        for x in &pts {
            let n: f64 = x.coords().iter().map(|c| c * c).sum();
            assert!((n - param(r).radius().powi(2)).abs() < 1e-12);
            assert_eq!(x.r(), r);
            for (m, c) in mean.iter_mut().zip(x.coords()) {
                *m += c / pts.len() as f64;
            }
        }
        // Each coordinate has variance s²/6; 4000 samples put 5σ near 0.03.
        for m in mean {
            assert!(m.abs() < 0.03, "r = {r}: mean {m}");
        }
    }
    assert_eq!(sample_points(param(0.1), 5, 1), sample_points(param(0.1), 5, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// On M₀, `g(X_{a,b}, φX_{a,c}) = −x_a(x_a² + x_b² + x_c²)` while
    /// `dη(X_{a,b}, X_{a,c})` vanishes, for the pivot line of every `a`.
    #[test]
    fn pivot_witness_formula(seed in any::<u64>(), a in 1usize..=6) {
        let mut s = Sampler::new(seed);
        let x = s.point_on(param(0.0));
        let (b, c) = pivot_line(a);
        let (d, g) = acms::pivot_witness(&AcmStructure::induced(), &x, a, &DiffConfig::default()).unwrap();
        let (xa, xb, xc) = (x.coord(a), x.coord(b), x.coord(c));
        let want = -xa * (xa * xa + xb * xb + xc * xc);
        prop_assert!((g - want).abs() < 1e-12, "{g} vs {want}");
        prop_assert!(d.abs() < 1e-8);
    }

    #[test]
    fn structures_satisfy_phi_squared(seed in any::<u64>(), r in -0.95f64..0.95) {
        let mut s = Sampler::new(seed);
        let x = s.point_on(param(r));
        let v = s.tangent_unit(&x);
        for st in [AcmStructure::induced(), AcmStructure::normal_product()] {
            let phi2 = st.phi(&x, &st.phi(&x, &v).unwrap()).unwrap();
            let expected = -v + st.xi(&x) * st.eta(&x, &v);
            prop_assert!((phi2 - expected).max_abs() < 1e-12);
        }
    }
}

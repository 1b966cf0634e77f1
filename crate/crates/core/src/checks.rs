//! Checks on the ambient geometry: the nearly Kähler condition on `S⁶`, and
//! umbilicity, curvature and scalar invariants of `M_r`.

use crate::calculus::DiffConfig;
use crate::error::Result;
use crate::hypersphere::{
    meridian_curve, meridian_velocity, scalar_invariants, sectional_curvature, shape_operator, unit_normal,
    HypersphereParam, TangentProjectionField, MAX_ABS_R,
};
use crate::report::{Accumulator, CheckReport, Criterion};
use crate::sampling::Sampler;
use crate::sphere::{nearly_kahler_tensor, SphereTangentField};

pub const NEARLY_KAHLER_TOL: f64 = 1e-5;
pub const UMBILICITY_TOL: f64 = 1e-6;
pub const CURVATURE_TOL: f64 = 1e-3;
pub const SCALAR_IDENTITY_TOL: f64 = 1e-12;
pub const MERIDIAN_TOL: f64 = 1e-10;

/// `max |G(X, X)|` together with `<G(X, Y), X>` and `<G(X, Y), Y>` for unit
/// tangent `X`, `Y` at uniform points of `S⁶`.
pub fn nearly_kahler_check(n: usize, seed: u64, cfg: &DiffConfig) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for _ in 0..n {
        let p = sampler.point_on_sphere();
        let xv = sampler.sphere_tangent(&p);
        let yv = sampler.sphere_tangent(&p);
        let x = SphereTangentField(xv * (1.0 / xv.norm()));
        let y = SphereTangentField(yv * (1.0 / yv.norm()));
        let gxx = nearly_kahler_tensor(&p, &x, &x, cfg)?;
        let gxy = nearly_kahler_tensor(&p, &x, &y, cfg)?;
        let res = gxx.norm().max(gxy.dot(&x.0).abs()).max(gxy.dot(&y.0).abs());
        acc.push(res, p.position().0, Some(x.0 .0));
    }
    Ok(acc.finish("nearly_kahler", None, Criterion::MaxLe, NEARLY_KAHLER_TOL))
}

/// `|Av + (r/√(1−r²)) v|` for unit tangent `v`.
pub fn umbilicity_check(param: HypersphereParam, n: usize, seed: u64, cfg: &DiffConfig) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    let k = param.umbilic_factor();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let v = sampler.tangent_unit(&x);
        let res = (shape_operator(&x, &v, cfg)? + v * k).norm();
        acc.push(res, x.position().0, Some(v.0));
    }
    Ok(acc.finish("umbilicity", Some(param.r()), Criterion::MaxLe, UMBILICITY_TOL))
}

/// `|K(σ) − 1/(1−r²)|` over random orthonormal tangent planes, with `K`
/// from iterated numerical connections.
pub fn curvature_check(param: HypersphereParam, n: usize, seed: u64, cfg: &DiffConfig) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    let expected = param.sectional_curvature();
    let mut sum = 0.0;
    for _ in 0..n {
        let x = sampler.point_on(param);
        let frame = sampler.tangent_frame(&x);
        let xf = TangentProjectionField { param, c: frame[0] };
        let yf = TangentProjectionField { param, c: frame[1] };
        let k = sectional_curvature(&xf, &yf, &x, cfg)?;
        sum += k;
        acc.push((k - expected).abs(), x.position().0, None);
    }
    let mean = if n > 0 { sum / n as f64 } else { f64::NAN };
    Ok(acc
        .finish("curvature", Some(param.r()), Criterion::MaxLe, CURVATURE_TOL)
        .observe("expected", expected)
        .observe("mean_estimate", mean))
}

/// Mean sectional curvature estimate over `n` random planes.
pub fn curvature_estimate(param: HypersphereParam, n: usize, seed: u64, cfg: &DiffConfig) -> Result<f64> {
    let rep = curvature_check(param, n, seed, cfg)?;
    Ok(rep.observation("mean_estimate").unwrap_or(f64::NAN))
}

/// `|τ − (20 + 5α(5α − f))|` at one `r`.
pub fn scalar_identity_check(param: HypersphereParam) -> CheckReport {
    let inv = scalar_invariants(param);
    let mut acc = Accumulator::new();
    acc.push(inv.identity_residual.abs(), [0.0; 7], None);
    acc.finish("scalar_identity", Some(param.r()), Criterion::MaxLe, SCALAR_IDENTITY_TOL)
        .observe("tau", inv.tau)
        .observe("f", inv.f)
        .observe("alpha", inv.alpha)
}

/// The `n` grid values `r_k = −0.99 + 1.98 (k + ½)/n`, strictly inside the
/// admissible range.
pub fn r_grid(n: usize) -> impl Iterator<Item = HypersphereParam> {
    (0..n).map(move |k| {
        // Symmetric form: the middle point of an odd grid is exactly 0.
        let r = MAX_ABS_R * (2.0 * k as f64 + 1.0 - n as f64) / n as f64;
        HypersphereParam::new(r).expect("grid lies inside the admissible range")
    })
}

/// Scalar identity over [`r_grid`].
pub fn scalar_identity_grid(n: usize) -> CheckReport {
    let mut acc = Accumulator::new();
    for param in r_grid(n) {
        let inv = scalar_invariants(param);
        let mut w = [0.0; 7];
        w[6] = param.r();
        acc.push(inv.identity_residual.abs(), w, None);
    }
    acc.finish("scalar_identity_grid", None, Criterion::MaxLe, SCALAR_IDENTITY_TOL)
}

/// The meridian `γ_x` stays on `S⁶`, has unit speed, and `γ̇_x(θ) = ν_x`.
pub fn meridian_check(param: HypersphereParam, n: usize, seed: u64) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let t = sampler.uniform() * core::f64::consts::PI;
        let on_sphere = (meridian_curve(&x, t)?.position().norm() - 1.0).abs();
        let speed = (meridian_velocity(&x, t).norm() - 1.0).abs();
        let theta = param.theta();
        let through = (meridian_curve(&x, theta)?.position() - x.position()).norm();
        let normal = (meridian_velocity(&x, theta) - unit_normal(&x)).norm();
        let res = on_sphere.max(speed).max(through).max(normal);
        acc.push(res, x.position().0, None);
    }
    Ok(acc.finish("meridian", Some(param.r()), Criterion::MaxLe, MERIDIAN_TOL))
}

//! The hyperspheres `M_r = S⁶ ∩ {x₇ = r}`, `Σ_{i≤6} xᵢ² = 1 − r²`.
//!
//! `M_r` is a round 5-sphere of radius `s = √(1−r²)`. Its tangent space at
//! `x` is the orthogonal complement of `span{x̂, e₇}`, where `x̂` is the unit
//! direction of the first six coordinates. Fields that are only defined on
//! `M_r` are extended to `E⁷` through [`retract`].

use alloc::vec::Vec;

use crate::calculus::{directional_derivative, directional_derivative_step, lie_bracket, DiffConfig, VectorField};
use crate::error::{Error, Result};
use crate::math;
use crate::sampling::Sampler;
use crate::sphere::SpherePoint;
use crate::vector::Vec7;

/// Largest admissible `|r|`.
pub const MAX_ABS_R: f64 = 0.99;
/// Accepted defect of `Σ xᵢ² = 1 − r²`.
pub const MEMBERSHIP_TOL: f64 = 1e-12;
/// Tangency tolerance for operator inputs.
pub const TANGENT_TOL: f64 = 1e-8;

/// The height `r` of `M_r`, restricted to `|r| < 0.99`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypersphereParam(f64);

impl HypersphereParam {
    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() && math::abs(r) < MAX_ABS_R {
            Ok(HypersphereParam(r))
        } else {
            Err(Error::ParameterOutOfRange { name: "r", value: r })
        }
    }

    pub fn r(&self) -> f64 {
        self.0
    }

    /// Radius `√(1−r²)` of the 5-sphere.
    pub fn radius(&self) -> f64 {
        math::sqrt(1.0 - self.0 * self.0)
    }

    /// Angle `θ` with `cos θ = r`, `0 < θ < π`.
    pub fn theta(&self) -> f64 {
        math::acos(self.0)
    }

    /// `r/√(1−r²)`: the shape operator is `−umbilic_factor · I`.
    pub fn umbilic_factor(&self) -> f64 {
        self.0 / self.radius()
    }

    /// Constant sectional curvature `1/(1−r²)`.
    pub fn sectional_curvature(&self) -> f64 {
        1.0 / (1.0 - self.0 * self.0)
    }
}

/// A point `Σ_{i≤6} xᵢeᵢ + r e₇` of `M_r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MPoint {
    param: HypersphereParam,
    x: [f64; 6],
}

impl MPoint {
    pub fn new(param: HypersphereParam, x: [f64; 6]) -> Result<Self> {
        if x.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("non-finite coordinates"));
        }
        let sq: f64 = x.iter().map(|c| c * c).sum();
        let defect = math::abs(sq - (1.0 - param.r() * param.r()));
        if defect > MEMBERSHIP_TOL {
            return Err(Error::OffManifold { residual: defect });
        }
        Ok(MPoint { param, x })
    }

    /// Rescales the six coordinates onto `M_r`.
    pub fn normalized(param: HypersphereParam, x: [f64; 6]) -> Result<Self> {
        let n = math::sqrt(x.iter().map(|c| c * c).sum());
        if !n.is_finite() || n <= 1e-12 {
            return Err(Error::Domain("coordinates too close to the e7 axis"));
        }
        let k = param.radius() / n;
        let mut y = x;
        for c in y.iter_mut() {
            *c *= k;
        }
        Ok(MPoint { param, x: y })
    }

    pub fn param(&self) -> HypersphereParam {
        self.param
    }

    pub fn r(&self) -> f64 {
        self.param.r()
    }

    pub fn coords(&self) -> &[f64; 6] {
        &self.x
    }

    /// `x_i` for `1 ≤ i ≤ 7` (`x₇ = r`).
    pub fn coord(&self, i: usize) -> f64 {
        if i == 7 {
            self.r()
        } else {
            self.x[i - 1]
        }
    }

    pub fn position(&self) -> Vec7 {
        let mut c = [0.0; 7];
        c[..6].copy_from_slice(&self.x);
        c[6] = self.r();
        Vec7(c)
    }

    pub fn sphere_point(&self) -> SpherePoint {
        // |x|² = 1 − r² + r² up to rounding
        SpherePoint::normalize(self.position()).expect("M_r lies on S⁶")
    }

    /// Unit direction `x̂` of the first six coordinates, as a vector of `E⁷`.
    pub fn radial(&self) -> Vec7 {
        let mut c = [0.0; 7];
        let s = self.param.radius();
        for (k, v) in self.x.iter().enumerate() {
            c[k] = v / s;
        }
        Vec7(c)
    }
}

/// Nearest point of `M_r` to `q`: keep `x₁…x₆`'s direction, rescale to
/// radius `√(1−r²)` and set `x₇ = r`.
pub fn retract(param: HypersphereParam, q: &Vec7) -> Result<MPoint> {
    let mut x = [0.0; 6];
    x.copy_from_slice(&q.0[..6]);
    MPoint::normalized(param, x)
}

/// Orthogonal projection onto `T_xM_r`: drop `e₇` and the `x̂` component.
pub fn tangent_project(x: &MPoint, v: &Vec7) -> Vec7 {
    let mut w = *v;
    w[6] = 0.0;
    let n = x.radial();
    w - n * w.dot(&n)
}

/// Size of the component of `v` normal to `M_r` (inside `E⁷`).
pub fn normal_defect(x: &MPoint, v: &Vec7) -> f64 {
    (*v - tangent_project(x, v)).norm()
}

pub(crate) fn require_tangent(x: &MPoint, v: &Vec7) -> Result<()> {
    let d = normal_defect(x, v);
    if d <= TANGENT_TOL * (1.0 + v.norm()) {
        Ok(())
    } else {
        Err(Error::NotTangent { residual: d })
    }
}

/// `γ_x(t) = (cos t) e₇ + (sin t / √(1−r²)) Σ xᵢeᵢ`, `0 ≤ t ≤ π`.
pub fn meridian_curve(x: &MPoint, t: f64) -> Result<SpherePoint> {
    if !(0.0..=core::f64::consts::PI).contains(&t) {
        return Err(Error::ParameterOutOfRange { name: "t", value: t });
    }
    let mut v = x.radial() * math::sin(t);
    v[6] = math::cos(t);
    SpherePoint::new(v)
}

/// Velocity `γ̇_x(t)`.
pub fn meridian_velocity(x: &MPoint, t: f64) -> Vec7 {
    let mut v = x.radial() * math::cos(t);
    v[6] = -math::sin(t);
    v
}

/// `ν_x = (r/√(1−r²)) Σ xᵢ∂ᵢ − √(1−r²) ∂₇`.
pub fn unit_normal(x: &MPoint) -> Vec7 {
    NormalField(x.param()).at(&x.position())
}

/// The unit normal as a linear ambient field with `r` held fixed.
#[derive(Clone, Copy, Debug)]
pub struct NormalField(pub HypersphereParam);

impl NormalField {
    fn at(&self, q: &Vec7) -> Vec7 {
        let k = self.0.umbilic_factor();
        let mut v = *q * k;
        v[6] = -self.0.radius();
        v
    }
}

impl VectorField for NormalField {
    fn eval(&self, q: &Vec7) -> Result<Vec7> {
        Ok(self.at(q))
    }
}

fn check_pair(a: usize, b: usize) -> Result<()> {
    if a == b || !(1..=6).contains(&a) || !(1..=6).contains(&b) {
        Err(Error::InvalidIndex { a, b })
    } else {
        Ok(())
    }
}

/// `X_{a,b} = −x_b e_a + x_a e_b`, the rotation field of the `(a, b)` plane.
pub fn coordinate_tangent(a: usize, b: usize, x: &MPoint) -> Result<Vec7> {
    CoordinateTangentField::new(a, b)?.eval(&x.position())
}

#[derive(Clone, Copy, Debug)]
pub struct CoordinateTangentField {
    a: usize,
    b: usize,
}

impl CoordinateTangentField {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        check_pair(a, b)?;
        Ok(CoordinateTangentField { a, b })
    }
}

impl VectorField for CoordinateTangentField {
    fn eval(&self, q: &Vec7) -> Result<Vec7> {
        let mut v = Vec7::ZERO;
        v[self.a - 1] = -q.coord(self.b);
        v[self.b - 1] = q.coord(self.a);
        Ok(v)
    }
}

/// Tangent field `q ↦ (c)ᵀ` at the retraction of `q`.
#[derive(Clone, Copy, Debug)]
pub struct TangentProjectionField {
    pub param: HypersphereParam,
    pub c: Vec7,
}

impl VectorField for TangentProjectionField {
    fn eval(&self, q: &Vec7) -> Result<Vec7> {
        let m = retract(self.param, q)?;
        Ok(tangent_project(&m, &self.c))
    }
}

/// A field defined on `M_r`, extended to `E⁷` by [`retract`].
pub struct Retracted<F> {
    param: HypersphereParam,
    f: F,
}

impl<F> Retracted<F>
where
    F: Fn(&MPoint) -> Result<Vec7>,
{
    pub fn new(param: HypersphereParam, f: F) -> Self {
        Retracted { param, f }
    }
}

impl<F> VectorField for Retracted<F>
where
    F: Fn(&MPoint) -> Result<Vec7>,
{
    fn eval(&self, q: &Vec7) -> Result<Vec7> {
        (self.f)(&retract(self.param, q)?)
    }
}

/// Weingarten map `A v = −(D_v ν)ᵀ` with respect to `ν`.
pub fn shape_operator(x: &MPoint, v: &Vec7, cfg: &DiffConfig) -> Result<Vec7> {
    require_tangent(x, v)?;
    let dnu = directional_derivative(&NormalField(x.param()), &x.position(), v, cfg)?;
    Ok(-tangent_project(x, &dnu))
}

/// `∇_v Y = (D_v Y)ᵀ` for a single tangent vector.
pub fn nabla_m_along<Y>(y: &Y, x: &MPoint, v: &Vec7, cfg: &DiffConfig) -> Result<Vec7>
where
    Y: VectorField + ?Sized,
{
    Ok(tangent_project(x, &directional_derivative(y, &x.position(), v, cfg)?))
}

/// Induced Levi-Civita connection `∇_X Y` of `(M_r, g)`.
pub fn nabla_m<X, Y>(xf: &X, yf: &Y, x: &MPoint, cfg: &DiffConfig) -> Result<Vec7>
where
    X: VectorField + ?Sized,
    Y: VectorField + ?Sized,
{
    let v = xf.eval(&x.position())?;
    nabla_m_along(yf, x, &v, cfg)
}

/// `R(X, Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]} Z`.
///
/// Inner connections use `h₁`; the outer derivative of `∇_Y Z` uses `h₂`.
pub fn riemann<X, Y, Z>(xf: &X, yf: &Y, zf: &Z, x: &MPoint, cfg: &DiffConfig) -> Result<Vec7>
where
    X: VectorField + ?Sized,
    Y: VectorField + ?Sized,
    Z: VectorField + ?Sized,
{
    let param = x.param();
    let p = x.position();
    let xv = xf.eval(&p)?;
    let yv = yf.eval(&p)?;
    let nabla_y_z = Retracted::new(param, |m: &MPoint| nabla_m(yf, zf, m, cfg));
    let nabla_x_z = Retracted::new(param, |m: &MPoint| nabla_m(xf, zf, m, cfg));
    let a = tangent_project(x, &directional_derivative_step(&nabla_y_z, &p, &xv, cfg.h2)?);
    let b = tangent_project(x, &directional_derivative_step(&nabla_x_z, &p, &yv, cfg.h2)?);
    let bracket = lie_bracket(xf, yf, &p, cfg)?;
    let c = nabla_m_along(zf, x, &bracket, cfg)?;
    Ok(a - b - c)
}

/// `g(R(X,Y)Y, X) / (|X|²|Y|² − g(X,Y)²)`.
pub fn sectional_curvature<X, Y>(xf: &X, yf: &Y, x: &MPoint, cfg: &DiffConfig) -> Result<f64>
where
    X: VectorField + ?Sized,
    Y: VectorField + ?Sized,
{
    let p = x.position();
    let xv = xf.eval(&p)?;
    let yv = yf.eval(&p)?;
    let area = xv.norm_sq() * yv.norm_sq() - xv.dot(&yv) * xv.dot(&yv);
    if area.is_nan() || area <= 1e-12 {
        return Err(Error::Domain("degenerate tangent plane"));
    }
    Ok(riemann(xf, yf, yf, x, cfg)?.dot(&xv) / area)
}

/// Closed-form scalar invariants of `M_r`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScalarInvariants {
    /// Scalar curvature `τ`.
    pub tau: f64,
    /// `f = g(Aξ, ξ)`.
    pub f: f64,
    /// Mean curvature `α = tr A / 5`.
    pub alpha: f64,
    /// `τ − (20 + 5α(5α − f))`.
    pub identity_residual: f64,
}

pub fn scalar_invariants(param: HypersphereParam) -> ScalarInvariants {
    let k = param.umbilic_factor();
    // Five equal principal curvatures −k, and |ξ| = 1.
    // `0.0 - k` rather than `-k` so that r = 0 gives +0.
    let principal = 0.0 - k;
    let f = principal;
    let alpha = (5.0 * principal) / 5.0;
    // Gauss equation: constant curvature 1 + k², 5·4 ordered pairs.
    let tau = 20.0 * param.sectional_curvature();
    let identity_residual = tau - (20.0 + 5.0 * alpha * (5.0 * alpha - f));
    ScalarInvariants { tau, f, alpha, identity_residual }
}

/// `F_r : M_r → M₀`, `Σ xᵢeᵢ + r e₇ ↦ Σ xᵢeᵢ / √(1−r²)`.
pub fn f_map(x: &MPoint) -> Result<MPoint> {
    let s = x.param().radius();
    let mut y = *x.coords();
    for c in y.iter_mut() {
        *c /= s;
    }
    MPoint::normalized(HypersphereParam(0.0), y)
}

/// Inverse of [`f_map`] onto `M_r`.
pub fn f_inverse(y: &MPoint, param: HypersphereParam) -> Result<MPoint> {
    if y.r() != 0.0 {
        return Err(Error::ParameterOutOfRange { name: "r of F_r image", value: y.r() });
    }
    let s = param.radius();
    let mut x = *y.coords();
    for c in x.iter_mut() {
        *c *= s;
    }
    MPoint::normalized(param, x)
}

/// Differential of `F_r` on `T_xM_r`: scaling of the first six components.
pub fn f_pushforward(param: HypersphereParam, v: &Vec7) -> Vec7 {
    let mut w = *v * (1.0 / param.radius());
    w[6] = 0.0;
    w
}

/// Differential of `F_r⁻¹` on `T_yM₀`.
pub fn f_inverse_pushforward(param: HypersphereParam, v: &Vec7) -> Vec7 {
    let mut w = *v * param.radius();
    w[6] = 0.0;
    w
}

/// `n` points uniform on `M_r`, deterministic in `seed`.
pub fn sample_points(param: HypersphereParam, n: usize, seed: u64) -> Vec<MPoint> {
    let mut s = Sampler::new(seed);
    (0..n).map(|_| s.point_on(param)).collect()
}

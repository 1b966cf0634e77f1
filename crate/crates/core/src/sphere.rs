//! The unit sphere `S⁶ ⊂ Im 𝕆` with its nearly Kähler structure
//! `J_x y = x × y`.

use crate::calculus::{directional_derivative, DiffConfig, VectorField};
use crate::error::{Error, Result};
use crate::math;
use crate::vector::Vec7;

/// Accepted defect of `|x| = 1` for stored points.
pub const UNIT_TOL: f64 = 1e-12;
/// Inputs within this defect are re-normalized instead of rejected.
pub const RENORMALIZE_TOL: f64 = 1e-8;
/// Tangency tolerance for `J` inputs.
pub const TANGENT_TOL: f64 = 1e-10;

/// A point of `S⁶`; the outward unit normal `N_x` is the position itself.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint(Vec7);

impl SpherePoint {
    pub fn new(x: Vec7) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Domain("non-finite sphere point"));
        }
        let defect = math::abs(x.norm() - 1.0);
        if defect <= UNIT_TOL {
            Ok(SpherePoint(x))
        } else if defect <= RENORMALIZE_TOL {
            Ok(SpherePoint(x * (1.0 / x.norm())))
        } else {
            Err(Error::OffManifold { residual: defect })
        }
    }

    /// Radial projection `x / |x|`.
    pub fn normalize(x: Vec7) -> Result<Self> {
        let n = x.norm();
        if !n.is_finite() || n <= 1e-12 {
            return Err(Error::Domain("cannot project origin onto S⁶"));
        }
        Ok(SpherePoint(x * (1.0 / n)))
    }

    pub fn position(&self) -> Vec7 {
        self.0
    }

    /// Outward unit normal in `E⁷`.
    pub fn normal(&self) -> Vec7 {
        self.0
    }
}

/// `v − <v, p> p`.
pub fn tangent_project(p: &SpherePoint, v: &Vec7) -> Vec7 {
    let x = p.position();
    *v - x * v.dot(&x)
}

/// `J_p y = p × y` for `y ∈ T_pS⁶`.
pub fn almost_complex(p: &SpherePoint, y: &Vec7) -> Result<Vec7> {
    let x = p.position();
    let normal = y.dot(&x);
    let y = if math::abs(normal) <= TANGENT_TOL {
        *y
    } else if math::abs(normal) <= RENORMALIZE_TOL {
        tangent_project(p, y)
    } else {
        return Err(Error::NotTangent { residual: normal });
    };
    Ok(x.cross(&y))
}

/// `p ↦ J_p (tangent part of c)`, radially extended off the sphere.
fn j_of<Y: VectorField + ?Sized>(y: &Y, q: &Vec7) -> Result<Vec7> {
    let s = SpherePoint::normalize(*q)?;
    let yq = tangent_project(&s, &y.eval(q)?);
    Ok(s.position().cross(&yq))
}

/// Levi-Civita connection of the round metric: `∇̄_X Y = (D_X Y)ᵀ`.
pub fn nabla_bar<X, Y>(x: &X, y: &Y, p: &SpherePoint, cfg: &DiffConfig) -> Result<Vec7>
where
    X: VectorField + ?Sized,
    Y: VectorField + ?Sized,
{
    let xp = x.eval(&p.position())?;
    nabla_bar_along(y, p, &xp, cfg)
}

/// `∇̄_v Y` for a single tangent vector `v`.
pub fn nabla_bar_along<Y>(y: &Y, p: &SpherePoint, v: &Vec7, cfg: &DiffConfig) -> Result<Vec7>
where
    Y: VectorField + ?Sized,
{
    Ok(tangent_project(p, &directional_derivative(y, &p.position(), v, cfg)?))
}

/// `G(X, Y) = (∇̄_X J) Y = ∇̄_X (JY) − J(∇̄_X Y)` at `p`.
pub fn nearly_kahler_tensor<X, Y>(p: &SpherePoint, x: &X, y: &Y, cfg: &DiffConfig) -> Result<Vec7>
where
    X: VectorField + ?Sized,
    Y: VectorField + ?Sized,
{
    let xp = x.eval(&p.position())?;
    let jy = |q: &Vec7| j_of(y, q);
    let d_jy = nabla_bar_along(&jy, p, &xp, cfg)?;
    let d_y = nabla_bar_along(y, p, &xp, cfg)?;
    Ok(d_jy - almost_complex(p, &d_y)?)
}

/// Tangent field `q ↦ c − <c, q̂> q̂` (`q̂ = q/|q|`).
#[derive(Clone, Copy, Debug)]
pub struct SphereTangentField(pub Vec7);

impl VectorField for SphereTangentField {
    fn eval(&self, q: &Vec7) -> Result<Vec7> {
        Ok(tangent_project(&SpherePoint::normalize(*q)?, &self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::ConstantField;

    fn e(i: usize) -> Vec7 {
        Vec7::basis(i)
    }

    #[test]
    fn projection() {
        let p = SpherePoint::new(e(7)).unwrap();
        assert_eq!(tangent_project(&p, &e(7)), Vec7::ZERO);
        assert_eq!(tangent_project(&p, &e(2)), e(2));
        assert_eq!(tangent_project(&p, &(e(7) + e(1) * 2.0)), e(1) * 2.0);
    }

    #[test]
    fn j_on_basis() {
        let p7 = SpherePoint::new(e(7)).unwrap();
        assert_eq!(almost_complex(&p7, &e(1)).unwrap(), e(6));
        let p1 = SpherePoint::new(e(1)).unwrap();
        assert_eq!(almost_complex(&p1, &e(3)).unwrap(), -e(2));
        assert!(matches!(almost_complex(&p1, &e(1)), Err(Error::NotTangent { .. })));
        let jj = almost_complex(&p1, &almost_complex(&p1, &e(4)).unwrap()).unwrap();
        assert_eq!(jj, -e(4));
    }

    #[test]
    fn lenient_tangency_and_normalization() {
        let p = SpherePoint::new(e(1)).unwrap();
        let y = e(2) + e(1) * 5e-9;
        let jy = almost_complex(&p, &y).unwrap();
        assert!((jy - e(3)).max_abs() < 1e-15);
        assert!(SpherePoint::new(e(1) * (1.0 + 1e-9)).is_ok());
        assert!(SpherePoint::new(e(1) * 1.1).is_err());
    }

    #[test]
    fn nabla_bar_of_constant_ambient_field_is_tangent_part_of_zero() {
        let p = SpherePoint::new(e(3)).unwrap();
        let v = nabla_bar(&ConstantField(e(1)), &ConstantField(e(2)), &p, &DiffConfig::default()).unwrap();
        assert_eq!(v, Vec7::ZERO);
    }

    #[test]
    fn g_is_alternating_at_a_point() {
        let p = SpherePoint::new(e(1)).unwrap();
        let cfg = DiffConfig::default();
        let x = SphereTangentField(e(2) + e(5) * 0.5);
        let y = SphereTangentField(e(4) - e(7));
        let gxx = nearly_kahler_tensor(&p, &x, &x, &cfg).unwrap();
        assert!(gxx.norm() < 1e-8, "{gxx:?}");
        let gxy = nearly_kahler_tensor(&p, &x, &y, &cfg).unwrap();
        let gyx = nearly_kahler_tensor(&p, &y, &x, &cfg).unwrap();
        assert!((gxy + gyx).norm() < 1e-8);
        assert!(gxy.norm() > 0.1);
    }
}

//! Almost contact metric structures on `M_r`.
//!
//! Both structures share `ξ = −N × ν`, its metric dual `η` and the induced
//! metric `g`. They differ in the endomorphism:
//!
//! - induced: `φX = JX − η(X) ν`, the tangential part of `J`;
//! - normal product: `φ′X = −ν (X − η(X) ξ)` (octonion product), so that
//!   `φ′ξ = 0` exactly.
//!
//! The `*_check` functions sample `n` points with a seeded generator and
//! reduce per-point residuals into a [`CheckReport`].

use alloc::format;
use alloc::string::String;

use crate::calculus::{contact_volume, exterior_derivative, ConstantField, DiffConfig, OneForm, VectorField};
use crate::error::Result;
use crate::hypersphere::{
    coordinate_tangent, f_inverse_pushforward, f_map, f_pushforward, nabla_m_along, require_tangent, shape_operator,
    unit_normal, HypersphereParam, MPoint, NormalField, Retracted, TangentProjectionField,
};
use crate::octonion::CANONICAL;
use crate::report::{Accumulator, CheckReport, Criterion};
use crate::sampling::Sampler;
use crate::sphere::{almost_complex, nearly_kahler_tensor};
use crate::vector::Vec7;

/// Axioms `φ² = −I + η⊗ξ`, `η(ξ) = 1`, `φξ = 0`, `η∘φ = 0`, metric compatibility.
pub const AXIOM_TOL: f64 = 1e-9;
/// `dη(X, Y) = g(X, φY)` when the structure is contact metric.
pub const CONTACT_METRIC_TOL: f64 = 1e-8;
/// Pointwise violation required for a "not contact metric" verdict.
pub const NOT_CONTACT_METRIC_MARGIN: f64 = 1e-2;
/// Minimal `|dη(X_{a,b}, X_{a,c}) − g(X_{a,b}, φX_{a,c})|` over pivot witnesses.
pub const WITNESS_MARGIN: f64 = 0.02;
/// Witness points satisfy `|x_a| ≥ WITNESS_MIN_PIVOT`.
pub const WITNESS_MIN_PIVOT: f64 = 0.3;
/// Lower bound for `|η ∧ dη ∧ dη|` on orthonormal tangent frames.
pub const CONTACT_VOLUME_MIN: f64 = 1e-3;
pub const SASAKIAN_TOL: f64 = 1e-5;
pub const NOT_SASAKIAN_MARGIN: f64 = 1e-2;
pub const HOPF_TOL: f64 = 1e-6;
pub const PSI_TOL: f64 = 1e-5;

/// `ξ = −N × ν`.
pub fn xi_field(x: &MPoint) -> Vec7 {
    -x.position().cross(&unit_normal(x))
}

/// Coordinate form of `ξ`: `(x₆, x₅, x₄, −x₃, −x₂, −x₁, 0)/√(1−r²)`,
/// linear in the ambient coordinates with `r` held fixed.
#[derive(Clone, Copy, Debug)]
pub struct XiField(pub HypersphereParam);

fn xi_coefficients(param: HypersphereParam, q: &Vec7) -> [f64; 7] {
    let k = 1.0 / param.radius();
    [q[5] * k, q[4] * k, q[3] * k, -q[2] * k, -q[1] * k, -q[0] * k, 0.0]
}

impl VectorField for XiField {
    fn eval(&self, q: &Vec7) -> Result<Vec7> {
        Ok(Vec7(xi_coefficients(self.0, q)))
    }
}

/// `η = (x₆dx₁ + x₅dx₂ + x₄dx₃ − x₃dx₄ − x₂dx₅ − x₁dx₆)/√(1−r²)`.
#[derive(Clone, Copy, Debug)]
pub struct EtaForm(pub HypersphereParam);

impl OneForm for EtaForm {
    fn coefficients(&self, p: &Vec7) -> Result<[f64; 7]> {
        Ok(xi_coefficients(self.0, p))
    }
}

/// Coefficients of `η` at `x`.
pub fn eta_form(x: &MPoint) -> [f64; 7] {
    xi_coefficients(x.param(), &x.position())
}

/// `η(v) = g(v, ξ)`.
pub fn eta(x: &MPoint, v: &Vec7) -> f64 {
    v.dot(&xi_field(x))
}

/// Closed form `dη = −(2/√(1−r²))(dx₁∧dx₆ + dx₂∧dx₅ + dx₃∧dx₄)`, evaluated
/// with the same wedge convention as [`exterior_derivative`].
pub fn d_eta_closed(param: HypersphereParam, u: &Vec7, v: &Vec7) -> f64 {
    let w = |i: usize, j: usize| u.coord(i) * v.coord(j) - u.coord(j) * v.coord(i);
    0.5 * (-2.0 / param.radius()) * (w(1, 6) + w(2, 5) + w(3, 4))
}

/// `Y_{1,b} = X_{1,b} − η(X_{1,b}) ξ`, `2 ≤ b ≤ 6`.
pub fn y_one(b: usize, x: &MPoint) -> Result<Vec7> {
    let xb = coordinate_tangent(1, b, x)?;
    Ok(xb - xi_field(x) * eta(x, &xb))
}

/// `φX = JX − η(X) ν`.
pub fn phi_natural(x: &MPoint, v: &Vec7) -> Result<Vec7> {
    require_tangent(x, v)?;
    let jv = almost_complex(&x.sphere_point(), v)?;
    Ok(jv - unit_normal(x) * eta(x, v))
}

/// `φ′X = −ν (X − η(X) ξ)`.
pub fn phi_prime(x: &MPoint, v: &Vec7) -> Result<Vec7> {
    require_tangent(x, v)?;
    let y = *v - xi_field(x) * eta(x, v);
    let p = unit_normal(x).to_octonion() * y.to_octonion();
    Ok(-Vec7(p.imaginary()))
}

/// `ψX = G(X, ν) = (∇̄_X J) ν`.
pub fn psi(x: &MPoint, v: &Vec7, cfg: &DiffConfig) -> Result<Vec7> {
    require_tangent(x, v)?;
    nearly_kahler_tensor(&x.sphere_point(), &ConstantField(*v), &NormalField(x.param()), cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    /// `φ = (J)ᵀ`, the structure induced by the nearly Kähler `J`.
    Induced,
    /// `φ′ = −ν ·` on `ξ^⊥`, `φ′ξ = 0`.
    NormalProduct,
}

impl StructureKind {
    pub fn name(&self) -> &'static str {
        match self {
            StructureKind::Induced => "induced",
            StructureKind::NormalProduct => "normal_product",
        }
    }
}

/// `(φ, ξ, η, g)` with an optional scale on `φ` (negative controls).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AcmStructure {
    pub kind: StructureKind,
    pub phi_scale: f64,
}

impl AcmStructure {
    pub const fn induced() -> Self {
        AcmStructure { kind: StructureKind::Induced, phi_scale: 1.0 }
    }

    pub const fn normal_product() -> Self {
        AcmStructure { kind: StructureKind::NormalProduct, phi_scale: 1.0 }
    }

    /// Same structure with `φ` multiplied by `scale`.
    pub fn corrupted(self, scale: f64) -> Self {
        AcmStructure { phi_scale: scale, ..self }
    }

    pub fn label(&self) -> String {
        if self.phi_scale == 1.0 {
            self.kind.name().into()
        } else {
            format!("{}*{}", self.kind.name(), self.phi_scale)
        }
    }

    pub fn phi(&self, x: &MPoint, v: &Vec7) -> Result<Vec7> {
        let w = match self.kind {
            StructureKind::Induced => phi_natural(x, v)?,
            StructureKind::NormalProduct => phi_prime(x, v)?,
        };
        Ok(if self.phi_scale == 1.0 { w } else { w * self.phi_scale })
    }

    pub fn xi(&self, x: &MPoint) -> Vec7 {
        xi_field(x)
    }

    pub fn eta(&self, x: &MPoint, v: &Vec7) -> f64 {
        eta(x, v)
    }

    /// Whether `(M_r, φ, ξ, η, g)` is claimed to be contact metric (and
    /// then Sasakian): only the normal-product structure at `r = 0`.
    pub fn expects_contact_metric(&self, param: HypersphereParam) -> bool {
        self.kind == StructureKind::NormalProduct && param.r() == 0.0
    }
}

fn pos(x: &MPoint) -> [f64; 7] {
    x.position().0
}

/// Residuals of the almost contact metric axioms.
pub fn check_acms_axioms(s: &AcmStructure, param: HypersphereParam, n: usize, seed: u64) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let v = sampler.tangent_unit(&x);
        let w = sampler.tangent_unit(&x);
        let xi = s.xi(&x);
        let phi_v = s.phi(&x, &v)?;
        let phi_w = s.phi(&x, &w)?;
        let phi2 = s.phi(&x, &phi_v)?;
        let res = [
            (phi2 - (-v + xi * s.eta(&x, &v))).norm(),
            (s.eta(&x, &xi) - 1.0).abs(),
            s.phi(&x, &xi)?.norm(),
            s.eta(&x, &phi_v).abs(),
            (phi_v.dot(&phi_w) - v.dot(&w) + s.eta(&x, &v) * s.eta(&x, &w)).abs(),
        ];
        acc.push(res.iter().fold(0.0, |m, r| f64::max(m, *r)), pos(&x), Some(v.0));
    }
    Ok(acc.finish(format!("axioms.{}", s.label()), Some(param.r()), Criterion::MaxLe, AXIOM_TOL))
}

/// Pointwise `max |dη(u, v) − g(u, φv)|` over pairs of a random orthonormal
/// tangent frame and the pairs `(X₁,₂, X₁,₃)`, `(Y₁,₂, Y₁,b)`.
pub fn contact_metric_pointwise(s: &AcmStructure, x: &MPoint, frame: &[Vec7; 5], cfg: &DiffConfig) -> Result<f64> {
    let eta_form = EtaForm(x.param());
    let p = x.position();
    let residual = |u: &Vec7, v: &Vec7| -> Result<f64> {
        let d = exterior_derivative(&eta_form, &p, u, v, cfg)?;
        Ok((d - u.dot(&s.phi(x, v)?)).abs())
    };
    let mut worst: f64 = 0.0;
    for i in 0..5 {
        for j in 0..5 {
            if i != j {
                worst = worst.max(residual(&frame[i], &frame[j])?);
            }
        }
    }
    worst = worst.max(residual(&coordinate_tangent(1, 2, x)?, &coordinate_tangent(1, 3, x)?)?);
    let y12 = y_one(2, x)?;
    for b in 3..=6 {
        worst = worst.max(residual(&y12, &y_one(b, x)?)?);
    }
    worst = worst.max(residual(&y12, &s.xi(x))?);
    Ok(worst)
}

/// The contact metric condition `dη(X, Y) = g(X, φY)`.
///
/// Where the structure is expected to be contact metric the report passes
/// iff the maximal residual is at most [`CONTACT_METRIC_TOL`]; elsewhere it
/// passes iff every sampled point violates the condition by at least
/// [`NOT_CONTACT_METRIC_MARGIN`].
pub fn contact_metric_residual(
    s: &AcmStructure,
    param: HypersphereParam,
    n: usize,
    seed: u64,
    cfg: &DiffConfig,
) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let frame = sampler.tangent_frame(&x);
        acc.push(contact_metric_pointwise(s, &x, &frame, cfg)?, pos(&x), None);
    }
    let (criterion, tol) = if s.expects_contact_metric(param) {
        (Criterion::MaxLe, CONTACT_METRIC_TOL)
    } else {
        (Criterion::MinGe, NOT_CONTACT_METRIC_MARGIN)
    };
    Ok(acc.finish(format!("contact_metric.{}", s.label()), Some(param.r()), criterion, tol))
}

/// For pivot `a`, the oriented line `e_a e_b = e_c` inside `{1..6}` that
/// contains no pair `{i, 7−i}`; on it `dη(X_{a,b}, X_{a,c}) = 0`.
pub fn pivot_line(a: usize) -> (usize, usize) {
    for b in 1..=6 {
        let (c, sign) = CANONICAL.basis_product(a, b);
        if b == a || sign != 1 || !(1..=6).contains(&c) {
            continue;
        }
        if a + b != 7 && b + c != 7 && a + c != 7 {
            return (b, c);
        }
    }
    unreachable!("every imaginary unit lies on a line avoiding e7 and complementary pairs")
}

/// Witness residual `|dη(X_{a,b}, X_{a,c}) − g(X_{a,b}, φX_{a,c})|`.
pub fn pivot_witness(s: &AcmStructure, x: &MPoint, a: usize, cfg: &DiffConfig) -> Result<(f64, f64)> {
    let (b, c) = pivot_line(a);
    let xab = coordinate_tangent(a, b, x)?;
    let xac = coordinate_tangent(a, c, x)?;
    let d = exterior_derivative(&EtaForm(x.param()), &x.position(), &xab, &xac, cfg)?;
    let g = xab.dot(&s.phi(x, &xac)?);
    Ok((d, g))
}

/// Pivot-witness suite for the failure of the contact metric condition:
/// sample `k` uses pivot `a = 1 + k mod 6` at a point with
/// `|x_a| ≥ WITNESS_MIN_PIVOT`. Passes iff every witness residual is at
/// least [`WITNESS_MARGIN`].
pub fn contact_metric_witness(
    s: &AcmStructure,
    param: HypersphereParam,
    n: usize,
    seed: u64,
    cfg: &DiffConfig,
) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for k in 0..n {
        let a = 1 + k % 6;
        let x = sampler.point_with_pivot(param, a, WITNESS_MIN_PIVOT);
        let (d, g) = pivot_witness(s, &x, a, cfg)?;
        acc.push((d - g).abs(), pos(&x), None);
    }
    Ok(acc.finish(format!("contact_metric_witness.{}", s.label()), Some(param.r()), Criterion::MinGe, WITNESS_MARGIN))
}

/// `min |η ∧ dη ∧ dη|` over random orthonormal tangent frames of `M_r`.
pub fn contact_form_check(param: HypersphereParam, n: usize, seed: u64, cfg: &DiffConfig) -> Result<CheckReport> {
    contact_form_check_with(&EtaForm(param), "contact_form", param, n, seed, cfg)
}

/// [`contact_form_check`] for an arbitrary 1-form.
pub fn contact_form_check_with<W: OneForm + ?Sized>(
    form: &W,
    id: &str,
    param: HypersphereParam,
    n: usize,
    seed: u64,
    cfg: &DiffConfig,
) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let frame = sampler.tangent_frame(&x);
        let vol = contact_volume(form, &x.position(), &frame, cfg)?;
        acc.push(vol.abs(), pos(&x), None);
    }
    Ok(acc.finish(id, Some(param.r()), Criterion::MinGe, CONTACT_VOLUME_MIN))
}

/// `|(∇_X φ)Y − g(X, Y)ξ + η(Y)X|` for `X = u`, `Y` the tangent projection
/// of the constant vector `v` near `x`.
pub fn sasakian_pointwise(s: &AcmStructure, x: &MPoint, u: &Vec7, v: &Vec7, cfg: &DiffConfig) -> Result<f64> {
    let param = x.param();
    let yf = TangentProjectionField { param, c: *v };
    let phi_y = Retracted::new(param, |m: &MPoint| s.phi(m, &yf.eval(&m.position())?));
    let d_phi_y = nabla_m_along(&phi_y, x, u, cfg)?;
    let d_y = nabla_m_along(&yf, x, u, cfg)?;
    let lhs = d_phi_y - s.phi(x, &d_y)?;
    let y = yf.eval(&x.position())?;
    let rhs = s.xi(x) * u.dot(&y) - *u * s.eta(x, &y);
    Ok((lhs - rhs).norm())
}

/// The Sasakian identity `(∇_X φ)Y = g(X, Y)ξ − η(Y)X` over all ordered
/// pairs of a random orthonormal tangent frame at each sample.
pub fn sasakian_residual(
    s: &AcmStructure,
    param: HypersphereParam,
    n: usize,
    seed: u64,
    cfg: &DiffConfig,
) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let frame = sampler.tangent_frame(&x);
        let mut worst: f64 = 0.0;
        for u in &frame {
            for v in &frame {
                worst = worst.max(sasakian_pointwise(s, &x, u, v, cfg)?);
            }
        }
        acc.push(worst, pos(&x), None);
    }
    let (criterion, tol) = if s.expects_contact_metric(param) {
        (Criterion::MaxLe, SASAKIAN_TOL)
    } else {
        (Criterion::MinGe, NOT_SASAKIAN_MARGIN)
    };
    Ok(acc.finish(format!("sasakian.{}", s.label()), Some(param.r()), criterion, tol))
}

/// `|g((Aφ + φA)X, Y) + 2g(φX, Y)|` for the induced structure, with `A`
/// obtained by differentiating `ν`. Informational.
pub fn theorem_b_residual(param: HypersphereParam, n: usize, seed: u64, cfg: &DiffConfig) -> Result<CheckReport> {
    let s = AcmStructure::induced();
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    let mut max_g_phi: f64 = 0.0;
    for _ in 0..n {
        let x = sampler.point_on(param);
        let frame = sampler.tangent_frame(&x);
        let mut worst: f64 = 0.0;
        for u in &frame {
            let phi_u = s.phi(&x, u)?;
            let a_phi_u = shape_operator(&x, &phi_u, cfg)?;
            let phi_a_u = s.phi(&x, &shape_operator(&x, u, cfg)?)?;
            for v in &frame {
                let g_phi = phi_u.dot(v);
                max_g_phi = max_g_phi.max(g_phi.abs());
                worst = worst.max(((a_phi_u + phi_a_u).dot(v) + 2.0 * g_phi).abs());
            }
        }
        acc.push(worst, pos(&x), None);
    }
    Ok(acc
        .finish("theorem_b", Some(param.r()), Criterion::Informational, 0.0)
        .observe("umbilic_factor", param.umbilic_factor())
        .observe("max_abs_g_phi", max_g_phi))
}

/// `∇_ξ ξ = 0` and `Aξ = −(r/√(1−r²))ξ` for the field `xi` (unit, tangent).
pub fn hopf_check_with<F: VectorField + ?Sized>(
    xi: &F,
    id: &str,
    param: HypersphereParam,
    n: usize,
    seed: u64,
    cfg: &DiffConfig,
) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    let k = param.umbilic_factor();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let v = xi.eval(&x.position())?;
        let geodesic = nabla_m_along(xi, &x, &v, cfg)?.norm();
        let principal = (shape_operator(&x, &v, cfg)? + v * k).norm();
        acc.push(geodesic.max(principal), pos(&x), Some(v.0));
    }
    Ok(acc.finish(id, Some(param.r()), Criterion::MaxLe, HOPF_TOL))
}

pub fn hopf_check(param: HypersphereParam, n: usize, seed: u64, cfg: &DiffConfig) -> Result<CheckReport> {
    hopf_check_with(&XiField(param), "hopf", param, n, seed, cfg)
}

/// `|ψv − φ′v|` over random unit tangent vectors and `ξ`. Asserted at `r = 0`
/// only; informational otherwise.
pub fn psi_check(param: HypersphereParam, n: usize, seed: u64, cfg: &DiffConfig) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    for _ in 0..n {
        let x = sampler.point_on(param);
        let v = sampler.tangent_unit(&x);
        let xi = xi_field(&x);
        let res = f64::max(
            (psi(&x, &v, cfg)? - phi_prime(&x, &v)?).norm(),
            (psi(&x, &xi, cfg)? - phi_prime(&x, &xi)?).norm(),
        );
        acc.push(res, pos(&x), Some(v.0));
    }
    let criterion = if param.r() == 0.0 { Criterion::MaxLe } else { Criterion::Informational };
    Ok(acc.finish("psi_equals_phi_prime", Some(param.r()), criterion, PSI_TOL))
}

/// Pullback of the `M₀` structure along `F_r`. Informational: records the
/// conformal factor `F_r*(g₀)/g` and how `(F_r⁻¹)_*ξ₀`, `F_r*η₀` compare
/// with `ξ`, `η`.
pub fn pullback_report(param: HypersphereParam, n: usize, seed: u64) -> Result<CheckReport> {
    let mut sampler = Sampler::new(seed);
    let mut acc = Accumulator::new();
    let (mut fmin, mut fmax, mut fsum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
    let (mut xi_res, mut xi_col, mut eta_res): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut xi_scale = 0.0;
    for _ in 0..n {
        let x = sampler.point_on(param);
        let u = sampler.tangent_unit(&x);
        let y = f_map(&x)?;
        let fu = f_pushforward(param, &u);
        let factor = fu.norm_sq() / u.norm_sq();
        fmin = fmin.min(factor);
        fmax = fmax.max(factor);
        fsum += factor;

        let xi = xi_field(&x);
        let pulled_xi = f_inverse_pushforward(param, &xi_field(&y));
        xi_res = xi_res.max((pulled_xi - xi).norm());
        xi_scale = pulled_xi.dot(&xi);
        xi_col = xi_col.max((pulled_xi - xi * pulled_xi.dot(&xi)).norm());
        eta_res = eta_res.max((eta(&y, &fu) - eta(&x, &u)).abs());
        acc.push(fmax - fmin, pos(&x), Some(u.0));
    }
    let mean = if n > 0 { fsum / n as f64 } else { f64::NAN };
    Ok(acc
        .finish("pullback", Some(param.r()), Criterion::Informational, 0.0)
        .observe("conformal_factor", mean)
        .observe("conformal_factor_spread", fmax - fmin)
        .observe("xi_residual", xi_res)
        .observe("xi_scale", xi_scale)
        .observe("xi_collinearity_residual", xi_col)
        .observe("eta_residual", eta_res))
}

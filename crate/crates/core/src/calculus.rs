//! Central-difference calculus on ambient 7-space.
//!
//! Fields are closed-form evaluators on `E⁷`. Derivatives along a direction
//! `v` depend only on the field's values along a curve tangent to `v`, so an
//! ambient extension of a field defined on a submanifold gives the intrinsic
//! derivative whenever `v` is tangent to it.

use crate::error::{Error, Result};
use crate::vector::Vec7;

/// Finite-difference steps.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiffConfig {
    /// Step for first derivatives.
    pub h1: f64,
    /// Outer step for iterated (second) derivatives.
    pub h2: f64,
}

impl Default for DiffConfig {
    fn default() -> Self {
        DiffConfig { h1: 1e-5, h2: 1e-3 }
    }
}

impl DiffConfig {
    pub fn new(h1: f64, h2: f64) -> Result<Self> {
        let cfg = DiffConfig { h1, h2 };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h1 > 0.0 && self.h1 < 1.0) {
            return Err(Error::ParameterOutOfRange { name: "h1", value: self.h1 });
        }
        if !(self.h2 > 0.0 && self.h2.is_finite()) {
            return Err(Error::ParameterOutOfRange { name: "h2", value: self.h2 });
        }
        Ok(())
    }
}

/// A smooth map `E⁷ → E⁷`.
pub trait VectorField {
    fn eval(&self, p: &Vec7) -> Result<Vec7>;
}

impl<F> VectorField for F
where
    F: Fn(&Vec7) -> Result<Vec7>,
{
    fn eval(&self, p: &Vec7) -> Result<Vec7> {
        self(p)
    }
}

/// `p ↦ c`.
#[derive(Clone, Copy, Debug)]
pub struct ConstantField(pub Vec7);

impl VectorField for ConstantField {
    fn eval(&self, _p: &Vec7) -> Result<Vec7> {
        Ok(self.0)
    }
}

/// `p ↦ p`.
#[derive(Clone, Copy, Debug)]
pub struct PositionField;

impl VectorField for PositionField {
    fn eval(&self, p: &Vec7) -> Result<Vec7> {
        Ok(*p)
    }
}

/// A 1-form `Σ ωᵢ dxᵢ` given by its coefficient functions.
pub trait OneForm {
    fn coefficients(&self, p: &Vec7) -> Result<[f64; 7]>;

    fn apply(&self, p: &Vec7, v: &Vec7) -> Result<f64> {
        let c = self.coefficients(p)?;
        Ok(c.iter().zip(v.0.iter()).map(|(a, b)| a * b).sum())
    }
}

/// A 1-form with constant coefficients (closed, so `dω = 0`).
#[derive(Clone, Copy, Debug)]
pub struct ConstantForm(pub [f64; 7]);

impl OneForm for ConstantForm {
    fn coefficients(&self, _p: &Vec7) -> Result<[f64; 7]> {
        Ok(self.0)
    }
}

fn checked(p: Vec7) -> Result<Vec7> {
    if p.is_finite() {
        Ok(p)
    } else {
        Err(Error::Domain("non-finite evaluation point"))
    }
}

/// `D_v F(p)` by central difference with step `h`.
pub fn directional_derivative_step<F>(f: &F, p: &Vec7, v: &Vec7, h: f64) -> Result<Vec7>
where
    F: VectorField + ?Sized,
{
    let fwd = f.eval(&checked(*p + *v * h)?)?;
    let bwd = f.eval(&checked(*p - *v * h)?)?;
    Ok((fwd - bwd) * (0.5 / h))
}

/// `D_v F(p) ≈ (F(p + h₁v) − F(p − h₁v)) / 2h₁`.
pub fn directional_derivative<F>(f: &F, p: &Vec7, v: &Vec7, cfg: &DiffConfig) -> Result<Vec7>
where
    F: VectorField + ?Sized,
{
    directional_derivative_step(f, p, v, cfg.h1)
}

/// `[X, Y](p) = D_X Y − D_Y X`.
pub fn lie_bracket<X, Y>(x: &X, y: &Y, p: &Vec7, cfg: &DiffConfig) -> Result<Vec7>
where
    X: VectorField + ?Sized,
    Y: VectorField + ?Sized,
{
    let xp = x.eval(p)?;
    let yp = y.eval(p)?;
    Ok(directional_derivative(y, p, &xp, cfg)? - directional_derivative(x, p, &yp, cfg)?)
}

/// Derivative of the scalar `q ↦ ω_q(w)` along `v`, with `w` held fixed.
fn form_derivative<W>(omega: &W, p: &Vec7, v: &Vec7, w: &Vec7, h: f64) -> Result<f64>
where
    W: OneForm + ?Sized,
{
    let fwd = omega.apply(&checked(*p + *v * h)?, w)?;
    let bwd = omega.apply(&checked(*p - *v * h)?, w)?;
    Ok((fwd - bwd) * (0.5 / h))
}

/// `dω(u, v)` at `p`, with `(dxᵢ ∧ dxⱼ)(u, v) = ½(uᵢvⱼ − uⱼvᵢ)`.
///
/// Equivalently `½ Σ_{i<j} (∂ᵢωⱼ − ∂ⱼωᵢ)(uᵢvⱼ − uⱼvᵢ)`; only the
/// derivatives along `u` and `v` enter, so `u`, `v` tangent to a
/// submanifold give the exterior derivative of the pulled-back form.
pub fn exterior_derivative<W>(omega: &W, p: &Vec7, u: &Vec7, v: &Vec7, cfg: &DiffConfig) -> Result<f64>
where
    W: OneForm + ?Sized,
{
    let du_v = form_derivative(omega, p, u, v, cfg.h1)?;
    let dv_u = form_derivative(omega, p, v, u, cfg.h1)?;
    Ok(0.5 * (du_v - dv_u))
}

/// `(η ∧ dη ∧ dη)(v₁, …, v₅)` as the alternating sum over the 120
/// permutations divided by `1!·2!·2!`.
pub fn contact_volume<W>(eta: &W, p: &Vec7, frame: &[Vec7; 5], cfg: &DiffConfig) -> Result<f64>
where
    W: OneForm + ?Sized,
{
    let mut e = [0.0; 5];
    for (k, v) in frame.iter().enumerate() {
        e[k] = eta.apply(p, v)?;
    }
    let mut d = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in i + 1..5 {
            let val = exterior_derivative(eta, p, &frame[i], &frame[j], cfg)?;
            d[i][j] = val;
            d[j][i] = -val;
        }
    }
    let mut sum = 0.0;
    for_each_permutation(|perm, sign| {
        sum += sign * e[perm[0]] * d[perm[1]][perm[2]] * d[perm[3]][perm[4]];
    });
    Ok(sum / 4.0)
}

/// Visits all permutations of `0..5` with their signs.
fn for_each_permutation(mut visit: impl FnMut(&[usize; 5], f64)) {
    // Heap's algorithm; each swap flips the sign.
    let mut a = [0, 1, 2, 3, 4];
    let mut c = [0usize; 5];
    let mut sign = 1.0;
    visit(&a, sign);
    let mut i = 0;
    while i < 5 {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            visit(&a, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

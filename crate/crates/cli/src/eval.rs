//! Ad-hoc evaluation of single quantities at a point of `M_r`.

use nk6_core::acms::{self, xi_field};
use nk6_core::checks::curvature_estimate;
use nk6_core::hypersphere::{scalar_invariants, shape_operator, tangent_project, unit_normal, ScalarInvariants};
use nk6_core::{DiffConfig, HypersphereParam, MPoint, Vec7};
use serde::Serialize;

use crate::CliError;

/// Points or vectors further than this from `M_r` / its tangent space are
/// re-projected with a warning.
pub const RENORMALIZE_WARN: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Nu,
    Xi,
    Eta,
    Shape,
    Tau,
    F,
    Alpha,
    Invariants,
    Curvature,
    Phi,
    PhiPrime,
    Psi,
}

impl Quantity {
    pub fn needs_vector(self) -> bool {
        matches!(self, Quantity::Phi | Quantity::PhiPrime | Quantity::Psi)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Scalar(f64),
    Vector([f64; 7]),
    Invariants(ScalarInvariants),
}

#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub quantity: Quantity,
    pub r: f64,
    pub point: [f64; 7],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<[f64; 7]>,
    pub value: Value,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

pub struct EvalRequest<'a> {
    pub r: f64,
    pub point: &'a [f64],
    pub vector: Option<&'a [f64]>,
    pub quantity: Quantity,
    pub samples: usize,
    pub seed: u64,
    pub diff: DiffConfig,
}

fn point_on(param: HypersphereParam, coords: &[f64], warnings: &mut Vec<String>) -> Result<MPoint, CliError> {
    let six: [f64; 6] = match coords.len() {
        6 | 7 => coords[..6].try_into().expect("length checked"),
        n => return Err(CliError::Config(format!("point needs 6 or 7 coordinates, got {n}"))),
    };
    if coords.len() == 7 && (coords[6] - param.r()).abs() > RENORMALIZE_WARN {
        warnings.push(format!("x7 = {} replaced by r = {}", coords[6], param.r()));
    }
    let s = param.radius();
    let defect = (six.iter().map(|c| c * c).sum::<f64>().sqrt() - s).abs();
    if defect > RENORMALIZE_WARN {
        warnings.push(format!("point is {defect:.3e} off M_r; renormalized"));
    }
    MPoint::normalized(param, six).map_err(|e| CliError::Config(e.to_string()))
}

fn tangent_vector(x: &MPoint, coords: &[f64], warnings: &mut Vec<String>) -> Result<Vec7, CliError> {
    let v: [f64; 7] =
        coords.try_into().map_err(|_| CliError::Config(format!("vector needs 7 components, got {}", coords.len())))?;
    let v = Vec7(v);
    let t = tangent_project(x, &v);
    let off = (v - t).norm();
    if off > RENORMALIZE_WARN {
        warnings.push(format!("vector has normal component {off:.3e}; projected"));
    }
    Ok(t)
}

/// A unit tangent vector along the coordinate where `x` is smallest.
fn default_tangent(x: &MPoint) -> Vec7 {
    let j = (0..6).min_by(|&a, &b| x.coords()[a].abs().total_cmp(&x.coords()[b].abs())).expect("six coordinates");
    let t = tangent_project(x, &Vec7::basis(j + 1));
    t * (1.0 / t.norm())
}

pub fn evaluate(req: &EvalRequest<'_>) -> Result<Evaluation, CliError> {
    let param = HypersphereParam::new(req.r).map_err(|e| CliError::Config(e.to_string()))?;
    req.diff.validate().map_err(|e| CliError::Config(e.to_string()))?;
    let mut warnings = Vec::new();
    let x = point_on(param, req.point, &mut warnings)?;
    let vector = match req.vector {
        Some(v) => Some(tangent_vector(&x, v, &mut warnings)?),
        None if req.quantity.needs_vector() => {
            return Err(CliError::Config(format!("quantity {:?} needs --vector", req.quantity)))
        }
        None => None,
    };
    let inv = scalar_invariants(param);
    let value = match req.quantity {
        Quantity::Nu => Value::Vector(unit_normal(&x).0),
        Quantity::Xi => Value::Vector(xi_field(&x).0),
        Quantity::Eta => Value::Vector(acms::eta_form(&x)),
        Quantity::Shape => {
            let v = vector.unwrap_or_else(|| default_tangent(&x));
            if v.norm() < 1e-12 {
                return Err(CliError::Config("shape needs a nonzero tangent vector".into()));
            }
            Value::Scalar(shape_operator(&x, &v, &req.diff)?.dot(&v) / v.norm_sq())
        }
        Quantity::Tau => Value::Scalar(inv.tau),
        Quantity::F => Value::Scalar(inv.f),
        Quantity::Alpha => Value::Scalar(inv.alpha),
        Quantity::Invariants => Value::Invariants(inv),
        Quantity::Curvature => Value::Scalar(curvature_estimate(param, req.samples, req.seed, &req.diff)?),
        Quantity::Phi => Value::Vector(acms::phi_natural(&x, &vector.expect("checked"))?.0),
        Quantity::PhiPrime => Value::Vector(acms::phi_prime(&x, &vector.expect("checked"))?.0),
        Quantity::Psi => Value::Vector(acms::psi(&x, &vector.expect("checked"), &req.diff)?.0),
    };
    Ok(Evaluation {
        quantity: req.quantity,
        r: req.r,
        point: x.position().0,
        vector: vector.map(|v| v.0),
        value,
        warnings,
    })
}

/// Rounds to 12 decimals for display, without a `-0`.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let v = (x * 1e12).round() / 1e12;
    if v == 0.0 {
        "0".into()
    } else {
        v.to_string()
    }
}

fn fmt_vec(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|c| fmt_num(*c)).collect();
    format!("({})", parts.join(", "))
}

pub fn render_text(e: &Evaluation) -> String {
    let name = serde_json::to_value(e.quantity).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    match &e.value {
        Value::Scalar(s) => format!("{name} = {}\n", fmt_num(*s)),
        Value::Vector(v) => format!("{name} = {}\n", fmt_vec(v)),
        Value::Invariants(i) => format!(
            "tau = {}\nf = {}\nalpha = {}\nidentity_residual = {:e}\n",
            fmt_num(i.tau),
            fmt_num(i.f),
            fmt_num(i.alpha),
            i.identity_residual
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req<'a>(r: f64, point: &'a [f64], quantity: Quantity) -> EvalRequest<'a> {
        EvalRequest { r, point, vector: None, quantity, samples: 20, seed: 1, diff: DiffConfig::default() }
    }

    const E1: [f64; 6] = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0];

    #[test]
    fn xi_at_e1() {
        let e = evaluate(&req(0.0, &E1, Quantity::Xi)).unwrap();
        assert_eq!(e.value, Value::Vector([0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0]));
        assert_eq!(render_text(&e), "xi = (0, 0, 0, 0, 0, -1, 0)\n");
        assert!(e.warnings.is_empty());
    }

    #[test]
    fn shape_and_scalars() {
        let e = evaluate(&req(0.6, &[0.8, 0.0, 0.0, 0.0, 0.0, 0.0], Quantity::Shape)).unwrap();
        let Value::Scalar(a) = e.value else { panic!() };
        assert!((a + 0.75).abs() < 1e-6);
        let e = evaluate(&req(0.0, &E1, Quantity::Tau)).unwrap();
        assert_eq!(render_text(&e), "tau = 20\n");
    }

    #[test]
    fn renormalizes_with_warning() {
        let e = evaluate(&req(0.0, &[2.0, 0.0, 0.0, 0.0, 0.0, 0.0], Quantity::Nu)).unwrap();
        assert_eq!(e.point[0], 1.0);
        assert_eq!(e.warnings.len(), 1);
    }

    #[test]
    fn vector_quantities() {
        let mut q = req(0.0, &E1, Quantity::PhiPrime);
        assert!(evaluate(&q).is_err());
        let v = [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        q.vector = Some(&v);
        let e = evaluate(&q).unwrap();
        assert_eq!(render_text(&e), "phi_prime = (0, 0, 0, 0, 1, 0, 0)\n");
        q.quantity = Quantity::Phi;
        assert_eq!(render_text(&evaluate(&q).unwrap()), "phi = (0, 0, 1, 0, 0, 0, 0)\n");
    }
}

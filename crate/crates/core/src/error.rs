use alloc::string::String;

/// Errors raised by evaluators and constructors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("cross product needs pure imaginary operands (real part {real_part})")]
    NotPureImaginary { real_part: f64 },
    #[error("vector is not tangent (normal component {residual:e})")]
    NotTangent { residual: f64 },
    #[error("point is off the manifold (defect {residual:e})")]
    OffManifold { residual: f64 },
    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: &'static str, value: f64 },
    #[error("invalid index pair ({a}, {b})")]
    InvalidIndex { a: usize, b: usize },
    #[error("evaluation outside field domain: {0}")]
    Domain(&'static str),
    #[error("malformed Fano table: {0}")]
    MalformedTable(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

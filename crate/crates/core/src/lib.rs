//! Octonion arithmetic and numerical verification of almost contact metric
//! structures on the totally umbilical hyperspheres `M_r` of the nearly
//! Kähler unit 6-sphere.
//!
//! The crate is `no_std` (it needs `alloc` for sample buffers and
//! diagnostics). Everything here is pure: evaluators, finite-difference
//! calculus and the check routines that reduce residuals into
//! [`CheckReport`]s. IO, the CLI and report serialization live in the `nk6`
//! crate.
//!
//! Module map:
//!
//! - [`octonion`]: Cayley algebra, Fano table, cross product, table validation.
//! - [`calculus`]: central-difference derivatives, Lie brackets, exterior
//!   derivative and the 5-form `η ∧ dη ∧ dη`.
//! - [`sphere`]: the nearly Kähler structure `J = x ×` on `S⁶`.
//! - [`hypersphere`]: the family `M_r`, its normal, shape operator, induced
//!   connection and curvature.
//! - [`acms`]: the two almost contact metric structures and their checks.

#![no_std]

extern crate alloc;

pub mod acms;
pub mod calculus;
pub mod checks;
mod error;
pub mod hypersphere;
mod math;
pub mod octonion;
pub mod report;
pub mod sampling;
pub mod sphere;
pub mod vector;

pub use calculus::{DiffConfig, OneForm, VectorField};
pub use error::{Error, Result};
pub use hypersphere::{HypersphereParam, MPoint};
pub use octonion::{FanoTable, Octonion, ProductTable};
pub use report::{CheckReport, Criterion, Verdict, Witness};
pub use sphere::SpherePoint;
pub use vector::Vec7;

//! Residual records produced by the check routines.

use alloc::string::String;
use alloc::vec::Vec;

/// How a report's statistics turn into a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Criterion {
    /// Pass iff `max_residual ≤ tolerance`: the identity holds.
    MaxLe,
    /// Pass iff `min_residual ≥ tolerance`: the quantity stays away from
    /// zero at every sample (used for claimed inequalities).
    MinGe,
    /// Pass iff `max_residual ≥ tolerance`: some sample violates the
    /// identity by at least the margin (negative controls).
    MaxGe,
    /// Reported only.
    Informational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Verdict {
    Pass,
    Fail,
    Informational,
}

/// The sample that attained the deciding statistic.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub point: [f64; 7],
    pub vector: Option<[f64; 7]>,
    pub value: f64,
}

/// A named auxiliary value attached to a report.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Observation {
    pub name: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub check_id: String,
    /// `None` for checks that do not depend on `r`.
    pub r: Option<f64>,
    pub samples: usize,
    pub max_residual: f64,
    pub min_residual: f64,
    pub tolerance: f64,
    pub criterion: Criterion,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Vec::is_empty"))]
    pub observations: Vec<Observation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Replaces the tolerance and re-derives the verdict.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.verdict = decide(self.criterion, self.max_residual, self.min_residual, tolerance);
        self
    }

    /// Re-labels the report and judges it under a different criterion.
    pub fn reframed(mut self, check_id: impl Into<String>, criterion: Criterion, tolerance: f64) -> Self {
        self.check_id = check_id.into();
        self.criterion = criterion;
        self.with_tolerance(tolerance)
    }

    pub fn observation(&self, name: &str) -> Option<f64> {
        self.observations.iter().find(|o| o.name == name).map(|o| o.value)
    }

    pub(crate) fn observe(mut self, name: &str, value: f64) -> Self {
        self.observations.push(Observation { name: name.into(), value });
        self
    }
}

fn decide(criterion: Criterion, max: f64, min: f64, tol: f64) -> Verdict {
    match criterion {
        Criterion::Informational => Verdict::Informational,
        Criterion::MaxLe if max <= tol => Verdict::Pass,
        Criterion::MinGe if min >= tol => Verdict::Pass,
        Criterion::MaxGe if max >= tol => Verdict::Pass,
        _ => Verdict::Fail,
    }
}

/// Max/min reduction over per-sample residuals. A NaN residual poisons both
/// statistics so that it can never pass.
#[derive(Clone, Debug)]
pub(crate) struct Accumulator {
    samples: usize,
    max: f64,
    min: f64,
    max_witness: Option<Witness>,
    min_witness: Option<Witness>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { samples: 0, max: f64::NEG_INFINITY, min: f64::INFINITY, max_witness: None, min_witness: None }
    }

    pub fn push(&mut self, value: f64, point: [f64; 7], vector: Option<[f64; 7]>) {
        self.samples += 1;
        if value.is_nan() {
            self.max = f64::NAN;
            self.min = f64::NAN;
            return;
        }
        if self.max.is_nan() {
            return;
        }
        if value > self.max {
            self.max = value;
            self.max_witness = Some(Witness { point, vector, value });
        }
        if value < self.min {
            self.min = value;
            self.min_witness = Some(Witness { point, vector, value });
        }
    }

    pub fn finish(
        self,
        check_id: impl Into<String>,
        r: Option<f64>,
        criterion: Criterion,
        tolerance: f64,
    ) -> CheckReport {
        let (max, min) = if self.samples == 0 { (f64::NAN, f64::NAN) } else { (self.max, self.min) };
        let witness = match criterion {
            Criterion::MinGe => self.min_witness,
            _ => self.max_witness,
        };
        CheckReport {
            check_id: check_id.into(),
            r,
            samples: self.samples,
            max_residual: max,
            min_residual: min,
            tolerance,
            criterion,
            verdict: decide(criterion, max, min, tolerance),
            witness,
            observations: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        let mut a = Accumulator::new();
        a.push(1e-10, [0.0; 7], None);
        a.push(3e-10, [1.0; 7], None);
        let rep = a.clone().finish("x", None, Criterion::MaxLe, 1e-9);
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.witness.as_ref().unwrap().point, [1.0; 7]);
        assert_eq!(rep.clone().with_tolerance(1e-20).verdict, Verdict::Fail);
        let rep = a.clone().finish("x", None, Criterion::MinGe, 1e-10);
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.witness.unwrap().point, [0.0; 7]);
        let rep = a.finish("x", None, Criterion::Informational, 0.0);
        assert_eq!(rep.verdict, Verdict::Informational);
        assert!(rep.passed());
    }

    #[test]
    fn nan_and_empty_never_pass() {
        let mut a = Accumulator::new();
        a.push(0.0, [0.0; 7], None);
        a.push(f64::NAN, [0.0; 7], None);
        a.push(0.0, [0.0; 7], None);
        assert_eq!(a.finish("x", None, Criterion::MaxLe, 1.0).verdict, Verdict::Fail);
        let e = Accumulator::new();
        assert_eq!(e.finish("x", None, Criterion::MinGe, 0.0).verdict, Verdict::Fail);
    }
}

//! Scalar invariants and numerical estimates across an `r`-grid.

use nk6_core::checks::{curvature_estimate, umbilicity_check};
use nk6_core::hypersphere::scalar_invariants;
use nk6_core::HypersphereParam;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::RunConfig;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub r: f64,
    pub tau: f64,
    pub f: f64,
    pub alpha: f64,
    pub identity_residual: f64,
    pub curvature_estimate: f64,
    pub umbilicity_residual: f64,
}

/// `−0.9, −0.8, …, 0.9`.
pub fn default_grid() -> Vec<f64> {
    (-9..=9).map(|k| k as f64 / 10.0).collect()
}

pub fn sweep(cfg: &RunConfig) -> Result<Vec<SweepRow>, CliError> {
    cfg.validate()?;
    let diff = cfg.diff();
    cfg.r_values
        .par_iter()
        .map(|&r| {
            let param = HypersphereParam::new(r).map_err(|e| CliError::Config(e.to_string()))?;
            let inv = scalar_invariants(param);
            Ok(SweepRow {
                r,
                tau: inv.tau,
                f: inv.f,
                alpha: inv.alpha,
                identity_residual: inv.identity_residual.abs(),
                curvature_estimate: curvature_estimate(param, cfg.samples, cfg.seed, &diff)?,
                umbilicity_residual: umbilicity_check(param, cfg.samples, cfg.seed, &diff)?.max_residual,
            })
        })
        .collect()
}

pub fn render_csv(rows: &[SweepRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

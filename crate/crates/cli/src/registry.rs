//! The check suites run by `nk6 verify`.

use std::cmp::Ordering;

use nk6_core::acms::{self, AcmStructure};
use nk6_core::calculus::ConstantForm;
use nk6_core::checks;
use nk6_core::octonion::{validate_table, FanoTable};
use nk6_core::report::Observation;
use nk6_core::{CheckReport, Criterion, DiffConfig, HypersphereParam, Vec7, Verdict};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::CliError;

/// Check families selectable with `--check`.
pub const FAMILIES: &[&str] = &[
    "fano_table",
    "nearly_kahler",
    "scalar_identity_grid",
    "axioms",
    "contact_form",
    "contact_metric",
    "contact_metric_witness",
    "sasakian",
    "theorem_b",
    "hopf",
    "umbilicity",
    "curvature",
    "scalar_identity",
    "psi",
    "pullback",
    "meridian",
    "negative_controls",
];

/// Families evaluated once rather than per `r`.
const R_INDEPENDENT: &[&str] = &["fano_table", "nearly_kahler", "scalar_identity_grid"];

/// Points in the `r`-grid of `scalar_identity_grid`.
pub const SCALAR_GRID_POINTS: usize = 1000;

/// Margin a corrupted structure must violate the axioms by.
pub const CORRUPTION_MARGIN: f64 = 1e-2;
/// Scale applied to `φ` in the corrupted-axioms control.
pub const CORRUPTION_SCALE: f64 = 1.1;

const TABLE_TOL: f64 = 1e-12;

fn table_report() -> CheckReport {
    let diag = validate_table(&FanoTable::canonical());
    let worst =
        diag.norm_violations.iter().chain(&diag.alternativity_violations).fold(0.0, |m: f64, v| m.max(v.residual));
    let max = if diag.equation_mismatches.is_empty() { worst } else { f64::INFINITY };
    let count = |n: usize| n as f64;
    CheckReport {
        check_id: "fano_table".into(),
        r: None,
        samples: diag.samples,
        max_residual: max,
        min_residual: 0.0,
        tolerance: TABLE_TOL,
        criterion: Criterion::MaxLe,
        verdict: if max <= TABLE_TOL { Verdict::Pass } else { Verdict::Fail },
        witness: None,
        observations: vec![
            Observation { name: "norm_violations".into(), value: count(diag.norm_violations.len()) },
            Observation { name: "alternativity_violations".into(), value: count(diag.alternativity_violations.len()) },
            Observation { name: "equation_mismatches".into(), value: count(diag.equation_mismatches.len()) },
        ],
    }
}

fn run_global(family: &str, cfg: &RunConfig, diff: &DiffConfig) -> nk6_core::Result<Vec<CheckReport>> {
    Ok(match family {
        "fano_table" => vec![table_report()],
        "nearly_kahler" => vec![checks::nearly_kahler_check(cfg.samples, cfg.seed, diff)?],
        "scalar_identity_grid" => vec![checks::scalar_identity_grid(SCALAR_GRID_POINTS)],
        _ => unreachable!("{family} is per-r"),
    })
}

/// Unit rotation field `(−x₂, x₁, 0, …)/ρ`: tangent to `M_r` but not
/// geodesic, so it must fail the Hopf check.
fn rotation_field(p: &Vec7) -> nk6_core::Result<Vec7> {
    let rho = (p[0] * p[0] + p[1] * p[1]).sqrt();
    if rho < 1e-9 {
        return Err(nk6_core::Error::Domain("rotation field vanishes"));
    }
    let mut v = Vec7::ZERO;
    v[0] = -p[1] / rho;
    v[1] = p[0] / rho;
    Ok(v)
}

fn run_per_r(
    family: &str,
    param: HypersphereParam,
    cfg: &RunConfig,
    diff: &DiffConfig,
) -> nk6_core::Result<Vec<CheckReport>> {
    let (n, seed) = (cfg.samples, cfg.seed);
    let both = [AcmStructure::induced(), AcmStructure::normal_product()];
    Ok(match family {
        "axioms" => both.iter().map(|s| acms::check_acms_axioms(s, param, n, seed)).collect::<Result<_, _>>()?,
        "contact_form" => vec![acms::contact_form_check(param, n, seed, diff)?],
        "contact_metric" => {
            both.iter().map(|s| acms::contact_metric_residual(s, param, n, seed, diff)).collect::<Result<_, _>>()?
        }
        "contact_metric_witness" => vec![acms::contact_metric_witness(&both[0], param, n, seed, diff)?],
        "sasakian" => {
            both.iter().map(|s| acms::sasakian_residual(s, param, n, seed, diff)).collect::<Result<_, _>>()?
        }
        "theorem_b" => vec![acms::theorem_b_residual(param, n, seed, diff)?],
        "hopf" => vec![acms::hopf_check(param, n, seed, diff)?],
        "umbilicity" => vec![checks::umbilicity_check(param, n, seed, diff)?],
        "curvature" => vec![checks::curvature_check(param, n, seed, diff)?],
        "scalar_identity" => vec![checks::scalar_identity_check(param)],
        "psi" => vec![acms::psi_check(param, n, seed, diff)?],
        "pullback" => vec![acms::pullback_report(param, n, seed)?],
        "meridian" => vec![checks::meridian_check(param, n, seed)?],
        "negative_controls" => negative_controls(param, cfg, diff)?,
        _ => unreachable!("unknown family {family}"),
    })
}

/// Controls that must detect a broken input. Each report passes iff the
/// underlying check rejected it.
pub fn negative_controls(
    param: HypersphereParam,
    cfg: &RunConfig,
    diff: &DiffConfig,
) -> nk6_core::Result<Vec<CheckReport>> {
    let (n, seed) = (cfg.samples, cfg.seed);
    let corrupted = AcmStructure::induced().corrupted(CORRUPTION_SCALE);
    let axioms = acms::check_acms_axioms(&corrupted, param, n, seed)?;
    let mut closed = [0.0; 7];
    closed[0] = 1.0;
    let form = acms::contact_form_check_with(&ConstantForm(closed), "contact_form", param, n, seed, diff)?;
    let hopf = acms::hopf_check_with(&rotation_field, "hopf", param, n, seed, diff)?;
    Ok(vec![
        axioms.reframed("negative_control.axioms_corrupted_phi", Criterion::MaxGe, CORRUPTION_MARGIN),
        form.reframed("negative_control.contact_form_closed_eta", Criterion::MaxLe, acms::CONTACT_VOLUME_MIN),
        hopf.reframed("negative_control.hopf_rotation_field", Criterion::MaxGe, CORRUPTION_MARGIN),
    ])
}

fn family_of(check_id: &str) -> &str {
    check_id.split('.').next().unwrap_or(check_id)
}

fn apply_override(report: CheckReport, cfg: &RunConfig) -> CheckReport {
    let tol = cfg.tolerances.get(&report.check_id).or_else(|| cfg.tolerances.get(family_of(&report.check_id)));
    match tol {
        Some(&t) => report.with_tolerance(t),
        None => report,
    }
}

/// Deterministic report order: by id, then `r` (`None` first).
pub fn report_order(a: &CheckReport, b: &CheckReport) -> Ordering {
    a.check_id.cmp(&b.check_id).then_with(|| match (a.r, b.r) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => x.total_cmp(&y),
    })
}

/// Runs the selected families, one task per `(family, r)`, in parallel.
pub fn run_checks(cfg: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    cfg.validate()?;
    let diff = cfg.diff();
    let selected: Vec<&str> = match &cfg.checks {
        Some(list) => FAMILIES.iter().copied().filter(|f| list.iter().any(|c| c == f)).collect(),
        None => FAMILIES.to_vec(),
    };
    let params = cfg
        .r_values
        .iter()
        .map(|&r| HypersphereParam::new(r))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Config(e.to_string()))?;

    let mut tasks: Vec<(&str, Option<HypersphereParam>)> = Vec::new();
    for &family in &selected {
        if R_INDEPENDENT.contains(&family) {
            tasks.push((family, None));
        } else {
            tasks.extend(params.iter().map(|&p| (family, Some(p))));
        }
    }

    let results: Vec<Vec<CheckReport>> = tasks
        .par_iter()
        .map(|&(family, param)| match param {
            None => run_global(family, cfg, &diff),
            Some(p) => run_per_r(family, p, cfg, &diff),
        })
        .collect::<Result<_, _>>()?;

    let mut reports: Vec<CheckReport> = results.into_iter().flatten().map(|rep| apply_override(rep, cfg)).collect();
    reports.sort_by(report_order);
    Ok(reports)
}

/// Whether every non-informational report passed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

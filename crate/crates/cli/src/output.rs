//! Report serialization.

use nk6_core::{CheckReport, Criterion, Verdict};
use serde::Serialize;

use crate::config::{ConfigEcho, Format, RunConfig};
use crate::CliError;

#[derive(Serialize)]
pub struct ReportFile<'a> {
    pub config: ConfigEcho<'a>,
    pub table_fingerprint: &'a str,
    pub reports: &'a [CheckReport],
}

#[derive(Serialize)]
struct CsvRow<'a> {
    check_id: &'a str,
    r: Option<f64>,
    samples: usize,
    max_residual: f64,
    min_residual: f64,
    tolerance: f64,
    criterion: Criterion,
    verdict: Verdict,
}

pub fn render(cfg: &RunConfig, fingerprint: &str, reports: &[CheckReport], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => render_json(cfg, fingerprint, reports),
        Format::Csv => render_csv(reports),
        Format::Text => Ok(render_text(fingerprint, reports)),
    }
}

pub fn render_json(cfg: &RunConfig, fingerprint: &str, reports: &[CheckReport]) -> Result<String, CliError> {
    let file = ReportFile { config: cfg.echo(), table_fingerprint: fingerprint, reports };
    let mut s = serde_json::to_string_pretty(&file)?;
    s.push('\n');
    Ok(s)
}

pub fn render_csv(reports: &[CheckReport]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rep in reports {
        w.serialize(CsvRow {
            check_id: &rep.check_id,
            r: rep.r,
            samples: rep.samples,
            max_residual: rep.max_residual,
            min_residual: rep.min_residual,
            tolerance: rep.tolerance,
            criterion: rep.criterion,
            verdict: rep.verdict,
        })?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Informational => "INFO",
    }
}

fn criterion_label(c: Criterion) -> &'static str {
    match c {
        Criterion::MaxLe => "max <=",
        Criterion::MinGe => "min >=",
        Criterion::MaxGe => "max >=",
        Criterion::Informational => "",
    }
}

pub fn render_text(fingerprint: &str, reports: &[CheckReport]) -> String {
    let mut out = format!("table {fingerprint}\n");
    for rep in reports {
        let r = rep.r.map_or_else(|| "-".to_string(), |r| format!("{r:.4}"));
        let rule = match rep.criterion {
            Criterion::Informational => String::new(),
            c => format!("  ({} {:.1e})", criterion_label(c), rep.tolerance),
        };
        out.push_str(&format!(
            "{:4}  {:<44} r={:>7}  n={:<5} max={:.3e} min={:.3e}{}\n",
            verdict_label(rep.verdict),
            rep.check_id,
            r,
            rep.samples,
            rep.max_residual,
            rep.min_residual,
            rule
        ));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
    out
}

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nk6::config::{parse_tolerance, Format, RunConfig};
use nk6::eval::{self, EvalRequest, Quantity};
use nk6::{exit, output, registry, sweep, table, CliError};
use nk6_core::{DiffConfig, FanoTable};

#[derive(Parser)]
#[command(
    name = "nk6",
    version,
    about = "Numerical checks for contact structures on hyperspheres of the nearly Kähler S⁶"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the signed 7×7 basis-product matrix.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run check suites and write a report.
    Verify(VerifyArgs),
    /// Evaluate one quantity at a point of M_r.
    Eval(EvalArgs),
    /// Tabulate invariants and numerical estimates over an r-grid as CSV.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Flat `key = value` config file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated r values.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    r: Option<Vec<f64>>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    h1: Option<f64>,
    #[arg(long)]
    h2: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Comma-separated check families to run (default: all).
    #[arg(long, value_delimiter = ',')]
    check: Option<Vec<String>>,
    /// Tolerance override `id=value`; repeatable.
    #[arg(long)]
    tol: Vec<String>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Use `n` midpoints of (-0.99, 0.99) instead of the default grid.
    #[arg(long, conflicts_with = "r")]
    grid: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    /// Six (or seven) comma-separated coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    point: Vec<f64>,
    #[arg(long, value_enum)]
    quantity: Quantity,
    /// Tangent vector (seven components) for phi, phi-prime, psi and shape.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    vector: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Sample count for `curvature`.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    h1: Option<f64>,
    #[arg(long)]
    h2: Option<f64>,
}

fn build_config(mut cfg: RunConfig, common: &CommonArgs) -> Result<RunConfig, CliError> {
    if let Some(path) = &common.config {
        cfg.merge_file(path)?;
    }
    if let Some(r) = &common.r {
        cfg.r_values = r.clone();
    }
    if let Some(n) = common.samples {
        cfg.samples = n;
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    if let Some(h) = common.h1 {
        cfg.h1 = h;
    }
    if let Some(h) = common.h2 {
        cfg.h2 = h;
    }
    if let Some(out) = &common.out {
        cfg.out = Some(out.clone());
    }
    Ok(cfg)
}

/// Writes to `out` or stdout. A closed pipe (`nk6 table | head`) is not an
/// error.
fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            other => other?,
        },
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<u8, CliError> {
    let mut cfg = build_config(RunConfig::default(), &args.common)?;
    if let Some(f) = args.format {
        cfg.format = f;
    }
    if let Some(c) = args.check {
        cfg.checks = Some(c);
    }
    for spec in &args.tol {
        let (id, v) = parse_tolerance(spec)?;
        cfg.tolerances.insert(id, v);
    }
    cfg.validate()?;
    let reports = registry::run_checks(&cfg)?;
    let fingerprint = table::fingerprint(&FanoTable::canonical().product_table());
    emit(&output::render(&cfg, &fingerprint, &reports, cfg.format)?, cfg.out.as_deref())?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    for rep in &failed {
        eprintln!(
            "FAIL {} r={:?} max={:e} min={:e} tol={:e}",
            rep.check_id, rep.r, rep.max_residual, rep.min_residual, rep.tolerance
        );
    }
    Ok(if failed.is_empty() { exit::OK } else { exit::CHECK_FAILED })
}

fn sweep_cmd(args: SweepArgs) -> Result<u8, CliError> {
    let base = RunConfig { r_values: sweep::default_grid(), samples: 100, ..RunConfig::default() };
    let mut cfg = build_config(base, &args.common)?;
    if let Some(n) = args.grid {
        if n == 0 {
            return Err(CliError::Config("grid must have at least one point".into()));
        }
        cfg.r_values = nk6_core::checks::r_grid(n).map(|p| p.r()).collect();
    }
    let rows = sweep::sweep(&cfg)?;
    emit(&sweep::render_csv(&rows)?, cfg.out.as_deref())?;
    Ok(exit::OK)
}

fn eval_cmd(args: EvalArgs) -> Result<u8, CliError> {
    let default = DiffConfig::default();
    let req = EvalRequest {
        r: args.r,
        point: &args.point,
        vector: args.vector.as_deref(),
        quantity: args.quantity,
        samples: args.samples,
        seed: args.seed,
        diff: DiffConfig { h1: args.h1.unwrap_or(default.h1), h2: args.h2.unwrap_or(default.h2) },
    };
    let e = eval::evaluate(&req)?;
    for w in &e.warnings {
        eprintln!("warning: {w}");
    }
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&e)? + "\n",
        _ => eval::render_text(&e),
    };
    emit(&text, None)?;
    Ok(exit::OK)
}

fn table_cmd(format: Format) -> Result<u8, CliError> {
    let t = FanoTable::canonical().product_table();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&table::table_json(&t))? + "\n",
        Format::Csv => table::matrix(&t).iter().map(|row| row.join(",") + "\n").collect(),
        Format::Text => table::render_text(&t),
    };
    emit(&text, None)?;
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table { format } => table_cmd(format),
        Command::Verify(args) => verify(args),
        Command::Eval(args) => eval_cmd(args),
        Command::Sweep(args) => sweep_cmd(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("nk6: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, then a single
//! assertion that all of them passed.

use std::f64::consts::FRAC_1_SQRT_2;
use std::process::Command;
use std::time::{Duration, Instant};

use nk6_core::acms::{self, AcmStructure};
use nk6_core::calculus::{exterior_derivative, ConstantForm};
use nk6_core::checks;
use nk6_core::hypersphere::{coordinate_tangent, scalar_invariants};
use nk6_core::sampling::Sampler;
use nk6_core::{CheckReport, DiffConfig, HypersphereParam, MPoint, Octonion, Verdict};

const SAMPLES: usize = 1000;
const SEED: u64 = 20260;

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn param(r: f64) -> HypersphereParam {
    HypersphereParam::new(r).unwrap()
}

fn cfg() -> DiffConfig {
    DiffConfig::default()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Folds reports into one outcome; every report must pass.
fn all_pass(reports: &[CheckReport]) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| r.verdict != Verdict::Pass)
        .map(|r| format!("{}@{:?} max={:e} min={:e}", r.check_id, r.r, r.max_residual, r.min_residual))
        .collect();
    let worst = reports.iter().map(|r| r.max_residual).fold(0.0, f64::max);
    if bad.is_empty() {
        outcome(true, format!("{} reports, worst max {worst:.2e}", reports.len()))
    } else {
        outcome(false, bad.join("; "))
    }
}

fn c1_composition() -> Outcome {
    let ((worst, n), t) = timed(|| {
        let mut s = Sampler::new(SEED);
        let mut oct = || Octonion(std::array::from_fn(|_| s.normal()));
        let mut worst: f64 = 0.0;
        for _ in 0..10_000 {
            let (a, b) = (oct(), oct());
            let bound = a.norm() * b.norm();
            worst = worst.max(((a * b).norm() - bound).abs() / (1.0 + bound));
        }
        (worst, 10_000)
    });
    outcome(
        worst <= 1e-12 && t < Duration::from_secs(1),
        format!("{n} pairs, max relative defect {worst:.2e}, {t:.2?}"),
    )
}

fn c2_nearly_kahler() -> Outcome {
    let (rep, t) = timed(|| checks::nearly_kahler_check(SAMPLES, SEED, &cfg()).unwrap());
    outcome(
        rep.max_residual <= 1e-5 && rep.passed() && t < Duration::from_secs(10),
        format!("max |G(X,X)| {:.2e}, {t:.2?}", rep.max_residual),
    )
}

fn c3_umbilicity() -> Outcome {
    let reports: Vec<_> = [-0.9, -0.5, 0.0, 0.5, 0.9, FRAC_1_SQRT_2]
        .iter()
        .map(|&r| checks::umbilicity_check(param(r), SAMPLES, SEED, &cfg()).unwrap())
        .collect();
    let ok = reports.iter().all(|r| r.max_residual <= 1e-6);
    let o = all_pass(&reports);
    outcome(ok && o.pass, o.detail)
}

fn c4_curvature() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for (r, k) in [(0.0, 1.0), (0.6, 1.5625)] {
        let rep = checks::curvature_check(param(r), 200, SEED, &cfg()).unwrap();
        let mean = rep.observation("mean_estimate").unwrap();
        ok &= rep.passed() && rep.max_residual <= 1e-3 && (mean - k).abs() <= 1e-3;
        details.push(format!("r={r}: K≈{mean:.7} (max err {:.1e})", rep.max_residual));
    }
    outcome(ok, details.join(", "))
}

fn c5_scalar_identity() -> Outcome {
    let grid = checks::scalar_identity_grid(1000);
    let i0 = scalar_invariants(param(0.0));
    let i6 = scalar_invariants(param(0.6));
    let spots = i0.tau == 20.0
        && (i6.tau - 31.25).abs() <= 1e-12
        && (i6.f + 0.75).abs() <= 1e-12
        && (i6.alpha + 0.75).abs() <= 1e-12;
    outcome(
        grid.samples == 1000 && grid.max_residual <= 1e-12 && grid.passed() && spots,
        format!("grid max {:.2e}; tau(0.6) = {}, f = alpha = {}", grid.max_residual, i6.tau, i6.f),
    )
}

fn c6_contact_form() -> Outcome {
    let reports: Vec<_> =
        [-0.9, 0.0, 0.9].iter().map(|&r| acms::contact_form_check(param(r), SAMPLES, SEED, &cfg()).unwrap()).collect();
    let min = reports.iter().map(|r| r.min_residual).fold(f64::INFINITY, f64::min);
    outcome(reports.iter().all(|r| r.passed() && r.min_residual >= 1e-3), format!("min |η∧dη∧dη| {min:.3}"))
}

fn c7_witness() -> Outcome {
    let x = MPoint::new(param(0.0), [0.6, 0.8, 0.0, 0.0, 0.0, 0.0]).unwrap();
    let x12 = coordinate_tangent(1, 2, &x).unwrap();
    let x13 = coordinate_tangent(1, 3, &x).unwrap();
    let g = x12.dot(&acms::phi_natural(&x, &x13).unwrap());
    let d = exterior_derivative(&acms::EtaForm(param(0.0)), &x.position(), &x12, &x13, &cfg()).unwrap();
    let point_ok = (g + 0.6).abs() <= 1e-12 && d.abs() <= 1e-8;
    let reports: Vec<_> = [-0.9, -0.6, 0.0, 0.6, FRAC_1_SQRT_2, 0.9]
        .iter()
        .map(|&r| acms::contact_metric_witness(&AcmStructure::induced(), param(r), SAMPLES, SEED, &cfg()).unwrap())
        .collect();
    let margin = reports.iter().map(|r| r.min_residual).fold(f64::INFINITY, f64::min);
    outcome(
        point_ok && reports.iter().all(|r| r.passed() && r.min_residual >= 0.02),
        format!("g = {g:.12}, dη = {d:.1e}; min witness gap {margin:.4}"),
    )
}

fn c8_contact_metric() -> Outcome {
    let rep =
        acms::contact_metric_residual(&AcmStructure::normal_product(), param(0.0), SAMPLES, SEED, &cfg()).unwrap();
    let x = MPoint::new(param(0.0), [0.6, 0.8, 0.0, 0.0, 0.0, 0.0]).unwrap();
    let y = |b| acms::y_one(b, &x).unwrap();
    let d = |b| exterior_derivative(&acms::EtaForm(param(0.0)), &x.position(), &y(2), &y(b), &cfg()).unwrap();
    let g = |b| y(2).dot(&acms::phi_prime(&x, &y(b)).unwrap());
    let values_ok = (d(5) + 0.36).abs() <= 1e-10
        && (g(5) + 0.36).abs() <= 1e-10
        && (d(6) - 0.48).abs() <= 1e-10
        && (g(6) - 0.48).abs() <= 1e-10;
    outcome(
        rep.passed() && rep.max_residual <= 1e-8 && values_ok,
        format!("max residual {:.2e}; dη(Y12,Y15) = {:.10}, dη(Y12,Y16) = {:.10}", rep.max_residual, d(5), d(6)),
    )
}

fn c9_sasakian() -> Outcome {
    let np = AcmStructure::normal_product();
    let holds = acms::sasakian_residual(&np, param(0.0), SAMPLES, SEED, &cfg()).unwrap();
    let off = acms::sasakian_residual(&np, param(0.5), 200, SEED, &cfg()).unwrap();
    let nat = acms::sasakian_residual(&AcmStructure::induced(), param(0.0), 200, SEED, &cfg()).unwrap();
    outcome(
        holds.max_residual <= 1e-5 && off.min_residual >= 1e-2 && nat.min_residual >= 1e-2,
        format!(
            "M0 max {:.2e}; (φ′, 0.5) min {:.3}; (φ, 0) min {:.3}",
            holds.max_residual, off.min_residual, nat.min_residual
        ),
    )
}

fn c10_hopf() -> Outcome {
    let reports: Vec<_> = [-0.9, -0.6, 0.0, 0.5, 0.6, FRAC_1_SQRT_2, 0.9]
        .iter()
        .map(|&r| acms::hopf_check(param(r), SAMPLES, SEED, &cfg()).unwrap())
        .collect();
    let ok = reports.iter().all(|r| r.max_residual <= 1e-6);
    let o = all_pass(&reports);
    outcome(ok && o.pass, o.detail)
}

fn c11_psi() -> Outcome {
    let rep = acms::psi_check(param(0.0), SAMPLES, SEED, &cfg()).unwrap();
    outcome(rep.passed() && rep.max_residual <= 1e-5, format!("max |ψv − φ′v| {:.2e}", rep.max_residual))
}

fn c12_negative_controls() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for r in [-0.6, 0.0, 0.6] {
        let corrupted = AcmStructure::induced().corrupted(1.1);
        let axioms = acms::check_acms_axioms(&corrupted, param(r), SAMPLES, SEED).unwrap();
        let mut c = [0.0; 7];
        c[2] = 1.0;
        let closed =
            acms::contact_form_check_with(&ConstantForm(c), "contact_form", param(r), 200, SEED, &cfg()).unwrap();
        ok &= axioms.verdict == Verdict::Fail && closed.verdict == Verdict::Fail;
        details.push(format!(
            "r={r}: axioms max {:.3}, closed η min vol {:.1e}",
            axioms.max_residual, closed.min_residual
        ));
    }
    outcome(ok, details.join("; "))
}

fn c13_determinism() -> Outcome {
    let run = || Command::new(env!("CARGO_BIN_EXE_nk6")).args(["verify", "--seed", "42"]).output().expect("run nk6");
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    outcome(
        same && a.status.code() == Some(0) && b.status.code() == Some(0),
        format!("{} bytes, identical = {same}, exit {:?}", a.stdout.len(), a.status.code()),
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        (1, "octonion composition law", c1_composition),
        (2, "nearly Kähler condition", c2_nearly_kahler),
        (3, "umbilicity", c3_umbilicity),
        (4, "constant curvature", c4_curvature),
        (5, "scalar curvature identity", c5_scalar_identity),
        (6, "contact form", c6_contact_form),
        (7, "natural structure is not contact metric", c7_witness),
        (8, "φ′ is contact metric on M0", c8_contact_metric),
        (9, "Sasakian identity", c9_sasakian),
        (10, "ξ is geodesic and principal", c10_hopf),
        (11, "ψ = φ′ on M0", c11_psi),
        (12, "negative controls fail", c12_negative_controls),
        (13, "deterministic reports", c13_determinism),
    ];
    println!();
    let mut failed = Vec::new();
    for (id, name, check) in criteria {
        let o = check();
        println!("{} {id:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. Reports go to stdout (or `--out`) as JSON; the
//! human-readable summary goes to stderr.
//!
//! Exit codes: 0 when every non-`record` check passes, 1 when some check
//! fails, 2 for usage and configuration errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Algebra, AlgebraKind};
use crate::crossprod::{build_chi, verify_duality_suite};
use crate::generators::{GeneratorSet, Side};
use crate::lagrangian::build_projectors;
use crate::lagrangian::scan::{charge_constraint_scan, ScanGrid};
use crate::linalg::CMatrix;
use crate::scalar::{Exact, Float, Mode, Scalar};
use crate::suites::{run_suites, RunConfig, RunError, Suite, DEFAULT_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "spinlink",
    version,
    about = "Exact verification of quaternionic and octonionic generator identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Quaternion,
    Octonion,
}

impl From<AlgebraArg> for AlgebraKind {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Quaternion => AlgebraKind::Quaternion,
            AlgebraArg::Octonion => AlgebraKind::Octonion,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = AlgebraArg::Quaternion)]
    pub algebra: AlgebraArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Tolerance for float-mode checks.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, env = "SPINLINK_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Structure table in `I J K sign` lines, validated by the axiom suite.
    #[arg(long)]
    pub convention: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of axioms,gamma,sigma,transforms,lagrangian,cross,duality.
        #[arg(long)]
        suites: Option<String>,
    },
    /// Self-duality spectra of both triple cross products.
    Duality {
        #[command(flatten)]
        common: Common,
    },
    /// Mass-term gauge variation over a grid of charges.
    GaugeScan {
        #[command(flatten)]
        common: Common,
        /// Sample points per grid combination.
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[arg(long = "t-l", value_delimiter = ',', allow_hyphen_values = true)]
        t_l: Option<Vec<f64>>,
        #[arg(long = "t-r", value_delimiter = ',', allow_hyphen_values = true)]
        t_r: Option<Vec<f64>>,
        #[arg(long = "y-l", value_delimiter = ',', allow_hyphen_values = true)]
        y_l: Option<Vec<f64>>,
        #[arg(long = "y-r", value_delimiter = ',', allow_hyphen_values = true)]
        y_r: Option<Vec<f64>>,
        /// Complex masses such as `0.3+0.2i`.
        #[arg(long = "m", value_delimiter = ',', allow_hyphen_values = true)]
        m: Option<Vec<Complex64>>,
    },
    /// Print generator matrices and tensors with exact entries.
    Dump {
        /// One of gamma, sigma, sigmaV, eta, projectors, chi.
        selector: String,
        #[command(flatten)]
        common: Common,
    },
}

fn config(common: &Common, suites: Option<&str>) -> Result<RunConfig, RunError> {
    let algebra: AlgebraKind = common.algebra.into();
    let suites = match suites {
        Some(text) => Suite::parse_list(text)?,
        None => Suite::defaults(algebra),
    };
    let cfg = RunConfig {
        algebra,
        mode: common.mode.into(),
        tol: common.tol,
        seed: common.seed,
        convention: common.convention.clone(),
        suites,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            use std::io::Write;
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(format!("cannot write stdout: {e}"))
                }
                _ => Ok(()),
            }
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Verify { common, suites } => cmd_verify(&common, suites.as_deref()),
        Command::Duality { common } => cmd_duality(&common),
        Command::GaugeScan {
            common,
            points,
            t_l,
            t_r,
            y_l,
            y_r,
            m,
        } => {
            let d = ScanGrid::default();
            let grid = ScanGrid {
                t_l: t_l.unwrap_or(d.t_l),
                t_r: t_r.unwrap_or(d.t_r),
                y_l: y_l.unwrap_or(d.y_l),
                y_r: y_r.unwrap_or(d.y_r),
                m: m.unwrap_or(d.m),
            };
            cmd_gauge_scan(&common, &grid, points)
        }
        Command::Dump { selector, common } => cmd_dump(&common, &selector),
    }
}

pub fn cmd_verify(common: &Common, suites: Option<&str>) -> i32 {
    let cfg = match config(common, suites) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let report = match run_suites(&cfg) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if let Err(e) = emit(&common.out, &report.to_json()) {
        return usage(e);
    }
    let s = &report.summary;
    eprintln!(
        "{} {}: {} checks, {} passed, {} failed, {} recorded",
        report.algebra, cfg.mode, s.total, s.passed, s.failed, s.recorded
    );
    for c in report.checks.iter().filter(|c| c.is_failure()) {
        eprintln!(
            "  FAILED {} (deviation {}, expected {:?})",
            c.check_id, c.deviation, c.expected
        );
    }
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

pub fn cmd_duality(common: &Common) -> i32 {
    let cfg = match config(common, Some("duality")) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let alg = match cfg.load_algebra() {
        Ok(a) => a,
        Err(e) => return usage(e),
    };
    let (checks, spectra) = verify_duality_suite(&alg, cfg.tol);
    let text = serde_json::to_string_pretty(&spectra).expect("spectra serialize");
    if let Err(e) = emit(&common.out, &text) {
        return usage(e);
    }
    for s in &spectra {
        eprintln!(
            "{} {}: lambda {:?}, multiplicities {:?}, residual {}",
            s.algebra, s.side, s.eigenvalues, s.multiplicities, s.minimal_polynomial_residual
        );
    }
    if checks.iter().any(|c| c.is_failure()) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

pub fn cmd_gauge_scan(common: &Common, grid: &ScanGrid, points: usize) -> i32 {
    let lists = [&grid.t_l, &grid.t_r, &grid.y_l, &grid.y_r];
    if lists
        .iter()
        .any(|l| l.is_empty() || l.iter().any(|v| !v.is_finite()))
        || grid.m.is_empty()
        || grid
            .m
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return usage("grid values must be finite and every list non-empty");
    }
    if points == 0 {
        return usage("--points must be at least 1");
    }
    let rows = match charge_constraint_scan(grid, common.seed, points) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let text = serde_json::to_string_pretty(&rows).expect("rows serialize");
    if let Err(e) = emit(&common.out, &text) {
        return usage(e);
    }
    let invariant = rows.iter().filter(|r| r.invariant).count();
    eprintln!("gauge-scan: {} rows, {} invariant", rows.len(), invariant);
    EXIT_OK
}

#[derive(Serialize)]
struct NamedMatrix {
    name: String,
    entries: Vec<Vec<String>>,
}

fn named<S: Scalar>(name: String, m: &CMatrix<S>) -> NamedMatrix {
    NamedMatrix {
        name,
        entries: m.entry_rows(),
    }
}

fn pair_matrices<S: Scalar>(label: &str, ms: &[Vec<CMatrix<S>>]) -> Vec<NamedMatrix> {
    let n = ms.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            out.push(named(format!("{label}|{a}{b}"), &ms[a][b]));
        }
    }
    out
}

fn dump_value<S: Scalar>(alg: &Algebra, selector: &str) -> Result<Value, String> {
    let gs = GeneratorSet::<S>::new(alg);
    let matrices = match selector {
        "gamma" => [Side::L, Side::R]
            .iter()
            .flat_map(|&side| {
                gs.gamma(side)
                    .iter()
                    .enumerate()
                    .map(move |(a, m)| named(format!("Gamma_{}|{a}", side.label()), m))
            })
            .collect(),
        "sigma" => {
            let mut v = pair_matrices("Sigma_L", &gs.sigma_l);
            v.extend(pair_matrices("Sigma_R", &gs.sigma_r));
            v
        }
        "sigmaV" => pair_matrices("Sigma_V", &gs.sigma_v),
        "eta" => vec![named("eta".into(), &gs.eta_matrix())],
        "projectors" => {
            if alg.kind() != AlgebraKind::Quaternion {
                return Err("projectors are defined on the quaternionic generators only".into());
            }
            let p = build_projectors(&gs);
            p.all()
                .iter()
                .map(|(name, m)| named(format!("P_{name}"), m))
                .collect()
        }
        "chi" => {
            let mut sides = Vec::new();
            for side in [Side::L, Side::R] {
                let chi = build_chi::<S>(alg, side);
                let n = chi.n;
                let mut nonzero = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                let v = chi.get(a, b, c, d);
                                if !Scalar::is_zero(v) {
                                    nonzero.push(
                                        json!({"index": [a, b, c, d], "value": v.entry_string()}),
                                    );
                                }
                            }
                        }
                    }
                }
                sides.push(json!({"side": side.label(), "nonzero": nonzero}));
            }
            return Ok(json!({
                "object": "chi",
                "algebra": alg.kind().name(),
                "mode": S::MODE,
                "tensors": sides,
            }));
        }
        other => {
            return Err(format!(
                "unknown selector {other:?}, expected gamma, sigma, sigmaV, eta, projectors or chi"
            ))
        }
    };
    let matrices: Vec<NamedMatrix> = matrices;
    Ok(json!({
        "object": selector,
        "algebra": alg.kind().name(),
        "mode": S::MODE,
        "matrices": matrices,
    }))
}

pub fn cmd_dump(common: &Common, selector: &str) -> i32 {
    let cfg = match config(common, Some("gamma")) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let alg = match cfg.load_algebra() {
        Ok(a) => a,
        Err(e) => return usage(e),
    };
    let value = match cfg.mode {
        Mode::Exact => dump_value::<Exact>(&alg, selector),
        Mode::Float => dump_value::<Float>(&alg, selector),
    };
    match value {
        Ok(v) => match emit(
            &common.out,
            &serde_json::to_string_pretty(&v).expect("json"),
        ) {
            Ok(()) => EXIT_OK,
            Err(e) => usage(e),
        },
        Err(e) => usage(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_subcommands() {
        let cli = Cli::try_parse_from([
            "spinlink",
            "verify",
            "--algebra",
            "octonion",
            "--suites",
            "gamma",
        ])
        .unwrap();
        match cli.command {
            Command::Verify { common, suites } => {
                assert_eq!(common.algebra, AlgebraArg::Octonion);
                assert_eq!(suites.as_deref(), Some("gamma"));
            }
            _ => panic!("wrong subcommand"),
        }
        let cli = Cli::try_parse_from([
            "spinlink",
            "gauge-scan",
            "--t-r",
            "-0.5,0.5",
            "--m",
            "0.3+0.2i,0",
        ])
        .unwrap();
        match cli.command {
            Command::GaugeScan { t_r, m, .. } => {
                assert_eq!(t_r, Some(vec![-0.5, 0.5]));
                assert_eq!(m.unwrap()[0], Complex64::new(0.3, 0.2));
            }
            _ => panic!("wrong subcommand"),
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["spinlink", "verify", "--suites", ""]), EXIT_USAGE);
        assert_eq!(run(["spinlink", "verify", "--tol", "-1"]), EXIT_USAGE);
        assert_eq!(run(["spinlink", "dump", "nonsense"]), EXIT_USAGE);
        assert_eq!(run(["spinlink", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["spinlink", "gauge-scan", "--t-l", "abc"]), EXIT_USAGE);
        assert_eq!(
            run(["spinlink", "dump", "projectors", "--algebra", "octonion"]),
            EXIT_USAGE
        );
    }

    #[test]
    fn dump_eta_and_counts() {
        let h = Algebra::quaternion();
        let v = dump_value::<Exact>(&h, "eta").unwrap();
        let diag: Vec<String> = (0..4)
            .map(|i| {
                v["matrices"][0]["entries"][i][i]
                    .as_str()
                    .unwrap()
                    .to_string()
            })
            .collect();
        assert_eq!(diag, ["-1+0 i", "1+0 i", "1+0 i", "1+0 i"]);
        assert_eq!(
            dump_value::<Exact>(&h, "gamma").unwrap()["matrices"]
                .as_array()
                .unwrap()
                .len(),
            8
        );
        assert_eq!(
            dump_value::<Exact>(&h, "projectors").unwrap()["matrices"]
                .as_array()
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            dump_value::<Exact>(&h, "sigma").unwrap()["matrices"]
                .as_array()
                .unwrap()
                .len(),
            12
        );
    }
}

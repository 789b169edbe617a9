//! Command-line front-end: request parsing, method dispatch, reports and
//! batch mode.
//!
//! The `solve` binary is a thin wrapper around [`main_with_args`].

mod parse;
mod report;

pub use parse::{coeff_from_json, parse_coeff_list, parse_complex, request_from_json};
pub use report::{
    roots_out, to_json, to_text, ClassificationOut, ComplexOut, CrossCheck, Intermediates,
    MethodReport, NickallsOut, RootOut, SolveReport,
};

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::cubic::{
    classify_real_cubic, nickalls_params, solve_cardano, solve_hyperbolic, solve_trig_all,
    solve_viete,
};
use crate::error::{Error, Result};
use crate::oracle::{multiset_distance, oracle_roots, OracleConfig};
use crate::poly::{depress_quartic, discriminant, make_poly, vieta_residual, Poly};
use crate::quartic::{
    lagrange_resolvent, solve_descartes_with_factors, solve_euler, solve_ferrari, solve_fourier,
    solve_lagrange_with_s,
};
use crate::roots::{solve_low_degree, RootSet, SolveOptions, DEFAULT_ZERO_TOL};

/// Environment variable overriding the default `zero_tol`.
pub const ZERO_TOL_ENV: &str = "QUARTICA_ZERO_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cardano,
    Viete,
    Trig,
    Hyperbolic,
    Fourier,
    Ferrari,
    Descartes,
    Lagrange,
    Euler,
    Oracle,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Cardano => "cardano",
            Method::Viete => "viete",
            Method::Trig => "trig",
            Method::Hyperbolic => "hyperbolic",
            Method::Fourier => "fourier",
            Method::Ferrari => "ferrari",
            Method::Descartes => "descartes",
            Method::Lagrange => "lagrange",
            Method::Euler => "euler",
            Method::Oracle => "oracle",
            Method::All => "all",
        }
    }

    fn required_degree(self) -> Option<usize> {
        match self {
            Method::Cardano | Method::Viete | Method::Trig | Method::Hyperbolic => Some(3),
            Method::Fourier
            | Method::Ferrari
            | Method::Descartes
            | Method::Lagrange
            | Method::Euler => Some(4),
            Method::Oracle | Method::All => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveRequest {
    /// Highest degree first; normalized to monic before solving.
    pub coeffs: Vec<Complex>,
    pub method: Method,
    pub polish: bool,
    pub zero_tol: f64,
    pub output: OutputFormat,
}

impl Default for SolveRequest {
    fn default() -> Self {
        SolveRequest {
            coeffs: Vec::new(),
            method: Method::All,
            polish: true,
            zero_tol: DEFAULT_ZERO_TOL,
            output: OutputFormat::Json,
        }
    }
}

/// `zero_tol` from [`ZERO_TOL_ENV`] if set and valid, else the default.
pub fn default_zero_tol() -> Result<f64> {
    match std::env::var(ZERO_TOL_ENV) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t >= 0.0)
            .ok_or_else(|| {
                Error::ParseError(format!("{ZERO_TOL_ENV}={s:?} is not a valid tolerance"))
            }),
        Err(_) => Ok(DEFAULT_ZERO_TOL),
    }
}

fn as_precondition(method: Method, e: Error) -> Error {
    match e {
        Error::PreconditionViolated(msg) => Error::MethodPrecondition(msg),
        Error::NotRealCoefficients => {
            Error::MethodPrecondition(format!("{} requires real coefficients", method.name()))
        }
        other => other,
    }
}

fn c3(z: [Complex; 3]) -> Vec<ComplexOut> {
    z.iter().map(|&w| w.into()).collect()
}

/// Runs one method, returning its roots and intermediates.
fn run_method(
    poly: &Poly,
    method: Method,
    opts: &SolveOptions,
) -> Result<(RootSet, Option<Intermediates>)> {
    if let Some(n) = method.required_degree() {
        if poly.degree() != n {
            return Err(Error::MethodPrecondition(format!(
                "{} requires degree {n}, got {}",
                method.name(),
                poly.degree()
            )));
        }
    }
    let out = match method {
        Method::Cardano => {
            let (rs, it) = solve_cardano(poly, opts)?;
            let inter = Intermediates::Cubic {
                u3: it.u3.into(),
                v3: it.v3.into(),
                u: it.u.into(),
                v: it.v.into(),
            };
            (rs, Some(inter))
        }
        Method::Viete => (solve_viete(poly, opts)?, None),
        Method::Trig => (solve_trig_all(poly, opts)?, None),
        Method::Hyperbolic => (solve_hyperbolic(poly, opts)?, None),
        Method::Fourier | Method::Ferrari => {
            let (rs, it) = if method == Method::Fourier {
                solve_fourier(poly, opts)?
            } else {
                solve_ferrari(poly, opts)?
            };
            let inter = Intermediates::Quartic {
                resolvent: it.resolvent.coeffs().iter().map(|&z| z.into()).collect(),
                uvw: c3(it.uvw),
                gammas: c3(it.gammas),
                chosen_u: it.chosen_u.into(),
            };
            (rs, Some(inter))
        }
        Method::Descartes => {
            let (rs, fact) = solve_descartes_with_factors(poly, opts)?;
            let form = depress_quartic(poly)?;
            let inter = fact.map(|f| Intermediates::Descartes {
                k: f.k.into(),
                l: f.l.into(),
                m: f.m.into(),
                n: f.n.into(),
                expansion_residual: f.residual(&form),
            });
            (rs, inter)
        }
        Method::Lagrange => {
            let (rs, s) = solve_lagrange_with_s(poly, opts)?;
            let inter = Intermediates::Lagrange {
                resolvent: lagrange_resolvent(poly)?
                    .coeffs()
                    .iter()
                    .map(|&z| z.into())
                    .collect(),
                s: c3(s),
            };
            (rs, Some(inter))
        }
        Method::Euler => (solve_euler(poly, opts)?, None),
        Method::Oracle => (oracle_roots(poly, &OracleConfig::default())?, None),
        Method::All => unreachable!("expanded by the caller"),
    };
    Ok(out)
}

fn methods_for(degree: usize) -> &'static [Method] {
    match degree {
        3 => &[
            Method::Cardano,
            Method::Viete,
            Method::Trig,
            Method::Hyperbolic,
            Method::Oracle,
        ],
        4 => &[
            Method::Fourier,
            Method::Ferrari,
            Method::Descartes,
            Method::Lagrange,
            Method::Euler,
            Method::Oracle,
        ],
        _ => &[Method::Oracle],
    }
}

fn method_report(
    name: &str,
    poly: &Poly,
    rs: &RootSet,
    inter: Option<Intermediates>,
) -> MethodReport {
    MethodReport {
        name: name.to_string(),
        roots: roots_out(rs),
        intermediates: inter,
        skipped_reason: None,
        vieta_residual: Some(vieta_residual(poly, rs)),
    }
}

/// Solves `request` and builds the report.
///
/// A single method whose precondition fails is an error; `method = all`
/// records it as skipped instead.
pub fn run(request: &SolveRequest) -> Result<SolveReport> {
    let poly = make_poly(&request.coeffs)?;
    let opts = SolveOptions {
        polish: request.polish,
        zero_tol: request.zero_tol,
        ..SolveOptions::default()
    };
    let degree = poly.degree();
    let disc = if degree >= 2 {
        Some(discriminant(&poly)?.into())
    } else {
        None
    };
    let classification = if degree == 3 && poly.is_real() {
        let cl = classify_real_cubic(&poly, opts.zero_tol)?;
        let n = nickalls_params(&poly)?;
        Some(ClassificationOut {
            kind: cl.kind,
            distinct_real_roots: cl.kind.distinct_real_roots(),
            nickalls: NickallsOut {
                delta: n.delta_g.into(),
                h: n.h.into(),
            },
        })
    } else {
        None
    };

    let mut methods = Vec::new();
    let mut solved: Vec<(String, Vec<Complex>)> = Vec::new();
    if request.method == Method::All {
        if degree <= 2 {
            let rs = solve_low_degree(&poly, &opts)?;
            solved.push(("direct".into(), rs.expanded()));
            methods.push(method_report("direct", &poly, &rs, None));
        }
        for &m in methods_for(degree) {
            match run_method(&poly, m, &opts) {
                Ok((rs, inter)) => {
                    solved.push((m.name().into(), rs.expanded()));
                    methods.push(method_report(m.name(), &poly, &rs, inter));
                }
                Err(e) => methods.push(MethodReport {
                    name: m.name().into(),
                    roots: Vec::new(),
                    intermediates: None,
                    skipped_reason: Some(as_precondition(m, e).to_string()),
                    vieta_residual: None,
                }),
            }
        }
    } else {
        let (rs, inter) = run_method(&poly, request.method, &opts)
            .map_err(|e| as_precondition(request.method, e))?;
        methods.push(method_report(request.method.name(), &poly, &rs, inter));
    }

    let cross_check = (request.method == Method::All).then(|| CrossCheck {
        methods: solved.iter().map(|(n, _)| n.clone()).collect(),
        max_pairwise_distance: solved
            .iter()
            .map(|(_, a)| {
                solved
                    .iter()
                    .map(|(_, b)| multiset_distance(a, b))
                    .collect()
            })
            .collect(),
    });

    Ok(SolveReport {
        input: request.coeffs.iter().map(|&z| z.into()).collect(),
        degree,
        discriminant: disc,
        classification,
        methods,
        cross_check,
    })
}

/// Renders a report in the requested format.
pub fn render(report: &SolveReport, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => to_json(report),
        OutputFormat::Text => to_text(report),
    }
}

#[derive(Serialize)]
struct LineError<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    error: ErrorOut<'a>,
}

#[derive(Serialize)]
struct ErrorOut<'a> {
    kind: &'a str,
    message: String,
}

/// JSON for an error, as written inline by batch mode (with the 1-based
/// line number) and to stderr.
pub fn error_json(line: Option<usize>, e: &Error) -> String {
    to_json(&LineError {
        line,
        error: ErrorOut {
            kind: e.kind(),
            message: e.to_string(),
        },
    })
}

/// Output of [`run_batch`]: one JSON line per non-blank input line, in input
/// order, and the exit code (0, or the largest code among failed lines).
#[derive(Debug, Clone, PartialEq)]
pub struct BatchOutput {
    pub lines: Vec<String>,
    pub exit_code: i32,
}

/// Processes a file of JSON requests, one per line, concurrently.
///
/// Blank lines are skipped. Failures are reported inline as
/// `{"error": {"kind", "message"}, "line": n}` with 1-based `n`.
pub fn run_batch(path: &Path, defaults: &SolveRequest) -> Result<BatchOutput> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::FileNotFound(format!("{}: {e}", path.display())))?;
    let inputs: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    let results: Vec<std::result::Result<String, (String, i32)>> = inputs
        .par_iter()
        .map(|&(n, line)| {
            request_from_json(line, defaults)
                .and_then(|req| run(&req))
                .map(|rep| to_json(&rep))
                .map_err(|e| (error_json(Some(n), &e), e.exit_code()))
        })
        .collect();
    let exit_code = results
        .iter()
        .filter_map(|r| r.as_ref().err().map(|(_, code)| *code))
        .max()
        .unwrap_or(0);
    let lines = results
        .into_iter()
        .map(|r| r.unwrap_or_else(|(s, _)| s))
        .collect();
    Ok(BatchOutput { lines, exit_code })
}

#[derive(Debug, Parser)]
#[command(
    name = "solve",
    about = "Closed-form roots of polynomials of degree at most four",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    /// Coefficients, highest degree first, e.g. `1,0,-7,-6` or `1,0,0,-2-11i`.
    #[arg(long, allow_hyphen_values = true, required = true)]
    coeffs: Option<String>,

    #[arg(long, value_enum, default_value = "all")]
    method: Method,

    /// Skip the Newton polish step.
    #[arg(long)]
    no_polish: bool,

    /// Relative threshold for treating Δ as zero [env: QUARTICA_ZERO_TOL].
    #[arg(long)]
    zero_tol: Option<f64>,

    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one JSON request per line of FILE and write one JSON report per line.
    Batch { file: PathBuf },
}

fn defaults_from(cli: &Cli) -> Result<SolveRequest> {
    let zero_tol = match cli.zero_tol {
        Some(t) if t.is_finite() && t >= 0.0 => t,
        Some(t) => return Err(Error::ParseError(format!("invalid --zero-tol {t}"))),
        None => default_zero_tol()?,
    };
    Ok(SolveRequest {
        coeffs: Vec::new(),
        method: cli.method,
        polish: !cli.no_polish,
        zero_tol,
        output: cli.output,
    })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let defaults = defaults_from(&cli)?;
    match cli.command {
        Some(Command::Batch { file }) => {
            let batch = run_batch(&file, &defaults)?;
            for line in &batch.lines {
                let _ = writeln!(out, "{line}");
            }
            Ok(batch.exit_code)
        }
        None => {
            let coeffs = parse_coeff_list(cli.coeffs.as_deref().unwrap_or_default())?;
            let request = SolveRequest { coeffs, ..defaults };
            let report = run(&request)?;
            let _ = writeln!(out, "{}", render(&report, request.output).trim_end());
            Ok(0)
        }
    }
}

/// Parses `args`, runs, writes to stdout/stderr and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match dispatch(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", error_json(None, &e));
            e.exit_code()
        }
    }
}

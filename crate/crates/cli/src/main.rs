//! `circulant`: structure detection, closed-form inversion, determinants,
//! singular solving, cycle Green functions, and a benchmark harness for
//! circulant matrices given by their first row.
//!
//! Reports are single-line JSON on stdout (CSV with --csv); diagnostics go
//! to stderr. Exit codes: 0 success, 1 usage error, 2 singular matrix,
//! 3 dense cap exceeded, 4 incompatible system.

mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use circulant_core::closed_form::{
    certify_structured, cycle_green, detect_structure, invert_structured, laplacian_green,
    solve_singular_cycle, solve_singular_q1, solve_singular_qm1, Arithmetic, Geometric,
    InverseResult, QuadraticPattern, SolveReport, StructuredForm, SymThreeParam, ThreeParamRow,
    TridiagSym,
};
use circulant_core::spectral::{self, InvertCertificate};
use circulant_core::{CirculantVector, Error as CoreError};

use input::{form_json, parse_list, InputOpts, ResolvedInput};

const TOL_ENV: &str = "CIRCULANT_TOL";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(CoreError),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Core(err) => match err {
                CoreError::Singular { .. } => 2,
                CoreError::DenseCapExceeded { .. } => 3,
                CoreError::Incompatible(_) => 4,
                _ => 1,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(err) => write!(f, "{err}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        CliError::Core(err)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "circulant",
    version,
    about = "Structured circulant matrices: detection, closed-form inverses, determinants, \
             singular solvers, Green functions, benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CommonOpts {
    /// Scale-relative singularity/branch tolerance
    /// [default: 1e-10, or the CIRCULANT_TOL environment variable]
    #[arg(long, value_name = "TOL", global = false)]
    tol: Option<f64>,

    /// Cap on dense materialization (oracles, residual checks, matrices)
    #[arg(long, value_name = "N", default_value_t = circulant_core::DEFAULT_DENSE_CAP)]
    cap: usize,

    /// Emit CSV instead of JSON
    #[arg(long)]
    csv: bool,
}

impl CommonOpts {
    fn tolerance(&self) -> Result<f64, CliError> {
        if let Some(t) = self.tol {
            return Ok(t);
        }
        match std::env::var(TOL_ENV) {
            Ok(text) => text
                .parse::<f64>()
                .map_err(|e| CliError::usage(format!("bad {TOL_ENV} value '{text}': {e}"))),
            Err(_) => Ok(circulant_core::DEFAULT_TOLERANCE),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invert a circulant row (closed form when structured, DFT oracle otherwise)
    Invert(InvertArgs),
    /// Determinant through the spectral oracle
    Det(DetArgs),
    /// Invertibility verdict with margin certificate
    Check(CheckArgs),
    /// Solve structured (possibly singular) circulant systems
    Solve(SolveArgs),
    /// Green functions of the n-cycle
    Green(GreenArgs),
    /// Wall-clock comparison: closed form vs DFT and dense oracles
    Bench(BenchArgs),
    /// Recognize a structured pattern in a row
    Detect(DetectArgs),
}

#[derive(Args, Debug)]
struct InvertArgs {
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
    /// Also emit the full dense inverse matrix (below the cap only)
    #[arg(long)]
    dense: bool,
}

#[derive(Args, Debug)]
struct DetArgs {
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Solve the cycle-Laplacian system Circ(2,-1,0,...,0,-1) h = rhs
    #[arg(long, conflicts_with_all = ["q1", "qm1"])]
    laplacian: bool,
    /// Solve the difference system Circ(1,-1,0,...,0) h = rhs
    #[arg(long, conflicts_with = "qm1")]
    q1: bool,
    /// Solve the alternating system Circ(-1,-1,0,...,0) h = rhs (even order)
    #[arg(long)]
    qm1: bool,
    /// Right-hand side, comma separated
    #[arg(long, value_name = "LIST")]
    rhs: Option<String>,
    /// Right-hand side from file (JSON array or one number per line)
    #[arg(long, value_name = "PATH")]
    rhs_file: Option<std::path::PathBuf>,
    /// Requested component sum of the solution (laplacian and q1 systems)
    #[arg(long, default_value_t = 0.0)]
    gamma: f64,
    /// Kernel coordinate of the returned solution (qm1 system)
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args, Debug)]
struct GreenArgs {
    /// Order of the cycle
    #[arg(long)]
    n: usize,
    /// Schroedinger parameter; omit (or pass 1) for the Laplacian Green matrix
    #[arg(long)]
    q: Option<f64>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Orders to time, ascending, comma separated
    #[arg(long, value_name = "LIST")]
    sizes: String,
    /// Families to time: any of sym3, 3param, tridiag, cycle, geom, arith, quad
    #[arg(long, value_name = "LIST", default_value = "sym3,3param")]
    forms: String,
    /// Trials per measurement (the minimum is reported)
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args, Debug)]
struct DetectArgs {
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{err}");
            return ExitCode::from(1);
        }
    };
    let outcome = match cli.command {
        Command::Invert(args) => cmd_invert(args),
        Command::Det(args) => cmd_det(args),
        Command::Check(args) => cmd_check(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Green(args) => cmd_green(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Detect(args) => cmd_detect(args),
    };
    match outcome {
        Ok(payload) => {
            print!("{payload}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn certificate_json(cert: &InvertCertificate<f64>) -> Value {
    json!({
        "invertible": cert.invertible,
        "margin": cert.margin,
        "witness": cert.witness,
    })
}

/// Max-norm residual of `Circ(row) * first-column-of-inverse - e`, computed
/// directly; O(n^2), so only run below the cap.
fn inverse_residual(
    row: &CirculantVector<f64>,
    inverse: &CirculantVector<f64>,
) -> Result<f64, CliError> {
    let column = inverse.tau_permute();
    let image = row.apply(column.as_slice())?;
    let mut residual = (image[0] - 1.0).abs();
    for v in &image[1..] {
        residual = residual.max(v.abs());
    }
    Ok(residual)
}

fn cmd_invert(args: InvertArgs) -> Result<String, CliError> {
    let tol = args.common.tolerance()?;
    let cap = args.common.cap;
    let resolved = args.input.resolve()?;
    let n = resolved.row.len();

    let mut notes: Vec<String> = Vec::new();
    let result: InverseResult<f64> = match &resolved.form {
        Some(form) => invert_structured(form, tol)?,
        None => match detect_structure(&resolved.row) {
            Some(form) => invert_structured(&form, tol)?,
            None => {
                if n > cap {
                    return Err(CoreError::DenseCapExceeded { n, cap }.into());
                }
                notes.push("no closed form; inverted via DFT oracle".into());
                spectral::dft_inverse(&resolved.row, tol)?
            }
        },
    };

    let residual = if n <= cap {
        Some(inverse_residual(&resolved.row, &result.row)?)
    } else {
        notes.push(format!("residual check skipped: n exceeds dense cap {cap}"));
        None
    };

    if args.common.csv {
        return Ok(report::csv_row(result.row.as_slice()));
    }

    let mut payload = json!({
        "command": "invert",
        "input": resolved.echo,
        "n": n,
        "method": result.method.as_str(),
        "certificate": certificate_json(&result.certificate),
        "inverse_row": result.row.as_slice(),
        "residual": residual,
        "note": if notes.is_empty() { Value::Null } else { Value::String(notes.join("; ")) },
    });
    if args.dense {
        if n > cap {
            return Err(CoreError::DenseCapExceeded { n, cap }.into());
        }
        let dense = result.row.materialize_capped(cap)?;
        let rows: Vec<Vec<f64>> = (0..n).map(|i| dense.row(i).to_vec()).collect();
        payload["inverse_matrix"] = json!(rows);
    }
    Ok(report::json_line(&payload))
}

fn cmd_det(args: DetArgs) -> Result<String, CliError> {
    let cap = args.common.cap;
    let resolved = args.input.resolve()?;
    let n = resolved.row.len();
    if n > cap {
        return Err(CoreError::DenseCapExceeded { n, cap }.into());
    }
    let det = spectral::determinant(&resolved.row);
    if args.common.csv {
        return Ok(report::csv_row(&[det.value]));
    }
    let value = if det.value.is_finite() {
        json!(det.value)
    } else {
        Value::Null
    };
    let payload = json!({
        "command": "det",
        "input": resolved.echo,
        "n": n,
        "determinant": value,
        "overflow": det.overflow,
        "method": "spectral",
    });
    Ok(report::json_line(&payload))
}

fn cmd_check(args: CheckArgs) -> Result<String, CliError> {
    let tol = args.common.tolerance()?;
    let cap = args.common.cap;
    let resolved = args.input.resolve()?;
    let n = resolved.row.len();

    let form = resolved.form.or_else(|| detect_structure(&resolved.row));
    let (cert, method, form_value) = match &form {
        Some(form) => (
            certify_structured(form, tol)?,
            "closed-form",
            form_json(form),
        ),
        None => {
            if n > cap {
                return Err(CoreError::DenseCapExceeded { n, cap }.into());
            }
            (
                spectral::spectrum(&resolved.row).certificate(tol),
                "spectral",
                Value::String("unstructured".into()),
            )
        }
    };

    if args.common.csv {
        return Ok(format!(
            "{},{},{}\n",
            cert.invertible,
            report::float(cert.margin),
            cert.witness
        ));
    }
    let payload = json!({
        "command": "check",
        "input": resolved.echo,
        "n": n,
        "form": form_value,
        "method": method,
        "invertible": cert.invertible,
        "margin": cert.margin,
        "witness": cert.witness,
    });
    Ok(report::json_line(&payload))
}

fn cmd_solve(args: SolveArgs) -> Result<String, CliError> {
    let tol = args.common.tolerance()?;
    let cap = args.common.cap;

    let rhs: Vec<f64> = match (&args.rhs, &args.rhs_file) {
        (Some(text), None) => parse_list(text)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            let trimmed = text.trim();
            if trimmed.starts_with('[') {
                serde_json::from_str(trimmed)
                    .map_err(|e| CliError::usage(format!("bad JSON array: {e}")))?
            } else {
                trimmed
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(|l| l.parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::usage(format!("bad number in rhs file: {e}")))?
            }
        }
        _ => {
            return Err(CliError::usage(
                "provide the right-hand side with --rhs or --rhs-file",
            ))
        }
    };
    let n = rhs.len();
    if let Some(expect) = args.input.n {
        if expect != n {
            return Err(CliError::usage(format!(
                "--n {expect} does not match right-hand side length {n}"
            )));
        }
    }

    let (system, report, gamma_out, alpha_out): (&str, SolveReport<f64>, Option<f64>, Option<f64>) =
        if args.laplacian {
            (
                "laplacian",
                solve_singular_cycle(&rhs, args.gamma, tol)?,
                Some(args.gamma),
                None,
            )
        } else if args.q1 {
            (
                "q1",
                solve_singular_q1(&rhs, args.gamma, tol)?,
                Some(args.gamma),
                None,
            )
        } else if args.qm1 {
            (
                "qm1",
                solve_singular_qm1(&rhs, args.alpha, tol)?,
                None,
                Some(args.alpha),
            )
        } else {
            // General circulant system through the dense oracle.
            let resolved = args.input.resolve().map_err(|_| {
                CliError::usage(
                    "pick a system: --laplacian, --q1, --qm1, or a circulant input \
                     (--row/--file/generator flags)",
                )
            })?;
            if resolved.row.len() != n {
                return Err(CliError::usage(format!(
                    "matrix order {} does not match right-hand side length {n}",
                    resolved.row.len()
                )));
            }
            let solution = spectral::dense_solve(&resolved.row, &rhs, cap)?;
            let image = resolved.row.apply(&solution)?;
            let residual = image
                .iter()
                .zip(&rhs)
                .fold(0.0f64, |m, (y, v)| m.max((y - v).abs()));
            (
                "dense",
                SolveReport {
                    solution,
                    residual,
                    constraint: None,
                    alpha: None,
                },
                None,
                None,
            )
        };

    if args.common.csv {
        return Ok(report::csv_row(&report.solution));
    }
    let constraint = report
        .constraint
        .map(|c| json!({"target": c.target, "achieved": c.achieved}));
    let payload = json!({
        "command": "solve",
        "system": system,
        "n": n,
        "gamma": gamma_out,
        "alpha": alpha_out,
        "solution": report.solution,
        "residual": report.residual,
        "constraint": constraint,
    });
    Ok(report::json_line(&payload))
}

fn cmd_green(args: GreenArgs) -> Result<String, CliError> {
    let tol = args.common.tolerance()?;
    let cap = args.common.cap;
    let n = args.n;

    match args.q {
        Some(q) if (q - 1.0).abs() > tol => {
            let result = cycle_green(q, n, tol)?;
            let residual = if n <= cap {
                Some(inverse_residual(
                    &circulant_core::closed_form::CycleSchrodinger { q, n }.row(),
                    &result.row,
                )?)
            } else {
                None
            };
            if args.common.csv {
                return Ok(report::csv_row(result.row.as_slice()));
            }
            let payload = json!({
                "command": "green",
                "kind": "cycle",
                "n": n,
                "q": q,
                "certificate": certificate_json(&result.certificate),
                "row": result.row.as_slice(),
                "residual": residual,
            });
            Ok(report::json_line(&payload))
        }
        _ => {
            let g = laplacian_green::<f64>(n, cap)?;
            let max_row_sum = g.row_sums().into_iter().fold(0.0f64, |m, s| m.max(s.abs()));
            let rows: Vec<Vec<f64>> = (0..n).map(|i| g.row(i).to_vec()).collect();
            if args.common.csv {
                let mut out = String::new();
                for row in &rows {
                    out.push_str(&report::csv_row(row));
                }
                return Ok(out);
            }
            let payload = json!({
                "command": "green",
                "kind": "laplacian",
                "n": n,
                "q": 1.0,
                "matrix": rows,
                "max_abs_row_sum": max_row_sum,
            });
            Ok(report::json_line(&payload))
        }
    }
}

fn bench_form(name: &str, n: usize) -> Result<StructuredForm<f64>, CliError> {
    Ok(match name {
        "sym3" => StructuredForm::SymThreeParam(SymThreeParam {
            a: 5.0,
            b: 2.0,
            c: 1.0,
            n,
        }),
        "3param" | "three" => StructuredForm::ThreeParamRow(ThreeParamRow {
            a: 5.0,
            b: 2.0,
            c: 1.0,
            n,
        }),
        "tridiag" => StructuredForm::TridiagSym(TridiagSym { a: 4.0, b: 1.0, n }),
        "cycle" => {
            StructuredForm::CycleSchrodinger(circulant_core::closed_form::CycleSchrodinger {
                q: 3.0,
                n,
            })
        }
        "geom" => StructuredForm::Geometric(Geometric { a: 1.0, r: 0.5, n }),
        "arith" => StructuredForm::Arithmetic(Arithmetic { a: 1.0, b: 1.0, n }),
        "quad" => StructuredForm::QuadraticPattern(QuadraticPattern { a: 1.0, b: 1.0, n }),
        other => {
            return Err(CliError::usage(format!(
                "unknown bench form '{other}'; pick from sym3, 3param, tridiag, cycle, geom, \
                 arith, quad"
            )))
        }
    })
}

fn cmd_bench(args: BenchArgs) -> Result<String, CliError> {
    let tol = args.common.tolerance()?;
    let cap = args.common.cap;
    if args.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }

    let sizes: Vec<usize> = args
        .sizes
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|e| CliError::usage(format!("bad size '{s}': {e}")))
        })
        .collect::<Result<_, _>>()?;
    if sizes.is_empty() {
        return Err(CliError::usage("--sizes must list at least one order"));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::usage("--sizes must be strictly ascending"));
    }
    if sizes[0] < 3 {
        return Err(CliError::usage("bench orders start at 3"));
    }
    let forms: Vec<String> = args
        .forms
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if forms.is_empty() {
        return Err(CliError::usage("--forms must list at least one family"));
    }

    let time_min = |mut run: Box<dyn FnMut() -> Result<(), CliError>>,
                    trials: usize|
     -> Result<u128, CliError> {
        let mut best = u128::MAX;
        for _ in 0..trials {
            let t = Instant::now();
            run()?;
            best = best.min(t.elapsed().as_nanos());
        }
        Ok(best)
    };

    let mut results = Vec::new();
    for &n in &sizes {
        for name in &forms {
            let form = bench_form(name, n)?;
            let closed = invert_structured(&form, tol)?;
            let closed_ns = time_min(
                Box::new(move || {
                    invert_structured(&form, tol)?;
                    Ok(())
                }),
                args.trials,
            )?;

            let (dft_ns, dense_ns, max_diff, note) = if n <= cap {
                let row = form.row();
                let dft = spectral::dft_inverse(&row, tol)?;
                let dft_ns = time_min(
                    Box::new({
                        let row = row.clone();
                        move || {
                            spectral::dft_inverse(&row, tol)?;
                            Ok(())
                        }
                    }),
                    args.trials,
                )?;
                let dense = spectral::dense_inverse_row(&row, cap)?;
                let dense_ns = time_min(
                    Box::new({
                        let row = row.clone();
                        move || {
                            spectral::dense_inverse_row(&row, cap)?;
                            Ok(())
                        }
                    }),
                    args.trials,
                )?;
                let scale = closed.row.max_abs().max(1e-30);
                let mut diff = 0.0f64;
                for (x, y) in closed.row.as_slice().iter().zip(dft.row.as_slice()) {
                    diff = diff.max((x - y).abs());
                }
                for (x, y) in closed.row.as_slice().iter().zip(dense.as_slice()) {
                    diff = diff.max((x - y).abs());
                }
                (Some(dft_ns), Some(dense_ns), Some(diff / scale), None)
            } else {
                (
                    None,
                    None,
                    None,
                    Some(format!("oracles skipped: n exceeds dense cap {cap}")),
                )
            };

            results.push(json!({
                "n": n,
                "form": name,
                "closed_form_ns": closed_ns as u64,
                "dft_ns": dft_ns.map(|v| v as u64),
                "dense_ns": dense_ns.map(|v| v as u64),
                "max_diff": max_diff,
                "note": note,
            }));
        }
    }

    if args.common.csv {
        let mut out = String::from("n,form,closed_form_ns,dft_ns,dense_ns,max_diff\n");
        for r in &results {
            let opt = |key: &str| -> String {
                match &r[key] {
                    Value::Null => String::new(),
                    Value::Number(v) => v.to_string(),
                    other => other.to_string(),
                }
            };
            let diff = match &r["max_diff"] {
                Value::Null => String::new(),
                Value::Number(v) => report::float(v.as_f64().unwrap_or(0.0)),
                _ => String::new(),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r["n"],
                r["form"].as_str().unwrap_or(""),
                r["closed_form_ns"],
                opt("dft_ns"),
                opt("dense_ns"),
                diff,
            ));
        }
        return Ok(out);
    }
    let payload = json!({
        "command": "bench",
        "trials": args.trials,
        "results": results,
    });
    Ok(report::json_line(&payload))
}

fn cmd_detect(args: DetectArgs) -> Result<String, CliError> {
    let resolved: ResolvedInput = args.input.resolve()?;
    let n = resolved.row.len();
    let detected = detect_structure(&resolved.row);
    if args.common.csv {
        let line = match &detected {
            Some(form) => format!("{}\n", form.kind()),
            None => "unstructured\n".to_string(),
        };
        return Ok(line);
    }
    let form_value = match &detected {
        Some(form) => form_json(form),
        None => Value::String("unstructured".into()),
    };
    let payload = json!({
        "command": "detect",
        "input": resolved.echo,
        "n": n,
        "form": form_value,
    });
    Ok(report::json_line(&payload))
}

//! Input resolution: a row can arrive inline, from a file, or through one of
//! the structured-family generator flags. Exactly one source per request.

use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};

use circulant_core::closed_form::{
    AltCase, AlternatingPattern, Arithmetic, CycleSchrodinger, Geometric, QuadraticPattern,
    StructuredForm, SymThreeParam, ThreeParamRow, TridiagSym,
};
use circulant_core::CirculantVector;

use crate::CliError;

#[derive(Args, Debug, Clone)]
pub struct InputOpts {
    /// Inline comma-separated first row, e.g. --row 2,1,0
    #[arg(long, value_name = "LIST")]
    pub row: Option<String>,

    /// Read the first row from a file: a JSON array or one number per line
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,

    /// Three-parameter row (a, b, c, ..., c); requires --n
    #[arg(long, value_name = "A,B,C")]
    pub three: Option<String>,

    /// Symmetric three-parameter row (a, b, c, ..., c, b); requires --n
    #[arg(long, value_name = "A,B,C")]
    pub sym3: Option<String>,

    /// Geometric row (a r^{n-1}, ..., a r, a); requires --n
    #[arg(long, value_name = "A,R")]
    pub geom: Option<String>,

    /// Arithmetic row (a, a+b, ..., a+(n-1)b); requires --n
    #[arg(long, value_name = "A,B")]
    pub arith: Option<String>,

    /// Tridiagonal symmetric row (a, b, 0, ..., 0, b); requires --n
    #[arg(long, value_name = "A,B")]
    pub tridiag: Option<String>,

    /// Quadratic row with entries a + j b (n - j); requires --n
    #[arg(long, value_name = "A,B")]
    pub quad: Option<String>,

    /// Alternating two-value row; case is 1..=4; requires --n
    #[arg(long, value_name = "CASE,A,B")]
    pub alt: Option<String>,

    /// Cycle row (2q, -1, 0, ..., 0, -1); requires --n
    #[arg(long, value_name = "Q")]
    pub cycle: Option<f64>,

    /// Order n, required by every generator flag
    #[arg(long, value_name = "N")]
    pub n: Option<usize>,
}

/// A resolved input: the row itself, the structured form when the input was
/// a generator, and the echo object for reports.
pub struct ResolvedInput {
    pub row: CirculantVector<f64>,
    pub form: Option<StructuredForm<f64>>,
    pub echo: Value,
}

pub fn parse_list(text: &str) -> Result<Vec<f64>, CliError> {
    let values: Result<Vec<f64>, _> = text
        .split(',')
        .map(|piece| piece.trim().parse::<f64>())
        .collect();
    values.map_err(|e| CliError::usage(format!("cannot parse number list '{text}': {e}")))
}

fn parse_pair(flag: &str, text: &str) -> Result<(f64, f64), CliError> {
    match parse_list(text)?.as_slice() {
        [x, y] => Ok((*x, *y)),
        other => Err(CliError::usage(format!(
            "--{flag} expects two comma-separated numbers, got {}",
            other.len()
        ))),
    }
}

fn parse_triple(flag: &str, text: &str) -> Result<(f64, f64, f64), CliError> {
    match parse_list(text)?.as_slice() {
        [x, y, z] => Ok((*x, *y, *z)),
        other => Err(CliError::usage(format!(
            "--{flag} expects three comma-separated numbers, got {}",
            other.len()
        ))),
    }
}

fn read_row_file(path: &PathBuf) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        serde_json::from_str::<Vec<f64>>(trimmed)
            .map_err(|e| CliError::usage(format!("bad JSON array in {}: {e}", path.display())))
    } else {
        trimmed
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(|line| {
                line.parse::<f64>().map_err(|e| {
                    CliError::usage(format!("bad number '{line}' in {}: {e}", path.display()))
                })
            })
            .collect()
    }
}

/// JSON echo of a structured form (parameters only; the order is reported
/// at the top level).
pub fn form_json(form: &StructuredForm<f64>) -> Value {
    match form {
        StructuredForm::ThreeParamRow(f) => {
            json!({"kind": "three-param", "a": f.a, "b": f.b, "c": f.c})
        }
        StructuredForm::SymThreeParam(f) => {
            json!({"kind": "sym3", "a": f.a, "b": f.b, "c": f.c})
        }
        StructuredForm::Geometric(f) => json!({"kind": "geometric", "a": f.a, "r": f.r}),
        StructuredForm::Arithmetic(f) => json!({"kind": "arithmetic", "a": f.a, "b": f.b}),
        StructuredForm::TridiagSym(f) => json!({"kind": "tridiag", "a": f.a, "b": f.b}),
        StructuredForm::QuadraticPattern(f) => {
            json!({"kind": "quadratic", "a": f.a, "b": f.b})
        }
        StructuredForm::AlternatingPattern(f) => {
            json!({"kind": "alternating", "case": f.case.index(), "a": f.a, "b": f.b})
        }
        StructuredForm::CycleSchrodinger(f) => json!({"kind": "cycle", "q": f.q}),
    }
}

impl InputOpts {
    pub fn resolve(&self) -> Result<ResolvedInput, CliError> {
        let sources = [
            self.row.is_some(),
            self.file.is_some(),
            self.three.is_some(),
            self.sym3.is_some(),
            self.geom.is_some(),
            self.arith.is_some(),
            self.tridiag.is_some(),
            self.quad.is_some(),
            self.alt.is_some(),
            self.cycle.is_some(),
        ]
        .iter()
        .filter(|present| **present)
        .count();
        if sources != 1 {
            return Err(CliError::usage(
                "provide exactly one input source: --row, --file, or a generator flag \
                 (--three, --sym3, --geom, --arith, --tridiag, --quad, --alt, --cycle)",
            ));
        }

        if let Some(text) = &self.row {
            let entries = parse_list(text)?;
            let row = CirculantVector::from_slice(&entries)?;
            let echo = json!({"kind": "row", "n": row.len()});
            return Ok(ResolvedInput {
                row,
                form: None,
                echo,
            });
        }
        if let Some(path) = &self.file {
            let entries = read_row_file(path)?;
            let row = CirculantVector::from_slice(&entries)?;
            let echo = json!({"kind": "row", "n": row.len()});
            return Ok(ResolvedInput {
                row,
                form: None,
                echo,
            });
        }

        let n = self
            .n
            .ok_or_else(|| CliError::usage("generator inputs need an order: add --n <N>"))?;
        if n == 0 {
            return Err(CliError::usage("--n must be at least 1"));
        }
        let form = if let Some(text) = &self.three {
            let (a, b, c) = parse_triple("three", text)?;
            StructuredForm::ThreeParamRow(ThreeParamRow { a, b, c, n })
        } else if let Some(text) = &self.sym3 {
            let (a, b, c) = parse_triple("sym3", text)?;
            StructuredForm::SymThreeParam(SymThreeParam { a, b, c, n })
        } else if let Some(text) = &self.geom {
            let (a, r) = parse_pair("geom", text)?;
            StructuredForm::Geometric(Geometric { a, r, n })
        } else if let Some(text) = &self.arith {
            let (a, b) = parse_pair("arith", text)?;
            StructuredForm::Arithmetic(Arithmetic { a, b, n })
        } else if let Some(text) = &self.tridiag {
            let (a, b) = parse_pair("tridiag", text)?;
            StructuredForm::TridiagSym(TridiagSym { a, b, n })
        } else if let Some(text) = &self.quad {
            let (a, b) = parse_pair("quad", text)?;
            StructuredForm::QuadraticPattern(QuadraticPattern { a, b, n })
        } else if let Some(text) = &self.alt {
            let (case, a, b) = parse_triple("alt", text)?;
            if case.fract() != 0.0 || !(1.0..=4.0).contains(&case) {
                return Err(CliError::usage("--alt case must be an integer 1..=4"));
            }
            let case = AltCase::from_index(case as u8)?;
            StructuredForm::AlternatingPattern(AlternatingPattern { case, a, b, n })
        } else {
            let q = self.cycle.expect("source count checked above");
            StructuredForm::CycleSchrodinger(CycleSchrodinger { q, n })
        };
        let echo = form_json(&form);
        Ok(ResolvedInput {
            row: form.row(),
            form: Some(form),
            echo,
        })
    }
}

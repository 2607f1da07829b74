//! JSON documents for rational dual matrices.
//!
//! A document is `{"rows": m, "cols": n, "real": [[..]], "dual": [[..]]}`
//! where `dual` is optional (absent means zero) and entries are either
//! JSON integers or strings like `"p/q"` or `"p"`. Output documents are
//! always canonical: fully reduced fractions with a positive denominator,
//! rendered as strings, keys in fixed order. Parsing an emitted document
//! reproduces the value bit for bit.

use dualmat::{DualMatrix, RealMatrix, Rational};
use serde::{Deserialize, Serialize};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    real: Vec<Vec<Entry>>,
    #[serde(default)]
    dual: Option<Vec<Vec<Entry>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

fn entry_value(entry: &Entry, row: usize, col: usize) -> Result<Rational, String> {
    match entry {
        Entry::Int(i) => Ok(Rational::from_integer((*i).into())),
        Entry::Text(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|e| format!("entry ({row}, {col}): cannot parse {s:?} as a rational: {e}")),
    }
}

fn grid_matrix(
    grid: &[Vec<Entry>],
    rows: usize,
    cols: usize,
    part: &str,
) -> Result<RealMatrix, String> {
    if grid.len() != rows {
        return Err(format!("{part} grid has {} rows, document declares {rows}", grid.len()));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in grid.iter().enumerate() {
        if row.len() != cols {
            return Err(format!(
                "{part} row {i} has {} entries, document declares {cols} columns",
                row.len()
            ));
        }
        for (j, entry) in row.iter().enumerate() {
            data.push(entry_value(entry, i, j)?);
        }
    }
    RealMatrix::new(rows, cols, data).map_err(|e| e.to_string())
}

fn parse_doc(text: &str) -> Result<(RealMatrix, Option<RealMatrix>), String> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let real = grid_matrix(&doc.real, doc.rows, doc.cols, "real")?;
    let dual = match &doc.dual {
        Some(grid) => Some(grid_matrix(grid, doc.rows, doc.cols, "dual")?),
        None => None,
    };
    Ok((real, dual))
}

/// Parses a dual matrix document; a missing `dual` block means a zero
/// dual part.
pub fn parse_dual_matrix(text: &str) -> Result<DualMatrix, String> {
    let (real, dual) = parse_doc(text)?;
    match dual {
        Some(d) => DualMatrix::new(real, d).map_err(|e| e.to_string()),
        None => Ok(DualMatrix::from_real(real)),
    }
}

/// Parses a document that must describe a real matrix: the `dual` block,
/// if present, has to be zero.
pub fn parse_real_matrix(text: &str) -> Result<RealMatrix, String> {
    let (real, dual) = parse_doc(text)?;
    if dual.as_ref().is_some_and(|d| !d.is_zero()) {
        return Err("expected a real matrix, but the document has a nonzero dual part".into());
    }
    Ok(real)
}

/// Output form of a matrix document: canonical string entries, fixed key
/// order, `dual` present exactly for dual results.
#[derive(Serialize)]
pub struct MatrixOut {
    rows: usize,
    cols: usize,
    real: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual: Option<Vec<Vec<String>>>,
}

fn string_grid(m: &RealMatrix) -> Vec<Vec<String>> {
    let (rows, cols) = m.shape();
    (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

pub fn real_doc(m: &RealMatrix) -> MatrixOut {
    let (rows, cols) = m.shape();
    MatrixOut { rows, cols, real: string_grid(m), dual: None }
}

pub fn dual_doc(m: &DualMatrix) -> MatrixOut {
    let (rows, cols) = m.shape();
    MatrixOut { rows, cols, real: string_grid(m.real()), dual: Some(string_grid(m.dual())) }
}

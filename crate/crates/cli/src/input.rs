use crate::Failure;
use cprank_core::cp_decomp::WeightedCpDecomposition;
use cprank_core::matrix_core::RationalJson;
use cprank_core::{LabeledGraph, Rational, SymMatrix};
use serde::Deserialize;
use std::path::Path;

/// A matrix entry: integer, `[p, q]`, or a string such as `"-3/4"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Pair(RationalJson),
    Text(String),
}

impl Entry {
    fn value(self) -> Result<Rational, String> {
        match self {
            Entry::Int(v) => Ok(Rational::from_integer(v.into())),
            Entry::Pair(r) => Ok(r.0),
            Entry::Text(s) => s.trim().parse::<Rational>().map_err(|e| format!("bad rational {s:?}: {e}")),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixInput {
    Packed { n: usize, entries: Vec<Entry> },
    Rows(Vec<Vec<Entry>>),
    Wrapped { rows: Vec<Vec<Entry>> },
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn parse_rows(rows: Vec<Vec<Entry>>) -> Result<Vec<Vec<Rational>>, Failure> {
    rows.into_iter()
        .map(|r| r.into_iter().map(Entry::value).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()
        .map_err(Failure::input)
}

/// Symmetric matrix from `{"n", "entries"}` (packed upper triangle) or a list of rows.
pub fn matrix(path: &Path) -> Result<SymMatrix, Failure> {
    let text = read(path)?;
    let parsed: MatrixInput = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{}: not a matrix ({e})", path.display())))?;
    match parsed {
        MatrixInput::Packed { n, entries } => {
            let upper = entries.into_iter().map(Entry::value).collect::<Result<_, _>>().map_err(Failure::input)?;
            SymMatrix::from_upper(n, upper).map_err(|e| Failure::input(e.to_string()))
        }
        MatrixInput::Rows(rows) | MatrixInput::Wrapped { rows } => {
            SymMatrix::from_rows(parse_rows(rows)?).map_err(|e| Failure::input(e.to_string()))
        }
    }
}

/// Rectangular matrix given as a list of rows.
pub fn rows(path: &Path) -> Result<Vec<Vec<Rational>>, Failure> {
    let text = read(path)?;
    let parsed: MatrixInput = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{}: not a matrix ({e})", path.display())))?;
    match parsed {
        MatrixInput::Packed { .. } => Ok(matrix(path)?.rows()),
        MatrixInput::Rows(rows) | MatrixInput::Wrapped { rows } => parse_rows(rows),
    }
}

/// Graph from JSON `{"vertices", "edges"}` or from DOT.
pub fn graph(path: &Path) -> Result<LabeledGraph, Failure> {
    let text = read(path)?;
    let head = text.trim_start();
    if head.starts_with('{') {
        serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: not a graph ({e})", path.display())))
    } else {
        LabeledGraph::from_dot(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

pub fn decomposition(path: &Path) -> Result<WeightedCpDecomposition, Failure> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: not a decomposition ({e})", path.display())))
}

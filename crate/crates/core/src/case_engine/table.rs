//! The embedded table of the 44 potential minimal-support families.

use crate::error::{Error, Result};
use crate::matrix_core::IndexSet;
use crate::zero_structure::SupportFamily;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt;

const TABLE1_JSON: &str = include_str!("../../data/table1.json");
const TABLE1_SHA256: &str = "fbc5346722bf6c895eb4c65213e3e1d657c0f8559fe8857e20aecf671eeb2027";

/// Number of rows in the table.
pub const TABLE1_ROWS: usize = 44;

/// The argument used to bound the cp-rank for a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Strategy {
    #[serde(rename = "DD")]
    Dd,
    #[serde(rename = "LOW_DEGREE")]
    LowDegree,
    #[serde(rename = "OMEGA_SPLIT")]
    OmegaSplit,
    #[serde(rename = "TF")]
    Tf,
    #[serde(rename = "PRUNE_HORN")]
    PruneHorn,
    #[serde(rename = "PRUNE_FOREST")]
    PruneForest,
    #[serde(rename = "PRUNE_CUBE")]
    PruneCube,
    #[serde(rename = "H_PLUS_0")]
    HPlusZero,
}

impl Strategy {
    pub fn tag(self) -> &'static str {
        match self {
            Strategy::Dd => "DD",
            Strategy::LowDegree => "LOW_DEGREE",
            Strategy::OmegaSplit => "OMEGA_SPLIT",
            Strategy::Tf => "TF",
            Strategy::PruneHorn => "PRUNE_HORN",
            Strategy::PruneForest => "PRUNE_FOREST",
            Strategy::PruneCube => "PRUNE_CUBE",
            Strategy::HPlusZero => "H_PLUS_0",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One row: a support family together with the strategy and pivot assigned to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    pub id: u32,
    pub family: SupportFamily,
    pub strategy: Strategy,
    pub pivot: Option<IndexSet>,
}

#[derive(Deserialize)]
struct RawTable {
    n: usize,
    rows: Vec<RawRow>,
}

#[derive(Deserialize)]
struct RawRow {
    id: u32,
    supports: Vec<Vec<usize>>,
    strategy: Strategy,
    pivot: Option<Vec<usize>>,
}

/// The embedded table, checked against its digest.
pub fn load_table1() -> Result<Vec<Table1Entry>> {
    parse_table1(TABLE1_JSON, Some(TABLE1_SHA256))
}

/// Parses a table in the embedded format; when `sha256` is given the raw bytes must hash to it.
pub fn parse_table1(text: &str, sha256: Option<&str>) -> Result<Vec<Table1Entry>> {
    if let Some(expected) = sha256 {
        let got = hex(&Sha256::digest(text.as_bytes()));
        if got != expected {
            return Err(Error::DataCorrupt(format!("table digest {got} does not match {expected}")));
        }
    }
    let raw: RawTable = serde_json::from_str(text).map_err(|e| Error::DataCorrupt(e.to_string()))?;
    if raw.n != 6 {
        return Err(Error::DataCorrupt(format!("table is for n = {}, expected 6", raw.n)));
    }
    if raw.rows.len() != TABLE1_ROWS {
        return Err(Error::DataCorrupt(format!("{} rows, expected {TABLE1_ROWS}", raw.rows.len())));
    }
    let labels = |l: &[usize]| -> Result<IndexSet> {
        if l.iter().any(|&x| x == 0 || x > raw.n) {
            return Err(Error::DataCorrupt(format!("label out of range in {l:?}")));
        }
        Ok(IndexSet::from_labels(raw.n, l))
    };
    let mut out = Vec::with_capacity(raw.rows.len());
    for (i, row) in raw.rows.iter().enumerate() {
        if row.id as usize != i + 1 {
            return Err(Error::DataCorrupt(format!("row {} has id {}", i + 1, row.id)));
        }
        let supports = row.supports.iter().map(|s| labels(s)).collect::<Result<Vec<_>>>()?;
        let family =
            SupportFamily::new(raw.n, supports).map_err(|e| Error::DataCorrupt(format!("row {}: {e}", row.id)))?;
        let pivot = row.pivot.as_deref().map(labels).transpose()?;
        out.push(Table1Entry { id: row.id, family, strategy: row.strategy, pivot });
    }
    Ok(out)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(e: &Table1Entry) -> Vec<Vec<usize>> {
        e.family.supports.iter().map(|s| s.labels()).collect()
    }

    #[test]
    fn rows_transcribed() {
        let t = load_table1().unwrap();
        assert_eq!(t.len(), 44);
        assert_eq!(labels(&t[0]), vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 5], vec![3, 6], vec![5, 6]]);
        assert_eq!(t[34].family.k(), 6);
        assert!(t[34].family.supports.iter().all(|s| s.len() == 4));
        assert_eq!(t[43].family.k(), 8);
        assert!(t[43].family.supports.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn strategy_assignment() {
        let t = load_table1().unwrap();
        let tags: Vec<Strategy> = t.iter().map(|e| e.strategy).collect();
        assert_eq!(&tags[..5], &[Strategy::LowDegree, Strategy::LowDegree, Strategy::OmegaSplit, Strategy::OmegaSplit, Strategy::Tf]);
        assert!(tags[5..35].iter().all(|&s| s == Strategy::Dd));
        assert_eq!(tags[35], Strategy::PruneHorn);
        assert!(tags[36..42].iter().all(|&s| s == Strategy::Tf));
        assert_eq!(&tags[42..], &[Strategy::PruneForest, Strategy::PruneCube]);
        assert_eq!(t[3].pivot.unwrap().labels(), vec![2, 5, 6]);
        assert_eq!(t[35].pivot.unwrap().labels(), vec![3, 6]);
    }

    #[test]
    fn tampered_bytes_rejected() {
        let bad = TABLE1_JSON.replacen("[1, 2]", "[1, 3]", 1);
        assert!(matches!(parse_table1(&bad, Some(TABLE1_SHA256)), Err(Error::DataCorrupt(_))));
        // Without the digest the duplicate support is still caught.
        assert!(matches!(parse_table1(&bad, None), Err(Error::DataCorrupt(_))));
        let short = TABLE1_JSON.replace("\"n\": 6", "\"n\": 5");
        assert!(parse_table1(&short, None).is_err());
    }
}

//! Machine-readable documents for orbit tables, matrices, spectra and reports.
//!
//! The JSON shapes are stable; field order follows declaration order.

use std::fmt::Write;

use serde::Serialize;

use crate::matrix::RsbfMatrix;
use crate::orbits::OrbitTable;
use crate::search::{SearchMode, SearchReport};
use crate::walsh::WalshSpectrum;

#[derive(Debug, Clone, Serialize)]
pub struct OrbitDoc {
    pub representative: String,
    pub size: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

/// `{ "n", "g", "orbits": [ { "representative", "size", "elements"? } ] }`
#[derive(Debug, Clone, Serialize)]
pub struct OrbitTableDoc {
    pub n: u32,
    pub g: usize,
    pub orbits: Vec<OrbitDoc>,
}

impl OrbitTableDoc {
    pub fn new(table: &OrbitTable, include_elements: bool) -> Self {
        OrbitTableDoc {
            n: table.n(),
            g: table.g(),
            orbits: table
                .orbits()
                .iter()
                .map(|o| OrbitDoc {
                    representative: o.representative().to_string(),
                    size: o.size(),
                    elements: include_elements
                        .then(|| o.elements().map(|e| e.to_string()).collect()),
                })
                .collect(),
        }
    }
}

pub fn orbits_csv(table: &OrbitTable) -> String {
    table.orbits().iter().fold(String::new(), |mut out, o| {
        let _ = writeln!(out, "{},{}", o.representative(), o.size());
        out
    })
}

/// `{ "n", "g", "representatives": [..], "matrix": [[..]] }`
#[derive(Debug, Clone, Serialize)]
pub struct MatrixDoc {
    pub n: u32,
    pub g: usize,
    pub representatives: Vec<String>,
    pub matrix: Vec<Vec<i32>>,
}

impl MatrixDoc {
    pub fn new(m: &RsbfMatrix) -> Self {
        MatrixDoc {
            n: m.n(),
            g: m.g(),
            representatives: m.representatives().map(|r| r.to_string()).collect(),
            matrix: m.rows().map(<[i32]>::to_vec).collect(),
        }
    }
}

/// One row per line, comma-separated signed decimals.
pub fn matrix_csv(m: &RsbfMatrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(i32::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumEntry {
    pub representative: String,
    pub walsh_value: i64,
}

/// JSON array form of a spectrum.
pub fn spectrum_entries(spectrum: &WalshSpectrum, table: &OrbitTable) -> Vec<SpectrumEntry> {
    table
        .representatives()
        .zip(&spectrum.values)
        .map(|(r, &w)| SpectrumEntry {
            representative: r.to_string(),
            walsh_value: w,
        })
        .collect()
}

/// Lines of `representative,walsh_value`.
pub fn spectrum_csv(spectrum: &WalshSpectrum, table: &OrbitTable) -> String {
    spectrum_entries(spectrum, table)
        .iter()
        .fold(String::new(), |mut out, e| {
            let _ = writeln!(out, "{},{}", e.representative, e.walsh_value);
            out
        })
}

/// `{ "n", "mode", "seed"?, "functions_tested", "bent_count", "bent": [..] }`
#[derive(Debug, Clone, Serialize)]
pub struct SearchReportDoc {
    pub n: u32,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub functions_tested: u64,
    pub bent_count: usize,
    pub bent: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl SearchReportDoc {
    pub fn new(report: &SearchReport) -> Self {
        let (mode, seed) = match report.mode {
            SearchMode::Exhaustive => ("exhaustive", None),
            SearchMode::Sampled { seed, .. } => ("sampled", Some(seed)),
        };
        SearchReportDoc {
            n: report.n,
            mode,
            seed,
            functions_tested: report.functions_tested,
            bent_count: report.bent_count(),
            bent: report.bent_found.clone(),
            reason: report.reason.clone(),
        }
    }
}

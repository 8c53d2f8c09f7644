use num_rational::BigRational;
use qforms_core::{OpMatrix, RatFunc, Report};
use serde::Serialize;
use serde_json::Value;

use crate::cli::Format;

/// A command's result: the JSON document and the same data as a table for
/// the CSV and text formats.
#[derive(Debug, Clone)]
pub struct Document {
    pub json: Value,
    pub table: Table,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Document {
    pub fn new(json: impl Serialize, table: Table) -> Self {
        Document { json: serde_json::to_value(json).expect("serializable"), table }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::NonNumeric).from_writer(Vec::new());
                w.write_record(&self.table.header).expect("in-memory write");
                for r in &self.table.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
            }
            Format::Text => {
                let t = &self.table;
                let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
                for r in &t.rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
                    let mut l = padded.join("  ").trim_end().to_string();
                    l.push('\n');
                    l
                };
                let mut s = line(t.header.clone());
                for r in &t.rows {
                    s.push_str(&line(r.iter().map(String::as_str).collect()));
                }
                s
            }
        }
    }
}

pub fn rational_text(v: &BigRational) -> String {
    RatFunc::from_rational(v).to_text()
}

/// A sparse matrix with 1-based `[row, col, value]` entries.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl MatrixJson {
    pub fn new(m: &OpMatrix<RatFunc>) -> Self {
        let mut entries: Vec<(usize, usize, String)> = m.entries().into_iter().map(|(r, c, v)| (r + 1, c + 1, v.to_text())).collect();
        entries.sort_by_key(|e| (e.0, e.1));
        MatrixJson { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn table(&self) -> Table {
        Table {
            header: vec!["row", "col", "value"],
            rows: self.entries.iter().map(|(r, c, v)| vec![r.to_string(), c.to_string(), v.clone()]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteJson {
    pub suite: &'static str,
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

impl SuiteJson {
    pub fn from_report(suite: &'static str, r: &Report) -> Self {
        let checks = r
            .checks
            .iter()
            .map(|c| CheckJson { name: c.name.clone(), anchor: c.anchor.to_string(), passed: c.passed, expected: None })
            .collect();
        SuiteJson { suite, n: r.n, passed: r.all_passed(), checks }
    }

    pub fn table(&self) -> Table {
        Table {
            header: vec!["name", "anchor", "passed", "expected"],
            rows: self
                .checks
                .iter()
                .map(|c| vec![c.name.clone(), c.anchor.clone(), c.passed.to_string(), c.expected.clone().unwrap_or_default()])
                .collect(),
        }
    }
}

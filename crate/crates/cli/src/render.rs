//! Output formats.
//!
//! JSON is pretty-printed with a trailing newline and keeps struct field
//! order. CSV uses the same column order with integer lists joined by
//! spaces. Text is a two-column labelled table.

use std::fmt::Write as _;

use clap::ValueEnum;
use numsg::rohrbach::RohrbachWitness;
use numsg::suites::SweepResult;
use numsg::{InvariantReport, NumericalSemigroup};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// Invariants of a semigroup, or the base data of `ℕ`, which has no
/// pseudo-Frobenius numbers to classify.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Report {
    Full(InvariantReport),
    Naturals(NaturalsReport),
}

#[derive(Debug, Clone, Serialize)]
pub struct NaturalsReport {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub edim: usize,
    pub genus: usize,
    pub frobenius: i64,
    pub conductor: i64,
}

impl Report {
    pub fn of(h: &NumericalSemigroup) -> numsg::Result<Report> {
        if h.is_full() {
            return Ok(Report::Naturals(NaturalsReport {
                generators: h.generators().to_vec(),
                multiplicity: h.multiplicity(),
                edim: h.embedding_dimension(),
                genus: 0,
                frobenius: h.frobenius(),
                conductor: h.conductor(),
            }));
        }
        numsg::classify(h).map(Report::Full)
    }
}

pub fn render_report(report: &InvariantReport, format: Format) -> Result<Vec<u8>, CliError> {
    render_rows(std::slice::from_ref(report), format)
}

/// Renders a list of records. JSON emits a single object for one record
/// and an array otherwise.
pub fn render_rows<T: Serialize>(rows: &[T], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = if rows.len() == 1 {
                serde_json::to_string_pretty(&rows[0])?
            } else {
                serde_json::to_string_pretty(rows)?
            };
            out.push('\n');
            Ok(out.into_bytes())
        }
        Format::Csv => {
            let objects = rows.iter().map(to_object).collect::<Result<Vec<_>, _>>()?;
            let mut writer = csv::Writer::from_writer(Vec::new());
            if let Some(first) = objects.first() {
                writer.write_record(first.keys())?;
            }
            for object in &objects {
                writer.write_record(object.values().map(cell))?;
            }
            writer.into_inner().map_err(|e| CliError::Io(e.into_error()))
        }
        Format::Text => {
            let objects = rows.iter().map(to_object).collect::<Result<Vec<_>, _>>()?;
            let mut out = String::new();
            for (i, object) in objects.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let width = object.keys().map(|k| k.len()).max().unwrap_or(0);
                for (key, value) in object {
                    let _ = writeln!(out, "{key:<width$}  {}", cell(value));
                }
            }
            Ok(out.into_bytes())
        }
    }
}

fn to_object<T: Serialize>(row: &T) -> Result<Map<String, Value>, CliError> {
    match serde_json::to_value(row)? {
        Value::Object(map) => Ok(map),
        other => Ok(Map::from_iter([("value".to_string(), other)])),
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", cell(v)))
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    }
}

/// Per-suite summary row used by the CSV rendering of sweeps.
#[derive(Serialize)]
struct SweepRow<'a> {
    suite_name: &'a str,
    genus_bound: usize,
    checked: usize,
    passed: bool,
    violations: usize,
    findings: usize,
}

pub fn render_sweeps(results: &[SweepResult], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(results)?;
            out.push('\n');
            Ok(out.into_bytes())
        }
        Format::Csv => {
            let rows: Vec<SweepRow> = results
                .iter()
                .map(|r| SweepRow {
                    suite_name: &r.suite_name,
                    genus_bound: r.genus_bound,
                    checked: r.checked,
                    passed: r.passed(),
                    violations: r.violations.len(),
                    findings: r.findings.len(),
                })
                .collect();
            let mut writer = csv::Writer::from_writer(Vec::new());
            for row in rows {
                writer.serialize(row)?;
            }
            writer.into_inner().map_err(|e| CliError::Io(e.into_error()))
        }
        Format::Text => {
            let mut out = String::new();
            for r in results {
                let status = if r.passed() { "ok" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{:<24} g<={:<3} checked {:>7}  {status}  violations {}  findings {}",
                    r.suite_name,
                    r.genus_bound,
                    r.checked,
                    r.violations.len(),
                    r.findings.len()
                );
                for (tag, records) in [("violation", &r.violations), ("finding", &r.findings)] {
                    for rec in records {
                        let gens: Vec<String> = rec.generators.iter().map(i64::to_string).collect();
                        let _ = writeln!(out, "  {tag} <{}> {}", gens.join(","), rec.detail);
                    }
                }
            }
            Ok(out.into_bytes())
        }
    }
}

pub fn render_rohrbach(w: &RohrbachWitness, format: Format) -> Result<Vec<u8>, CliError> {
    render_rows(std::slice::from_ref(w), format)
}

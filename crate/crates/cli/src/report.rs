use std::io::Write;
use std::path::Path;

use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::config::{Format, RunConfig, Space};
use crate::error::CliError;

/// One named quantity at one cutoff, optionally compared against a bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub name: String,
    pub lambda: usize,
    pub value: Num,
    pub bound: Option<Num>,
    pub pass: Option<bool>,
}

impl Row {
    pub fn info(name: impl Into<String>, lambda: usize, value: f64) -> Self {
        Self { name: name.into(), lambda, value: Num(value), bound: None, pass: None }
    }

    pub fn checked(name: impl Into<String>, lambda: usize, value: f64, bound: f64, pass: bool) -> Self {
        Self { name: name.into(), lambda, value: Num(value), bound: Some(Num(bound)), pass: Some(pass) }
    }

    /// A bound that is reported but only asserted where it is known to hold.
    pub fn maybe(name: impl Into<String>, lambda: usize, value: f64, bound: f64, pass: Option<bool>) -> Self {
        Self { name: name.into(), lambda, value: Num(value), bound: Some(Num(bound)), pass }
    }
}

/// A float written with 17 significant digits; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Num {
    pub fn text(self) -> String {
        if self.0.is_finite() {
            format!("{:.16e}", self.0)
        } else {
            String::new()
        }
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        RawValue::from_string(self.text()).map_err(S::Error::custom)?.serialize(s)
    }
}

/// Fixed-column table used by the localization CSV.
#[derive(Debug, Clone, Default)]
pub struct WideTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, Copy)]
pub enum Cell {
    Int(usize),
    Num(f64),
    Flag(Option<bool>),
}

impl Cell {
    fn text(self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Num(x) => Num(x).text(),
            Cell::Flag(f) => f.map(|b| b.to_string()).unwrap_or_default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub k_values: Vec<f64>,
    pub rows: Vec<Row>,
    pub wide: Option<WideTable>,
}

impl Report {
    pub fn violations(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.pass == Some(false))
    }
}

#[derive(Serialize)]
struct Meta<'a> {
    command: &'a str,
    space: &'a str,
    lambda: LambdaRange,
    k: KMeta<'a>,
    seed: u64,
    tol: Num,
    versions: Versions,
}

#[derive(Serialize)]
struct LambdaRange {
    min: usize,
    max: usize,
}

#[derive(Serialize)]
struct KMeta<'a> {
    policy: &'a str,
    values: Vec<Num>,
}

#[derive(Serialize)]
struct Versions {
    #[serde(rename = "fuzzy-cli")]
    cli: &'static str,
    #[serde(rename = "fuzzy-core")]
    core: &'static str,
}

#[derive(Serialize)]
struct Document<'a> {
    meta: Meta<'a>,
    results: &'a [Row],
}

pub fn render(report: &Report, cfg: &RunConfig) -> Result<Vec<u8>, CliError> {
    match cfg.format {
        Format::Json => {
            let doc = Document {
                meta: Meta {
                    command: report.command,
                    space: match cfg.space {
                        Space::Circle => "circle",
                        Space::Sphere => "sphere",
                    },
                    lambda: LambdaRange { min: *cfg.lambdas.start(), max: *cfg.lambdas.end() },
                    k: KMeta { policy: cfg.policy_name, values: report.k_values.iter().copied().map(Num).collect() },
                    seed: cfg.seed,
                    tol: Num(cfg.tol),
                    versions: Versions { cli: env!("CARGO_PKG_VERSION"), core: fuzzy_core::VERSION },
                },
                results: &report.rows,
            };
            let mut buf = serde_json::to_vec_pretty(&doc)?;
            buf.push(b'\n');
            Ok(buf)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match &report.wide {
                Some(t) => {
                    w.write_record(&t.columns)?;
                    for row in &t.rows {
                        w.write_record(row.iter().map(|c| c.text()))?;
                    }
                }
                None => {
                    w.write_record(["name", "lambda", "value", "bound", "pass"])?;
                    for r in &report.rows {
                        w.write_record([
                            r.name.clone(),
                            r.lambda.to_string(),
                            r.value.text(),
                            r.bound.map(Num::text).unwrap_or_default(),
                            r.pass.map(|b| b.to_string()).unwrap_or_default(),
                        ])?;
                    }
                }
            }
            w.into_inner().map_err(|e| CliError::Io(e.into_error()))
        }
    }
}

/// Writes through a temporary file in the target directory, then renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

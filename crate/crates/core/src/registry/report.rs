use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::SuiteResult;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::OutOfRange(format!("unknown format '{other}' (json or csv)"))),
        }
    }
}

/// Pretty JSON with keys in sorted order, ending in a newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json::Value keeps object keys in a BTreeMap.
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

/// JSON is the whole result; CSV has one row per check.
pub fn render_report(result: &SuiteResult, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => to_sorted_json(result),
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "check", "pass", "detail"])?;
            for c in &result.checks {
                w.write_record([result.suite.as_str(), &c.label, if c.pass { "true" } else { "false" }, &c.detail])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Serialize(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
        }
    }
}

pub fn emit_report(result: &SuiteResult, format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, render_report(result, format)?)?;
    Ok(())
}

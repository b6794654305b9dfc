use std::fmt::Write;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::identities::{CheckReport, Defect};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Human,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(ReportFormat::Human),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format `{other}`")),
        }
    }
}

fn defect_value(defect: &Defect) -> Value {
    match defect {
        Defect::Vector(v) => Value::Array(v.iter().map(|c| json!(c.to_literal())).collect()),
        Defect::Matrix(m) => Value::Array(
            (0..m.rows())
                .map(|r| Value::Array((0..m.cols()).map(|c| json!(m.get(r, c).to_literal())).collect()))
                .collect(),
        ),
    }
}

fn report_value(r: &CheckReport) -> Value {
    json!({
        "identity": r.identity.name(),
        "verdict": r.verdict.as_str(),
        "witness": r.witness.as_ref().map(|w| json!({
            "indices": w.indices,
            "defect": defect_value(&w.defect),
        })),
        "tuples_checked": r.tuples_checked,
    })
}

fn defect_text(defect: &Defect) -> String {
    let row = |cells: Vec<String>| format!("[{}]", cells.join(", "));
    match defect {
        Defect::Vector(v) => row(v.iter().map(|c| c.to_literal()).collect()),
        Defect::Matrix(m) => row(
            (0..m.rows())
                .map(|r| row((0..m.cols()).map(|c| m.get(r, c).to_literal()).collect()))
                .collect(),
        ),
    }
}

pub fn emit_report(reports: &[CheckReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            super::emit::write_canonical(&Value::Array(reports.iter().map(report_value).collect()))
        }
        ReportFormat::Human => {
            let mut out = String::new();
            for r in reports {
                match &r.witness {
                    None => {
                        let _ = writeln!(out, "{}: pass ({} tuples)", r.identity, r.tuples_checked);
                    }
                    Some(w) => {
                        let _ = writeln!(
                            out,
                            "{}: FAIL at {:?} after {} tuples",
                            r.identity, w.indices, r.tuples_checked
                        );
                        let _ = writeln!(out, "  defect: {}", defect_text(&w.defect));
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(
                out,
                "{} of {} identities passed",
                reports.len() - failed,
                reports.len()
            );
            out
        }
    }
}
